use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{EulerMonomial, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Polynomial in λ truncated at degree `order` (inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSeries {
    coeffs: Vec<Rational>,
}

impl LambdaSeries {
    /// Coefficients of `λ^0 ..= λ^order`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a λ-series needs at least a constant term");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `e^{wλ}` truncated at `order`.
    pub fn exp(w: i64, order: usize) -> Self {
        let w = Rational::from_integer(w.into());
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = Rational::one();
        let mut factorial = Rational::one();
        for n in 0..=order {
            if n > 0 {
                power *= &w;
                factorial *= Rational::from_integer(n.into());
            }
            coeffs.push(&power / &factorial);
        }
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new((0..=order).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl fmt::Display for LambdaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            match n {
                0 => write!(f, "{abs}")?,
                _ if abs.is_one() => write!(f, "lambda^{n}")?,
                _ => write!(f, "{abs}*lambda^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(lambda^{})", self.order() + 1)
    }
}

/// Equivariant Chern character: `t^w ↦ e^{wλ}`, extended linearly.
pub fn ch_series(p: &LaurentPoly, order: usize) -> LambdaSeries {
    p.terms().fold(LambdaSeries::zero(order), |acc, (w, c)| {
        acc.add(&LambdaSeries::exp(w.into(), order).scale(c))
    })
}

/// Inverse equivariant Todd class of `K_X` at a point with hyperplane
/// weight `m`: `(1 - e^{mλ}) / (-mλ) = Σ mⁿ λⁿ / (n+1)!`.
pub fn todd_inverse_series(m: i64, order: usize) -> Result<LambdaSeries> {
    if m == 0 {
        return Err(Error::ZeroTwist);
    }
    let m = Rational::from_integer(m.into());
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = Rational::one();
    let mut factorial = Rational::one();
    for n in 0..=order {
        if n > 0 {
            power *= &m;
        }
        factorial *= Rational::from_integer((n + 1).into());
        coeffs.push(&power / &factorial);
    }
    Ok(LambdaSeries::new(coeffs))
}

/// Degree-`k` part of `s` as a monomial `c·λ^k`.
pub fn graded_piece(s: &LambdaSeries, k: usize) -> Result<EulerMonomial> {
    let coeff = s.coeff(k).ok_or(Error::OrderTooLow {
        requested: k,
        order: s.order(),
    })?;
    Ok(EulerMonomial::new(coeff.clone(), k as i32))
}
