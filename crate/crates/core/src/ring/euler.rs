use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// `coeff · λ^lambda_power`, the value domain of equivariant Euler classes
/// and of graded pieces of λ-series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerMonomial {
    pub coeff: Rational,
    pub lambda_power: i32,
}

impl EulerMonomial {
    pub fn new(coeff: Rational, lambda_power: i32) -> Self {
        Self { coeff, lambda_power }
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), 0)
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.coeff * &other.coeff, self.lambda_power + other.lambda_power)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(
            &self.coeff / &other.coeff,
            self.lambda_power - other.lambda_power,
        ))
    }

    /// Sum of two monomials; a zero summand adopts the other's degree.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.lambda_power != other.lambda_power {
            return Err(Error::MixedLambdaDegree(self.lambda_power, other.lambda_power));
        }
        Ok(Self::new(&self.coeff + &other.coeff, self.lambda_power))
    }
}

impl fmt::Display for EulerMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lambda_power {
            0 => write!(f, "{}", self.coeff),
            p => write!(f, "{}*lambda^{}", self.coeff, p),
        }
    }
}

/// Equivariant Euler class of a virtual representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EulerClass {
    Monomial(EulerMonomial),
    /// The positive part contains the trivial character, so the class is zero.
    Vanishing,
}

impl EulerClass {
    pub fn monomial(&self) -> Option<&EulerMonomial> {
        match self {
            EulerClass::Monomial(m) => Some(m),
            EulerClass::Vanishing => None,
        }
    }
}

impl fmt::Display for EulerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EulerClass::Monomial(m) => m.fmt(f),
            EulerClass::Vanishing => f.write_str("vanishing"),
        }
    }
}

/// Euler class of `v = P₊ - P₋`: `∏_{P₊} (wλ) / ∏_{P₋} (wλ)` with multiplicity.
///
/// For `v = χ(F,F) - 1`, `P₊` is the obstruction side and `P₋` the
/// deformation side. The caller removes the constant 1.
pub fn euler_of_virtual(v: &LaurentPoly) -> Result<EulerClass> {
    if !v.is_integral() {
        return Err(Error::NonIntegral(v.to_string()));
    }
    let (positive, negative) = v.split_by_sign();
    if !negative.coeff(0).is_zero() {
        return Err(Error::ZeroDeformationWeight);
    }
    if !positive.coeff(0).is_zero() {
        return Ok(EulerClass::Vanishing);
    }

    let mut coeff = Rational::one();
    let mut lambda_power = 0i32;
    for (part, sign) in [(&positive, 1i32), (&negative, -1i32)] {
        for (w, mult) in part.terms() {
            let mult = multiplicity(mult)?;
            let factor = Rational::from_integer(w.into()).pow(mult as i32);
            if sign > 0 {
                coeff *= factor;
            } else {
                coeff /= factor;
            }
            lambda_power += sign * mult as i32;
        }
    }
    Ok(EulerClass::Monomial(EulerMonomial::new(coeff, lambda_power)))
}

fn multiplicity(c: &Rational) -> Result<u32> {
    c.abs()
        .to_integer()
        .to_u32()
        .ok_or_else(|| Error::NonIntegral(c.to_string()))
}
