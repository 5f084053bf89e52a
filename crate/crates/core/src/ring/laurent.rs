use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Element of `Q[t, t^-1]`, stored sparsely by exponent.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::t(0)
    }

    /// The character `t^e`.
    pub fn t(exp: i32) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    pub fn monomial(coeff: Rational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, Rational)>,
    {
        let mut out = Self::zero();
        for (exp, coeff) in terms {
            out.add_term(exp, coeff);
        }
        out
    }

    /// Builds from `(coefficient, exponent)` integer pairs.
    pub fn from_int_terms(terms: &[(i64, i32)]) -> Self {
        Self::from_terms(terms.iter().map(|&(c, e)| (e, Rational::from_integer(c.into()))))
    }

    fn add_term(&mut self, exp: i32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// True when every coefficient is an integer, i.e. the element lies in `Z[t^±1]`.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Dual representation: `t^e -> t^-e`.
    pub fn dual(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * s)).collect(),
        }
    }

    /// Value at `t = 1` (the rank of the virtual representation).
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Splits `self = positive - negative` by coefficient sign.
    pub fn split_by_sign(&self) -> (Self, Self) {
        let mut pos = BTreeMap::new();
        let mut neg = BTreeMap::new();
        for (&e, c) in &self.terms {
            if c.is_positive() {
                pos.insert(e, c.clone());
            } else {
                neg.insert(e, -c);
            }
        }
        (Self { terms: pos }, Self { terms: neg })
    }

    /// Exact quotient by `(1 - t^w)`, or `None` if the division leaves a remainder.
    pub fn div_one_minus(&self, w: i32) -> Option<Self> {
        if w == 0 {
            return None;
        }
        if w < 0 {
            // 1 - t^w = -t^w (1 - t^-w)
            return self.div_one_minus(-w).map(|q| -q.shift(-w));
        }
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Some(Self::zero()),
        };
        if hi - lo < w {
            return None;
        }
        // P = Q - t^w Q, so q_e = p_e + q_{e-w}.
        let mut quotient: BTreeMap<i32, Rational> = BTreeMap::new();
        for e in lo..=hi - w {
            let mut q = self.coeff(e);
            if let Some(prev) = quotient.get(&(e - w)) {
                q += prev;
            }
            if !q.is_zero() {
                quotient.insert(e, q);
            }
        }
        let quotient = Self { terms: quotient };
        let back = &quotient - &quotient.shift(w);
        (back == *self).then_some(quotient)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Canonical rendering: increasing exponents, `c*t^e` terms, unit
/// coefficients elided, exponent 0 printed as a bare constant.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{abs}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty Laurent polynomial".into()));
        }
        // Split into signed terms; a sign directly after '^' belongs to the exponent.
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !current.is_empty() {
                    pieces.push((negative, std::mem::take(&mut current)));
                } else if prev.is_some() {
                    return Err(Error::Parse(format!("dangling sign in `{s}`")));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
            prev = Some(ch);
        }
        if current.is_empty() {
            return Err(Error::Parse(format!("trailing sign in `{s}`")));
        }
        pieces.push((negative, current));

        let mut out = LaurentPoly::zero();
        for (negative, body) in pieces {
            let (coeff, exp) = parse_term(&body)?;
            out.add_term(exp, if negative { -coeff } else { coeff });
        }
        Ok(out)
    }
}

fn parse_term(body: &str) -> Result<(Rational, i32)> {
    let bad = || Error::Parse(format!("bad Laurent term `{body}`"));
    let (coeff_str, power_str) = match body.find('t') {
        None => return Ok((parse_rational(body)?, 0)),
        Some(0) => ("1", &body[1..]),
        Some(i) => {
            let c = body[..i].strip_suffix('*').ok_or_else(bad)?;
            (c, &body[i + 1..])
        }
    };
    let exp = match power_str {
        "" => 1,
        p => p
            .strip_prefix('^')
            .ok_or_else(bad)?
            .parse::<i32>()
            .map_err(|_| bad())?,
    };
    Ok((parse_rational(coeff_str)?, exp))
}
