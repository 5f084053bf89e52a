use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::ring::Rational;

use super::Chart;

pub const NVARS: usize = 12;

/// Exponent vector in the twelve chart variables.
///
/// Ordered by graded reverse lexicographic order with `x1 > x2 > … > x12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// The variable with zero-based index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Self(e)
    }

    pub fn from_exponents(e: [u16; NVARS]) -> Self {
        Self(e)
    }

    pub fn exponents(&self) -> &[u16; NVARS] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        other
            .divides(self)
            .then(|| Self(std::array::from_fn(|i| self.0[i] - other.0[i])))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i].max(other.0[i])))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn weight(&self, w: &[i32; NVARS]) -> i64 {
        self.0
            .iter()
            .zip(w)
            .map(|(&e, &w)| i64::from(e) * i64::from(w))
            .sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            (0..NVARS)
                .rev()
                .find(|&i| self.0[i] != other.0[i])
                .map_or(Ordering::Equal, |i| other.0[i].cmp(&self.0[i]))
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over `Q` in twelve variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl ExactPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([(Monomial::one(), c)])
    }

    pub fn var(i: usize) -> Self {
        Self::from_terms([(Monomial::var(i), Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Terms in increasing term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// `c · m · self`.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Self::zero(),
        }
    }

    /// The common torus weight of all terms, if homogeneous and nonzero.
    pub fn weight_of(&self, w: &[i32; NVARS]) -> Option<i64> {
        let mut weights = self.terms.keys().map(|m| m.weight(w));
        let first = weights.next()?;
        weights.all(|x| x == first).then_some(first)
    }

    pub fn display(&self, chart: Chart) -> Printed<'_> {
        Printed { poly: self, chart }
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = ExactPolynomial::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn neg(self) -> ExactPolynomial {
        self.scale(&-Rational::one())
    }
}

/// Canonical ASCII rendering, terms in decreasing term order:
/// `5*a10^2 - 6*a9*a11 + 12*a12`.
pub struct Printed<'a> {
    poly: &'a ExactPolynomial,
    chart: Chart,
}

impl fmt::Display for Printed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let c = c.abs();
            if m.is_one() {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            let mut first = true;
            for (i, &e) in m.0.iter().enumerate().filter(|(_, &e)| e > 0) {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "{}{}", self.chart.prefix(), i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Monomial {
        Monomial::var(i - 1)
    }

    #[test]
    fn grevlex_ordering() {
        assert!(x(1) > x(2));
        assert!(x(11) > x(12));
        assert!(x(12).mul(&x(12)) > x(1));
        // x1·x12 < x2·x3 since x12 is the smallest variable.
        assert!(x(1).mul(&x(12)) < x(2).mul(&x(3)));
        assert!(x(1).mul(&x(3)) < x(2).mul(&x(2)));
    }

    #[test]
    fn arithmetic_cancels() {
        let p = &ExactPolynomial::var(0) + &ExactPolynomial::var(4);
        let q = &p - &ExactPolynomial::var(4);
        assert_eq!(q, ExactPolynomial::var(0));
        assert!((&p - &p).is_zero());
        assert_eq!((&p * &p).len(), 3);
    }

    #[test]
    fn weights() {
        let w = [-6, -8, -10, -12, -4, -6, -8, -10, -2, -4, -6, -8];
        let p = &ExactPolynomial::var(0) + &ExactPolynomial::var(4);
        assert_eq!(p.weight_of(&w), None);
        assert_eq!(ExactPolynomial::zero().weight_of(&w), None);
        assert_eq!(ExactPolynomial::var(11).weight_of(&w), Some(-8));
    }
}
