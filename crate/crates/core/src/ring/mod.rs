//! Exact arithmetic kernel: the representation ring `Z[t^±1]` (with rational
//! coefficients for intermediates), sums of fractions over `(1 - t^w)`
//! denominators, equivariant Euler classes, and truncated λ-series.

mod euler;
mod fraction;
mod laurent;
mod series;

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use euler::{euler_of_virtual, EulerClass, EulerMonomial};
pub use fraction::{lambda_minus_one, sum_fractions, FactoredFraction};
pub use laurent::LaurentPoly;
pub use series::{ch_series, graded_piece, todd_inverse_series, LambdaSeries};

pub type Rational = BigRational;

/// Exponent of a character `t^w` of the one-dimensional torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub i32);

impl Weight {
    pub fn value(self) -> i32 {
        self.0
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(-self.0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn weights(ws: &[i32]) -> Vec<Weight> {
    ws.iter().copied().map(Weight).collect()
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::Parse(format!("bad rational literal `{s}`"));
    match s.split_once('/') {
        None => s.parse().map(Rational::from_integer).map_err(|_| err()),
        Some((p, q)) => {
            let p = p.trim().parse().map_err(|_| err())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| err())?;
            if num_traits::Zero::is_zero(&q) {
                return Err(err());
            }
            Ok(Rational::new(p, q))
        }
    }
}

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
