//! Primary and descendent invariants `⟨τ_i(γ)⟩_d` by localization.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Catalog, FixedPoint, FixedSheaf, PointLabel};
use crate::pairing::virtual_tangent;
use crate::ring::{
    ch_series, graded_piece, int, rat, todd_inverse_series, EulerClass, EulerMonomial, Rational,
};

/// Insertion classes `h^k` for `k = 0, 1, 2`, with `h` the hyperplane class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InsertionClass {
    H0,
    H1,
    H2,
}

impl InsertionClass {
    pub const ALL: [InsertionClass; 3] = [Self::H0, Self::H1, Self::H2];

    pub fn degree(self) -> i32 {
        match self {
            Self::H0 => 0,
            Self::H1 => 1,
            Self::H2 => 2,
        }
    }

    /// The class `h_{2-i}` paired with `τ_i` in the dimension-matching case.
    pub fn complementary(i: usize) -> Result<Self> {
        match i {
            0 => Ok(Self::H2),
            1 => Ok(Self::H1),
            2 => Ok(Self::H0),
            _ => Err(Error::Parse(format!("no insertion complementary to tau_{i}"))),
        }
    }

    /// Restriction to a fixed point with hyperplane weight `m`:
    /// `1`, `mλ` and `(mλ)²/22`.
    pub fn restrict(self, m: i32) -> EulerMonomial {
        match self {
            Self::H0 => EulerMonomial::one(),
            Self::H1 => EulerMonomial::new(int(i64::from(m)), 1),
            Self::H2 => EulerMonomial::new(rat(i64::from(m) * i64::from(m), 22), 2),
        }
    }
}

impl fmt::Display for InsertionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{}", self.degree())
    }
}

impl FromStr for InsertionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h0" => Ok(Self::H0),
            "h1" => Ok(Self::H1),
            "h2" => Ok(Self::H2),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub degree: u32,
    pub index: usize,
    pub class: InsertionClass,
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
}

pub(crate) fn serialize_rational<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

/// `γ|_p · {ch(F|_p) · td(K_X|_p)⁻¹}_{i+2} / e(T_p X)` at a single point.
fn point_summand(
    s: &FixedSheaf,
    p: &FixedPoint,
    i: usize,
    gamma: InsertionClass,
    order: usize,
) -> Result<EulerMonomial> {
    let product = ch_series(&s.class.restrict(p.label), order)
        .mul(&todd_inverse_series(i64::from(p.hyperplane_weight), order)?);
    let piece = graded_piece(&product, i + 2)?;
    let tangent = EulerMonomial::new(int(p.tangent_euler()), 3);
    gamma.restrict(p.hyperplane_weight).mul(&piece).div(&tangent)
}

/// Per-point summands of a sheaf's contribution, each multiplied by the
/// inverse virtual Euler class. Empty when that class vanishes.
pub fn point_summands(
    catalog: &Catalog,
    s: &FixedSheaf,
    i: usize,
    gamma: InsertionClass,
    order: usize,
) -> Result<Vec<(PointLabel, EulerMonomial)>> {
    let euler = match virtual_tangent(catalog, s)?.inverse_euler_class()? {
        EulerClass::Vanishing => return Ok(Vec::new()),
        EulerClass::Monomial(m) => m,
    };
    let degree = gamma.degree() + i as i32 + 2 - 3 + euler.lambda_power;
    if degree != 0 {
        return Err(Error::LambdaDegreeMismatch(degree));
    }
    s.support()
        .into_iter()
        .map(|label| {
            let summand = point_summand(s, catalog.point(label)?, i, gamma, order)?;
            Ok((label, summand.mul(&euler)))
        })
        .collect()
}

/// Contribution of one fixed sheaf to `⟨τ_i(γ)⟩_d`.
pub fn sheaf_contribution(
    catalog: &Catalog,
    s: &FixedSheaf,
    i: usize,
    gamma: InsertionClass,
    order: usize,
) -> Result<Rational> {
    let mut total = EulerMonomial::zero();
    for (_, summand) in point_summands(catalog, s, i, gamma, order)? {
        total = total.add(&summand)?;
    }
    if !total.is_zero() && total.lambda_power != 0 {
        return Err(Error::LambdaDegreeMismatch(total.lambda_power));
    }
    Ok(total.coeff)
}

/// `⟨τ_i(γ)⟩_d`, summed over the fixed sheaves of degree `d` in catalog order.
pub fn invariant(
    catalog: &Catalog,
    d: i64,
    i: usize,
    gamma: InsertionClass,
    order: usize,
) -> Result<InvariantRecord> {
    let mut value = Rational::zero();
    for s in catalog.fixed_sheaves(d)? {
        value += sheaf_contribution(catalog, s, i, gamma, order)?;
    }
    Ok(InvariantRecord {
        degree: d as u32,
        index: i,
        class: gamma,
        value,
    })
}

/// `⟨τ_2(h_0)⟩_d / ⟨τ_0(h_2)⟩_d`.
pub fn ratio_check(catalog: &Catalog, d: i64, order: usize) -> Result<Rational> {
    let tau0 = invariant(catalog, d, 0, InsertionClass::H2, order)?.value;
    if tau0.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(invariant(catalog, d, 2, InsertionClass::H0, order)?.value / tau0)
}

/// `⟨τ_i(h_{2-i})⟩_d` for every cataloged degree and `i = 0, 1, 2`.
pub fn invariant_table(catalog: &Catalog, order: usize) -> Result<Vec<InvariantRecord>> {
    let mut rows = Vec::new();
    for d in catalog.degrees() {
        for i in 0..3 {
            rows.push(invariant(
                catalog,
                i64::from(d),
                i,
                InsertionClass::complementary(i)?,
                order,
            )?);
        }
    }
    Ok(rows)
}
