//! Genus-0 GV invariants, meeting invariants and the DT/GV identity for
//! `Y = Tot(K_X)` in degrees 1 to 4.

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::Catalog;
use crate::localization::{invariant, serialize_rational, InsertionClass};
use crate::ring::{int, rat, Rational};

/// Orientation sign of the virtual class in degree `d`.
pub fn orientation_sign(d: i64) -> Rational {
    if d % 2 == 1 {
        int(1)
    } else {
        int(-1)
    }
}

/// Meeting invariants `m(d₁, d₂)`, memoized.
#[derive(Debug, Clone)]
pub struct MeetingTable {
    n0: BTreeMap<i64, Rational>,
    memo: RefCell<BTreeMap<(i64, i64), Rational>>,
}

impl MeetingTable {
    pub fn new(n0: BTreeMap<i64, Rational>) -> Self {
        Self {
            n0,
            memo: RefCell::new(BTreeMap::new()),
        }
    }

    fn n0(&self, d: i64) -> Result<&Rational> {
        self.n0.get(&d).ok_or(Error::NeedsHigherN0(d))
    }

    pub fn get(&self, d1: i64, d2: i64) -> Result<Rational> {
        if d1 <= 0 || d2 <= 0 {
            return Ok(Rational::zero());
        }
        let key = (d1.min(d2), d1.max(d2));
        if let Some(m) = self.memo.borrow().get(&key) {
            return Ok(m.clone());
        }
        let value = if d1 != d2 {
            int(-22) * self.n0(d1)? * self.n0(d2)? + self.get(d1, d2 - d1)? + self.get(d1 - d2, d2)?
        } else {
            let n = self.n0(d1)?;
            let mut m = int(2) * n - int(22) * n * n;
            for (a, b) in ordered_splits(d1) {
                m -= self.get(a, b)?;
            }
            m
        };
        self.memo.borrow_mut().insert(key, value.clone());
        Ok(value)
    }
}

/// Ordered pairs `(d₁, d₂)` of positive integers with `d₁ + d₂ = d`.
pub fn ordered_splits(d: i64) -> impl Iterator<Item = (i64, i64)> {
    (1..d).map(move |a| (a, d - a))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureCheck {
    pub degree: i64,
    #[serde(serialize_with = "serialize_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub rhs: Rational,
    pub holds: bool,
}

/// Signed invariants and GV data for every cataloged degree.
#[derive(Debug, Clone)]
pub struct GvPipeline {
    tau0: BTreeMap<i64, Rational>,
    tau1: BTreeMap<i64, Rational>,
    n1: BTreeMap<i64, Rational>,
    meeting: MeetingTable,
}

impl GvPipeline {
    /// Evaluates `⟨τ₀(h₂)⟩_d` and `⟨τ₁(h₁)⟩_d` for each degree; `n₁` starts at zero.
    pub fn new(catalog: &Catalog, order: usize) -> Result<Self> {
        let mut tau0 = BTreeMap::new();
        let mut tau1 = BTreeMap::new();
        for d in catalog.degrees().map(i64::from) {
            tau0.insert(d, invariant(catalog, d, 0, InsertionClass::H2, order)?.value);
            tau1.insert(d, invariant(catalog, d, 1, InsertionClass::H1, order)?.value);
        }
        Ok(Self::from_invariants(tau0, tau1))
    }

    pub fn from_invariants(tau0: BTreeMap<i64, Rational>, tau1: BTreeMap<i64, Rational>) -> Self {
        let n0 = tau0.iter().map(|(&d, v)| (d, orientation_sign(d) * v)).collect();
        let n1 = tau0.keys().map(|&d| (d, Rational::zero())).collect();
        Self {
            tau0,
            tau1,
            n1,
            meeting: MeetingTable::new(n0),
        }
    }

    pub fn set_n1(&mut self, d: i64, value: Rational) {
        self.n1.insert(d, value);
    }

    /// Sets `n₁(1), n₁(2), …` from a list.
    pub fn with_n1(mut self, values: &[Rational]) -> Self {
        for (d, v) in (1..).zip(values) {
            self.set_n1(d, v.clone());
        }
        self
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.tau0.keys().copied()
    }

    pub fn n0(&self, d: i64) -> Result<Rational> {
        self.meeting
            .n0
            .get(&d)
            .cloned()
            .ok_or(Error::UnsupportedDegree(d))
    }

    pub fn n1(&self, d: i64) -> Rational {
        self.n1.get(&d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn meeting(&self, d1: i64, d2: i64) -> Result<Rational> {
        self.meeting.get(d1, d2)
    }

    pub fn conjecture_check(&self, d: i64) -> Result<ConjectureCheck> {
        let tau1 = self.tau1.get(&d).ok_or(Error::UnsupportedDegree(d))?;
        let lhs = orientation_sign(d) * tau1;
        let mut rhs = int(11) * self.n0(d)? / int(d);
        for (d1, d2) in ordered_splits(d) {
            rhs -= rat(d1 * d2, 4 * d) * self.meeting(d1, d2)?;
        }
        for k in (1..=d).filter(|k| d % k == 0) {
            rhs -= int(d / k) * self.n1(d / k);
        }
        Ok(ConjectureCheck {
            degree: d,
            holds: lhs == rhs,
            lhs,
            rhs,
        })
    }

    pub fn conjecture_checks(&self) -> Result<Vec<ConjectureCheck>> {
        self.degrees().map(|d| self.conjecture_check(d)).collect()
    }
}
