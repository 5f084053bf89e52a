use std::collections::BTreeMap;

use super::{LaurentPoly, Weight};
use crate::error::{Error, Result};

/// `numerator / ∏ (1 - t^w)` over a multiset of weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredFraction {
    pub numerator: LaurentPoly,
    pub denominator: Vec<Weight>,
}

impl FactoredFraction {
    pub fn new(numerator: LaurentPoly, denominator: Vec<Weight>) -> Self {
        Self {
            numerator,
            denominator,
        }
    }
}

/// K-theoretic λ₋₁ class: `∏ (1 - t^w)`.
pub fn lambda_minus_one(weights: &[Weight]) -> LaurentPoly {
    weights.iter().fold(LaurentPoly::one(), |acc, w| {
        &acc * &(&LaurentPoly::one() - &LaurentPoly::t(w.0))
    })
}

/// Sums fractions whose denominators are products of `(1 - t^w)` factors.
///
/// Negative weights are first rewritten as `1/(1 - t^w) = -t^-w / (1 - t^-w)`,
/// so identical factors cancel syntactically; the combined numerator is then
/// divided exactly by the least common denominator.
pub fn sum_fractions(terms: &[FactoredFraction]) -> Result<LaurentPoly> {
    let mut normalized = Vec::with_capacity(terms.len());
    for term in terms {
        if term.numerator.is_zero() {
            continue;
        }
        let mut numerator = term.numerator.clone();
        let mut counts: BTreeMap<i32, u32> = BTreeMap::new();
        for w in &term.denominator {
            match w.0 {
                0 => return Err(Error::ZeroDenominatorWeight),
                w if w < 0 => {
                    numerator = -numerator.shift(-w);
                    *counts.entry(-w).or_default() += 1;
                }
                w => *counts.entry(w).or_default() += 1,
            }
        }
        normalized.push((numerator, counts));
    }

    let mut common: BTreeMap<i32, u32> = BTreeMap::new();
    for (_, counts) in &normalized {
        for (&w, &n) in counts {
            let slot = common.entry(w).or_default();
            *slot = (*slot).max(n);
        }
    }

    let mut total = LaurentPoly::zero();
    for (numerator, counts) in normalized {
        let missing: Vec<Weight> = common
            .iter()
            .flat_map(|(&w, &n)| {
                let have = counts.get(&w).copied().unwrap_or(0);
                std::iter::repeat_n(Weight(w), (n - have) as usize)
            })
            .collect();
        total += &(&numerator * &lambda_minus_one(&missing));
    }

    for (&w, &n) in &common {
        for _ in 0..n {
            total = total.div_one_minus(w).ok_or(Error::NotPolynomial)?;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::weights;
    use proptest::prelude::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn lambda_minus_one_examples() {
        assert_eq!(
            lambda_minus_one(&weights(&[-6, -4])),
            lp("1 - t^-4 - t^-6 + t^-10")
        );
        assert_eq!(lambda_minus_one(&[]), LaurentPoly::one());
        // (1 - t^-2)(1 - t^-10), the conormal of L at p10
        assert_eq!(
            lambda_minus_one(&weights(&[-2, -10])),
            lp("1 - t^-2 - t^-10 + t^-12")
        );
    }

    #[test]
    fn zero_weight_kills_lambda_class() {
        assert!(lambda_minus_one(&weights(&[3, 0, -1])).is_zero());
    }

    #[test]
    fn localized_euler_characteristic_of_line() {
        let terms = [
            FactoredFraction::new(lp("1 - t^-4 - t^-6 + t^-10"), weights(&[-6, -4, -2])),
            FactoredFraction::new(lambda_minus_one(&weights(&[-2, -10])), weights(&[-2, -10, 2])),
        ];
        assert_eq!(sum_fractions(&terms).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn opposite_weights_sum_to_one() {
        let terms = [
            FactoredFraction::new(LaurentPoly::one(), weights(&[-2])),
            FactoredFraction::new(LaurentPoly::one(), weights(&[2])),
        ];
        assert_eq!(sum_fractions(&terms).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn non_polynomial_sum_is_rejected() {
        let terms = [FactoredFraction::new(lp("t^2"), weights(&[2]))];
        assert_eq!(sum_fractions(&terms), Err(Error::NotPolynomial));
    }

    #[test]
    fn zero_denominator_weight_is_rejected() {
        let terms = [FactoredFraction::new(LaurentPoly::one(), weights(&[0]))];
        assert_eq!(sum_fractions(&terms), Err(Error::ZeroDenominatorWeight));
    }

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(sum_fractions(&[]).unwrap(), LaurentPoly::zero());
    }

    proptest! {
        // p·λ₋₁(ws) / λ₋₁(ws) = p, split arbitrarily across two fractions.
        #[test]
        fn recombination_recovers_polynomial(
            p in crate::ring::laurent::tests::small_laurent(),
            q in crate::ring::laurent::tests::small_laurent(),
            ws in prop::collection::vec(prop_oneof![-5i32..=-1, 1i32..=5], 1..4),
        ) {
            let ws = weights(&ws);
            let lam = lambda_minus_one(&ws);
            let terms = [
                FactoredFraction::new(&p * &lam, ws.clone()),
                FactoredFraction::new(&q * &lam, ws.clone()),
            ];
            prop_assert_eq!(sum_fractions(&terms).unwrap(), &p + &q);
        }
    }
}
