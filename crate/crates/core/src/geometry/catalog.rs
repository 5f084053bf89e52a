use std::collections::BTreeMap;

use super::{BaseComponent, ComponentLabel, Coordinate, FixedPoint, FixedSheaf, KClass, PointLabel};
use crate::error::{Error, Result};
use crate::ring::LaurentPoly;

/// Immutable fixed-locus data: points, curves, sheaf recipes, degree lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub points: Vec<FixedPoint>,
    pub components: Vec<BaseComponent>,
    pub sheaves: Vec<FixedSheaf>,
    pub degree_lists: BTreeMap<u32, Vec<String>>,
}

impl Catalog {
    /// The built-in catalog for the Mukai-Umemura threefold.
    pub fn mukai_umemura() -> Self {
        build().expect("built-in catalog is consistent")
    }

    pub fn point(&self, label: PointLabel) -> Result<&FixedPoint> {
        self.points
            .iter()
            .find(|p| p.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn component(&self, label: ComponentLabel) -> Result<&BaseComponent> {
        self.components
            .iter()
            .find(|c| c.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Looks up a sheaf; `L2`/`Lm2` are accepted for `D1`/`Dm1`.
    pub fn sheaf(&self, label: &str) -> Result<&FixedSheaf> {
        let canonical = match label {
            "L2" | "L" => "D1",
            "Lm2" => "Dm1",
            other => other,
        };
        self.sheaves
            .iter()
            .find(|s| s.label == canonical)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn fixed_sheaves(&self, degree: i64) -> Result<Vec<&FixedSheaf>> {
        let list = u32::try_from(degree)
            .ok()
            .and_then(|d| self.degree_lists.get(&d))
            .ok_or(Error::UnsupportedDegree(degree))?;
        list.iter().map(|l| self.sheaf(l)).collect()
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.degree_lists.keys().copied()
    }

    /// `[O_C]` for a base curve.
    pub fn structure_sheaf(&self, label: ComponentLabel) -> Result<KClass> {
        Ok(KClass::structure_sheaf(self.component(label)?))
    }

    /// `[O_L(-1)]` for a fixed line.
    pub fn twisted_line(&self, label: ComponentLabel) -> Result<KClass> {
        KClass::twisted_line(self.component(label)?)
    }
}

fn point(label: PointLabel, m: i32, coords: [(&str, i32); 3]) -> FixedPoint {
    FixedPoint {
        label,
        coordinates: coords.iter().map(|&(n, w)| Coordinate::new(n, w)).collect(),
        hyperplane_weight: m,
    }
}

fn build() -> Result<Catalog> {
    use ComponentLabel::*;
    use PointLabel::*;

    // Weights of the chart coordinates as functions; the tangent weights
    // at each point are their negatives.
    let points = vec![
        point(P12, 12, [("a1", -6), ("a5", -4), ("a9", -2)]),
        point(P10, 10, [("b5", -2), ("b8", -10), ("b9", 2)]),
        point(Pm10, -10, [("c5", 2), ("c8", 10), ("c9", -2)]),
        point(Pm12, -12, [("d1", 6), ("d5", 4), ("d9", 2)]),
    ];

    // O_L(1) is the restriction of O_X(1), so the fiber of O_L(-1) at p has weight -m.
    let twist = |p: PointLabel| Some(-points.iter().find(|q| q.label == p).unwrap().hyperplane_weight);

    let components = vec![
        BaseComponent::from_ideals(
            L2,
            &points,
            &[(P12, ["a1", "a5"], twist(P12)), (P10, ["b5", "b8"], twist(P10))],
        )?,
        BaseComponent::from_ideals(
            Lm2,
            &points,
            &[
                (Pm12, ["d1", "d5"], twist(Pm12)),
                (Pm10, ["c5", "c8"], twist(Pm10)),
            ],
        )?,
        BaseComponent::from_ideals(
            Q,
            &points,
            &[(P10, ["b5", "b9"], None), (Pm10, ["c5", "c9"], None)],
        )?,
        BaseComponent::from_ideals(
            C4,
            &points,
            &[(P12, ["a5", "a9"], None), (Pm12, ["d5", "d9"], None)],
        )?,
    ];

    let find = |l: ComponentLabel| components.iter().find(|c| c.label == l).unwrap();
    let o = |l| KClass::structure_sheaf(find(l));
    let o_minus = |l| KClass::twisted_line(find(l));
    let t = |e: i32| LaurentPoly::t(e);

    let mut sheaves = Vec::new();
    let mut push = |label: &str, degree: u32, class: KClass| {
        sheaves.push(FixedSheaf {
            label: label.to_string(),
            degree,
            class,
        })
    };

    // Multiplicity filtration on a fixed line:
    // [O_{D_{k+1}}] = [O_{D_k}] + t^{10-2k} [O_L(-1)], and weight-negated on L_{-2}.
    let mut d_plus = o(L2);
    let mut d_minus = o(Lm2);
    for k in 1..=4u32 {
        if k > 1 {
            let e = 10 - 2 * (k as i32 - 1);
            d_plus = d_plus.plus(&o_minus(L2)?.times(&t(e)));
            d_minus = d_minus.plus(&o_minus(Lm2)?.times(&t(-e)));
        }
        push(&format!("D{k}"), k, d_plus.clone());
        push(&format!("Dm{k}"), k, d_minus.clone());
    }

    push("Q", 2, o(Q));
    push("C4", 4, o(C4));
    push("L2+Q", 3, o(Q).plus(&o_minus(L2)?.times(&t(12))));
    push("Lm2+Q", 3, o(Q).plus(&o_minus(Lm2)?.times(&t(-12))));
    push("L2^2+Q", 4, o(Q).plus(&o_minus(L2)?.times(&(t(8) + t(12)))));
    push("Lm2^2+Q", 4, o(Q).plus(&o_minus(Lm2)?.times(&(t(-8) + t(-12)))));
    push(
        "L2+Lm2+Q",
        4,
        o(Q).plus(&o_minus(L2)?.times(&t(12)))
            .plus(&o_minus(Lm2)?.times(&t(-12))),
    );

    let degree_lists: BTreeMap<u32, Vec<String>> = [
        (1, vec!["D1", "Dm1"]),
        (2, vec!["D2", "Dm2", "Q"]),
        (3, vec!["D3", "Dm3", "L2+Q", "Lm2+Q"]),
        (4, vec!["D4", "Dm4", "L2^2+Q", "Lm2^2+Q", "L2+Lm2+Q", "C4"]),
    ]
    .into_iter()
    .map(|(d, l)| (d, l.into_iter().map(String::from).collect()))
    .collect();

    // Keep sheaves in degree-list order.
    let order: Vec<&String> = degree_lists.values().flatten().collect();
    sheaves.sort_by_key(|s| order.iter().position(|l| **l == s.label));

    Ok(Catalog {
        points,
        components,
        sheaves,
        degree_lists,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{mirror, restrict_sheaf};
    use crate::ring::{lambda_minus_one, sum_fractions, weights, FactoredFraction, Weight};

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn localized_euler_characteristic(cat: &Catalog, class: &KClass) -> LaurentPoly {
        let fractions: Vec<FactoredFraction> = cat
            .points
            .iter()
            .map(|p| FactoredFraction::new(class.restrict(p.label), p.cotangent_weights()))
            .collect();
        sum_fractions(&fractions).unwrap()
    }

    #[test]
    fn fixed_point_weights() {
        let cat = Catalog::mukai_umemura();
        let expect = [
            (PointLabel::P12, [6, 4, 2], 12),
            (PointLabel::P10, [2, 10, -2], 10),
            (PointLabel::Pm10, [-2, -10, 2], -10),
            (PointLabel::Pm12, [-6, -4, -2], -12),
        ];
        for (label, tangent, m) in expect {
            let p = cat.point(label).unwrap();
            assert_eq!(p.tangent_weights(), weights(&tangent));
            assert_eq!(p.hyperplane_weight, m);
            let cot: Vec<Weight> = p.tangent_weights().into_iter().map(|w| -w).collect();
            assert_eq!(p.cotangent_weights(), cot);
        }
        assert_eq!(cat.point(PointLabel::P12).unwrap().tangent_euler(), 48);
        assert_eq!(cat.point(PointLabel::P10).unwrap().tangent_euler(), -40);
    }

    #[test]
    fn conormal_weights_read_from_ideals() {
        use ComponentLabel::*;
        use PointLabel::*;
        let cat = Catalog::mukai_umemura();
        let conormal = |c, p| cat.component(c).unwrap().at(p).unwrap().conormal.clone();
        assert_eq!(conormal(L2, P12), weights(&[-6, -4]));
        assert_eq!(conormal(L2, P10), weights(&[-2, -10]));
        assert_eq!(conormal(Q, P10), weights(&[-2, 2]));
        assert_eq!(conormal(Q, Pm10), weights(&[2, -2]));
        assert_eq!(conormal(C4, P12), weights(&[-4, -2]));
        assert_eq!(conormal(C4, Pm12), weights(&[4, 2]));
        let l2 = cat.component(L2).unwrap();
        assert_eq!(l2.at(P12).unwrap().twist, Some(-12));
        assert_eq!(l2.at(P10).unwrap().twist, Some(-10));
        let lm2 = cat.component(Lm2).unwrap();
        assert_eq!(lm2.at(Pm12).unwrap().twist, Some(12));
        assert_eq!(lm2.at(Pm10).unwrap().twist, Some(10));
        // tangent direction of L2 at p12 is ∂/∂a9
        assert_eq!(l2.at(P12).unwrap().tangent, Weight(2));
    }

    #[test]
    fn restriction_examples() {
        let cat = Catalog::mukai_umemura();
        let d4 = cat.sheaf("D4").unwrap();
        let expected = &lp("1 + t^-4 + t^-6 + t^-8") * &lambda_minus_one(&weights(&[-6, -4]));
        assert_eq!(restrict_sheaf(d4, PointLabel::P12), expected);
        let expected = &lp("1 + t^-2 + t^-4 + t^-6") * &lambda_minus_one(&weights(&[-2, -10]));
        assert_eq!(restrict_sheaf(d4, PointLabel::P10), expected);
        let d1 = cat.sheaf("D1").unwrap();
        assert_eq!(
            restrict_sheaf(d1, PointLabel::P10),
            lambda_minus_one(&weights(&[-2, -10]))
        );
        assert!(restrict_sheaf(cat.sheaf("Q").unwrap(), PointLabel::P12).is_zero());
    }

    #[test]
    fn mirror_matches_independent_entries() {
        let cat = Catalog::mukai_umemura();
        for (a, b) in [
            ("D1", "Dm1"),
            ("D2", "Dm2"),
            ("D3", "Dm3"),
            ("D4", "Dm4"),
            ("L2+Q", "Lm2+Q"),
            ("L2^2+Q", "Lm2^2+Q"),
        ] {
            let s = cat.sheaf(a).unwrap();
            assert_eq!(&mirror(s), cat.sheaf(b).unwrap(), "{a}");
            assert_eq!(&mirror(&mirror(s)), s);
        }
        for label in ["Q", "C4", "L2+Lm2+Q"] {
            let s = cat.sheaf(label).unwrap();
            assert_eq!(&mirror(s), s, "{label} is self-mirror");
        }
        assert_eq!(
            cat.component(ComponentLabel::L2).unwrap().mirrored(),
            *cat.component(ComponentLabel::Lm2).unwrap()
        );
    }

    #[test]
    fn mirror_restriction_is_dual() {
        let cat = Catalog::mukai_umemura();
        for s in &cat.sheaves {
            let m = mirror(s);
            for p in PointLabel::ALL {
                assert_eq!(restrict_sheaf(&m, p.mirror()), restrict_sheaf(s, p).dual());
            }
        }
        let d4 = cat.sheaf("D4").unwrap();
        assert_eq!(
            restrict_sheaf(cat.sheaf("Dm4").unwrap(), PointLabel::Pm12),
            restrict_sheaf(d4, PointLabel::P12).dual()
        );
    }

    #[test]
    fn every_sheaf_has_euler_characteristic_one() {
        let cat = Catalog::mukai_umemura();
        for s in &cat.sheaves {
            let chi = localized_euler_characteristic(&cat, &s.class);
            assert_eq!(chi, LaurentPoly::one(), "{}", s.label);
            assert!(chi.is_integral());
        }
    }

    #[test]
    fn twisted_lines_have_euler_characteristic_zero() {
        let cat = Catalog::mukai_umemura();
        for label in [ComponentLabel::L2, ComponentLabel::Lm2] {
            for a in -12..=12 {
                let class = cat.twisted_line(label).unwrap().times(&LaurentPoly::t(a));
                assert!(localized_euler_characteristic(&cat, &class).is_zero());
            }
        }
    }

    #[test]
    fn fixed_sheaf_lists() {
        let cat = Catalog::mukai_umemura();
        let labels = |d| -> Vec<String> {
            cat.fixed_sheaves(d)
                .unwrap()
                .iter()
                .map(|s| s.label.clone())
                .collect()
        };
        assert_eq!(labels(1), ["D1", "Dm1"]);
        assert_eq!(labels(2), ["D2", "Dm2", "Q"]);
        assert_eq!(labels(3), ["D3", "Dm3", "L2+Q", "Lm2+Q"]);
        assert_eq!(labels(4).len(), 6);
        assert_eq!(cat.fixed_sheaves(5), Err(Error::UnsupportedDegree(5)));
        assert_eq!(cat.fixed_sheaves(0), Err(Error::UnsupportedDegree(0)));
        for d in 1..=4 {
            assert!(cat.fixed_sheaves(d).unwrap().iter().all(|s| s.degree as i64 == d));
        }
    }

    #[test]
    fn filtration_prefactors() {
        let cat = Catalog::mukai_umemura();
        let tw = |l: &str| cat.sheaf(l).unwrap().class.twisted_prefactor(ComponentLabel::L2);
        assert_eq!(tw("D2"), lp("t^8"));
        assert_eq!(tw("D3"), lp("t^6 + t^8"));
        assert_eq!(tw("D4"), lp("t^4 + t^6 + t^8"));
        assert_eq!(tw("L2^2+Q"), lp("t^8 + t^12"));
    }

    #[test]
    fn aliases_and_unknown_labels() {
        let cat = Catalog::mukai_umemura();
        assert_eq!(cat.sheaf("L2").unwrap().label, "D1");
        assert_eq!(cat.sheaf("Lm2").unwrap().label, "Dm1");
        assert_eq!(cat.sheaf("Z9"), Err(Error::UnknownLabel("Z9".into())));
    }
}
