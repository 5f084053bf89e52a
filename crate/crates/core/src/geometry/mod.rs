//! Torus-fixed data of the Mukai-Umemura threefold: fixed points with their
//! chart coordinates, fixed curves with local defining ideals, and K-class
//! recipes for every torus-fixed stable sheaf of degree 1 to 4.

mod catalog;
mod data;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::{lambda_minus_one, LaurentPoly, Weight};

pub use catalog::Catalog;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointLabel {
    P12,
    P10,
    Pm10,
    Pm12,
}

impl PointLabel {
    pub const ALL: [PointLabel; 4] = [Self::P12, Self::P10, Self::Pm10, Self::Pm12];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::P12 => "p12",
            Self::P10 => "p10",
            Self::Pm10 => "pm10",
            Self::Pm12 => "pm12",
        }
    }

    pub fn mirror(self) -> Self {
        match self {
            Self::P12 => Self::Pm12,
            Self::P10 => Self::Pm10,
            Self::Pm10 => Self::P10,
            Self::Pm12 => Self::P12,
        }
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PointLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coordinate {
    pub name: String,
    /// Torus weight of the coordinate function.
    pub weight: Weight,
}

impl Coordinate {
    pub fn new(name: &str, weight: i32) -> Self {
        Self {
            name: name.to_string(),
            weight: Weight(weight),
        }
    }
}

/// Mirror chart coordinate: `a_i <-> d_i`, `b_i <-> c_i`.
fn mirror_coordinate_name(name: &str) -> String {
    let mut chars = name.chars();
    let head = match chars.next() {
        Some('a') => 'd',
        Some('d') => 'a',
        Some('b') => 'c',
        Some('c') => 'b',
        Some(other) => other,
        None => return String::new(),
    };
    std::iter::once(head).chain(chars).collect()
}

/// A torus-fixed point together with its invariant affine chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    pub label: PointLabel,
    /// The three chart coordinates; as functions they span the cotangent space.
    pub coordinates: Vec<Coordinate>,
    /// Weight `m` of the fiber `O_X(1)|_p = C ⊗ t^m`.
    pub hyperplane_weight: i32,
}

impl FixedPoint {
    pub fn cotangent_weights(&self) -> Vec<Weight> {
        self.coordinates.iter().map(|c| c.weight).collect()
    }

    pub fn tangent_weights(&self) -> Vec<Weight> {
        self.coordinates.iter().map(|c| -c.weight).collect()
    }

    /// Product of the tangent weights; `e^T(T_X|_p)` is this times λ³.
    pub fn tangent_euler(&self) -> i64 {
        self.tangent_weights().iter().map(|w| i64::from(w.0)).product()
    }

    pub fn coordinate(&self, name: &str) -> Option<&Coordinate> {
        self.coordinates.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentLabel {
    L2,
    Lm2,
    Q,
    C4,
}

impl ComponentLabel {
    pub const ALL: [ComponentLabel; 4] = [Self::L2, Self::Lm2, Self::Q, Self::C4];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::L2 => "L2",
            Self::Lm2 => "Lm2",
            Self::Q => "Q",
            Self::C4 => "C4",
        }
    }

    pub fn mirror(self) -> Self {
        match self {
            Self::L2 => Self::Lm2,
            Self::Lm2 => Self::L2,
            other => other,
        }
    }
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ComponentLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

/// Local data of a fixed curve at one of its fixed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCurve {
    pub point: PointLabel,
    /// The two chart coordinates cutting out the curve.
    pub ideal: Vec<String>,
    /// Weights of the defining coordinates, i.e. of the conormal space.
    pub conormal: Vec<Weight>,
    /// Weight of the tangent line of the curve at the point.
    pub tangent: Weight,
    /// Fiber weight of `O_C(-1)` at the point; only lines carry one.
    pub twist: Option<i32>,
}

/// A smooth torus-fixed curve: `L2`, `Lm2`, `Q` or `C4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseComponent {
    pub label: ComponentLabel,
    /// Sorted by point label.
    pub local: Vec<LocalCurve>,
}

impl BaseComponent {
    /// Builds a component from its local defining ideals, reading conormal
    /// and tangent weights off the chart coordinates of each point.
    pub fn from_ideals(
        label: ComponentLabel,
        points: &[FixedPoint],
        ideals: &[(PointLabel, [&str; 2], Option<i32>)],
    ) -> Result<Self> {
        let mut local = Vec::with_capacity(ideals.len());
        for &(point, gens, twist) in ideals {
            let fp = points
                .iter()
                .find(|p| p.label == point)
                .ok_or_else(|| Error::Catalog(format!("{label}: no fixed point {point}")))?;
            let mut conormal = Vec::with_capacity(2);
            for g in gens {
                let coord = fp.coordinate(g).ok_or_else(|| {
                    Error::Catalog(format!("{label}: `{g}` is not a coordinate at {point}"))
                })?;
                conormal.push(coord.weight);
            }
            let free: Vec<&Coordinate> = fp
                .coordinates
                .iter()
                .filter(|c| !gens.contains(&c.name.as_str()))
                .collect();
            let [along] = free.as_slice() else {
                return Err(Error::Catalog(format!(
                    "{label}: ideal at {point} must leave exactly one free coordinate"
                )));
            };
            local.push(LocalCurve {
                point,
                ideal: gens.iter().map(|g| g.to_string()).collect(),
                conormal,
                tangent: -along.weight,
                twist,
            });
        }
        local.sort_by_key(|l| l.point);
        Ok(Self { label, local })
    }

    pub fn support(&self) -> impl Iterator<Item = PointLabel> + '_ {
        self.local.iter().map(|l| l.point)
    }

    pub fn at(&self, p: PointLabel) -> Option<&LocalCurve> {
        self.local.iter().find(|l| l.point == p)
    }

    pub fn has_twist(&self) -> bool {
        !self.local.is_empty() && self.local.iter().all(|l| l.twist.is_some())
    }

    /// Weight negation: the image of the curve under the symmetry swapping
    /// `p ↔ p-mirror`.
    pub fn mirrored(&self) -> Self {
        let mut local: Vec<LocalCurve> = self
            .local
            .iter()
            .map(|l| LocalCurve {
                point: l.point.mirror(),
                ideal: l.ideal.iter().map(|g| mirror_coordinate_name(g)).collect(),
                conormal: l.conormal.iter().map(|&w| -w).collect(),
                tangent: -l.tangent,
                twist: l.twist.map(|t| -t),
            })
            .collect();
        local.sort_by_key(|l| l.point);
        Self {
            label: self.label.mirror(),
            local,
        }
    }
}

/// One summand `prefactor · [O_C]` or `prefactor · [O_C(-1)]` of a K-class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTerm {
    prefactor: LaurentPoly,
    component: BaseComponent,
    twisted: bool,
}

impl KTerm {
    pub fn prefactor(&self) -> &LaurentPoly {
        &self.prefactor
    }

    pub fn component(&self) -> &BaseComponent {
        &self.component
    }

    pub fn twisted(&self) -> bool {
        self.twisted
    }

    fn key(&self) -> (ComponentLabel, bool) {
        (self.component.label, self.twisted)
    }
}

/// Equivariant K-class supported on fixed curves, as a Laurent combination
/// of `[O_C]` and `[O_L(-1)]`.
///
/// Terms are kept merged per `(component, twisted)` and sorted, so equality
/// is equality of classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KClass {
    terms: Vec<KTerm>,
}

impl KClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn structure_sheaf(component: &BaseComponent) -> Self {
        Self::from_term(LaurentPoly::one(), component.clone(), false)
    }

    /// `[O_L(-1)]`; only defined for components carrying twist weights.
    pub fn twisted_line(component: &BaseComponent) -> Result<Self> {
        if !component.has_twist() {
            return Err(Error::Catalog(format!(
                "{} has no O(-1) twist data",
                component.label
            )));
        }
        Ok(Self::from_term(LaurentPoly::one(), component.clone(), true))
    }

    fn from_term(prefactor: LaurentPoly, component: BaseComponent, twisted: bool) -> Self {
        Self {
            terms: vec![KTerm {
                prefactor,
                component,
                twisted,
            }],
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        self.terms.sort_by_key(KTerm::key);
        let mut merged: Vec<KTerm> = Vec::with_capacity(self.terms.len());
        for term in self.terms {
            match merged.last_mut() {
                Some(last) if last.key() == term.key() => {
                    last.prefactor += &term.prefactor;
                }
                _ => merged.push(term),
            }
        }
        merged.retain(|t| !t.prefactor.is_zero());
        Self { terms: merged }
    }

    pub fn terms(&self) -> &[KTerm] {
        &self.terms
    }

    /// Multiplication by a Laurent polynomial in `t`.
    pub fn times(&self, p: &LaurentPoly) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| KTerm {
                    prefactor: &t.prefactor * p,
                    ..t.clone()
                })
                .collect(),
        }
        .normalized()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }.normalized()
    }

    /// Sum of prefactors of the twisted summands on `label`.
    pub fn twisted_prefactor(&self, label: ComponentLabel) -> LaurentPoly {
        self.terms
            .iter()
            .filter(|t| t.twisted && t.component.label == label)
            .fold(LaurentPoly::zero(), |acc, t| &acc + &t.prefactor)
    }

    /// `i_p^*[F]`: each summand restricts to `prefactor · t^twist · λ₋₁(N^*_p)`.
    pub fn restrict(&self, p: PointLabel) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for term in &self.terms {
            let Some(local) = term.component.at(p) else {
                continue;
            };
            let mut piece = &term.prefactor * &lambda_minus_one(&local.conormal);
            if term.twisted {
                let twist = local
                    .twist
                    .expect("twisted K-term on a component without twist data");
                piece = piece.shift(twist);
            }
            out += &piece;
        }
        out
    }

    /// Union of component supports, in point order.
    pub fn support(&self) -> Vec<PointLabel> {
        let mut pts: Vec<PointLabel> = self.terms.iter().flat_map(|t| t.component.support()).collect();
        pts.sort();
        pts.dedup();
        pts
    }

    pub fn mirrored(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| KTerm {
                    prefactor: t.prefactor.dual(),
                    component: t.component.mirrored(),
                    twisted: t.twisted,
                })
                .collect(),
        }
        .normalized()
    }
}

/// A torus-fixed stable sheaf of the moduli space in degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedSheaf {
    pub label: String,
    pub degree: u32,
    pub class: KClass,
}

impl FixedSheaf {
    pub fn support(&self) -> Vec<PointLabel> {
        self.class.support()
    }

    /// Global weight negation; `D4 -> Dm4`, `Q -> Q`, `L2^2+Q -> Lm2^2+Q`.
    pub fn mirror(&self) -> Self {
        Self {
            label: mirror_label(&self.label),
            degree: self.degree,
            class: self.class.mirrored(),
        }
    }
}

pub fn restrict_sheaf(s: &FixedSheaf, p: PointLabel) -> LaurentPoly {
    s.class.restrict(p)
}

pub fn mirror(s: &FixedSheaf) -> FixedSheaf {
    s.mirror()
}

/// Mirrors a sheaf label built from `D<k>`, `Dm<k>`, `L2`, `Lm2`, `Q`, `C4`
/// tokens joined by `+`, with optional `^k` multiplicity.
pub fn mirror_label(label: &str) -> String {
    fn rank(token: &str) -> u8 {
        match token.split('^').next().unwrap_or("") {
            "L2" => 0,
            "Lm2" => 1,
            "Q" => 2,
            _ => 3,
        }
    }
    let mut tokens: Vec<String> = label
        .split('+')
        .map(|tok| {
            if let Some(rest) = tok.strip_prefix("Dm") {
                format!("D{rest}")
            } else if let Some(rest) = tok.strip_prefix('D') {
                format!("Dm{rest}")
            } else if let Some(rest) = tok.strip_prefix("Lm2") {
                format!("L2{rest}")
            } else if let Some(rest) = tok.strip_prefix("L2") {
                format!("Lm2{rest}")
            } else {
                tok.to_string()
            }
        })
        .collect();
    tokens.sort_by_key(|t| rank(t));
    tokens.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn mirror_labels() {
        assert_eq!(mirror_label("D4"), "Dm4");
        assert_eq!(mirror_label("Dm3"), "D3");
        assert_eq!(mirror_label("Q"), "Q");
        assert_eq!(mirror_label("L2^2+Q"), "Lm2^2+Q");
        assert_eq!(mirror_label("L2+Lm2+Q"), "L2+Lm2+Q");
        assert_eq!(mirror_label("Lm2+Q"), "L2+Q");
    }

    #[test]
    fn coordinate_mirror() {
        assert_eq!(mirror_coordinate_name("a12"), "d12");
        assert_eq!(mirror_coordinate_name("c5"), "b5");
    }

    #[test]
    fn kclass_merges_and_cancels() {
        let cat = Catalog::mukai_umemura();
        let l = cat.component(ComponentLabel::L2).unwrap();
        let tw = KClass::twisted_line(l).unwrap();
        let a = tw.times(&lp("t^8"));
        let b = tw.times(&lp("t^6 - t^8"));
        let sum = a.plus(&b);
        assert_eq!(sum.terms().len(), 1);
        assert_eq!(sum.twisted_prefactor(ComponentLabel::L2), lp("t^6"));
        assert_eq!(a.plus(&a.times(&lp("-1"))), KClass::zero());
    }

    #[test]
    fn twist_requires_line() {
        let cat = Catalog::mukai_umemura();
        assert!(KClass::twisted_line(cat.component(ComponentLabel::Q).unwrap()).is_err());
    }

    #[test]
    fn point_label_round_trip() {
        for p in PointLabel::ALL {
            assert_eq!(p.as_str().parse::<PointLabel>().unwrap(), p);
            assert_eq!(p.mirror().mirror(), p);
        }
        assert!("p11".parse::<PointLabel>().is_err());
    }
}
