//! Equivariant Euler pairings `χ(F, G)` by fixed-point localization.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::geometry::{Catalog, ComponentLabel, FixedSheaf, KClass};
use crate::ring::{euler_of_virtual, sum_fractions, EulerClass, FactoredFraction, LaurentPoly, Rational};

/// `χ(A, B) = Σ_p i_p^*[A]^∨ · i_p^*[B] / λ₋₁(T_p^* X)`.
///
/// Points outside either support contribute an empty numerator and are
/// dropped before the fractions are combined.
pub fn chi_pair(catalog: &Catalog, a: &KClass, b: &KClass) -> Result<LaurentPoly> {
    let fractions: Vec<FactoredFraction> = catalog
        .points
        .iter()
        .map(|p| {
            let numerator = &a.restrict(p.label).dual() * &b.restrict(p.label);
            FactoredFraction::new(numerator, p.cotangent_weights())
        })
        .filter(|f| !f.numerator.is_zero())
        .collect();
    sum_fractions(&fractions)
}

pub fn chi_self(catalog: &Catalog, s: &FixedSheaf) -> Result<LaurentPoly> {
    chi_pair(catalog, &s.class, &s.class)
}

/// `χ(F, F)` for `F = B + k·O_L(-1)` expanded into the four pairings
/// `χ(B,B) + k·χ(B,L) + k̄·χ(L,B) + k̄k·χ(L,L)`.
///
/// `k` is read off as the difference of the twisted prefactors on
/// `component`, and the recipe of `sheaf` must equal `base + k·O_L(-1)`.
pub fn bilinear_expansion(
    catalog: &Catalog,
    sheaf: &FixedSheaf,
    base: &FixedSheaf,
    component: ComponentLabel,
) -> Result<LaurentPoly> {
    let line = catalog.twisted_line(component)?;
    let k = &sheaf.class.twisted_prefactor(component) - &base.class.twisted_prefactor(component);
    if base.class.plus(&line.times(&k)) != sheaf.class {
        return Err(Error::Catalog(format!(
            "{} is not {} + ({k})*O_{component}(-1)",
            sheaf.label, base.label
        )));
    }
    let b = &base.class;
    Ok(chi_pair(catalog, b, b)?
        + &k * &chi_pair(catalog, b, &line)?
        + &k.dual() * &chi_pair(catalog, &line, b)?
        + &(&k.dual() * &k) * &chi_pair(catalog, &line, &line)?)
}

/// Localized holomorphic Euler characteristic `χ(F) = χ(O_X, F)`.
pub fn euler_characteristic(catalog: &Catalog, class: &KClass) -> Result<LaurentPoly> {
    let fractions: Vec<FactoredFraction> = catalog
        .points
        .iter()
        .map(|p| FactoredFraction::new(class.restrict(p.label), p.cotangent_weights()))
        .collect();
    sum_fractions(&fractions)
}

/// `T^vir = Ext¹(F,F) - Ext²(F,F) = 1 - χ(F,F)`, split by sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualTangent {
    pub deformation: LaurentPoly,
    /// Stored with positive coefficients.
    pub obstruction: LaurentPoly,
}

impl VirtualTangent {
    /// Splits `1 - chi` into deformation and obstruction parts.
    ///
    /// The constant term of `chi` must contain the scalar endomorphism, so
    /// anything below 1 is rejected. A constant term above 1 leaves a trivial
    /// character `t^0` in the obstruction.
    pub fn from_chi(chi: &LaurentPoly) -> Result<Self> {
        if !chi.is_integral() {
            return Err(Error::NonIntegral(chi.to_string()));
        }
        if chi.coeff(0) < Rational::one() {
            return Err(Error::BadConstantTerm(chi.coeff(0).to_string()));
        }
        let (deformation, obstruction) = (&LaurentPoly::one() - chi).split_by_sign();
        Ok(Self {
            deformation,
            obstruction,
        })
    }

    /// `χ(F,F) = 1 - def + obs`.
    pub fn chi(&self) -> LaurentPoly {
        &(&LaurentPoly::one() - &self.deformation) + &self.obstruction
    }

    /// `#def - #obs`, counted with multiplicity.
    pub fn dimension(&self) -> i64 {
        count(&self.deformation) - count(&self.obstruction)
    }

    /// `e^T(χ(F,F) - 1)`, the inverse Euler class of the virtual tangent space.
    pub fn inverse_euler_class(&self) -> Result<EulerClass> {
        euler_of_virtual(&(&self.obstruction - &self.deformation))
    }
}

fn count(p: &LaurentPoly) -> i64 {
    p.terms()
        .map(|(_, c)| c.abs().to_integer().to_i64().unwrap_or(i64::MAX))
        .sum()
}

fn render_part(p: &LaurentPoly) -> String {
    p.terms()
        .map(|(e, c)| {
            if c.is_one() {
                format!("t^{e}")
            } else {
                format!("{c}*t^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Renders as `1 - (deformation) + obstruction`, parenthesizing the
/// obstruction only when it has several terms.
impl fmt::Display for VirtualTangent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("1")?;
        if !self.deformation.is_zero() {
            write!(f, " - ({})", render_part(&self.deformation))?;
        }
        match self.obstruction.len() {
            0 => Ok(()),
            1 => write!(f, " + {}", render_part(&self.obstruction)),
            _ => write!(f, " + ({})", render_part(&self.obstruction)),
        }
    }
}

pub fn virtual_tangent(catalog: &Catalog, s: &FixedSheaf) -> Result<VirtualTangent> {
    VirtualTangent::from_chi(&chi_self(catalog, s)?)
}
