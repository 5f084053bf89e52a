//! Exact equivariant localization on the Mukai-Umemura threefold.
//!
//! The crate computes equivariant Euler pairings of torus-fixed sheaves,
//! primary and descendent invariants of the local Calabi-Yau fourfold
//! `Tot(K_X)`, genus-0 GV and meeting invariants, and re-checks the ideal
//! computations behind the multiplicity filtrations with a small Gröbner
//! engine. All arithmetic is over exact rationals.

pub mod error;
pub mod geometry;
pub mod gv;
pub mod ideals;
pub mod localization;
pub mod pairing;
pub mod properties;
pub mod report;
pub mod ring;

pub use error::{Error, Result};
pub use geometry::{BaseComponent, Catalog, FixedPoint, FixedSheaf, KClass, PointLabel};
pub use gv::{ConjectureCheck, GvPipeline, MeetingTable};
pub use localization::{InsertionClass, InvariantRecord};
pub use pairing::VirtualTangent;
pub use report::{Check, Report};
pub use ring::{EulerClass, EulerMonomial, FactoredFraction, LambdaSeries, LaurentPoly, Rational, Weight};

/// Default truncation order for λ-series.
///
/// Graded pieces up to λ⁴ are consumed, so 8 leaves a wide margin.
pub const DEFAULT_SERIES_ORDER: usize = 8;
