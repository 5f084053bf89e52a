//! TOML form of the catalog.
//!
//! ```toml
//! schema_version = 1
//!
//! [[points]]
//! label = "p12"
//! hyperplane_weight = 12
//! tangent_weights = [6, 4, 2]
//!
//! [[points.coordinates]]
//! name = "a1"
//! weight = -6
//!
//! [[components]]
//! label = "L2"
//! [[components.local]]
//! point = "p12"
//! ideal = ["a1", "a5"]
//! conormal = [-6, -4]
//! tangent = 2
//! twist = -12
//!
//! [[sheaves]]
//! label = "D2"
//! degree = 2
//! [[sheaves.terms]]
//! component = "L2"
//! twisted = true
//! prefactor = [[1, 8]]        # [coefficient, exponent] pairs
//!
//! [[degrees]]
//! degree = 2
//! sheaves = ["D2", "Dm2", "Q"]
//! ```
//!
//! Tangent and conormal weights are redundant with the coordinates and
//! ideals; loading recomputes them and rejects any mismatch.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{BaseComponent, Catalog, ComponentLabel, Coordinate, FixedPoint, FixedSheaf, KClass, PointLabel};
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, Rational};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    schema_version: u32,
    points: Vec<PointEntry>,
    components: Vec<ComponentEntry>,
    sheaves: Vec<SheafEntry>,
    degrees: Vec<DegreeEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointEntry {
    label: String,
    hyperplane_weight: i32,
    tangent_weights: Vec<i32>,
    coordinates: Vec<CoordinateEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoordinateEntry {
    name: String,
    weight: i32,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentEntry {
    label: String,
    local: Vec<LocalEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LocalEntry {
    point: String,
    ideal: Vec<String>,
    conormal: Vec<i32>,
    tangent: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    twist: Option<i32>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SheafEntry {
    label: String,
    degree: u32,
    terms: Vec<TermEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermEntry {
    component: String,
    twisted: bool,
    prefactor: Vec<[i64; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DegreeEntry {
    degree: u32,
    sheaves: Vec<String>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Catalog(msg.into())
}

impl Catalog {
    /// Serializes to the catalog TOML format. Output is deterministic.
    pub fn to_toml(&self) -> Result<String> {
        let file = CatalogFile {
            schema_version: SCHEMA_VERSION,
            points: self
                .points
                .iter()
                .map(|p| PointEntry {
                    label: p.label.to_string(),
                    hyperplane_weight: p.hyperplane_weight,
                    tangent_weights: p.tangent_weights().iter().map(|w| w.0).collect(),
                    coordinates: p
                        .coordinates
                        .iter()
                        .map(|c| CoordinateEntry {
                            name: c.name.clone(),
                            weight: c.weight.0,
                        })
                        .collect(),
                })
                .collect(),
            components: self
                .components
                .iter()
                .map(|c| ComponentEntry {
                    label: c.label.to_string(),
                    local: c
                        .local
                        .iter()
                        .map(|l| LocalEntry {
                            point: l.point.to_string(),
                            ideal: l.ideal.clone(),
                            conormal: l.conormal.iter().map(|w| w.0).collect(),
                            tangent: l.tangent.0,
                            twist: l.twist,
                        })
                        .collect(),
                })
                .collect(),
            sheaves: self
                .sheaves
                .iter()
                .map(|s| {
                    let terms = s
                        .class
                        .terms()
                        .iter()
                        .map(|t| {
                            Ok(TermEntry {
                                component: t.component().label.to_string(),
                                twisted: t.twisted(),
                                prefactor: integer_pairs(t.prefactor())
                                    .ok_or_else(|| bad(format!("{}: non-integral prefactor", s.label)))?,
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(SheafEntry {
                        label: s.label.clone(),
                        degree: s.degree,
                        terms,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
            degrees: self
                .degree_lists
                .iter()
                .map(|(&degree, sheaves)| DegreeEntry {
                    degree,
                    sheaves: sheaves.clone(),
                })
                .collect(),
        };
        toml::to_string(&file).map_err(|e| bad(e.to_string()))
    }

    /// Parses and validates a catalog TOML document.
    pub fn from_toml(text: &str) -> Result<Self> {
        let file: CatalogFile = toml::from_str(text).map_err(|e| bad(e.to_string()))?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(bad(format!("unsupported schema_version {}", file.schema_version)));
        }

        let mut points = Vec::new();
        for entry in &file.points {
            let label: PointLabel = entry.label.parse()?;
            if points.iter().any(|p: &FixedPoint| p.label == label) {
                return Err(bad(format!("duplicate point {label}")));
            }
            let point = FixedPoint {
                label,
                coordinates: entry
                    .coordinates
                    .iter()
                    .map(|c| Coordinate::new(&c.name, c.weight))
                    .collect(),
                hyperplane_weight: entry.hyperplane_weight,
            };
            let derived: Vec<i32> = point.tangent_weights().iter().map(|w| w.0).collect();
            if derived != entry.tangent_weights {
                return Err(bad(format!(
                    "{label}: tangent weights {:?} disagree with coordinates {derived:?}",
                    entry.tangent_weights
                )));
            }
            points.push(point);
        }

        let mut components = Vec::new();
        for entry in &file.components {
            let label: ComponentLabel = entry.label.parse()?;
            let mut ideals = Vec::new();
            for local in &entry.local {
                let [g1, g2] = local.ideal.as_slice() else {
                    return Err(bad(format!("{label}: local ideals need two generators")));
                };
                ideals.push((
                    local.point.parse::<PointLabel>()?,
                    [g1.as_str(), g2.as_str()],
                    local.twist,
                ));
            }
            let component = BaseComponent::from_ideals(label, &points, &ideals)?;
            for local in &entry.local {
                let point: PointLabel = local.point.parse()?;
                let derived = component.at(point).expect("point was just inserted");
                let conormal: Vec<i32> = derived.conormal.iter().map(|w| w.0).collect();
                if conormal != local.conormal || derived.tangent.0 != local.tangent {
                    return Err(bad(format!(
                        "{label} at {point}: declared weights disagree with ideal {:?}",
                        local.ideal
                    )));
                }
            }
            components.push(component);
        }

        let mut sheaves: Vec<FixedSheaf> = Vec::new();
        for entry in &file.sheaves {
            if sheaves.iter().any(|s| s.label == entry.label) {
                return Err(bad(format!("duplicate sheaf {}", entry.label)));
            }
            let mut class = KClass::zero();
            for term in &entry.terms {
                let label: ComponentLabel = term.component.parse()?;
                let component = components
                    .iter()
                    .find(|c| c.label == label)
                    .ok_or_else(|| bad(format!("{}: unknown component {label}", entry.label)))?;
                let base = if term.twisted {
                    KClass::twisted_line(component)?
                } else {
                    KClass::structure_sheaf(component)
                };
                let prefactor = LaurentPoly::from_terms(
                    term.prefactor
                        .iter()
                        .map(|&[c, e]| (e as i32, Rational::from_integer(c.into()))),
                );
                class = class.plus(&base.times(&prefactor));
            }
            sheaves.push(FixedSheaf {
                label: entry.label.clone(),
                degree: entry.degree,
                class,
            });
        }

        let mut degree_lists = BTreeMap::new();
        let mut listed = BTreeSet::new();
        for entry in &file.degrees {
            for label in &entry.sheaves {
                let sheaf = sheaves
                    .iter()
                    .find(|s| &s.label == label)
                    .ok_or_else(|| bad(format!("degree {}: unknown sheaf {label}", entry.degree)))?;
                if sheaf.degree != entry.degree {
                    return Err(bad(format!(
                        "{label} has degree {} but is listed under {}",
                        sheaf.degree, entry.degree
                    )));
                }
                listed.insert(label.clone());
            }
            if degree_lists.insert(entry.degree, entry.sheaves.clone()).is_some() {
                return Err(bad(format!("duplicate degree list {}", entry.degree)));
            }
        }
        if let Some(orphan) = sheaves.iter().find(|s| !listed.contains(&s.label)) {
            return Err(bad(format!("{} is not in any degree list", orphan.label)));
        }

        Ok(Catalog {
            points,
            components,
            sheaves,
            degree_lists,
        })
    }
}

fn integer_pairs(p: &LaurentPoly) -> Option<Vec<[i64; 2]>> {
    p.terms()
        .map(|(e, c)| {
            c.is_integer()
                .then(|| c.to_integer().to_i64())
                .flatten()
                .map(|c| [c, i64::from(e)])
        })
        .collect()
}
