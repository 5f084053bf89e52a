//! Structural self-checks over the whole catalog.

use crate::error::Result;
use crate::geometry::{mirror_label, Catalog, ComponentLabel};
use crate::localization::{invariant_table, point_summands, sheaf_contribution, InsertionClass};
use crate::pairing::{bilinear_expansion, chi_self, euler_characteristic, virtual_tangent};
use crate::report::{Check, Report};
use crate::ring::LaurentPoly;

pub const SERIES_ORDERS: [usize; 3] = [6, 8, 12];

fn collect_failures<I: IntoIterator<Item = Result<Option<String>>>>(
    name: &str,
    items: I,
    ok_detail: String,
) -> Result<Check> {
    let mut bad = Vec::new();
    for item in items {
        if let Some(msg) = item? {
            bad.push(msg);
        }
    }
    Ok(if bad.is_empty() {
        Check::new(name, true, ok_detail)
    } else {
        Check::new(name, false, bad.join("; "))
    })
}

/// Localized `χ(O_C) = 1` for every cataloged sheaf and `0` for each
/// twisted line `O_L(-1)`.
pub fn euler_characteristics(catalog: &Catalog) -> Result<Check> {
    let sheaves = catalog.sheaves.iter().map(|s| {
        let chi = euler_characteristic(catalog, &s.class)?;
        Ok((chi != LaurentPoly::one()).then(|| format!("chi({}) = {chi}", s.label)))
    });
    let lines = catalog.components.iter().filter(|c| c.has_twist()).map(|c| {
        let chi = euler_characteristic(catalog, &catalog.twisted_line(c.label)?)?;
        Ok((!chi.is_zero()).then(|| format!("chi(O_{}(-1)) = {chi}", c.label)))
    });
    collect_failures(
        "euler characteristic",
        sheaves.chain(lines),
        format!("{} sheaves give 1, twisted lines give 0", catalog.sheaves.len()),
    )
}

/// `#def - #obs = 1` for every cataloged sheaf.
pub fn virtual_dimensions(catalog: &Catalog) -> Result<Check> {
    collect_failures(
        "virtual dimension",
        catalog.sheaves.iter().map(|s| {
            let dim = virtual_tangent(catalog, s)?.dimension();
            Ok((dim != 1).then(|| format!("{}: {dim}", s.label)))
        }),
        "all equal 1".into(),
    )
}

/// Every per-point insertion summand is a pure number.
pub fn lambda_degrees(catalog: &Catalog, order: usize) -> Result<Check> {
    let mut items = Vec::new();
    let mut count = 0;
    for s in &catalog.sheaves {
        for i in 0..3 {
            let gamma = InsertionClass::complementary(i)?;
            for (p, summand) in point_summands(catalog, s, i, gamma, order)? {
                count += 1;
                items.push(Ok((summand.lambda_power != 0)
                    .then(|| format!("{} tau_{i}({gamma}) at {p}: {summand}", s.label))));
            }
        }
    }
    collect_failures("lambda degree", items, format!("{count} summands at degree 0"))
}

/// Each sheaf and its mirror contribute equally to every `⟨τ_i(h_k)⟩`.
pub fn mirror_symmetry(catalog: &Catalog, order: usize) -> Result<Check> {
    let mut items = Vec::new();
    for s in &catalog.sheaves {
        let m = catalog.sheaf(&mirror_label(&s.label))?;
        if chi_self(catalog, m)? != chi_self(catalog, s)?.dual() {
            items.push(Ok(Some(format!(
                "chi({}) is not dual to chi({})",
                m.label, s.label
            ))));
        }
        for i in 0..3 {
            let gamma = InsertionClass::complementary(i)?;
            let a = sheaf_contribution(catalog, s, i, gamma, order)?;
            let b = sheaf_contribution(catalog, m, i, gamma, order)?;
            items.push(Ok(
                (a != b).then(|| format!("{} vs {} at tau_{i}: {a} != {b}", s.label, m.label))
            ));
        }
    }
    collect_failures(
        "mirror symmetry",
        items,
        "contributions and pairings agree".into(),
    )
}

/// The full invariant table is the same at every listed series order.
pub fn series_order_independence(catalog: &Catalog, orders: &[usize]) -> Result<Check> {
    let tables = orders
        .iter()
        .map(|&o| invariant_table(catalog, o))
        .collect::<Result<Vec<_>>>()?;
    let same = tables.windows(2).all(|w| w[0] == w[1]);
    Ok(Check::new(
        "series order",
        same,
        format!("orders {orders:?} {}", if same { "agree" } else { "disagree" }),
    ))
}

/// `χ(O_{D4}, O_{D4})` directly versus through `D4 = D3 + t^4·O_L(-1)`.
pub fn bilinear_audit(catalog: &Catalog) -> Result<Check> {
    let d4 = catalog.sheaf("D4")?;
    let direct = chi_self(catalog, d4)?;
    let expanded = bilinear_expansion(catalog, d4, catalog.sheaf("D3")?, ComponentLabel::L2)?;
    Ok(Check::new(
        "bilinear audit",
        direct == expanded,
        format!("direct {direct}, expanded {expanded}"),
    ))
}

/// Runs all property checks.
pub fn run(catalog: &Catalog, order: usize) -> Result<Report> {
    let mut report = Report::default();
    report.push(euler_characteristics(catalog)?);
    report.push(virtual_dimensions(catalog)?);
    report.push(lambda_degrees(catalog, order)?);
    report.push(mirror_symmetry(catalog, order)?);
    report.push(series_order_independence(catalog, &SERIES_ORDERS)?);
    report.push(bilinear_audit(catalog)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_SERIES_ORDER;

    #[test]
    fn all_properties_hold() {
        let report = run(&Catalog::mukai_umemura(), DEFAULT_SERIES_ORDER).unwrap();
        assert_eq!(report.checks.len(), 6);
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
    }

    #[test]
    fn lambda_degree_check_counts_only_contributing_sheaves() {
        let cat = Catalog::mukai_umemura();
        let check = lambda_degrees(&cat, DEFAULT_SERIES_ORDER).unwrap();
        // Eight D-type sheaves, two points each, three insertions.
        assert_eq!(check.detail, "48 summands at degree 0");
    }
}
