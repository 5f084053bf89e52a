//! Multivariate division and Buchberger's algorithm over `Q`.

use super::poly::{ExactPolynomial, Monomial};

/// Remainder of `f` on full division by `basis`.
///
/// No term of the result is divisible by a leading monomial of `basis`.
pub fn normal_form(f: &ExactPolynomial, basis: &[ExactPolynomial]) -> ExactPolynomial {
    let leads: Vec<_> = basis
        .iter()
        .filter_map(|g| g.leading_term().map(|(m, c)| (*m, c.clone(), g)))
        .collect();
    let mut p = f.clone();
    let mut remainder = Vec::new();
    while let Some((m, c)) = p.leading_term().map(|(m, c)| (*m, c.clone())) {
        match leads.iter().find_map(|(lm, lc, g)| m.div(lm).map(|q| (q, lc, g))) {
            Some((q, lc, g)) => p = &p - &g.mul_term(&(&c / lc), &q),
            None => {
                remainder.push((m, c.clone()));
                p = &p - &ExactPolynomial::from_terms([(m, c)]);
            }
        }
    }
    ExactPolynomial::from_terms(remainder)
}

fn s_polynomial(f: &ExactPolynomial, g: &ExactPolynomial) -> ExactPolynomial {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fc.recip(), &l.div(fm).expect("lcm"));
    let b = g.mul_term(&gc.recip(), &l.div(gm).expect("lcm"));
    &a - &b
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Elements are monic and sorted by increasing leading monomial, so the
/// output is canonical for the fixed term order.
pub fn buchberger(gens: &[ExactPolynomial]) -> Vec<ExactPolynomial> {
    let mut basis: Vec<ExactPolynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(ExactPolynomial::monic)
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let lm =
        |basis: &[ExactPolynomial], i: usize| -> Monomial { *basis[i].leading_monomial().expect("nonzero") };
    while !pairs.is_empty() {
        // Normal selection strategy: smallest lcm first.
        let k = (0..pairs.len())
            .min_by_key(|&k| {
                let (i, j) = pairs[k];
                lm(&basis, i).lcm(&lm(&basis, j))
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(k);
        if lm(&basis, i).is_coprime(&lm(&basis, j)) {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let n = basis.len();
        basis.push(r.monic());
        pairs.extend((0..n).map(|i| (i, n)));
    }
    reduce(basis)
}

fn reduce(basis: Vec<ExactPolynomial>) -> Vec<ExactPolynomial> {
    let mut minimal: Vec<ExactPolynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let m = g.leading_monomial().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let n = h.leading_monomial().expect("nonzero");
            n.divides(m) && (n != m || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<ExactPolynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<_> = minimal
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, h)| h.clone())
                .collect();
            normal_form(&minimal[k], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    reduced
}

/// Whether `f` lies in the ideal with Gröbner basis `basis`.
pub fn is_member(f: &ExactPolynomial, basis: &[ExactPolynomial]) -> bool {
    normal_form(f, basis).is_zero()
}
