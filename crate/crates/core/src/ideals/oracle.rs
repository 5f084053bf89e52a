//! Ideal membership by linear algebra on graded pieces.
//!
//! For an ideal generated by homogeneous polynomials under a positive
//! grading, `f ∈ I` iff each graded component `f_D` lies in the span of
//! `m·g` over generators `g` and monomials `m` with `deg m + deg g = D`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::poly::{ExactPolynomial, Monomial, NVARS};
use crate::ring::Rational;

type Grading = [i64; NVARS];

fn grade(m: &Monomial, grading: &Grading) -> i64 {
    m.exponents()
        .iter()
        .zip(grading)
        .map(|(&e, &g)| i64::from(e) * g)
        .sum()
}

fn monomials_of_grade(d: i64, grading: &Grading) -> Vec<Monomial> {
    fn go(i: usize, left: i64, e: &mut [u16; NVARS], grading: &Grading, out: &mut Vec<Monomial>) {
        if i == NVARS {
            if left == 0 {
                out.push(Monomial::from_exponents(*e));
            }
            return;
        }
        let mut k = 0;
        while k * grading[i] <= left {
            e[i] = k as u16;
            go(i + 1, left - k * grading[i], e, grading, out);
            k += 1;
        }
        e[i] = 0;
    }
    let mut out = Vec::new();
    if d >= 0 {
        go(0, d, &mut [0; NVARS], grading, &mut out);
    }
    out
}

fn components(f: &ExactPolynomial, grading: &Grading) -> BTreeMap<i64, ExactPolynomial> {
    let mut out: BTreeMap<i64, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        out.entry(grade(m, grading)).or_default().push((*m, c.clone()));
    }
    out.into_iter()
        .map(|(d, t)| (d, ExactPolynomial::from_terms(t)))
        .collect()
}

/// Row-echelon span keyed by pivot monomial.
#[derive(Default)]
struct Span {
    rows: BTreeMap<Monomial, BTreeMap<Monomial, Rational>>,
}

impl Span {
    fn reduce(&self, v: &mut BTreeMap<Monomial, Rational>) {
        while let Some((m, c)) = v
            .iter()
            .rev()
            .find(|(m, _)| self.rows.contains_key(*m))
            .map(|(m, c)| (*m, c.clone()))
        {
            for (n, a) in &self.rows[&m] {
                let e = v.entry(*n).or_insert_with(Rational::zero);
                *e -= &c * a;
                if e.is_zero() {
                    v.remove(n);
                }
            }
        }
    }

    fn insert(&mut self, mut v: BTreeMap<Monomial, Rational>) {
        self.reduce(&mut v);
        if let Some((&p, c)) = v.iter().next_back() {
            let inv = c.recip();
            let row: BTreeMap<_, _> = v.iter().map(|(m, a)| (*m, a * &inv)).collect();
            for other in self.rows.values_mut() {
                if let Some(k) = other.get(&p).cloned() {
                    for (m, a) in &row {
                        let e = other.entry(*m).or_insert_with(Rational::zero);
                        *e -= &k * a;
                        if e.is_zero() {
                            other.remove(m);
                        }
                    }
                }
            }
            self.rows.insert(p, row);
        }
    }
}

fn to_map(f: &ExactPolynomial) -> BTreeMap<Monomial, Rational> {
    f.terms().map(|(m, c)| (*m, c.clone())).collect()
}

/// Decides `f ∈ ⟨gens⟩`; every generator must be homogeneous for `grading`,
/// whose entries must all be positive.
pub fn is_member(f: &ExactPolynomial, gens: &[ExactPolynomial], grading: &Grading) -> bool {
    assert!(grading.iter().all(|&g| g > 0), "grading must be positive");
    let graded: Vec<(i64, &ExactPolynomial)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let parts = components(g, grading);
            assert_eq!(parts.len(), 1, "generator is not homogeneous");
            (*parts.keys().next().unwrap(), g)
        })
        .collect();
    components(f, grading).into_iter().all(|(d, fd)| {
        let mut span = Span::default();
        for (dg, g) in &graded {
            for m in monomials_of_grade(d - dg, grading) {
                span.insert(to_map(&g.mul_term(&Rational::one(), &m)));
            }
        }
        let mut v = to_map(&fd);
        span.reduce(&mut v);
        v.is_empty()
    })
}
