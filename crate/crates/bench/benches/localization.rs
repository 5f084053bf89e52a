use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use equiloc::ideals::{buchberger, IdealCorpus};
use equiloc::localization::invariant_table;
use equiloc::pairing::chi_self;
use equiloc::{Catalog, DEFAULT_SERIES_ORDER};

fn pairings(c: &mut Criterion) {
    let cat = Catalog::mukai_umemura();
    let d4 = cat.sheaf("D4").unwrap();
    c.bench_function("chi_self D4", |b| {
        b.iter(|| chi_self(&cat, black_box(d4)).unwrap())
    });
}

fn invariants(c: &mut Criterion) {
    let cat = Catalog::mukai_umemura();
    let mut group = c.benchmark_group("invariant_table");
    for order in [DEFAULT_SERIES_ORDER, 12] {
        group.bench_function(format!("order {order}"), |b| {
            b.iter(|| invariant_table(&cat, black_box(order)).unwrap())
        });
    }
    group.finish();
}

fn groebner(c: &mut Criterion) {
    let corpus = IdealCorpus::builtin();
    let mut group = c.benchmark_group("buchberger");
    for name in ["D4", "C"] {
        let gens = corpus.ideal(name).unwrap().generators.clone();
        group.bench_function(name, |b| b.iter(|| buchberger(black_box(&gens))));
    }
    group.finish();
}

criterion_group!(benches, pairings, invariants, groebner);
criterion_main!(benches);
