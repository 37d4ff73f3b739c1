use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use frobring::codes::{search_counterexample, verify_macwilliams, VerifyConfig};
use frobring::decomp::classify;
use frobring::duality::{find_torsion_free_character, DualModule};
use frobring::{build_ring, standard_catalog, FiniteRing};

const PICKS: &[&str] = &[
    "Z/12",
    "F_8",
    "M_2(F_2)",
    "F_2[S_3]",
    "F_2[x,y]/(x,y)^2",
    "M_2(F_2) x F_3",
];

fn picked() -> Vec<(&'static str, FiniteRing)> {
    standard_catalog()
        .into_iter()
        .filter(|e| PICKS.contains(&e.name))
        .map(|e| (e.name, build_ring(&e.expr).unwrap()))
        .collect()
}

fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    for e in standard_catalog()
        .into_iter()
        .filter(|e| PICKS.contains(&e.name))
    {
        g.bench_with_input(BenchmarkId::from_parameter(e.name), &e.expr, |b, expr| {
            b.iter(|| build_ring(black_box(expr)).unwrap())
        });
    }
    g.finish();
}

fn classification(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    for (name, ring) in picked() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &ring, |b, r| {
            b.iter(|| classify(black_box(r)).unwrap())
        });
    }
    g.finish();
}

fn duality(c: &mut Criterion) {
    let mut g = c.benchmark_group("dual");
    for (name, ring) in picked() {
        g.bench_with_input(BenchmarkId::new("module", name), &ring, |b, r| {
            b.iter(|| DualModule::new(black_box(r)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("character", name), &ring, |b, r| {
            b.iter(|| find_torsion_free_character(black_box(r)).unwrap())
        });
    }
    g.finish();
}

fn codes(c: &mut Criterion) {
    let config = VerifyConfig::default();
    let by_name = |n: &str| {
        let e = standard_catalog()
            .into_iter()
            .find(|e| e.name == n)
            .unwrap();
        build_ring(&e.expr).unwrap()
    };
    let z4 = by_name("Z/4");
    let local8 = by_name("F_2[x,y]/(x,y)^2");
    let mut g = c.benchmark_group("codes");
    g.sample_size(20);
    g.bench_function("verify Z/4 n=2", |b| {
        b.iter(|| verify_macwilliams(black_box(&z4), 2, &config).unwrap())
    });
    g.bench_function("search F_2[x,y]/(x,y)^2", |b| {
        b.iter(|| search_counterexample(black_box(&local8), 2, &config).unwrap())
    });
    g.finish();
}

criterion_group!(benches, construction, classification, duality, codes);
criterion_main!(benches);
