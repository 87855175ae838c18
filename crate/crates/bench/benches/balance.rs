use std::hint::black_box;

use cayley_db::verify::check_s1_family;
use cayley_db::{all_pairs, full_profile, s1_generators, CayleyGraph, Mode, WitnessCap};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn distances(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_pairs");
    for n in [16, 64, 256] {
        let g = CayleyGraph::dihedral(n, &s1_generators(n, 1), Mode::Strict).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(2 * n), &g, |b, g| {
            b.iter(|| all_pairs(black_box(g.graph())))
        });
    }
    group.finish();
}

fn profiles(c: &mut Criterion) {
    let mut group = c.benchmark_group("full_profile");
    for n in [16, 64, 256] {
        let g = CayleyGraph::dihedral(n, &s1_generators(n, 1), Mode::Strict).unwrap();
        let d = all_pairs(g.graph());
        group.bench_with_input(BenchmarkId::from_parameter(2 * n), &d, |b, d| {
            b.iter(|| full_profile(black_box(d), WitnessCap::Limit(0)).unwrap())
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    c.bench_function("s1_sweep_n_le_24", |b| {
        b.iter(|| check_s1_family(black_box(3..=24)))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = distances, profiles, sweep
}
criterion_main!(benches);
