//! Compares the parallel survey path against the sequential fallback,
//! plus the symbolic matrix-power engine at a few sizes.
//!
//! With default features `survey` fans out over rayon while
//! `survey_sequential` is the single-threaded baseline; built with
//! `--no-default-features` the two coincide.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nakayama_core::{jn_generators, oracle};

fn bench_survey(c: &mut Criterion) {
    let mut group = c.benchmark_group("survey");
    group.sample_size(10);
    for &(max_s, max_c) in &[(3usize, 8usize), (4, 10), (5, 10)] {
        let label = format!("s{max_s}_c{max_c}");
        group.bench_with_input(BenchmarkId::new("parallel", &label), &(max_s, max_c), |b, &(s, c)| {
            b.iter(|| oracle::survey(s, c))
        });
        group.bench_with_input(BenchmarkId::new("sequential", &label), &(max_s, max_c), |b, &(s, c)| {
            b.iter(|| oracle::survey_sequential(s, c))
        });
    }
    group.finish();
}

fn bench_jn(c: &mut Criterion) {
    let mut group = c.benchmark_group("jn_generators");
    for &(n, a) in &[(4usize, 8usize), (8, 12), (12, 16)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("n{n}_a{a}")),
            &(n, a),
            |b, &(n, a)| b.iter(|| jn_generators(n, a).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_survey, bench_jn);
criterion_main!(benches);
