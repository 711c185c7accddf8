use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use fano_bench::{b1, b2};
use fano_core::embed::{classical_rotation, embedding_isomorphisms, triangular_completions};
use fano_core::kirkman15::{parallel_classes, sts15_61, sts_automorphism_group15};
use fano_core::octonion::{cartan_table, multiply, random_octonions, DEFAULT_SEED};
use fano_core::orient::{all_circuits, all_orientations, qr_orientation};
use fano_core::steiner::{all_fano_planes, automorphism_group, isomorphisms, isomorphisms_by_sweep, orthogonal_mates};

fn fano_searches(c: &mut Criterion) {
    let (f, s) = (b1(), b2());
    let mut g = c.benchmark_group("fano");
    g.bench_function("automorphisms/backtrack", |b| b.iter(|| automorphism_group(black_box(&f))));
    g.bench_function("isomorphisms/backtrack", |b| b.iter(|| isomorphisms(black_box(&f), black_box(&s))));
    g.bench_function("isomorphisms/sweep", |b| b.iter(|| isomorphisms_by_sweep(black_box(&f), black_box(&s))));
    g.bench_function("all_planes", |b| b.iter(all_fano_planes));
    g.bench_function("mates", |b| b.iter(|| orthogonal_mates(black_box(&f))));
    g.bench_function("orientations", |b| b.iter(|| all_orientations(black_box(&f))));
    g.bench_function("circuits", |b| b.iter(|| all_circuits(black_box(&f))));
    g.finish();
}

fn embeddings(c: &mut Criterion) {
    let r = classical_rotation();
    let mut g = c.benchmark_group("embed");
    g.bench_function("completions", |b| b.iter(|| triangular_completions(black_box(&[1, 5, 4, 6, 2, 3]))));
    g.bench_function("automorphism_sweep", |b| b.iter(|| embedding_isomorphisms(black_box(&r), black_box(&r))));
    g.finish();
}

fn kirkman(c: &mut Criterion) {
    let s = sts15_61();
    let mut g = c.benchmark_group("sts15");
    g.bench_function("automorphisms", |b| b.iter(|| sts_automorphism_group15(black_box(&s))));
    g.bench_function("parallel_classes", |b| b.iter(|| parallel_classes(black_box(&s))));
    g.finish();
}

fn octonions(c: &mut Criterion) {
    let table = cartan_table(&qr_orientation());
    let xs = random_octonions(64, 9, DEFAULT_SEED);
    c.bench_function("octonion/multiply_64", |b| {
        b.iter(|| xs.windows(2).map(|w| multiply(&w[0], &w[1], &table)).collect::<Vec<_>>())
    });
}

criterion_group!(benches, fano_searches, embeddings, kirkman, octonions);
criterion_main!(benches);
