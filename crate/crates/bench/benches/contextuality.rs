use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use potentia_core::{
    born_giv, build_graph, enumerate_maximal_contexts, ks_solve_with, random, reconstruct_density,
    resolve_bases, samples, SolveOptions, State,
};

fn bench_graph_and_contexts(c: &mut Criterion) {
    let frame = samples::cabello18();
    c.bench_function("build_graph/cabello18", |b| {
        b.iter(|| build_graph(black_box(&frame)))
    });
    let graph = build_graph(&frame);
    c.bench_function("maximal_contexts/cabello18", |b| {
        b.iter(|| enumerate_maximal_contexts(black_box(&frame), black_box(&graph)))
    });
    let (powers, _) = samples::powers_table();
    let powers_graph = build_graph(&powers);
    c.bench_function("maximal_contexts/powers26", |b| {
        b.iter(|| enumerate_maximal_contexts(black_box(&powers), black_box(&powers_graph)))
    });
}

fn bench_solver(c: &mut Criterion) {
    let frame = samples::cabello18();
    let with_parity = SolveOptions {
        try_parity_certificate: true,
    };
    let search_only = SolveOptions {
        try_parity_certificate: false,
    };
    c.bench_function("ks_solve/cabello18/parity", |b| {
        b.iter(|| ks_solve_with(black_box(&frame), &with_parity).unwrap())
    });
    c.bench_function("ks_solve/cabello18/search", |b| {
        b.iter(|| ks_solve_with(black_box(&frame), &search_only).unwrap())
    });
    let mut rng = random::rng(5150);
    let planted: Vec<_> = (0..16)
        .map(|_| random::random_planted_frame(&mut rng, 12))
        .collect();
    c.bench_function("ks_solve/random_planted_x16", |b| {
        b.iter(|| {
            for frame in &planted {
                black_box(ks_solve_with(frame, &with_parity).unwrap());
            }
        })
    });
}

fn bench_born_and_reconstruction(c: &mut Criterion) {
    let frame = samples::cabello18();
    let mut rng = random::rng(31337);
    let state = State::Density(random::random_density(&mut rng, 4, false));
    c.bench_function("born_giv/cabello18", |b| {
        b.iter(|| born_giv(black_box(&frame), black_box(&state)).unwrap())
    });
    let tomo = samples::tomography_qubit();
    let rho = samples::tomography_state();
    let giv = born_giv(&tomo, &State::Density(rho)).unwrap();
    c.bench_function("reconstruct_density/qubit", |b| {
        b.iter(|| reconstruct_density(black_box(&tomo), black_box(&giv)).unwrap())
    });
    c.bench_function("resolve_bases/cabello18", |b| {
        b.iter(|| resolve_bases(black_box(&frame)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_graph_and_contexts,
    bench_solver,
    bench_born_and_reconstruction
);
criterion_main!(benches);
