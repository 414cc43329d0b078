//! Criterion timings for the hot paths: weak automorphism search, matroid
//! automorphism backtracking, congruence closure, exact linear solving,
//! and cone symmetry enumeration.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use tropmat_bench::{dense_system, fano, mixing_presentation, square_cone, weighted_u24};
use tropmat_core::bmod::congruence_closure;
use tropmat_core::cone::realizable_permutations;
use tropmat_core::solve_affine;
use tropmat_core::valuated::ValuatedMatroid;

fn bench_weak_automorphism_group(c: &mut Criterion) {
    let vm = weighted_u24();
    c.bench_function("weak_automorphism_group/weighted_u24", |b| {
        b.iter(|| black_box(&vm).weak_automorphism_group().unwrap().order())
    });
    let fano_trivial = ValuatedMatroid::trivial(fano());
    c.bench_function("weak_automorphism_group/fano_trivial", |b| {
        b.iter(|| black_box(&fano_trivial).weak_automorphism_group().unwrap().order())
    });
}

fn bench_matroid_automorphisms(c: &mut Criterion) {
    // Construct inside the loop: the group is cached per instance.
    c.bench_function("matroid_automorphisms/fano", |b| {
        b.iter(|| black_box(fano()).automorphisms().order())
    });
}

fn bench_congruence_closure(c: &mut Criterion) {
    let p = mixing_presentation();
    c.bench_function("congruence_closure/ten_generators", |b| {
        b.iter(|| congruence_closure(black_box(&p)).unwrap().size())
    });
}

fn bench_solve_affine(c: &mut Criterion) {
    let (a, rhs) = dense_system(40);
    c.bench_function("solve_affine/dense_40", |b| {
        b.iter(|| solve_affine(black_box(&a), black_box(&rhs)).unwrap().is_some())
    });
}

fn bench_cone_symmetries(c: &mut Criterion) {
    let cone = square_cone();
    c.bench_function("realizable_permutations/square_cone", |b| {
        b.iter(|| realizable_permutations(black_box(&cone)).unwrap().order())
    });
}

criterion_group!(
    benches,
    bench_weak_automorphism_group,
    bench_matroid_automorphisms,
    bench_congruence_closure,
    bench_solve_affine,
    bench_cone_symmetries
);
criterion_main!(benches);
