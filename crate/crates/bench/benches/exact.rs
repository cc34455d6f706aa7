use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use semigrowth::cone::{hilbert_basis, ConeSemigroup};
use semigrowth::keyforms::keyforms_of_spec;
use semigrowth::newton::generic_series_from_boundaries;
use semigrowth::rational::int;
use semigrowth::semidegree::{delta_star, maclane_value};
use semigrowth::witness::{low_degree_space, Grading};
use semigrowth_bench::{dense_poly, three_step_plan, two_tentacles};

fn semidegrees(c: &mut Criterion) {
    let spec = two_tentacles().remove(0);
    let f = dense_poly(8);
    c.bench_function("delta_star dense degree 8", |b| {
        b.iter(|| delta_star(black_box(&spec), black_box(&f)))
    });
    let seq = three_step_plan().expected_keyforms().unwrap();
    c.bench_function("maclane_value dense degree 8", |b| {
        b.iter(|| maclane_value(black_box(&seq), black_box(&f)))
    });
}

fn keyforms(c: &mut Criterion) {
    let plan = three_step_plan();
    let bc = plan.boundaries().unwrap();
    c.bench_function("generic_series_from_boundaries", |b| {
        b.iter(|| generic_series_from_boundaries(black_box(&bc.f1), black_box(&bc.f2)))
    });
    let spec = generic_series_from_boundaries(&bc.f1, &bc.f2).unwrap();
    c.bench_function("keyforms_of_spec", |b| {
        b.iter(|| keyforms_of_spec(black_box(&spec)))
    });
}

fn cones(c: &mut Criterion) {
    let strips = ConeSemigroup::from_directions(vec![vec![0, 1], vec![1, 0]]).unwrap();
    c.bench_function("hilbert_basis strips", |b| {
        b.iter(|| hilbert_basis(black_box(&strips), 4))
    });
    let skew = ConeSemigroup::from_directions(vec![vec![1, -3], vec![-3, 1]]).unwrap();
    c.bench_function("hilbert_basis skew", |b| {
        b.iter(|| hilbert_basis(black_box(&skew), 6))
    });
}

fn witness(c: &mut Criterion) {
    let specs = two_tentacles();
    let mut g = c.benchmark_group("low_degree_space");
    g.sample_size(10);
    g.bench_function("d=1 weighted (1,3) up to 24", |b| {
        b.iter(|| low_degree_space(black_box(&specs), &int(1), 24, Grading::Weighted(1, 3)))
    });
    g.bench_function("d=0 total up to 12", |b| {
        b.iter(|| low_degree_space(black_box(&specs), &int(0), 12, Grading::Total))
    });
    g.finish();
}

criterion_group!(benches, semidegrees, keyforms, cones, witness);
criterion_main!(benches);
