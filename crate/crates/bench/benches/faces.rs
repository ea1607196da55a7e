use std::hint::black_box;

use conefaces::poly::gradient_rows;
use conefaces::{
    face_report, hilbert_function, kernel_of_rows, ordinary_square_component, six_point_scheme,
    symbolic_square_component,
};
use conefaces_bench::{independent, six_points};
use criterion::{criterion_group, criterion_main, Criterion};

fn linear_algebra(c: &mut Criterion) {
    let g = independent(3, 12, 4);
    let rows: Vec<_> = g
        .points()
        .iter()
        .flat_map(|p| gradient_rows(8, p.coords()))
        .collect();
    c.bench_function("kernel of gradient rows, 12 points, degree 8", |b| {
        b.iter(|| kernel_of_rows(45, black_box(&rows)))
    });
}

fn components(c: &mut Criterion) {
    let six = six_points();
    c.bench_function("face_report, six points, d = 2", |b| {
        b.iter(|| face_report(black_box(&six), 2).unwrap())
    });
    let g = independent(3, 12, 4);
    c.bench_function("symbolic square, 12 points in RP^2, degree 8", |b| {
        b.iter(|| symbolic_square_component(black_box(&g), 8))
    });
    c.bench_function("ordinary square, 12 points in RP^2, degree 8", |b| {
        b.iter(|| ordinary_square_component(black_box(&g), 8).unwrap())
    });
    c.bench_function("hilbert function at k = 11, 12 points in RP^2", |b| {
        b.iter(|| hilbert_function(black_box(&g), 4, 11).unwrap())
    });
}

fn constructions(c: &mut Criterion) {
    let six = six_points();
    c.bench_function("six-point scheme", |b| {
        b.iter(|| six_point_scheme(black_box(&six), None).unwrap())
    });
}

criterion_group!(benches, linear_algebra, components, constructions);
criterion_main!(benches);
