//! Benchmarks for the four workhorse kernels — wedge, coproduct,
//! deformed (Clifford) product and meet — with exact rationals and,
//! where meaningful, f64 for comparison.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gfc_bench::{dense_form, dense_mv};
use gfc_core::*;

fn bench_wedge(c: &mut Criterion) {
    let dim = Dim::new(8).unwrap();
    let x: Multivector<Rational> = dense_mv(dim, 0);
    let y: Multivector<Rational> = dense_mv(dim, 1);
    c.bench_function("wedge/rational/n8/dense", |b| {
        b.iter(|| black_box(&x).wedge(black_box(&y)).unwrap())
    });
    let xf: Multivector<f64> = dense_mv(dim, 0);
    let yf: Multivector<f64> = dense_mv(dim, 1);
    c.bench_function("wedge/f64/n8/dense", |b| {
        b.iter(|| black_box(&xf).wedge(black_box(&yf)).unwrap())
    });
}

fn bench_coproduct(c: &mut Criterion) {
    let dim = Dim::new(8).unwrap();
    let x: Multivector<Rational> = dense_mv(dim, 0);
    c.bench_function("coproduct/rational/n8/dense", |b| {
        b.iter(|| coproduct(black_box(&x)))
    });
}

fn bench_clifford(c: &mut Criterion) {
    let dim = Dim::new(6).unwrap();
    let x: Multivector<Rational> = dense_mv(dim, 0);
    let y: Multivector<Rational> = dense_mv(dim, 1);
    let ext = ExtendedForm::new(dense_form::<Rational>(dim));
    // warm the pairing memo once so the benchmark measures the product
    let _ = clifford_product(&ext, &x, &y).unwrap();
    c.bench_function("clifford/rational/n6/dense", |b| {
        b.iter(|| clifford_product(&ext, black_box(&x), black_box(&y)).unwrap())
    });
    let xf: Multivector<f64> = dense_mv(dim, 0);
    let yf: Multivector<f64> = dense_mv(dim, 1);
    let extf = ExtendedForm::new(dense_form::<f64>(dim));
    let _ = clifford_product(&extf, &xf, &yf).unwrap();
    c.bench_function("clifford/f64/n6/dense", |b| {
        b.iter(|| clifford_product(&extf, black_box(&xf), black_box(&yf)).unwrap())
    });
}

fn bench_meet(c: &mut Criterion) {
    let dim = Dim::new(6).unwrap();
    let x: Multivector<Rational> = dense_mv(dim, 0);
    let y: Multivector<Rational> = dense_mv(dim, 1);
    c.bench_function("meet/rational/n6/dense", |b| {
        b.iter(|| meet(black_box(&x), black_box(&y)).unwrap())
    });
}

criterion_group!(benches, bench_wedge, bench_coproduct, bench_clifford, bench_meet);
criterion_main!(benches);
