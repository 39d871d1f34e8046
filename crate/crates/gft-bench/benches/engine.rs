use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gft_bench::bench_grid;
use gft_core::{
    alexander, cesaro_beta, hornich_scale, membership_margin, norm_estimate, AnalyticFn,
    ClassSpec, Complex64, DiskFunction,
};

fn series_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    for degree in [64usize, 256] {
        let koebe = AnalyticFn::koebe_order(0.25).unwrap().taylor(degree).unwrap();
        let half = AnalyticFn::half_plane().taylor(degree).unwrap();
        group.bench_with_input(BenchmarkId::new("mul", degree), &degree, |b, _| {
            b.iter(|| koebe.mul(&half).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("cpow", degree), &degree, |b, _| {
            b.iter(|| half.div(&gft_core::TaylorPoly::identity(degree)).unwrap()
                .cpow(Complex64::new(0.7, 0.3))
                .unwrap())
        });
    }
    group.finish();
}

fn quadrature_value(c: &mut Criterion) {
    let f: Arc<dyn DiskFunction> = Arc::new(AnalyticFn::koebe_order(0.25).unwrap());
    let t = hornich_scale(Complex64::new(0.7, 0.3), f).unwrap();
    let z = Complex64::new(0.6, 0.2);
    c.bench_function("quadrature hornich-scale value", |b| b.iter(|| t.value(z).unwrap()));
}

fn norm_scan(c: &mut Criterion) {
    let grid = bench_grid();
    let f: Arc<dyn DiskFunction> = Arc::new(AnalyticFn::koebe_order(0.0).unwrap());
    let t = alexander(f).unwrap();
    c.bench_function("norm scan 20x120", |b| b.iter(|| norm_estimate(&t, &grid).unwrap()));
}

fn kaplan_scan(c: &mut Criterion) {
    let grid = bench_grid();
    let f: Arc<dyn DiskFunction> = Arc::new(AnalyticFn::koebe_order(0.5).unwrap());
    let t = cesaro_beta(1.0, f).unwrap();
    c.bench_function("kaplan margin 20 radii", |b| {
        b.iter(|| membership_margin(&t, &ClassSpec::Kaplan, &grid).unwrap())
    });
}

criterion_group!(benches, series_ops, quadrature_value, norm_scan, kaplan_scan);
criterion_main!(benches);
