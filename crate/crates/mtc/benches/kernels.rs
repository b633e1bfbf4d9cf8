use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mtc::center::ops;
use mtc::sl2z::{closure_order, MatrixRep};
use mtc::{data, Exec, FusionRing};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn verlinde(c: &mut Criterion) {
    let mut group = c.benchmark_group("verlinde");
    for (name, md) in [("z_e6", data::z_e6()), ("z_haagerup", data::z_haagerup())] {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &md, |b, md| b.iter(|| FusionRing::verlinde(md, exec).unwrap()));
        }
    }
    group.finish();
}

fn closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("sl2z_closure");
    group.sample_size(10).measurement_time(Duration::from_secs(10));
    let rep = MatrixRep::from_modular_data(&data::z_e6()).unwrap();
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "z_e6"), |b| b.iter(|| closure_order(&rep, 40_000, exec).unwrap()));
    }
    group.finish();
}

fn center(c: &mut Criterion) {
    let mut group = c.benchmark_group("center");
    group.sample_size(10).measurement_time(Duration::from_secs(20));
    let cat = data::half_e6();
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "s_matrix"), |b| b.iter(|| ops::s_matrix(&cat, exec).unwrap()));
        group.bench_function(BenchmarkId::new(mode, "derived_fusion"), |b| b.iter(|| ops::derived_fusion(&cat, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, verlinde, closure, center);
criterion_main!(benches);
