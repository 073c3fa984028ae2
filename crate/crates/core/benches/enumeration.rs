//! Sequential versus parallel enumeration on the desk-scale instances.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qrd_core::codes::{weight_distribution_direct, DEFAULT_BUDGET};
use qrd_core::designs::jacobi_design_sweep;
use qrd_core::qres::{build_qr_pair, build_qr_pair_general, survey_shells};
use qrd_core::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn survey(c: &mut Criterion) {
    let q4_14 = build_qr_pair(2, 13).unwrap().e1;
    let q4_18 = build_qr_pair_general(2, 2, 17).unwrap().e1;
    let mut group = c.benchmark_group("survey_t3");
    group.sample_size(10);
    for (name, code) in [("Q4_14", &q4_14), ("Q4_18", &q4_18)] {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), code, |b, code| {
                b.iter(|| survey_shells(code, 3, DEFAULT_BUDGET, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn weight_distribution(c: &mut Criterion) {
    let q4_18 = build_qr_pair_general(2, 2, 17).unwrap().e1;
    let mut group = c.benchmark_group("weight_distribution");
    group.sample_size(10);
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "Q4_18"), |b| {
            b.iter(|| weight_distribution_direct(&q4_18, DEFAULT_BUDGET, exec).unwrap())
        });
    }
    group.finish();
}

fn jacobi(c: &mut Criterion) {
    let q4_14 = build_qr_pair(2, 13).unwrap().e1;
    let mut group = c.benchmark_group("jacobi_sweep_t3");
    group.sample_size(10);
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "Q4_14"), |b| {
            b.iter(|| jacobi_design_sweep(&q4_14, 3, DEFAULT_BUDGET, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, survey, weight_distribution, jacobi);
criterion_main!(benches);
