use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use goldman_core::goldman::{antisymmetry_failures, equivalence_sweep, jacobi_failures};
use goldman_core::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("equivalence_sweep");
    g.sample_size(10);
    for bound in [2, 3] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, bound), &bound, |b, &bound| {
                b.iter(|| equivalence_sweep(black_box(bound), exec).unwrap())
            });
        }
    }
    g.finish();
}

fn jacobi(c: &mut Criterion) {
    let mut g = c.benchmark_group("jacobi");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 2), &2, |b, &bound| {
            b.iter(|| jacobi_failures(black_box(bound), exec))
        });
    }
    g.finish();
}

fn antisymmetry(c: &mut Criterion) {
    let mut g = c.benchmark_group("antisymmetry");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 4), &4, |b, &bound| {
            b.iter(|| antisymmetry_failures(black_box(bound), exec))
        });
    }
    g.finish();
}

criterion_group!(benches, sweep, jacobi, antisymmetry);
criterion_main!(benches);
