//! Parallel against sequential structure-constant kernels.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use partperm::class_algebra::{compute_expansion, compute_expansion_sequential, GMethod};
use partperm::Partition;

fn pairs() -> Vec<(Partition, Partition)> {
    [("3", "3"), ("4", "3,2"), ("3,2", "3,2"), ("5", "4")]
        .iter()
        .map(|(s, t)| (s.parse().unwrap(), t.parse().unwrap()))
        .collect()
}

fn expansion(c: &mut Criterion) {
    let mut group = c.benchmark_group("expansion");
    group.sample_size(10);
    for (sigma, tau) in pairs() {
        let label = format!("{sigma:?}x{tau:?}");
        group.bench_with_input(
            BenchmarkId::new("parallel", &label),
            &(&sigma, &tau),
            |b, (s, t)| b.iter(|| compute_expansion(black_box(s), black_box(t), GMethod::Fast)),
        );
        group.bench_with_input(
            BenchmarkId::new("sequential", &label),
            &(&sigma, &tau),
            |b, (s, t)| b.iter(|| compute_expansion_sequential(black_box(s), black_box(t))),
        );
    }
    group.finish();
}

criterion_group!(benches, expansion);
criterion_main!(benches);
