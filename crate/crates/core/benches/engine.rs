//! Engine timings on a one-thread pool against wider pools.
//!
//! Built without the `parallel` feature both pools run the sequential path,
//! so the two rows should agree.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kvertex::conifold::compose_conifold;
use kvertex::fock::contract;
use kvertex::partitions::Partition;
use kvertex::vertex::{gluing_inv, two_leg, two_leg_pairing_check, Variant};
use rayon::ThreadPool;

/// One thread, four threads, and the machine default when it differs.
fn pools() -> Vec<(String, ThreadPool)> {
    let mut sizes = vec![1, 4];
    let default = rayon::current_num_threads();
    if !sizes.contains(&default) {
        sizes.push(default);
    }
    sizes
        .into_iter()
        .map(|n| {
            (
                n.to_string(),
                rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap(),
            )
        })
        .collect()
}

fn bench_expand(c: &mut Criterion) {
    let mut g = c.benchmark_group("two_leg_expand");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::new("threads", &name), |b| {
            b.iter(|| pool.install(|| two_leg(4, 3, Variant::AsPrinted).unwrap()))
        });
    }
    g.finish();
}

fn bench_contract(c: &mut Criterion) {
    let v = two_leg(4, 4, Variant::LemmaForm).unwrap().kernel();
    let g_inv = gluing_inv(4, 4).unwrap().kernel();
    let mut g = c.benchmark_group("contract");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::new("threads", &name), |b| {
            b.iter(|| pool.install(|| contract(&v, &g_inv)))
        });
    }
    g.finish();
}

fn bench_pairing(c: &mut Criterion) {
    let (l, m): (Partition, Partition) = ("2,1".parse().unwrap(), "2".parse().unwrap());
    let mut g = c.benchmark_group("two_leg_pairing");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::new("threads", &name), |b| {
            b.iter(|| pool.install(|| two_leg_pairing_check(&l, &m, 3, Variant::LemmaForm).unwrap()))
        });
    }
    g.finish();
}

fn bench_conifold(c: &mut Criterion) {
    let mut g = c.benchmark_group("conifold_compose");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::new("threads", &name), |b| {
            b.iter(|| pool.install(|| compose_conifold(3, 2, 2).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_expand, bench_contract, bench_pairing, bench_conifold);
criterion_main!(benches);
