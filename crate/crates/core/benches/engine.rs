use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use krull::decompose::krull_schmidt;
use krull::gallery;
use krull::module::{direct_sum, hom_space, Module};
use krull::seed::rng;

fn workloads() -> Vec<(&'static str, Module)> {
    let a4 = gallery::linear_quiver(4, 11).unwrap();
    let reg = Module::regular(a4.clone());
    let a4_big = gallery::linear_quiver(4, 101).unwrap();
    let reg_big = Module::regular(a4_big.clone());
    let doubled = direct_sum(&a4_big, &[reg_big.clone(), reg_big])
        .unwrap()
        .module;
    let mut r = rng(7);
    let qa = gallery::random_monomial_quiver(&mut r, 6, 101).unwrap();
    let a = Arc::new(qa.algebra);
    let random = gallery::random_module(&a, &mut r, 14).unwrap();
    vec![
        ("A4 regular", reg),
        ("A4 regular^2", doubled),
        ("random quiver", random),
    ]
}

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let all = rayon::ThreadPoolBuilder::new().build().unwrap();
    if cfg!(feature = "parallel") {
        vec![("1 thread", one), ("default pool", all)]
    } else {
        vec![("sequential", one)]
    }
}

fn bench_krull_schmidt(c: &mut Criterion) {
    let mut group = c.benchmark_group("krull_schmidt");
    for (name, m) in workloads() {
        for (label, pool) in pools() {
            group.bench_with_input(BenchmarkId::new(label, name), &m, |b, m| {
                b.iter(|| pool.install(|| krull_schmidt(m, 0).unwrap()))
            });
        }
    }
    group.finish();
}

fn bench_hom_space(c: &mut Criterion) {
    let mut group = c.benchmark_group("hom_space");
    for (name, m) in workloads() {
        for (label, pool) in pools() {
            group.bench_with_input(BenchmarkId::new(label, name), &m, |b, m| {
                b.iter(|| pool.install(|| hom_space(m, m).unwrap()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_krull_schmidt, bench_hom_space);
criterion_main!(benches);
