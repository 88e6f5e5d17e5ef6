//! Sequential vs rayon throughput on the Monte Carlo inner loops.
//!
//! Run with `cargo bench -p arpersist`. The parallel variants exist only
//! when the default `parallel` feature is on; with
//! `--no-default-features` the bench still runs the sequential baselines.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::Rng;
use rand_distr::StandardNormal;

use arpersist::exec;
use arpersist::rng;
use arpersist::GeneratingPolynomial;

/// One persistence trial: does the random walk with these coefficients
/// stay non-negative for `n` steps?
fn survive(coeffs: &[f64], n: usize, seed: u64, path: u64) -> u64 {
    let mut r = rng::stream(seed, &[path]);
    let l = coeffs.len();
    let mut window = vec![0.0f64; l];
    for t in 0..n {
        let xi: f64 = r.sample(StandardNormal);
        let mut acc = xi;
        for (j, &a) in coeffs.iter().enumerate() {
            if t > j {
                acc += a * window[l - 1 - j];
            }
        }
        if acc < 0.0 {
            return 0;
        }
        window.rotate_left(1);
        window[l - 1] = acc;
    }
    1
}

fn bench_persistence_sweep(c: &mut Criterion) {
    let poly = GeneratingPolynomial::new(vec![1.0, -1.0, 1.0]).unwrap();
    let coeffs = poly.coeffs().to_vec();
    let mut group = c.benchmark_group("persistence_mc");
    for &n_paths in &[1_000usize, 10_000] {
        group.bench_with_input(
            BenchmarkId::new("sequential", n_paths),
            &n_paths,
            |b, &n_paths| {
                b.iter(|| exec::sum_u64_seq(n_paths, |i| survive(&coeffs, 256, 7, i as u64)))
            },
        );
        #[cfg(feature = "parallel")]
        group.bench_with_input(
            BenchmarkId::new("rayon", n_paths),
            &n_paths,
            |b, &n_paths| {
                b.iter(|| exec::sum_u64_par(n_paths, |i| survive(&coeffs, 256, 7, i as u64)))
            },
        );
    }
    group.finish();
}

fn bench_map_collect(c: &mut Criterion) {
    // Path-generation shaped workload: moderate per-item cost, Vec output.
    let work = |i: usize| -> f64 {
        let mut r = rng::stream(3, &[i as u64]);
        let mut acc = 0.0f64;
        for _ in 0..512 {
            let g: f64 = r.sample(StandardNormal);
            acc += g * g;
        }
        acc
    };
    let mut group = c.benchmark_group("map_collect");
    group.bench_function("sequential", |b| {
        b.iter(|| exec::map_collect_seq(4096, work))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("rayon", |b| b.iter(|| exec::map_collect_par(4096, work)));
    group.finish();
}

criterion_group!(benches, bench_persistence_sweep, bench_map_collect);
criterion_main!(benches);
