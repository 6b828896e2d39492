//! Benchmarks of the exact search kernels: the TD-coloring decision search,
//! the full optimization loop, the partition oracle, and the supporting
//! gamma_t and chromatic searches.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use tdc_bench::{cycle, path, star_subdivision};
use tdc_core::{
    brute_tdc_oracle, decide_tdc, exact_chromatic, exact_gamma_t, exact_tdc, subdivide, Decision,
    SearchBudget,
};

fn bench_exact_tdc(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_tdc");
    for n in [8usize, 12, 16] {
        let g = path(n);
        group.bench_function(format!("path_{n}"), |b| {
            b.iter(|| {
                exact_tdc(black_box(&g), SearchBudget::unlimited())
                    .unwrap()
                    .value
            })
        });
    }
    let c16 = cycle(16);
    group.bench_function("cycle_16", |b| {
        b.iter(|| {
            exact_tdc(black_box(&c16), SearchBudget::unlimited())
                .unwrap()
                .value
        })
    });
    let star = star_subdivision(4, 3);
    group.bench_function("star_4_sub_3", |b| {
        b.iter(|| {
            exact_tdc(black_box(&star), SearchBudget::unlimited())
                .unwrap()
                .value
        })
    });
    group.finish();
}

fn bench_decide_infeasible(c: &mut Criterion) {
    // The hard direction: exhaustively proving that one class fewer than
    // the optimum is infeasible.
    let g = path(16);
    let optimum = exact_tdc(&g, SearchBudget::unlimited()).unwrap().value;
    c.bench_function("decide_infeasible/path_16", |b| {
        b.iter(|| {
            let decision = decide_tdc(black_box(&g), optimum - 1, SearchBudget::unlimited());
            assert!(matches!(decision, Ok(Decision::Infeasible)));
        })
    });
}

fn bench_oracle(c: &mut Criterion) {
    let g = path(9);
    c.bench_function("brute_tdc_oracle/path_9", |b| {
        b.iter(|| brute_tdc_oracle(black_box(&g)).unwrap())
    });
}

fn bench_supporting_searches(c: &mut Criterion) {
    let g = cycle(14);
    c.bench_function("exact_gamma_t/cycle_14", |b| {
        b.iter(|| exact_gamma_t(black_box(&g)).unwrap().0)
    });
    let sub = subdivide(&cycle(9), 3).unwrap();
    c.bench_function("exact_chromatic/cycle_9_sub_3", |b| {
        b.iter(|| exact_chromatic(black_box(sub.graph())))
    });
}

criterion_group!(
    benches,
    bench_exact_tdc,
    bench_decide_infeasible,
    bench_oracle,
    bench_supporting_searches
);
criterion_main!(benches);
