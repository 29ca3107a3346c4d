use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qimatch_core::grover::{exact_iterations, optimal_iterations};
use qimatch_core::{
    classical_match, encode_gqir, joint::mark, plan_iterations, validate_pair, Image, MatchMode,
    PlanMode, SubspaceState,
};

fn pair(n: u32, m: u32) -> (Image, Image) {
    let side = 1usize << n;
    let block = 1usize << m;
    let big: Vec<u32> = (0..side * side).map(|k| ((k * 2654435761) >> 7) as u32 & 0xff).collect();
    let small: Vec<u32> = (0..block * block)
        .map(|k| big[(k / block + 1) * side + k % block + 1])
        .collect();
    (
        Image::new(side, side, 8, big).unwrap(),
        Image::new(block, block, 8, small).unwrap(),
    )
}

fn grover(c: &mut Criterion) {
    let mut g = c.benchmark_group("run_grover");
    for n in [2u32, 4, 6, 8] {
        let iterations = exact_iterations(1 << n).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| SubspaceState::init(n, [1]).unwrap().run_grover(black_box(iterations)))
        });
    }
    g.finish();
}

fn planner(c: &mut Criterion) {
    let mut g = c.benchmark_group("plan");
    for a in [64u64, 4096, 65536] {
        g.bench_with_input(BenchmarkId::new("exact", a), &a, |b, &a| {
            b.iter(|| plan_iterations(black_box(a), PlanMode::PaperExact).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("optimal", a), &a, |b, &a| {
            b.iter(|| optimal_iterations(black_box(a)))
        });
    }
    g.finish();
}

fn marking(c: &mut Criterion) {
    let mut g = c.benchmark_group("mark");
    for (n, m) in [(2u32, 1u32), (4, 1), (5, 2)] {
        let (big, small) = pair(n, m);
        let dims = validate_pair(&big, &small).unwrap();
        let a = encode_gqir(&big, &dims).unwrap();
        let b_reg = encode_gqir(&small, &dims).unwrap();
        g.bench_function(BenchmarkId::from_parameter(format!("{n}_{m}")), |b| {
            b.iter(|| mark(black_box(&a), black_box(&b_reg)).unwrap())
        });
    }
    g.finish();
}

fn classical(c: &mut Criterion) {
    let mut g = c.benchmark_group("classical");
    for (n, m) in [(4u32, 1u32), (6, 2), (8, 3)] {
        let (big, small) = pair(n, m);
        for mode in [MatchMode::FullBlock, MatchMode::AnchorPixel] {
            g.bench_function(BenchmarkId::new(format!("{mode:?}"), format!("{n}_{m}")), |b| {
                b.iter(|| classical_match(black_box(&big), black_box(&small), mode).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, grover, planner, marking, classical);
criterion_main!(benches);
