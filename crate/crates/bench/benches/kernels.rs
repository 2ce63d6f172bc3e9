use bellgamma_bench::harmonic_args;
use bellgamma_core::bell::bell_eval;
use bellgamma_core::numerics::gamma_const;
use bellgamma_core::sequences::{linear_form_residual, p_seq, q_seq};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn sequences(c: &mut Criterion) {
    let mut g = c.benchmark_group("sequences");
    for n in [50usize, 200] {
        g.bench_with_input(BenchmarkId::new("q_seq_a3", n), &n, |b, &n| {
            b.iter(|| q_seq(3, black_box(n)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("p_seq_a3_mu2", n), &n, |b, &n| {
            b.iter(|| p_seq(3, 2, black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn residual(c: &mut Criterion) {
    c.bench_function("linear_form_residual_a4_mu3_n10", |b| {
        b.iter(|| linear_form_residual(4, 3, black_box(10)).unwrap())
    });
}

fn constants(c: &mut Criterion) {
    let mut g = c.benchmark_group("gamma_const");
    for d in [100u32, 500] {
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| gamma_const(black_box(d)).unwrap())
        });
    }
    g.finish();
}

fn bell(c: &mut Criterion) {
    let args = harmonic_args(30);
    c.bench_function("bell_eval_rat_30", |b| b.iter(|| bell_eval(black_box(&args)).unwrap()));
}

criterion_group!(benches, sequences, residual, constants, bell);
criterion_main!(benches);
