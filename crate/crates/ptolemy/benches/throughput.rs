//! Sequential vs data-parallel throughput on the enumeration-heavy paths.

use criterion::{criterion_group, criterion_main, Criterion};
use ptolemy::enumerate::{
    brute_force_tally_par, brute_force_tally_seq, stats_tally_where_par, stats_tally_where_seq,
};
use ptolemy::qpoly::{csp_verify_all, CspMode};

fn brute_force_lanes(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_force_tally/8-gon");
    group.sample_size(20);
    group.bench_function("sequential", |b| {
        b.iter(|| brute_force_tally_seq(7, 8).unwrap())
    });
    group.bench_function("parallel", |b| {
        b.iter(|| brute_force_tally_par(7, 8).unwrap())
    });
    group.finish();
}

fn stats_tally_lanes(c: &mut Criterion) {
    let mut group = c.benchmark_group("stats_tally/10-gon");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| stats_tally_where_seq(9, |_| true).unwrap())
    });
    group.bench_function("parallel", |b| {
        b.iter(|| stats_tally_where_par(9, |_| true).unwrap())
    });
    group.finish();
}

fn sieving_end_to_end(c: &mut Criterion) {
    let mut group = c.benchmark_group("csp_verify_all/8-gon");
    group.sample_size(10);
    group.bench_function("both-modes", |b| {
        b.iter(|| csp_verify_all(7, CspMode::Both).unwrap())
    });
    group.finish();
}

criterion_group!(benches, brute_force_lanes, stats_tally_lanes, sieving_end_to_end);
criterion_main!(benches);
