use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hurwitz_core::hurwitz::{hurwitz_fast, hurwitz_series, HurwitzMethod};
use hurwitz_core::identities::{dd_series_closed, verify_bpa};
use hurwitz_core::rational::rat;
use hurwitz_core::sym_group::{tally_monodromy, EnumerationBudget, Partition};
use hurwitz_core::TruncatedSeries;

fn oracle(c: &mut Criterion) {
    let budget = EnumerationBudget::default();
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("tally d=3 r=10", |b| {
        b.iter(|| tally_monodromy(black_box(3), black_box(10), budget).unwrap())
    });
    group.bench_function("tally d=4 r=7", |b| {
        b.iter(|| tally_monodromy(black_box(4), black_box(7), budget).unwrap())
    });
    group.finish();
}

fn cut_join(c: &mut Criterion) {
    // the memo is process wide, so later iterations measure lookups
    let eta = Partition::new(vec![3, 2, 1]).unwrap();
    c.bench_function("cutjoin H^4_(3,2,1)", |b| {
        b.iter(|| hurwitz_fast(black_box(4), &eta).unwrap())
    });
    let d5 = Partition::full_cycle(5).unwrap();
    c.bench_function("hurwitz_series (5) N=16", |b| {
        b.iter(|| hurwitz_series(&d5, black_box(16), HurwitzMethod::fast()).unwrap())
    });
}

fn series(c: &mut Criterion) {
    let s = TruncatedSeries::sin_scaled(&rat(3, 2), 24);
    let x = s.mul(&s).unwrap();
    c.bench_function("exp N=24", |b| b.iter(|| black_box(&x).exp().unwrap()));
    let one_plus = x.add(&TruncatedSeries::one(24)).unwrap();
    c.bench_function("log N=24", |b| b.iter(|| black_box(&one_plus).log().unwrap()));
    c.bench_function("dd_series_closed d=5 N=24", |b| {
        b.iter(|| dd_series_closed(black_box(5), 24).unwrap())
    });
    c.bench_function("verify_bpa d=5 N=12", |b| {
        b.iter(|| verify_bpa(black_box(5), 12, HurwitzMethod::fast()).unwrap())
    });
}

criterion_group!(benches, oracle, cut_join, series);
criterion_main!(benches);
