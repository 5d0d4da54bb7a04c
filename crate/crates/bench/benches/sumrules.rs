use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use wigner_sumrules::sumrule::{sumrule_bruteforce, sumrule_closed, sumrule_operator, sumrule_permutation};
use wigner_sumrules::wigner::{threej, sixj};
use wigner_sumrules::HalfInt;
use wigner_sumrules_bench::query;

fn by_method(c: &mut Criterion) {
    let mut group = c.benchmark_group("sumrule k=3");
    for twice_j in [4i64, 10, 20, 40] {
        let q = query(3, twice_j);
        group.bench_with_input(BenchmarkId::new("operator", twice_j), &q, |b, q| b.iter(|| sumrule_operator(black_box(q))));
        group.bench_with_input(BenchmarkId::new("bruteforce", twice_j), &q, |b, q| b.iter(|| sumrule_bruteforce(black_box(q))));
        group.bench_with_input(BenchmarkId::new("permutation", twice_j), &q, |b, q| {
            b.iter(|| sumrule_permutation(black_box(q)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("closed", twice_j), &q, |b, q| {
            b.iter(|| sumrule_closed(q.k, q.j1, q.m1, q.j2, q.m2).unwrap())
        });
    }
    group.finish();
}

fn by_power(c: &mut Criterion) {
    let mut group = c.benchmark_group("sumrule j=5");
    for k in [1u32, 4, 8, 16, 32] {
        let q = query(k, 10);
        group.bench_with_input(BenchmarkId::new("operator", k), &q, |b, q| b.iter(|| sumrule_operator(black_box(q))));
        group.bench_with_input(BenchmarkId::new("bruteforce", k), &q, |b, q| b.iter(|| sumrule_bruteforce(black_box(q))));
    }
    group.finish();
}

fn symbols(c: &mut Criterion) {
    let h = HalfInt::from_twice;
    c.bench_function("3j (10 8 6; 2 -2 0)", |b| b.iter(|| threej(h(20), h(16), h(12), h(4), h(-4), h(0)).unwrap()));
    c.bench_function("3j (40 40 40; 0 0 0)", |b| b.iter(|| threej(h(80), h(80), h(80), h(0), h(0), h(0)).unwrap()));
    c.bench_function("6j {8 8 8; 8 8 8}", |b| b.iter(|| sixj([h(16); 6]).unwrap()));
}

criterion_group!(benches, by_method, by_power, symbols);
criterion_main!(benches);
