use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use wigner_sumrules::hydrogenic::{
    expval_parabolic, expval_parabolic_via_basis_change, expval_spherical, marxer_reflect, xi_moment, Charge, Method,
    ParabolicOrbital, SphericalOrbital,
};

fn spherical(c: &mut Criterion) {
    let z = Charge::hydrogen();
    let mut group = c.benchmark_group("spherical p=6");
    for n in [10u32, 20, 60] {
        let orb = SphericalOrbital::new(n, n / 2).unwrap();
        group.bench_with_input(BenchmarkId::new("recurrence", n), &orb, |b, o| {
            b.iter(|| expval_spherical(black_box(o), &z, 6, Method::Recurrence))
        });
        group.bench_with_input(BenchmarkId::new("explicit", n), &orb, |b, o| {
            b.iter(|| expval_spherical(black_box(o), &z, 6, Method::Explicit))
        });
        group.bench_with_input(BenchmarkId::new("reflection", n), &orb, |b, o| {
            b.iter(|| marxer_reflect(black_box(o), &z, 6).unwrap())
        });
    }
    group.finish();
}

fn parabolic(c: &mut Criterion) {
    let z = Charge::hydrogen();
    let mut group = c.benchmark_group("parabolic p=4");
    for n in [4u32, 10, 20] {
        let orb = ParabolicOrbital::from_electric(n, 1, n as i32 % 2).unwrap();
        group.bench_with_input(BenchmarkId::new("composition", n), &orb, |b, o| {
            b.iter(|| expval_parabolic(black_box(o), &z, 4))
        });
        group.bench_with_input(BenchmarkId::new("basis", n), &orb, |b, o| {
            b.iter(|| expval_parabolic_via_basis_change(black_box(o), &z, 4))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("xi k=8");
    for method in [Method::Recurrence, Method::Explicit] {
        group.bench_function(format!("{method:?}"), |b| b.iter(|| xi_moment(30, 12, 3, &z, 8, method).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, spherical, parabolic);
criterion_main!(benches);
