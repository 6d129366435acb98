use criterion::{black_box, criterion_group, criterion_main, Criterion};
use heegner_bench::dense_series;
use heegner_core::eisenstein::vv_eisenstein;
use heegner_core::schubert::{kernel_gr36, proj_bundle_power, IntersectionRing, RingClass};
use heegner_core::vvmf::{solve_psi, w_prime_rep};

fn qseries(c: &mut Criterion) {
    let f = dense_series(30);
    let g = dense_series(30);
    c.bench_function("qseries mul prec 30", |b| b.iter(|| black_box(&f) * black_box(&g)));
    c.bench_function("qseries pow 11 prec 30", |b| b.iter(|| black_box(&f).pow(11)));
}

fn modular(c: &mut Criterion) {
    let rep = w_prime_rep();
    let mut group = c.benchmark_group("modular");
    group.sample_size(10);
    group.bench_function("vv_eisenstein k=5 prec 30", |b| b.iter(|| vv_eisenstein(&rep, 5, 30).unwrap()));
    group.bench_function("solve_psi prec 30", |b| b.iter(|| solve_psi(30).unwrap()));
    group.finish();
}

fn schubert(c: &mut Criterion) {
    let ring = IntersectionRing::gr36();
    let all = (0..ring.rank()).fold(RingClass::zero(ring), |acc, i| &acc + &RingClass::basis(ring, i));
    c.bench_function("Gr(3,6) full product", |b| b.iter(|| black_box(&all) * black_box(&all)));
    let k = kernel_gr36();
    c.bench_function("xi^54 over Gr(3,6)", |b| b.iter(|| proj_bundle_power(&k, 46, 54).unwrap()));
}

criterion_group!(benches, qseries, modular, schubert);
criterion_main!(benches);
