//! Timings of the hot paths: multiplication, determinants, exact division,
//! the unprojection check and a full seeded run.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use qfano_bench::product_operands;
use qfano_core::catalog::catalog;
use qfano_core::report::{run, RunConfig};
use qfano_core::verifier::unprojection::check_unprojection;

fn multiplication(c: &mut Criterion) {
    let (a, b) = product_operands();
    c.bench_function("multiply D123·F9", |bch| bch.iter(|| black_box(&a) * black_box(&b)));
}

fn determinants(c: &mut Criterion) {
    let m = &catalog().pi.m;
    c.bench_function("all 20 minors of M", |bch| {
        bch.iter(|| {
            qfano_core::catalog::pi::triples()
                .into_iter()
                .map(|t| qfano_core::catalog::pi::minor(black_box(m), t))
                .collect::<Vec<_>>()
        })
    });
}

fn division(c: &mut Criterion) {
    let pi = &catalog().pi;
    let (d, f) = product_operands();
    let dividend = &(&pi.g * &d) * &f;
    c.bench_function("exact division by G", |bch| bch.iter(|| black_box(&dividend).exact_divide(&pi.g).unwrap()));
}

fn unprojection(c: &mut Criterion) {
    let pi = &catalog().pi;
    let mut g = c.benchmark_group("checks");
    g.sample_size(10);
    g.bench_function("pi.unprojection", |bch| bch.iter(|| check_unprojection(black_box(pi))));
    g.bench_function("full suite, seed 42, 100 samples", |bch| {
        bch.iter(|| run(&RunConfig { parallelism: 1, ..RunConfig::default() }).unwrap())
    });
    g.finish();
}

criterion_group!(benches, multiplication, determinants, division, unprojection);
criterion_main!(benches);
