use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mckay_core::coxeter::coxeter_charpoly;
use mckay_core::diagram::build;
use mckay_core::exact::series_expand_integral;
use mckay_core::kostant::{generating_function, verify_kostant_relation};
use mckay_core::molien::{enumerate, molien_coeffs};
use mckay_core::orbit::assembling_vectors;
use mckay_core::BpgId;

fn exact(c: &mut Criterion) {
    let e8 = build("E8~".parse().unwrap()).unwrap();
    let d9 = build("D9~".parse().unwrap()).unwrap();
    c.bench_function("coxeter charpoly E8~", |b| b.iter(|| coxeter_charpoly(black_box(&e8)).unwrap()));
    c.bench_function("generating function E8~", |b| b.iter(|| generating_function(black_box(&e8)).unwrap()));
    c.bench_function("generating function D9~", |b| b.iter(|| generating_function(black_box(&d9)).unwrap()));
    let p0 = generating_function(&e8).unwrap().component(0).clone();
    c.bench_function("series E8~ component 0 to 200", |b| {
        b.iter(|| series_expand_integral(black_box(&p0), 200).unwrap())
    });
}

fn identities(c: &mut Criterion) {
    let e8 = build("E8".parse().unwrap()).unwrap();
    let f4 = build("F4~".parse().unwrap()).unwrap();
    c.bench_function("assembling vectors E8", |b| b.iter(|| assembling_vectors(black_box(&e8)).unwrap()));
    c.bench_function("kostant relation F4~ order 40", |b| {
        b.iter(|| verify_kostant_relation(black_box(&f4), 40).unwrap())
    });
}

fn molien(c: &mut Criterion) {
    c.bench_function("enumerate icosahedral", |b| b.iter(|| enumerate(black_box(BpgId::Icosahedral)).unwrap()));
    let g = enumerate(BpgId::Icosahedral).unwrap();
    c.bench_function("molien icosahedral to 60", |b| b.iter(|| molien_coeffs(black_box(&g), 60).unwrap()));
}

criterion_group!(benches, exact, identities, molien);
criterion_main!(benches);
