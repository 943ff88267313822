use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use switchclass::canonical::{canonical_form, switch_iso_key};
use switchclass::classify::{catalog_inductive, enumerate_types_transversal};
use switchclass::invariants::{count_sub, PatternClass};
use switchclass::switching::switch;
use switchclass::{Graph, VertexSet};

fn kernels(c: &mut Criterion) {
    let c7 = Graph::cycle(7).unwrap();
    let p8 = Graph::path(8).unwrap();

    c.bench_function("switch n=16", |b| {
        let g = Graph::cycle(16).unwrap();
        let side = VertexSet::from_bits(0b1010_1100_0011_0101);
        b.iter(|| switch(black_box(&g), black_box(side)).unwrap())
    });
    c.bench_function("canonical_form C7", |b| {
        b.iter(|| canonical_form(black_box(&c7)).unwrap())
    });
    c.bench_function("canonical_form L8", |b| {
        b.iter(|| canonical_form(black_box(&p8)).unwrap())
    });
    c.bench_function("switch_iso_key C7", |b| {
        b.iter(|| switch_iso_key(black_box(&c7)).unwrap())
    });
    c.bench_function("count_sub L8 N4", |b| {
        let n4 = PatternClass::empty(4).unwrap();
        b.iter(|| count_sub(black_box(&p8), &n4).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration n=6");
    group.sample_size(10);
    group.bench_function("inductive", |b| b.iter(|| catalog_inductive(6).unwrap()));
    group.bench_function("transversal", |b| {
        b.iter(|| enumerate_types_transversal(6).unwrap())
    });
    group.finish();
}

criterion_group!(benches, kernels, enumeration);
criterion_main!(benches);
