use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use cws_bench::{code_21, five_qubit, repetition_row, toric};
use cws_core::bounds::{gv_max_k, GvVariant};
use cws_core::codes::{additive_distance, cws_distance};
use cws_core::cyclic::gv_sieve_search;
use cws_core::graphs::graph_state_distance;
use cws_core::{BinaryPolynomial, Graph};

fn small_codes(c: &mut Criterion) {
    let five = five_qubit();
    let stab = five.stabilizer().unwrap();
    c.bench_function("cws_distance [[5,1,3]]", |b| b.iter(|| cws_distance(black_box(&five), None)));
    c.bench_function("additive_distance [[5,1,3]]", |b| b.iter(|| additive_distance(black_box(&stab), None)));
    let c21 = code_21();
    c.bench_function("distance [[21,15,3]]", |b| b.iter(|| black_box(&c21).distance(None)));
    let q: BinaryPolynomial = "1110101".parse().unwrap();
    c.bench_function("sieve n=21 d=3", |b| b.iter(|| gv_sieve_search(21, black_box(&q), 3, false)));
    c.bench_function("gv square presets", |b| {
        b.iter(|| (5..=9).map(|l| gv_max_k(l * l, 5, GvVariant::Standard, Some(5))).collect::<Vec<_>>())
    });
}

fn heavy_codes(c: &mut Criterion) {
    let mut group = c.benchmark_group("heavy");
    group.sample_size(10);
    let t3 = toric(3);
    group.bench_function("toric [[25,1,7]]", |b| b.iter(|| black_box(&t3).distance(None)));
    let r28 = repetition_row(28);
    group.bench_function("repetition [[28,4,7]]", |b| b.iter(|| black_box(&r28).distance(None)));
    let torus = Graph::torus(5, 5, false).unwrap();
    group.bench_function("graph distance 5x5 torus", |b| b.iter(|| graph_state_distance(black_box(&torus), None)));
    group.finish();
}

criterion_group!(benches, small_codes, heavy_codes);
criterion_main!(benches);
