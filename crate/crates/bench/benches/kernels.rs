//! Benchmarks for the hot kernels: detection, exhaustive arrows search,
//! the brute-force edge-maximum scan, and the text codec.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use bistar::bsr::{emit_coloring, parse_bsr};
use bistar::construct::matching_lower_construction;
use bistar::detect::find_monochromatic_double_star;
use bistar::search::{arrows, SearchOptions};
use bistar::turan::exhaustive_turan_max;
use bistar::DoubleStarSpec;
use bistar_bench::random_coloring;

fn bench_detector(c: &mut Criterion) {
    let critical = matching_lower_construction(3, 2);
    let noisy = random_coloring(0xD07, 10, 3);
    let spec = [DoubleStarSpec::new(2, 1)];
    c.bench_function("detect/none_on_critical_k66", |b| {
        b.iter(|| find_monochromatic_double_star(black_box(&critical), &spec).unwrap())
    });
    c.bench_function("detect/witness_on_random_k1010", |b| {
        b.iter(|| find_monochromatic_double_star(black_box(&noisy), &spec).unwrap())
    });
}

fn bench_search(c: &mut Criterion) {
    let opts = SearchOptions::default();
    c.bench_function("arrows/p4_k2_n3", |b| {
        b.iter(|| arrows(black_box(3), 2, &[DoubleStarSpec::new(1, 1)], &opts).unwrap())
    });
    c.bench_function("arrows/s21_k2_n5", |b| {
        b.iter(|| arrows(black_box(5), 2, &[DoubleStarSpec::new(2, 1)], &opts).unwrap())
    });
    c.bench_function("arrows/p4_k3_n4", |b| {
        b.iter(|| arrows(black_box(4), 3, &[DoubleStarSpec::new(1, 1)], &opts).unwrap())
    });
}

fn bench_exhaustive(c: &mut Criterion) {
    c.bench_function("exhaustive_turan_max/p4", |b| {
        b.iter(|| exhaustive_turan_max(black_box(4), 1, 1, false).unwrap())
    });
}

fn bench_codec(c: &mut Criterion) {
    let coloring = random_coloring(0xC0DEC, 8, 3);
    let text = emit_coloring(&coloring);
    c.bench_function("bsr/emit_k88", |b| {
        b.iter(|| emit_coloring(black_box(&coloring)))
    });
    c.bench_function("bsr/parse_k88", |b| {
        b.iter(|| parse_bsr(black_box(&text)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_detector,
    bench_search,
    bench_exhaustive,
    bench_codec
);
criterion_main!(benches);
