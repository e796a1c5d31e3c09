use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use matchkit_bench::{sample_graphs, sample_vectors};
use matchkit_core::{
    canonical_form, enumerate, match_vector, me_quadrature, me_roots, CorpusSpec, QuadratureSettings, SearchOptions,
};

fn counting(c: &mut Criterion) {
    let mut g = c.benchmark_group("match_vector");
    for (name, graph) in sample_graphs(16) {
        g.bench_with_input(BenchmarkId::from_parameter(name), &graph, |b, graph| {
            b.iter(|| match_vector(black_box(graph)))
        });
    }
    g.finish();
}

fn energy(c: &mut Criterion) {
    let s = QuadratureSettings::default();
    let mut g = c.benchmark_group("energy");
    for (n, mv) in sample_vectors(&[10, 20, 40]) {
        g.bench_with_input(BenchmarkId::new("quadrature", n), &mv, |b, mv| {
            b.iter(|| me_quadrature(black_box(mv), &s).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("roots", n), &mv, |b, mv| {
            b.iter(|| me_roots(black_box(mv)).unwrap())
        });
    }
    g.finish();
}

fn canon(c: &mut Criterion) {
    let mut g = c.benchmark_group("canonical_form");
    for (name, graph) in sample_graphs(12) {
        g.bench_with_input(BenchmarkId::from_parameter(name), &graph, |b, graph| {
            b.iter(|| canonical_form(black_box(graph)))
        });
    }
    g.finish();
}

fn generation(c: &mut Criterion) {
    let opts = SearchOptions::default();
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for n in [6, 7, 8] {
        let spec = CorpusSpec::new(n, n + 2, true);
        g.bench_with_input(BenchmarkId::new("tricyclic", n), &spec, |b, spec| {
            b.iter(|| enumerate(spec, &opts).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, counting, energy, canon, generation);
criterion_main!(benches);
