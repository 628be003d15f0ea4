use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use normalcut::enumeration::{admissible_fundamentals, vertex_solutions};
use normalcut::normal::matching_system;
use normalcut::wirtinger::{find_noncyclic_rep_with, parse_pd, wirtinger_presentation};
use normalcut::{decide_unknot, EnumerationOptions, Execution, Triangulation};

fn sample(rel: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../samples").join(rel);
    std::fs::read_to_string(path).unwrap()
}

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn enumeration(c: &mut Criterion) {
    let tri = Triangulation::from_json(&sample("trefoil_complement.json")).unwrap();
    let sys = matching_system(&tri);
    let mut group = c.benchmark_group("trefoil_complement");
    group.sample_size(10);
    for (name, execution) in MODES {
        let opts = EnumerationOptions { execution, ..EnumerationOptions::admissible() };
        group.bench_with_input(BenchmarkId::new("vertex", name), &opts, |b, o| {
            b.iter(|| vertex_solutions(&sys, o).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("fundamental", name), &opts, |b, o| {
            b.iter(|| admissible_fundamentals(&sys, o).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("decide_unknot", name), &opts, |b, o| {
            b.iter(|| decide_unknot(&tri, o).unwrap())
        });
    }
    group.finish();
}

fn knot_group(c: &mut Criterion) {
    let p = wirtinger_presentation(&parse_pd(&sample("pd/figure8.json")).unwrap()).unwrap();
    let mut group = c.benchmark_group("figure8_search");
    for (name, execution) in MODES {
        group.bench_function(name, |b| b.iter(|| find_noncyclic_rep_with(&p, 5, execution).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, enumeration, knot_group);
criterion_main!(benches);
