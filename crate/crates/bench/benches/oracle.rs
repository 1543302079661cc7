use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ctopo_core::finite_oracle::{check_theorem, enumerate_topologies, search_counterexample, BfTable, FiniteIdeal};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for n in [3, 4, 5] {
        g.bench_function(format!("topologies/n={n}"), |b| b.iter(|| black_box(enumerate_topologies(n).unwrap())));
    }
    g.finish();
}

fn tables(c: &mut Criterion) {
    let spaces = enumerate_topologies(4).unwrap();
    let ideal = FiniteIdeal::principal(4, 0b0011).unwrap();
    c.bench_function("bf-table/all n=4 spaces", |b| {
        b.iter(|| {
            for sp in &spaces {
                black_box(BfTable::build(sp, &ideal));
            }
        })
    });
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("theorem thm-int-cl-duality n=3", |b| b.iter(|| black_box(check_theorem("thm-int-cl-duality", 3).unwrap())));
    g.bench_function("claim int-sub-intI n=3", |b| {
        b.iter(|| black_box(search_counterexample("int-sub-intI", 3).unwrap()))
    });
    g.finish();
}

criterion_group!(benches, enumeration, tables, suites);
criterion_main!(benches);
