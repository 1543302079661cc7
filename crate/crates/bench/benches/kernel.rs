use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ctopo_core::random::Gen;
use ctopo_core::{IdealKind, IdealTopology, RealIdealSpace, RealSet, Topology, TopologySpec};

fn operands(n: usize) -> Vec<(RealSet, RealSet)> {
    let mut g = Gen::new(11);
    (0..n).map(|_| (g.realset(3), g.realset(3))).collect()
}

fn set_algebra(c: &mut Criterion) {
    let pairs = operands(64);
    c.bench_function("realset/union+intersect+complement", |b| {
        b.iter(|| {
            for (x, y) in &pairs {
                black_box(x.union(y).intersect(&y.complement()));
            }
        })
    });
    c.bench_function("realset/render", |b| {
        b.iter(|| {
            for (x, _) in &pairs {
                black_box(x.to_string());
            }
        })
    });
}

fn operators(c: &mut Criterion) {
    let pairs = operands(64);
    let drivers = [
        TopologySpec::usual(),
        TopologySpec::excluded_set(RealSet::irrationals()).unwrap(),
        TopologySpec::cocountable(),
    ];
    for t in drivers {
        let sp = RealIdealSpace::new(t.clone(), IdealKind::Countable);
        c.bench_function(&format!("operators/closure/{t}"), |b| {
            b.iter(|| {
                for (x, _) in &pairs {
                    black_box(t.closure(x));
                }
            })
        });
        c.bench_function(&format!("operators/ideal-interior/{t}"), |b| {
            b.iter(|| {
                for (x, _) in &pairs {
                    black_box(sp.ideal_interior(x));
                }
            })
        });
    }
}

criterion_group!(benches, set_algebra, operators);
criterion_main!(benches);
