use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ennea::catalog;
use ennea::cone_chow::{cone_ring, dpf_residual, ConeRank};
use ennea::curve_search::{enumerate_curves, CurveQuery};
use ennea::invariants::castelnuovo_bound;
use ennea::normality::{classify, scroll_verdict};

fn bench_curve_enumeration(c: &mut Criterion) {
    let (model, l) = catalog::genus4_case_two();
    let mut group = c.benchmark_group("curve_enumeration");
    for (name, degree, genus, min_self) in [
        ("lines", 1i64, 0i64, None),
        ("quartics", 4, 1, Some(0)),
        ("full_degree", 9, 4, None),
    ] {
        let mut query = CurveQuery::new(degree, genus);
        query.min_self_intersection = min_self;
        group.bench_with_input(BenchmarkId::from_parameter(name), &query, |b, q| {
            b.iter(|| enumerate_curves(&model, &l, q).unwrap())
        });
    }
    group.finish();
}

fn bench_classification_table(c: &mut Criterion) {
    let entries = catalog::entries();
    c.bench_function("classification_table", |b| {
        b.iter(|| {
            for entry in &entries {
                match &entry.case {
                    catalog::CatalogCase::Surface(p) => {
                        classify(p).unwrap();
                    }
                    catalog::CatalogCase::Scroll(s) => {
                        scroll_verdict(s).unwrap();
                    }
                }
            }
        })
    });
}

fn bench_cone_residuals(c: &mut Criterion) {
    let ring = cone_ring(ConeRank::Four).unwrap();
    c.bench_function("cone_residual_sweep", |b| {
        b.iter(|| {
            let mut total = 0i64;
            for beta in -3i64..=5 {
                let class = ring.class(2, &[3, beta, 2 - beta, 1]).unwrap();
                total += dpf_residual(ring, &class, -3, 3, 11).unwrap();
            }
            total
        })
    });
}

fn bench_castelnuovo(c: &mut Criterion) {
    c.bench_function("castelnuovo_bounds", |b| {
        b.iter(|| {
            let mut total = 0i64;
            for d in 3i64..=40 {
                for n in 3..=(d + 1) {
                    total += castelnuovo_bound(d, n).unwrap();
                }
            }
            total
        })
    });
}

criterion_group!(
    benches,
    bench_curve_enumeration,
    bench_classification_table,
    bench_cone_residuals,
    bench_castelnuovo
);
criterion_main!(benches);
