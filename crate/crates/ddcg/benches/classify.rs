//! Classification throughput: single worker vs. the default pool.
//!
//! Build with `--no-default-features` to measure the sequential fallback
//! under the same benchmark names (the `jobs` knob is then inert).

use criterion::{criterion_group, criterion_main, Criterion};
use ddcg::catalog::GroupCatalog;
use ddcg::classifier::{classify_order, enumerate_connection_sets, SearchOptions};

fn bench_classify(c: &mut Criterion) {
    let catalog = GroupCatalog::builtin();
    for order in [12, 18] {
        let mut group = c.benchmark_group(format!("classify_order_{order}"));
        group.sample_size(10);
        group.bench_function("jobs_1", |b| {
            let options =
                SearchOptions { jobs: Some(1), ..SearchOptions::default() };
            b.iter(|| classify_order(&catalog, order, &options).unwrap());
        });
        group.bench_function("jobs_default", |b| {
            let options = SearchOptions::default();
            b.iter(|| classify_order(&catalog, order, &options).unwrap());
        });
        group.finish();
    }
}

fn bench_enumeration(c: &mut Criterion) {
    let catalog = GroupCatalog::builtin();
    let d24 = &catalog.groups()[catalog.position("D24").unwrap()];
    c.bench_function("enumerate_d24_k10", |b| {
        b.iter(|| enumerate_connection_sets(d24, 10).len());
    });
}

criterion_group!(benches, bench_classify, bench_enumeration);
criterion_main!(benches);
