use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use canalization::{
    anf_from_tt, find_layers_anf, find_layers_tt, find_layers_tt_cached, reconstruct, tt_from_anf,
    MaskCache,
};
use canalization_benches::{ncf_inputs, noncanalizing_inputs};

fn bench_layer_algorithms(c: &mut Criterion) {
    let cache = MaskCache::new(14);
    for n in [8usize, 12] {
        let ncf = ncf_inputs(n, 4, 0xbeef);
        let noncanal = noncanalizing_inputs(n, 4, 0xcafe);
        let mut group = c.benchmark_group(format!("layers/n{n}"));
        for (label, inputs) in [("ncf", &ncf), ("noncanalizing", &noncanal)] {
            group.bench_function(BenchmarkId::new("tt", label), |b| {
                b.iter(|| {
                    for t in &inputs.tables {
                        black_box(find_layers_tt(black_box(t)));
                    }
                })
            });
            group.bench_function(BenchmarkId::new("tt_precomputed", label), |b| {
                b.iter(|| {
                    for t in &inputs.tables {
                        black_box(find_layers_tt_cached(black_box(t), &cache));
                    }
                })
            });
            group.bench_function(BenchmarkId::new("anf", label), |b| {
                b.iter(|| {
                    for p in &inputs.polys {
                        black_box(find_layers_anf(black_box(p)));
                    }
                })
            });
        }
        group.finish();
    }
}

fn bench_conversions(c: &mut Criterion) {
    let inputs = noncanalizing_inputs(12, 4, 7);
    c.bench_function("anf_from_tt/n12", |b| {
        b.iter(|| {
            for t in &inputs.tables {
                black_box(anf_from_tt(black_box(t)));
            }
        })
    });
    c.bench_function("tt_from_anf/n12", |b| {
        b.iter(|| {
            for p in &inputs.polys {
                black_box(tt_from_anf(black_box(p)));
            }
        })
    });
    let decompositions: Vec<_> = ncf_inputs(12, 4, 3)
        .tables
        .iter()
        .map(find_layers_tt)
        .collect();
    c.bench_function("reconstruct/n12", |b| {
        b.iter(|| {
            for d in &decompositions {
                black_box(reconstruct(black_box(d)).unwrap());
            }
        })
    });
}

criterion_group!(benches, bench_layer_algorithms, bench_conversions);
criterion_main!(benches);
