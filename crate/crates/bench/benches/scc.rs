use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use sccdfs::instrument::{run_with, CountOptions, NoTally, Tag};
use sccdfs::*;
use sccdfs_bench::fixtures;

fn algorithms(c: &mut Criterion) {
    for fx in fixtures() {
        let g = &fx.graph;
        let rev = reverse_graph(g);
        let mut group = c.benchmark_group(fx.name);
        group.throughput(Throughput::Elements((g.n() + g.m()) as u64));
        for engine in EngineKind::ALL {
            if engine == EngineKind::Recursive && fx.name == "deep-path" {
                continue;
            }
            let id = |alg: &str| BenchmarkId::new(alg, format!("{engine:?}"));
            group.bench_function(id("tarjan"), |b| {
                b.iter(|| {
                    scc_tarjan(
                        black_box(g),
                        TarjanOptions {
                            engine,
                            ..Default::default()
                        },
                    )
                    .unwrap()
                })
            });
            group.bench_function(id("tarjan-encoded"), |b| {
                let opts = TarjanOptions {
                    engine,
                    encode_leader_bits: true,
                    ..Default::default()
                };
                b.iter(|| scc_tarjan(black_box(g), opts).unwrap())
            });
            group.bench_function(id("cycle"), |b| {
                b.iter(|| {
                    scc_cycle(
                        black_box(g),
                        CycleOptions {
                            engine,
                            stop_early: false,
                        },
                    )
                    .unwrap()
                })
            });
            group.bench_function(id("bidirectional"), |b| {
                let opts = BidiOptions {
                    engine,
                    ..Default::default()
                };
                b.iter(|| scc_bidirectional(black_box(g), Some(&rev), opts).unwrap())
            });
        }
        group.finish();
    }
}

/// The fused executors with counting compiled out.
fn fused(c: &mut Criterion) {
    let fx = fixtures().into_iter().next().unwrap();
    let mut group = c.benchmark_group("fused");
    group.throughput(Throughput::Elements((fx.graph.n() + fx.graph.m()) as u64));
    for tag in Tag::ALL {
        group.bench_function(tag.name(), |b| {
            b.iter(|| {
                run_with(
                    tag,
                    black_box(&fx.graph),
                    CountOptions::default(),
                    &mut NoTally,
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, algorithms, fused);
criterion_main!(benches);
