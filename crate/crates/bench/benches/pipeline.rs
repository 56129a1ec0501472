use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use xagdepth_bench::random_network;
use xagdepth_core::{balance_network, enumerate_cuts, map_to_circuit, samples, ResynthChoice, Schedule, Strategy};

fn cuts(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_cuts");
    for gates in [200, 800] {
        let net = random_network(1, 16, gates, 8);
        group.bench_with_input(BenchmarkId::from_parameter(gates), &net, |b, net| {
            b.iter(|| enumerate_cuts(black_box(net), 6, 25).unwrap())
        });
    }
    group.finish();
}

fn balance(c: &mut Criterion) {
    let mut group = c.benchmark_group("balance_network");
    group.sample_size(20);
    let net = random_network(2, 16, 400, 8);
    for (name, strategy) in [("esop", Strategy::Esop), ("espp", Strategy::Espp)] {
        let choice = ResynthChoice {
            strategy,
            ..ResynthChoice::default()
        };
        group.bench_function(name, |b| b.iter(|| balance_network(black_box(&net), &choice).unwrap()));
    }
    let dec = samples::decoder(8);
    group.bench_function("decoder8", |b| {
        b.iter(|| balance_network(black_box(&dec), &ResynthChoice::default()).unwrap())
    });
    group.finish();
}

fn mapping(c: &mut Criterion) {
    let mut group = c.benchmark_group("map_to_circuit");
    let net = random_network(3, 16, 800, 8);
    for schedule in [Schedule::Asap, Schedule::Alap] {
        group.bench_function(schedule.name(), |b| {
            b.iter(|| map_to_circuit(black_box(&net), schedule).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, cuts, balance, mapping);
criterion_main!(benches);
