use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use paracon::miner::count_tables;
use paracon::par::Exec;
use paracon::principles::battery;
use paracon::structure::Condition;

fn executors() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn sampled_battery(c: &mut Criterion) {
    let mut group = c.benchmark_group("battery");
    group.sample_size(10);
    for (name, exec) in executors() {
        group.bench_with_input(BenchmarkId::new("sampled n=4", name), &exec, |b, &exec| {
            b.iter(|| battery::sampled(4, 20_000, 0, exec));
        });
        group.bench_with_input(BenchmarkId::new("ecq n=3", name), &exec, |b, &exec| {
            b.iter(|| battery::ecq_sampled(3, 100_000, 0, exec));
        });
    }
    group.finish();
}

fn table_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("table sweep n=3");
    group.sample_size(10);
    for (name, exec) in executors() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| count_tables(3, &[Condition::Reflexive, Condition::Transitive], exec));
        });
    }
    group.finish();
}

criterion_group!(benches, sampled_battery, table_sweep);
criterion_main!(benches);
