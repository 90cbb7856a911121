use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use hexaflex::geometry::{printable_class_count_with, PrintabilityRule};
use hexaflex::sequences::{enumerate_classes_with, EnumerateOptions};
use hexaflex::{hexaflexagon_count, Execution};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_classes");
    group.sample_size(10);
    for n in [14usize, 18] {
        for (name, execution) in MODES {
            let options = EnumerateOptions { execution, ..Default::default() };
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| enumerate_classes_with(black_box(n), &options).unwrap())
            });
        }
    }
    group.finish();
}

fn printability(c: &mut Criterion) {
    let mut group = c.benchmark_group("printable_class_count");
    group.sample_size(10);
    for n in [14usize, 18] {
        for (name, execution) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| printable_class_count_with(black_box(n), 26, PrintabilityRule::default(), execution).unwrap())
            });
        }
    }
    group.finish();
}

fn closed_form(c: &mut Criterion) {
    c.bench_function("hexaflexagon_count 3..=64", |b| {
        b.iter(|| {
            for n in 3..=64u32 {
                black_box(hexaflexagon_count(n).unwrap());
            }
        })
    });
}

criterion_group!(benches, enumeration, printability, closed_form);
criterion_main!(benches);
