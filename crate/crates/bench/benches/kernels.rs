use std::collections::BTreeSet;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use repstab_bench::{all_power_sums, staircase};
use repstab_core::oracle::sw_complement_char;
use repstab_core::stability::kequal_char;
use repstab_core::symfunc::{lr_product, plethysm};
use repstab_core::{LambdaSet, Partition, SymmetricFunction};

fn lr(c: &mut Criterion) {
    let mut group = c.benchmark_group("lr_product");
    for n in [3u32, 4] {
        let (a, b) = (staircase(n), staircase(n));
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| lr_product(black_box(&a), black_box(&b)))
        });
    }
    group.finish();
}

fn to_schur(c: &mut Criterion) {
    let mut group = c.benchmark_group("to_schur");
    group.sample_size(10);
    for n in [8usize, 12] {
        let f = all_power_sums(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| bench.iter(|| black_box(&f).to_schur()));
    }
    group.finish();
}

fn pleth(c: &mut Criterion) {
    let h3 = SymmetricFunction::h(3);
    let h4 = SymmetricFunction::h(4);
    c.bench_function("plethysm h3[h4]", |b| b.iter(|| plethysm(black_box(&h3), black_box(&h4))));
}

fn kequal(c: &mut Criterion) {
    let mut group = c.benchmark_group("kequal_char");
    group.sample_size(10);
    // first call fills the ψ caches; the timed calls measure the assembly
    for (n, i) in [(8usize, 5usize), (11, 6)] {
        kequal_char(n, i, 2, 3).unwrap();
        group.bench_with_input(BenchmarkId::new("d2k3", format!("n{n}i{i}")), &n, |b, _| {
            b.iter(|| kequal_char(n, i, 2, 3).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("sw_complement_char");
    group.sample_size(10);
    // lattice homology is cached per (n, types), so this times the orbit sum
    let lambda = LambdaSet::k_equal(2).unwrap();
    for n in [4usize, 5] {
        let types: BTreeSet<Partition> = lambda.extend(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| sw_complement_char(n, 2, &types, n - 1, 6).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, lr, to_schur, pleth, kequal, oracle);
criterion_main!(benches);
