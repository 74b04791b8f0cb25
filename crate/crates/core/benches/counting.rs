use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_rational::BigRational;
use selmer_dim::ledger::{dh_crossover_with, CurveScenario};
use selmer_dim::lie::metabelian_dimension_enumerated;
use selmer_dim::sign::bracket_plus_dimension_with;
use selmer_dim::Parallelism;

const POLICIES: [(&str, Parallelism); 2] = [
    ("sequential", Parallelism::Sequential),
    ("parallel", Parallelism::Parallel),
];

fn basis_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("metabelian-basis-count");
    for (name, par) in POLICIES {
        group.bench_with_input(BenchmarkId::new(name, "m=6,n=8"), &par, |b, &par| {
            b.iter(|| metabelian_dimension_enumerated(6, 8, par).unwrap())
        });
    }
    group.finish();
}

fn bracket_signs(c: &mut Criterion) {
    let mut group = c.benchmark_group("bracket-plus-count");
    for (name, par) in POLICIES {
        group.bench_with_input(BenchmarkId::new(name, "m=6,s=3,n=8"), &par, |b, &par| {
            b.iter(|| bracket_plus_dimension_with(6, 3, 8, par).unwrap())
        });
    }
    group.finish();
}

fn ledger_rows(c: &mut Criterion) {
    let one = BigRational::from_integer(1.into());
    let scn = CurveScenario::rational(3, 2, 3, one.clone(), one, 256).unwrap();
    let mut group = c.benchmark_group("dh-ledger");
    for (name, par) in POLICIES {
        group.bench_with_input(BenchmarkId::new(name, "g=3,n_max=256"), &par, |b, &par| {
            b.iter(|| dh_crossover_with(&scn, par).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, basis_enumeration, bracket_signs, ledger_rows);
criterion_main!(benches);
