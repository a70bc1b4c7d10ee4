use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lorhom::catalog::{build_algebra_with, standard_cases, verify_cases, ClassicalAlgebraSpec};
use lorhom::exec::Mode;
use lorhom::lie::MatrixLieAlgebra;
use lorhom::lorentz::{minkowski, so_basis};

// Without the `parallel` feature both modes run the sequential path, which
// makes the pair a cheap check that the dispatch itself costs nothing.
const MODES: [(&str, Mode); 2] = [("sequential", Mode::Sequential), ("parallel", Mode::Parallel)];

fn structure_constants(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure_constants");
    group.sample_size(10);
    for n in [3usize, 5] {
        let s = minkowski(n);
        let basis = so_basis(&s);
        for (label, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(label, format!("so({},1)", n + 1)), &basis, |b, basis| {
                b.iter(|| MatrixLieAlgebra::from_basis_with(mode, s.dim(), black_box(basis.clone())).unwrap())
            });
        }
    }
    group.finish();
}

fn classical_families(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_algebra");
    group.sample_size(10);
    for spec in [ClassicalAlgebraSpec::su_pq(2, 2), ClassicalAlgebraSpec::sp2n_r(3)] {
        for (label, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(label, spec.name()), &spec, |b, spec| {
                b.iter(|| build_algebra_with(mode, black_box(spec)).unwrap())
            });
        }
    }
    group.finish();
}

fn catalog_sweep(c: &mut Criterion) {
    let cases: Vec<_> = standard_cases().into_iter().take(8).collect();
    let mut group = c.benchmark_group("verify_cases");
    group.sample_size(10);
    for (label, mode) in MODES {
        group.bench_function(label, |b| b.iter(|| verify_cases(black_box(&cases), mode)));
    }
    group.finish();
}

criterion_group!(benches, structure_constants, classical_families, catalog_sweep);
criterion_main!(benches);
