use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lieideal::algebra::{direct_sum, field_algebra_default, matrix_algebra, tensor_product};
use lieideal::calc::idempotent_span;
use lieideal::enumerate::all_lie_ideals_with;
use lieideal::verify::{run_suite, Config, Suite};
use lieideal::Exec;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn lattices(c: &mut Criterion) {
    let m2 = matrix_algebra(2, 2).unwrap();
    let algebras = [
        tensor_product(&m2, &field_algebra_default(2, 2).unwrap()).unwrap(),
        direct_sum(&m2, &matrix_algebra(3, 2).unwrap()).unwrap(),
    ];
    let mut group = c.benchmark_group("lie_ideal_lattice");
    group.sample_size(10);
    for alg in &algebras {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, alg.name()), alg, |b, alg| {
                b.iter(|| all_lie_ideals_with(alg, 100_000, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn element_scans(c: &mut Criterion) {
    let alg = tensor_product(
        &matrix_algebra(2, 2).unwrap(),
        &field_algebra_default(2, 2).unwrap(),
    )
    .unwrap();
    let mut group = c.benchmark_group("element_scans");
    group.sample_size(10);
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new("idempotents", mode), |b| {
            b.iter(|| idempotent_span(&alg, 1 << 16, exec).unwrap())
        });
        let config = Config {
            exec,
            ..Config::default()
        };
        group.bench_function(BenchmarkId::new("multiples_suite", mode), |b| {
            b.iter(|| run_suite(&alg, Suite::Multiples, &config))
        });
    }
    group.finish();
}

criterion_group!(benches, lattices, element_scans);
criterion_main!(benches);
