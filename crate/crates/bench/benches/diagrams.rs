use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use gelfand_core::diagrams::{compose, enumerate, Family, FamilyTag};
use gelfand_core::model::model_matrices;
use gelfand_core::scalars::ratio;
use gelfand_core::verify::{check_module_axioms, commutant_dim};
use std::hint::black_box;

fn bench_compose(c: &mut Criterion) {
    let basis = enumerate(&Family::plain(FamilyTag::P), 4, None);
    let pairs: Vec<_> = basis.iter().step_by(97).flat_map(|a| basis.iter().step_by(89).map(move |b| (a, b))).collect();
    c.bench_function("compose P_4 sample", |b| {
        b.iter(|| {
            for (x, y) in &pairs {
                black_box(compose(x, y).unwrap());
            }
        })
    });
}

fn bench_enumerate(c: &mut Criterion) {
    c.bench_function("enumerate P_4", |b| b.iter(|| enumerate(&Family::plain(FamilyTag::P), black_box(4), None)));
    c.bench_function("enumerate WPB_4 wall 2,2", |b| {
        b.iter(|| enumerate(&Family::walled(FamilyTag::WPB, 2, 2), black_box(4), None))
    });
}

fn bench_model(c: &mut Criterion) {
    let mut g = c.benchmark_group("model");
    g.sample_size(10);
    g.bench_function("module axioms PB_3", |b| {
        b.iter(|| check_module_axioms(&Family::plain(FamilyTag::PB), black_box(3)))
    });
    g.bench_function("commutant B_3", |b| {
        b.iter_batched(
            || model_matrices(&Family::plain(FamilyTag::B), 3),
            |rep| commutant_dim(&rep, &ratio(7, 3)).unwrap(),
            BatchSize::SmallInput,
        )
    });
    g.finish();
}

criterion_group!(benches, bench_compose, bench_enumerate, bench_model);
criterion_main!(benches);
