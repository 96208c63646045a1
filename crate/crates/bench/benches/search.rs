use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use scldpc_bench::SMALL_G8;
use scldpc_core::{exhaustive_min_lh, montecarlo_search, Mode, Proposal, SearchSpec};

fn exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive_g8");
    for (a, cc, w) in SMALL_G8 {
        let spec = SearchSpec::regular(a, cc, w, 8, Mode::Exhaustive);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("a{a}c{cc}w{w}")),
            &spec,
            |b, spec| b.iter(|| exhaustive_min_lh(spec).unwrap()),
        );
    }
    group.finish();
}

fn random(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_g10_a6");
    group.sample_size(10);
    for proposal in [Proposal::Uniform, Proposal::Greedy] {
        let mut spec = SearchSpec::regular(6, 3, 3, 10, Mode::Random);
        spec.proposal = proposal;
        spec.lh_max = Some(258);
        spec.budget = 200;
        spec.seed = 1;
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{proposal:?}")),
            &spec,
            |b, spec| b.iter(|| montecarlo_search(spec).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, exhaustive, random);
criterion_main!(benches);
