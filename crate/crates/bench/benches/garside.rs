//! Criterion benchmarks for the hot paths: word normalization, sliding to a
//! circuit, and the end-to-end centralizer computation across canonical
//! lengths.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use garside_core::centralizer::centralizer_generators;
use garside_core::conjugacy::{slide_to_circuit, DEFAULT_TRAJECTORY_CAP};
use garside_core::genericity::{sample_normal_form, SampleConfig};
use garside_core::{BraidWord, NormalForm, StrandCount};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_word(seed: u64, n: usize, len: usize) -> BraidWord {
    let mut rng = StdRng::seed_from_u64(seed);
    let letters: Vec<i64> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n) as i64;
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::from_signed(StrandCount::new(n).unwrap(), &letters).unwrap()
}

fn sampled(n: usize, l: usize, seed: u64) -> NormalForm {
    let cfg = SampleConfig {
        n: StrandCount::new(n).unwrap(),
        l,
        p: 0,
        seed,
        trials: 1,
    };
    sample_normal_form(&cfg, 0).unwrap()
}

fn bench_normalize(c: &mut Criterion) {
    let mut group = c.benchmark_group("normalize");
    for len in [50usize, 200, 800] {
        let w = random_word(1, 8, len);
        group.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| {
            b.iter(|| NormalForm::from_word(w))
        });
    }
    group.finish();
}

fn bench_slide_to_circuit(c: &mut Criterion) {
    let mut group = c.benchmark_group("slide_to_circuit");
    for l in [10usize, 25, 50] {
        let x = sampled(8, l, 2);
        group.bench_with_input(BenchmarkId::from_parameter(l), &x, |b, x| {
            b.iter(|| slide_to_circuit(x, DEFAULT_TRAJECTORY_CAP).unwrap())
        });
    }
    group.finish();
}

fn bench_centralizer(c: &mut Criterion) {
    let mut group = c.benchmark_group("centralizer");
    group.sample_size(10);
    for l in [25usize, 50, 100] {
        let x = sampled(8, l, 3);
        group.bench_with_input(BenchmarkId::from_parameter(l), &x, |b, x| {
            b.iter(|| centralizer_generators(x).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_normalize,
    bench_slide_to_circuit,
    bench_centralizer
);
criterion_main!(benches);
