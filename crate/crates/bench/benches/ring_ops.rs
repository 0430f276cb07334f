use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use firlab::{SkewPoly, SkewRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ring(desc: &str) -> SkewRing {
    SkewRing::new(desc.parse().unwrap())
}

fn sample(r: &SkewRing, d: usize, n: usize) -> Vec<SkewPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbe7c);
    (0..n).map(|_| r.random_monic(&mut rng, d)).collect()
}

fn mul(c: &mut Criterion) {
    let mut g = c.benchmark_group("mul");
    for desc in ["gf(2,2)", "gf(3,4)"] {
        let r = ring(desc);
        let xs = sample(&r, 16, 2);
        g.bench_function(BenchmarkId::new(desc, 16), |b| b.iter(|| r.mul(black_box(&xs[0]), black_box(&xs[1]))));
    }
    let r = ring("funfield(2)");
    let (f, h) = (r.parse("t^3 + x*t + 1/x").unwrap(), r.parse("(x+1)*t^2 + x^2").unwrap());
    g.bench_function("funfield(2)/3", |b| b.iter(|| r.mul(black_box(&f), black_box(&h))));
    g.finish();
}

fn llcm(c: &mut Criterion) {
    let mut g = c.benchmark_group("llcm");
    let r = ring("gf(2,3)");
    for d in [4, 8] {
        let xs = sample(&r, d, 2);
        g.bench_function(BenchmarkId::from_parameter(d), |b| b.iter(|| r.llcm(&xs[0], &xs[1]).unwrap()));
    }
    g.finish();
}

fn factor(c: &mut Criterion) {
    let mut g = c.benchmark_group("factor");
    g.sample_size(20);
    let r = ring("gf(2,2)");
    for d in [3, 4] {
        let xs = sample(&r, d, 8);
        // warm the atom cache so the timing reflects the peeling itself
        for f in &xs {
            r.factor_atomic(f).unwrap();
        }
        g.bench_function(BenchmarkId::from_parameter(d), |b| {
            b.iter(|| xs.iter().map(|f| r.factor_atomic(f).unwrap().len()).sum::<usize>())
        });
    }
    g.finish();
}

fn wedderburn_report(c: &mut Criterion) {
    let mut g = c.benchmark_group("wedderburn_report");
    g.sample_size(10);
    for desc in ["gf(2,2)", "gf(3,2)"] {
        let r = ring(desc);
        let xs = sample(&r, 3, 4);
        g.bench_function(desc, |b| {
            b.iter(|| xs.iter().filter(|f| r.wedderburn_report(f).unwrap().consistent).count())
        });
    }
    g.finish();
}

criterion_group!(benches, mul, llcm, factor, wedderburn_report);
criterion_main!(benches);
