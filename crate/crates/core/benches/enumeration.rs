use charvar::catalog::VarietySpec;
use charvar::oracle::{verify, CountOptions};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn enumeration(c: &mut Criterion) {
    let cases = [
        ("free:n=2", 5),
        ("free:n=3", 3),
        ("surface:g=1,s=1", 5),
        ("surface:g=1", 7),
    ];
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    for (text, q) in cases {
        let spec: VarietySpec = text.parse().unwrap();
        let id = format!("{text}@q={q}");
        let sequential = CountOptions {
            threads: Some(1),
            ..CountOptions::default()
        };
        group.bench_with_input(BenchmarkId::new("sequential", &id), &spec, |b, spec| {
            b.iter(|| verify(spec, q, &sequential).unwrap())
        });
        let parallel = CountOptions::default();
        group.bench_with_input(BenchmarkId::new("rayon", &id), &spec, |b, spec| {
            b.iter(|| verify(spec, q, &parallel).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration);
criterion_main!(benches);
