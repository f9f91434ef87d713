use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hodge_core::bernoulli::{bernoulli_table, f_brute, f_closed};

fn sums(c: &mut Criterion) {
    c.bench_function("bernoulli table to 60", |b| b.iter(|| black_box(bernoulli_table(60))));
    c.bench_function("F closed 3,4 d=30", |b| b.iter(|| black_box(f_closed(3, 4, 30).unwrap())));
    c.bench_function("F brute 3,4 d=30", |b| b.iter(|| black_box(f_brute(3, 4, 30))));
}

criterion_group!(benches, sums);
criterion_main!(benches);
