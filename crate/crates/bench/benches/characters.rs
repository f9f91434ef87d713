use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hodge_bench::workload;
use hodge_core::character::character;

fn full_table(c: &mut Criterion) {
    for d in [6u32, 10] {
        let parts = workload(d);
        c.bench_function(&format!("character table d={d}"), |b| {
            b.iter(|| {
                let mut acc = 0i64;
                for nu in &parts {
                    for mu in &parts {
                        acc += character(nu, mu).unwrap();
                    }
                }
                black_box(acc)
            })
        });
    }
}

criterion_group!(benches, full_table);
criterion_main!(benches);
