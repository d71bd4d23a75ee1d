use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use fellow_core::bs::{bs_alphabet, bs_mul_gen};
use fellow_core::lamplighter::{lamp_normal_form, spiral, spiral_index};
use fellow_core::*;

fn balls(c: &mut Criterion) {
    let mut group = c.benchmark_group("bfs_ball");
    let bs = BaumslagSolitar::new(BsParams::new(1, 2).unwrap());
    for r in [6, 8, 10] {
        group.bench_with_input(BenchmarkId::new("BS(1,2)", r), &r, |b, &r| {
            b.iter(|| bfs_ball(&bs, r).unwrap().len())
        });
    }
    let lamp = Lamplighter::new();
    for r in [4, 6] {
        group.bench_with_input(BenchmarkId::new("Z2wrZ2", r), &r, |b, &r| {
            b.iter(|| bfs_ball(&lamp, r).unwrap().len())
        });
    }
    group.finish();
}

fn generators(c: &mut Criterion) {
    let params = BsParams::new(2, 3).unwrap();
    let g = evaluate(
        &BaumslagSolitar::new(params),
        &bs_alphabet().parse("tatAAtaaTatttaaa").unwrap(),
    )
    .unwrap();
    c.bench_function("bs_mul_gen", |b| {
        b.iter(|| {
            bs_alphabet()
                .directions()
                .into_iter()
                .map(|s| bs_mul_gen(black_box(&g), s, params))
                .collect::<Vec<_>>()
        })
    });
    c.bench_function("spiral_round_trip_10k", |b| {
        b.iter(|| {
            (0..10_000u64)
                .map(|k| spiral_index(spiral(black_box(k))))
                .sum::<u64>()
        })
    });
    let far = LampElement::new([(3, -2), (-4, 4), (1, 1)], (2, 5));
    c.bench_function("lamp_normal_form", |b| {
        b.iter(|| lamp_normal_form(black_box(&far)))
    });
}

fn curves(c: &mut Criterion) {
    let mut group = c.benchmark_group("s_curve");
    group.sample_size(10);
    let bs = BsCanonical::new(BsParams::new(1, 2).unwrap());
    group.bench_function("BS(1,2) R=7", |b| {
        b.iter(|| s_curve(&bs, SCurveOptions::new(7)).unwrap().max_n())
    });
    group.bench_function("Z2wrZ2 R=5", |b| {
        b.iter(|| {
            s_curve(&LampSpiral::new(), SCurveOptions::new(5))
                .unwrap()
                .max_n()
        })
    });
    group.finish();
}

criterion_group!(benches, balls, generators, curves);
criterion_main!(benches);
