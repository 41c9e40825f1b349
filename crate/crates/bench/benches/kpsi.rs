use criterion::{black_box, criterion_group, criterion_main, Criterion};

use kpsi_core::ppartition::{count_zigzag_labelings, k_generating_function, psi_expansion_pointed};
use kpsi_core::qsym::{convert, multiply};
use kpsi_core::tableaux::skew_schur_psi;
use kpsi_core::{Basis, Guards, LabeledPoset, QSymElement, SkewShape};

fn fence(n: usize) -> LabeledPoset {
    let half = n.div_ceil(2);
    let z = |k: usize| {
        if k % 2 == 1 {
            k.div_ceil(2)
        } else {
            half + k / 2
        }
    };
    let covers: Vec<(usize, usize)> = (1..n)
        .map(|k| {
            if k % 2 == 1 {
                (z(k), z(k + 1))
            } else {
                (z(k + 1), z(k))
            }
        })
        .collect();
    LabeledPoset::new(n, &covers).unwrap()
}

fn poset_routes(c: &mut Criterion) {
    let g = Guards::DEFAULT;
    let p = fence(8);
    c.bench_function("k_generating_function fence8", |b| {
        b.iter(|| k_generating_function(black_box(&p), &g).unwrap())
    });
    let small = fence(6);
    c.bench_function("psi_expansion_pointed fence6", |b| {
        b.iter(|| psi_expansion_pointed(black_box(&small), &g).unwrap())
    });
    c.bench_function("count_zigzag_labelings fence8", |b| {
        b.iter(|| count_zigzag_labelings(black_box(&p), &g).unwrap())
    });
}

fn algebra(c: &mut Criterion) {
    let k = k_generating_function(&fence(7), &Guards::DEFAULT).unwrap();
    c.bench_function("convert L to psi deg7", |b| {
        b.iter(|| convert(black_box(&k), Basis::Psi))
    });
    let f: QSymElement = "psi[2,1] + 2*psi[1,1,1]".parse().unwrap();
    let g: QSymElement = "psi[3,1] - psi[4]".parse().unwrap();
    c.bench_function("multiply psi deg3 x deg4", |b| {
        b.iter(|| multiply(black_box(&f), black_box(&g)))
    });
}

fn tableaux(c: &mut Criterion) {
    let s = SkewShape::from_parts(&[4, 3, 2], &[1]).unwrap();
    c.bench_function("skew_schur_psi 432/1", |b| {
        b.iter(|| skew_schur_psi(black_box(&s), &Guards::DEFAULT).unwrap())
    });
}

criterion_group!(benches, poset_routes, algebra, tableaux);
criterion_main!(benches);
