use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use tabula::coxeter::{CoxeterGroup, CoxeterType};
use tabula::embed::{Embedding, Variant};
use tabula::tl::TLContext;
use tabula::PlanarContext;

fn planar(c: &mut Criterion) {
    let ctx = PlanarContext::verlinde(4, 3);
    let basis = ctx.basis();
    c.bench_function("planar/basis n=4 r=3", |b| {
        b.iter(|| black_box(ctx.basis().len()))
    });
    c.bench_function("planar/all products n=4 r=3 (first 60)", |b| {
        b.iter(|| {
            for x in basis.iter().take(60) {
                for y in basis.iter().take(60) {
                    black_box(ctx.mul_diagrams(x, y));
                }
            }
        })
    });
    c.bench_function("planar/tau over basis n=4 r=3", |b| {
        b.iter(|| {
            basis
                .iter()
                .map(|d| ctx.tau_basis(d).is_zero() as usize)
                .sum::<usize>()
        })
    });
}

fn coxeter(c: &mut Criterion) {
    c.bench_function("coxeter/H3 enumeration", |b| {
        b.iter(|| CoxeterGroup::new(CoxeterType::H(3)).unwrap().size())
    });
    let h3 = Arc::new(CoxeterGroup::new(CoxeterType::H(3)).unwrap());
    let mut g = c.benchmark_group("tl");
    g.sample_size(10);
    g.bench_function("TL(H3) canonical basis", |b| {
        b.iter(|| TLContext::new(h3.clone()).unwrap().wc().len())
    });
    let tl = TLContext::new(h3.clone()).unwrap();
    g.bench_function("H3 uniform embedding", |b| {
        b.iter(|| {
            Embedding::build(&tl, Variant::Uniform)
                .unwrap()
                .canonical_images()
                .len()
        })
    });
    g.finish();
}

criterion_group!(benches, planar, coxeter);
criterion_main!(benches);
