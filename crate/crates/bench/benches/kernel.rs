use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use nugrass::arith::gcd;
use nugrass::verify::{run_cocycle_suite, Atlas, TriplePolicy};
use nugrass::{compute_transition, ChartIndex, GrassSpec, NuStructure, Poly, Rat};

fn large() -> GrassSpec {
    GrassSpec::new(1, 2, 3, 3).unwrap()
}

fn transitions(c: &mut Criterion) {
    let space = large();
    let nu = NuStructure::shift(space.beta()).unwrap();
    let a: ChartIndex = "1|1,2".parse().unwrap();
    let b: ChartIndex = "3|2,3".parse().unwrap();
    c.bench_function("transition standard pair", |bench| {
        bench.iter(|| compute_transition(black_box(&space), &a, &b, &nu).unwrap())
    });
    c.bench_function("atlas build 1|2 in 3|3", |bench| bench.iter(|| Atlas::build(black_box(&space), &nu).unwrap()));
}

fn inverse(c: &mut Criterion) {
    let space = large();
    let atlas = Atlas::build(&space, &NuStructure::identity(space.beta())).unwrap();
    let frame = atlas.eta(0, 5).or_else(|| atlas.eta(1, 4)).expect("an overlapping pair").clone();
    let alg = atlas.alg();
    c.bench_function("smat_inv 3x3 frame", |bench| bench.iter(|| alg.smat_inv(black_box(&frame)).unwrap()));
}

fn polynomial_gcd(c: &mut Criterion) {
    let x = |i| Poly::var(3, i);
    let one = Poly::one(3);
    let common = x(0).mul(&x(1)).add(&x(2)).add(&one);
    let p = common.mul(&x(0).add(&x(2)).pow(3));
    let q = common.mul(&x(1).sub(&Poly::constant(3, Rat::from(2))).pow(2));
    c.bench_function("gcd 3 vars shared factor", |bench| bench.iter(|| gcd(black_box(&p), black_box(&q))));
    let r = x(0).pow(4).add(&x(1).mul(&x(2)));
    c.bench_function("gcd 3 vars coprime", |bench| bench.iter(|| gcd(black_box(&p), black_box(&r))));
}

fn suites(c: &mut Criterion) {
    let space = GrassSpec::new(1, 1, 2, 2).unwrap();
    let atlas = Atlas::build(&space, &NuStructure::identity(2)).unwrap();
    c.bench_function("cocycle suite 1|1 in 2|2", |bench| {
        bench.iter(|| run_cocycle_suite(black_box(&atlas), TriplePolicy::All, 42))
    });
}

criterion_group!(kernel, transitions, inverse, polynomial_gcd, suites);
criterion_main!(kernel);
