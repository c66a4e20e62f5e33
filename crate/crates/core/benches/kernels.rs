use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jordan_core::freealg::{parse_poly, TIdealGenerator};
use jordan_core::jordanmaps::{check_jr_identities, check_jr_identities_polarized, LinearMap};
use jordan_core::par::{set_strategy, Strategy};
use jordan_core::semigroup::{build_pe1, build_pe2, congruence_closure, Presentation};
use jordan_core::strucalg::{grassmann_algebra, involution_transpose, matrix_algebra};

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn associativity(c: &mut Criterion) {
    let mut g = c.benchmark_group("associativity");
    for (name, a) in [("m4", matrix_algebra(4)), ("g6", grassmann_algebra(6))] {
        for (label, s) in STRATEGIES {
            set_strategy(s);
            g.bench_with_input(BenchmarkId::new(label, name), &a, |b, a| {
                b.iter(|| black_box(a.verify_associativity().is_ok()))
            });
        }
    }
    g.finish();
}

fn jr_identities(c: &mut Criterion) {
    let m3 = Arc::new(matrix_algebra(3));
    let t = involution_transpose(&m3, 3).unwrap();
    let transpose = LinearMap::new(m3.clone(), m3.clone(), t.images().to_vec()).unwrap();
    let gen = TIdealGenerator::new(parse_poly("comm(x1,x2)").unwrap()).unwrap();
    let pe2 = build_pe2(build_pe1(&Presentation::default_family(), &gen, 4, 0).unwrap()).unwrap();
    let mut g = c.benchmark_group("jr_identities");
    g.sample_size(10);
    for (label, s) in STRATEGIES {
        set_strategy(s);
        g.bench_function(BenchmarkId::new(label, "pe2-L4"), |b| {
            b.iter(|| black_box(check_jr_identities(&pe2.phi).unwrap().passed))
        });
        g.bench_function(BenchmarkId::new(label, "m3-polarized"), |b| {
            b.iter(|| black_box(check_jr_identities_polarized(&transpose).unwrap().passed))
        });
    }
    g.finish();
}

fn pipeline(c: &mut Criterion) {
    let p = Presentation::default_family();
    let gen = TIdealGenerator::new(parse_poly("comm(x1,x2)").unwrap()).unwrap();
    let mut g = c.benchmark_group("semigroup");
    g.sample_size(10);
    for (label, s) in STRATEGIES {
        set_strategy(s);
        g.bench_function(BenchmarkId::new(label, "closure-L10"), |b| {
            b.iter(|| black_box(congruence_closure(&p, 10).unwrap().num_classes(10)))
        });
        g.bench_function(BenchmarkId::new(label, "pe2-L5"), |b| {
            b.iter(|| black_box(build_pe2(build_pe1(&p, &gen, 5, 0).unwrap()).unwrap().verified()))
        });
    }
    g.finish();
}

criterion_group!(benches, associativity, jr_identities, pipeline);
criterion_main!(benches);
