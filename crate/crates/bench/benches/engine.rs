use criterion::{black_box, criterion_group, criterion_main, Criterion};
use jetforge_bench::{hypersurface, origin_fiber};
use jetforge_core::algebra::{Field, MonomialOrder};
use jetforge_core::analysis::certify_jets;
use jetforge_core::groebner::{buchberger, dimension, GbConfig};
use jetforge_core::jets::jet_equations;
use jetforge_core::oracle::{count_points, DEFAULT_MAX_POINTS};

fn jets(c: &mut Criterion) {
    let e8 = hypersurface(&["x", "y", "z"], "x^2 + y^3 + z^5", Field::Rational);
    c.bench_function("jet_equations e8 m=5", |b| b.iter(|| jet_equations(black_box(&e8), 5).unwrap()));
}

fn groebner(c: &mut Criterion) {
    let cusp = hypersurface(&["x", "y"], "x^2 - y^3", Field::Rational);
    let fiber = origin_fiber(&cusp, 5);
    c.bench_function("buchberger cusp fiber m=5", |b| b.iter(|| buchberger(black_box(&fiber), &MonomialOrder::GrevLex).unwrap()));
    c.bench_function("dimension cusp fiber m=5", |b| b.iter(|| dimension(black_box(&fiber)).unwrap()));
    let fermat = hypersurface(&["x", "y", "z"], "x^3 + y^3 + z^3", Field::Prime(101));
    let fiber = origin_fiber(&fermat, 3);
    c.bench_function("dimension fermat fiber m=3 F101", |b| b.iter(|| dimension(black_box(&fiber)).unwrap()));
}

fn certify(c: &mut Criterion) {
    let e8 = hypersurface(&["x", "y", "z"], "x^2 + y^3 + z^5", Field::Rational);
    let mut group = c.benchmark_group("certify");
    group.sample_size(10);
    group.bench_function("e8 m=3", |b| b.iter(|| certify_jets(black_box(&e8), 3, &GbConfig::default()).unwrap()));
    group.finish();
}

fn counting(c: &mut Criterion) {
    let cusp = hypersurface(&["x", "y"], "x^2 - y^3", Field::Prime(7));
    let ideal = jet_equations(&cusp, 2).unwrap().ideal().unwrap();
    c.bench_function("count cusp X_2 over F7", |b| b.iter(|| count_points(black_box(&ideal), DEFAULT_MAX_POINTS).unwrap()));
}

criterion_group!(benches, jets, groebner, certify, counting);
criterion_main!(benches);
