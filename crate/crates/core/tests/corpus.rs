//! Corpus checks against oracles written independently of the library:
//! arc-order stratifications, closed-form point counts, and cross-module
//! agreement.

use jetforge_core::algebra::{parse_poly, Coefficient, Field, MonomialOrder, Poly, PolyRing};
use jetforge_core::analysis::{certify_jets, diagonal_analyzer, DiagonalVerdict, Verdict};
use jetforge_core::groebner::{dimension, GbConfig};
use jetforge_core::jets::{fiber_ideal, jacobian_rank_at, jet_equations, VarietyDatum};
use jetforge_core::nilcone::{independence_check, invariant_jets, LieAlgebraDatum};
use jetforge_core::oracle::{count_points, DEFAULT_MAX_POINTS};

fn hypersurface(vars: &[&str], f: &str) -> VarietyDatum {
    let r = PolyRing::new(vars.iter().copied(), Field::Rational).unwrap();
    VarietyDatum::hypersurface(parse_poly(&r, f).unwrap()).unwrap()
}

fn ints(field: Field, v: &[i64]) -> Vec<Coefficient> {
    v.iter().map(|&c| field.from_i64(c)).collect()
}

/// `dim` of the `m`-jets of `x^a = y^b` through the origin, by stratifying on
/// `(ord x, ord y)`. Order `m+1` stands for a vanishing truncation.
fn binomial_curve_fiber(a: usize, b: usize, m: usize) -> usize {
    let top = m + 1;
    let mut best = 0;
    for alpha in 1..=top {
        for beta in 1..=top {
            let free = (top - alpha) + (top - beta);
            let (ox, oy) = (a * alpha, b * beta);
            let dim = if ox.min(oy) >= top {
                Some(free)
            } else if ox == oy {
                // leading coefficients satisfy one equation; each further
                // coefficient of x^a - y^b is solved by a new coefficient of x
                Some(free - (top - ox))
            } else {
                None
            };
            if let Some(d) = dim {
                best = best.max(d);
            }
        }
    }
    best
}

fn origin_fiber_dim(datum: &VarietyDatum, m: usize) -> usize {
    let zero = vec![Field::Rational.zero(); datum.ambient_dim()];
    dimension(&fiber_ideal(&jet_equations(datum, m).unwrap(), &zero).unwrap()).unwrap().dim
}

#[test]
fn cusp_fibers_follow_the_arc_stratification() {
    let cusp = hypersurface(&["x", "y"], "x^2 - y^3");
    let computed: Vec<usize> = (1..=5).map(|m| origin_fiber_dim(&cusp, m)).collect();
    let oracle: Vec<usize> = (1..=5).map(|m| binomial_curve_fiber(2, 3, m)).collect();
    assert_eq!(oracle, [2, 3, 4, 5, 7]);
    assert_eq!(computed, oracle);
}

#[test]
fn other_binomial_curves() {
    for (a, b, f) in [(2, 5, "x^2 - y^5"), (3, 4, "x^3 - y^4"), (2, 2, "x^2 - y^2")] {
        let datum = hypersurface(&["x", "y"], f);
        for m in 1..=4 {
            assert_eq!(origin_fiber_dim(&datum, m), binomial_curve_fiber(a, b, m), "{f} at m={m}");
        }
    }
}

#[test]
fn cusp_fiber_counts_are_exact_powers() {
    // below m = 5 every stratum through the origin is free, so the fiber is a
    // linear subspace of dimension dim
    for m in 1..=4 {
        let dim = binomial_curve_fiber(2, 3, m);
        for p in [5u32, 7] {
            let r = PolyRing::new(["x", "y"], Field::Prime(p)).unwrap();
            let datum = VarietyDatum::hypersurface(parse_poly(&r, "x^2 - y^3").unwrap()).unwrap();
            let fiber = fiber_ideal(&jet_equations(&datum, m).unwrap(), &[r.field().zero(), r.field().zero()]).unwrap();
            let c = count_points(&fiber, DEFAULT_MAX_POINTS).unwrap();
            assert_eq!(c.count, (p as u128).pow(dim as u32), "m={m} p={p}");
        }
    }
}

#[test]
fn quadric_counts() {
    // nilpotent trace-zero 2x2 matrices over F_q: q^2 of them
    for p in [3u32, 5, 7, 11] {
        let r = PolyRing::new(["x", "y", "z"], Field::Prime(p)).unwrap();
        let i = jetforge_core::groebner::Ideal::new(&r, [parse_poly(&r, "x^2 + y*z").unwrap()]).unwrap();
        assert_eq!(count_points(&i, DEFAULT_MAX_POINTS).unwrap().count, (p as u128).pow(2));
    }
}

#[test]
fn diagonal_analyzer_matches_certification() {
    let vars = ["x", "y", "z"];
    for (degrees, f) in [([2, 2, 2], "x^2 + y^2 + z^2"), ([2, 3, 5], "x^2 + y^3 + z^5"), ([3, 3, 3], "x^3 + y^3 + z^3")] {
        let datum = hypersurface(&vars, f);
        let mut all = true;
        for m in 1..=3 {
            let report = diagonal_analyzer(&degrees, m, 0).unwrap();
            let v = certify_jets(&datum, m, &GbConfig::default()).unwrap();
            let fiber = v.dim_sing_fiber.unwrap();
            assert!(report.levels.max_free <= fiber && fiber <= report.levels.max_bound, "{f} m={m}");
            all &= v.verdict == Verdict::Irreducible;
        }
        let report = diagonal_analyzer(&degrees, 3, 0).unwrap();
        assert_eq!(report.verdict == DiagonalVerdict::AllIrreducible, all, "{f}");
    }
}

#[test]
fn first_jets_are_smooth_exactly_over_smooth_points() {
    let q = Field::Rational;
    let cusp = hypersurface(&["x", "y"], "x^2 - y^3");
    let ideal = jet_equations(&cusp, 1).unwrap().ideal().unwrap();
    // tangent vector (3, 2) at (1, 1): 2*1*3 - 3*1*2 = 0
    assert_eq!(jacobian_rank_at(&ideal, &ints(q, &[1, 1, 3, 2])).unwrap(), 2);
    assert!(jacobian_rank_at(&ideal, &ints(q, &[0, 0, 5, -7])).unwrap() < 2);
    let a1 = hypersurface(&["x", "y", "z"], "x^2 + y*z");
    let ideal = jet_equations(&a1, 1).unwrap().ideal().unwrap();
    // (1, 1, -1) with tangent (1, 2, 0): 2 + 2*(-1) + 0 = 0
    assert_eq!(jacobian_rank_at(&ideal, &ints(q, &[1, 1, -1, 1, 2, 0])).unwrap(), 2);
    assert!(jacobian_rank_at(&ideal, &ints(q, &[0, 0, 0, 1, 1, 1])).unwrap() < 2);
}

#[test]
fn leading_term_of_top_weight_equation() {
    // f homogeneous of degree a: in(F_{ja}) on the origin fiber is in(f(X^(j)))
    let q = Field::Rational;
    let base = PolyRing::new(["x", "y", "z"], q).unwrap();
    for f in ["x^2 + y*z", "x^3 + y^3 + z^3", "x*y - z^2 + 3*x*z"] {
        let f = parse_poly(&base, f).unwrap();
        let a = f.total_degree().unwrap() as usize;
        for j in 1..=2 {
            let m = j * a;
            let jets = jet_equations(&VarietyDatum::hypersurface(f.clone()).unwrap(), m).unwrap();
            let fiber = fiber_ideal(&jets, &[q.zero(), q.zero(), q.zero()]).unwrap();
            let fr = fiber.ring().clone();
            let order = MonomialOrder::JetRevLex { base_arity: 3 };
            let top = fiber
                .generators()
                .iter()
                .find(|g| g.weighted_homogeneous_degree(&(0..3 * m).map(|k| (k / 3 + 1) as u32).collect::<Vec<_>>()) == Some(m as u64))
                .unwrap();
            let level_j: Vec<Poly> = (0..3).map(|i| Poly::var(&fr, (j - 1) * 3 + i)).collect();
            let restricted = f.map_vars(&fr, &level_j);
            assert_eq!(top.leading_term(&order).unwrap().0, restricted.leading_term(&order).unwrap().0);
        }
    }
}

#[test]
fn nilcone_jets_have_shifted_degrees_and_are_independent() {
    let sl2 = LieAlgebraDatum::sl2();
    for n in 0..=3 {
        let jets = invariant_jets(&sl2, n, Field::Rational).unwrap();
        let w = jets.weights();
        for (m, level) in jets.generators.iter().enumerate() {
            for (i, p) in level.iter().enumerate() {
                assert_eq!(p.weighted_homogeneous_degree(&w), Some((sl2.degrees[i] as usize + m) as u64));
            }
        }
        let c = independence_check(&sl2, n, 101, 3).unwrap();
        assert_eq!(c.rank, c.expected);
    }
}
