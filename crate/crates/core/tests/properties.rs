use std::cmp::Ordering;

use jetforge_core::algebra::{parse_poly, substitute_series, Coefficient, Field, Monomial, MonomialOrder, Poly, PolyRing, RingRef, TruncatedSeries};
use jetforge_core::groebner::{buchberger, dimension_with, normal_form, GbConfig, Ideal};
use jetforge_core::jets::{fiber_ideal, jet_equations, jet_equations_by_derivation, rescale_action, JetRing, VarietyDatum, WeightScheme};
use jetforge_core::oracle::{count_points, DEFAULT_MAX_POINTS};
use proptest::prelude::*;

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

fn ring(n: usize, field: Field) -> RingRef {
    PolyRing::new(NAMES[..n].iter().copied(), field).unwrap()
}

fn terms(n: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=deg, n), -6i64..=6), 0..=max_terms)
        .prop_map(move |ts| ts.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= deg).collect())
}

fn build(r: &RingRef, ts: &[(Vec<u32>, i64)]) -> Poly {
    let f = r.field();
    Poly::from_terms(r, ts.iter().map(|(e, c)| (Monomial::new(e.clone()), f.from_i64(*c))))
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(7)), Just(Field::Prime(101))]
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, n).prop_map(Monomial::new)
}

fn order(n: usize) -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::GrevLex),
        prop::collection::vec(1u32..5, n).prop_map(MonomialOrder::WeightedGrevLex),
        Just(MonomialOrder::JetRevLex { base_arity: 1 }),
    ]
}

/// Coefficients of series `i` laid out as the jet point `(j*N + i)`.
fn jet_point(series: &[TruncatedSeries]) -> Vec<Coefficient> {
    let n = series.len();
    let len = series[0].len();
    (0..n * len).map(|k| series[k % n].coeffs()[k / n].clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(fl in field(), a in terms(3, 3, 5), b in terms(3, 3, 5), c in terms(3, 3, 5)) {
        let r = ring(3, fl);
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn orders_are_total_and_multiplicative(ord in order(3), u in monomial(3), v in monomial(3), w in monomial(3)) {
        let cmp = |a: &Monomial, b: &Monomial| ord.compare(a, b).unwrap();
        prop_assert_eq!(cmp(&u, &v), cmp(&v, &u).reverse());
        prop_assert_eq!(cmp(&u, &v) == Ordering::Equal, u == v);
        if cmp(&u, &v) != Ordering::Greater && cmp(&v, &w) != Ordering::Greater {
            prop_assert_ne!(cmp(&u, &w), Ordering::Greater);
        }
        prop_assert_eq!(cmp(&u.mul(&w), &v.mul(&w)), cmp(&u, &v));
        prop_assert_ne!(cmp(&Monomial::one(3), &u), Ordering::Greater);
    }

    #[test]
    fn substitution_is_multiplicative(
        fl in field(),
        f in terms(2, 3, 4),
        g in terms(2, 3, 4),
        s in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 2),
    ) {
        let r = ring(2, fl);
        let (f, g) = (build(&r, &f), build(&r, &g));
        let series: Vec<TruncatedSeries> = s.iter().map(|c| TruncatedSeries::from_i64(fl, c).unwrap()).collect();
        let lhs = substitute_series(&(&f * &g), &series).unwrap();
        let rhs = substitute_series(&f, &series).unwrap().mul(&substitute_series(&g, &series).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_is_linear(
        gens in prop::collection::vec(terms(3, 3, 3), 1..3),
        f in terms(3, 2, 3),
        g in terms(3, 2, 3),
        h in terms(3, 3, 4),
    ) {
        let r = ring(3, Field::Prime(101));
        let ideal = Ideal::new(&r, gens.iter().map(|t| build(&r, t)).filter(|p| !p.is_zero())).unwrap();
        let gb = buchberger(&ideal, &MonomialOrder::GrevLex).unwrap();
        let (f, g, h) = (build(&r, &f), build(&r, &g), build(&r, &h));
        let fg = &f * &g;
        let lhs = normal_form(&(&fg + &h), &gb).unwrap();
        let rhs = normal_form(&(&normal_form(&fg, &gb).unwrap() + &normal_form(&h, &gb).unwrap()), &gb).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_ignores_the_order(gens in prop::collection::vec(terms(3, 3, 3), 1..3)) {
        let r = ring(3, Field::Prime(101));
        let ideal = Ideal::new(&r, gens.iter().map(|t| build(&r, t)).filter(|p| !p.is_zero())).unwrap();
        let config = GbConfig { max_pairs: 5_000 };
        let lex = dimension_with(&ideal, &MonomialOrder::Lex, &config);
        let grevlex = dimension_with(&ideal, &MonomialOrder::GrevLex, &config);
        if let (Ok(a), Ok(b)) = (lex, grevlex) {
            prop_assert_eq!(a.dim, b.dim);
        }
    }

    #[test]
    fn jet_equations_evaluate_to_the_substituted_series(
        fl in field(),
        n in 1usize..=3,
        m in 0usize..=4,
        f in terms(3, 4, 5),
        s in prop::collection::vec(prop::collection::vec(-5i64..=5, 5), 3),
    ) {
        let r = ring(n, fl);
        let f: Vec<(Vec<u32>, i64)> = f.into_iter().map(|(e, c)| (e[..n].to_vec(), c)).collect();
        let f = build(&r, &f);
        prop_assume!(!f.is_zero());
        let series: Vec<TruncatedSeries> = s[..n].iter().map(|c| TruncatedSeries::from_i64(fl, &c[..=m]).unwrap()).collect();
        let jets = jet_equations(&VarietyDatum::hypersurface(f.clone()).unwrap(), m).unwrap();
        let point = jet_point(&series);
        let expected = substitute_series(&f, &series).unwrap();
        for (j, fj) in jets.equations()[0].iter().enumerate() {
            prop_assert_eq!(&fj.evaluate(&point).unwrap(), &expected.coeffs()[j]);
        }
    }

    #[test]
    fn derivation_path_agrees(f in terms(3, 4, 5), m in 0usize..=3) {
        let r = ring(3, Field::Rational);
        let f = build(&r, &f);
        prop_assume!(!f.is_zero());
        let datum = VarietyDatum::hypersurface(f).unwrap();
        let by_sub = jet_equations(&datum, m).unwrap();
        let by_d = jet_equations_by_derivation(&datum, m).unwrap();
        prop_assert_eq!(by_sub.equations(), by_d.equations());
    }

    #[test]
    fn origin_fiber_is_graded(d in 1u32..=3, coeffs in prop::collection::vec(-3i64..=3, 10), m in 1usize..=3) {
        let r = ring(3, Field::Rational);
        // all monomials of degree d in 3 variables, up to 10 of them
        let mut mons = Vec::new();
        for a in 0..=d {
            for b in 0..=d - a {
                mons.push(vec![a, b, d - a - b]);
            }
        }
        let f = build(&r, &mons.into_iter().zip(coeffs).collect::<Vec<_>>());
        prop_assume!(!f.is_zero());
        let jets = jet_equations(&VarietyDatum::hypersurface(f).unwrap(), m).unwrap();
        let zero = vec![Field::Rational.zero(); 3];
        let fiber = fiber_ideal(&jets, &zero).unwrap();
        let weights: Vec<u32> = (0..3 * m).map(|k| (k / 3 + 1) as u32).collect();
        for g in fiber.generators() {
            let deg = g.weighted_homogeneous_degree(&weights);
            prop_assert!(deg.is_some());
        }
        // each F_j on the fiber has weight exactly j
        let fr = fiber.ring().clone();
        let jr = jets.jet_ring();
        let images: Vec<Poly> = (0..jr.arity())
            .map(|k| if k < 3 { Poly::zero(&fr) } else { Poly::var(&fr, k - 3) })
            .collect();
        for (j, fj) in jets.equations()[0].iter().enumerate() {
            let restricted = fj.map_vars(&fr, &images);
            if !restricted.is_zero() {
                prop_assert_eq!(restricted.weighted_homogeneous_degree(&weights), Some(j as u64));
            }
        }
        prop_assert_eq!(jr.weights(WeightScheme::A)[3 * m], m as u32);
    }

    #[test]
    fn rescaling_composes(coords in prop::collection::vec(-9i64..=9, 6), a in -5i64..=5, b in -5i64..=5) {
        let q = Field::Rational;
        let coords: Vec<Coefficient> = coords.iter().map(|&c| q.from_i64(c)).collect();
        let (a, b) = (q.from_i64(a), q.from_i64(b));
        let twice = rescale_action(&rescale_action(&coords, &a, 2, 2).unwrap(), &b, 2, 2).unwrap();
        prop_assert_eq!(twice, rescale_action(&coords, &(&a * &b), 2, 2).unwrap());
        let zeroed = rescale_action(&coords, &q.zero(), 2, 2).unwrap();
        prop_assert_eq!(&zeroed[..2], &coords[..2]);
        prop_assert!(zeroed[2..].iter().all(Coefficient::is_zero));
    }

    #[test]
    fn counts_multiply_over_disjoint_variables(f in terms(2, 3, 3), g in terms(2, 3, 3)) {
        let p = Field::Prime(5);
        let left = ring(2, p);
        let right = PolyRing::new(["z", "w"], p).unwrap();
        let both = ring(4, p);
        let f = build(&left, &f);
        let g = build(&right, &g);
        let count = |i: Ideal| count_points(&i, DEFAULT_MAX_POINTS).unwrap().count;
        let nonzero = |p: &Poly| if p.is_zero() { vec![] } else { vec![p.clone()] };
        let ca = count(Ideal::new(&left, nonzero(&f)).unwrap());
        let cb = count(Ideal::new(&right, nonzero(&g)).unwrap());
        let mut gens = nonzero(&f.rename_into(&both, &[0, 1]));
        gens.extend(nonzero(&g.rename_into(&both, &[2, 3])));
        prop_assert_eq!(count(Ideal::new(&both, gens).unwrap()), ca * cb);
    }

    #[test]
    fn printing_round_trips(fl in field(), f in terms(3, 4, 6)) {
        let r = ring(3, fl);
        let f = build(&r, &f);
        prop_assert_eq!(parse_poly(&r, &f.to_string()).unwrap(), f);
    }
}

#[test]
fn jet_ring_names_levels() {
    let r = ring(2, Field::Rational);
    let jets = JetRing::new(&r, 2).unwrap();
    assert_eq!(jets.ring().names(), ["x_0", "y_0", "x_1", "y_1", "x_2", "y_2"]);
}
