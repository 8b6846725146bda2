//! Jets of the nilpotent cone.
//!
//! On `g_n = g ⊗ k[t]/(t^{n+1})` the coordinate `x_i^(m)` takes
//! `y(t) -> x_i(d^m y/dt^m at 0)`, so it equals `m!` times the `t^m` coefficient
//! of `x_i(y(t))`. The invariants are `P_i^(m) = D^m P_i`, homogeneous of degree
//! `d_i + m` when `x^(m)` has degree `m + 1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{parse_poly, Coefficient, Field, MonomialOrder, Poly, PolyRing, RingRef, TruncatedSeries};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, dimension_budgeted, hilbert_coefficients, series_from_product, GbConfig, Ideal};
use crate::jets::{derivation_d, matrix_rank, JetRing, WeightScheme};

/// JSON form: `{"name": "sl2", "dim": 3, "rank": 1, "invariants": ["h^2 + 4*e*f"], "degrees": [2]}`,
/// optionally with `"variables"` (default `x1..x<dim>`) and `"sampler"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieAlgebraDatum {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    pub invariants: Vec<String>,
    pub degrees: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    /// Name of a built-in adjoint-action sampler; only `"sl2"` exists.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampler: Option<String>,
}

impl LieAlgebraDatum {
    /// `sl2` in coordinates `X = [[h, 2e], [2f, -h]]`, with `P = h^2 + 4ef = -det X`.
    pub fn sl2() -> LieAlgebraDatum {
        LieAlgebraDatum {
            name: "sl2".into(),
            dim: 3,
            rank: 1,
            invariants: vec!["h^2 + 4*e*f".into()],
            degrees: vec![2],
            variables: Some(vec!["e".into(), "f".into(), "h".into()]),
            sampler: Some("sl2".into()),
        }
    }

    pub fn builtin(name: &str) -> Option<LieAlgebraDatum> {
        (name == "sl2").then(Self::sl2)
    }

    pub fn variable_names(&self) -> Vec<String> {
        self.variables
            .clone()
            .unwrap_or_else(|| (1..=self.dim).map(|i| format!("x{i}")).collect())
    }

    /// Parses the invariants over `field` and checks the declared shape and degrees.
    pub fn invariant_polys(&self, field: Field) -> Result<(RingRef, Vec<Poly>)> {
        let names = self.variable_names();
        if names.len() != self.dim {
            return Err(Error::Input(format!("{} variables for dimension {}", names.len(), self.dim)));
        }
        if self.invariants.len() != self.rank || self.degrees.len() != self.rank {
            return Err(Error::Input(format!(
                "rank {} needs as many invariants and degrees, got {} and {}",
                self.rank,
                self.invariants.len(),
                self.degrees.len()
            )));
        }
        let ring = PolyRing::new(names, field)?;
        let mut polys = Vec::new();
        for (text, &d) in self.invariants.iter().zip(&self.degrees) {
            let p = parse_poly(&ring, text)?;
            if p.weighted_homogeneous_degree(&vec![1; self.dim]) != Some(d as u64) {
                return Err(Error::Input(format!("invariant {text} is not homogeneous of degree {d}")));
            }
            polys.push(p);
        }
        Ok((ring, polys))
    }
}

#[derive(Clone, Debug)]
pub struct NilconeJetIdeal {
    pub jets: JetRing,
    /// `generators[m][i] = P_i^(m)`.
    pub generators: Vec<Vec<Poly>>,
    pub degrees: Vec<u32>,
}

impl NilconeJetIdeal {
    pub fn level(&self) -> usize {
        self.jets.level()
    }

    pub fn ideal(&self) -> Result<Ideal> {
        Ok(Ideal::new(self.jets.ring(), self.generators.iter().flatten().cloned())?.from_derivation(self.level()))
    }

    pub fn weights(&self) -> Vec<u32> {
        self.jets.weights(WeightScheme::B)
    }
}

/// All `P_i^(m)` for `m <= n`; refuses F_p with `p <= n`.
pub fn invariant_jets(datum: &LieAlgebraDatum, n: usize, field: Field) -> Result<NilconeJetIdeal> {
    let (base, polys) = datum.invariant_polys(field)?;
    let jets = JetRing::new(&base, n)?;
    if let Field::Prime(p) = field {
        if p as usize <= n {
            return Err(Error::Characteristic { characteristic: p, level: n });
        }
    }
    let weights = jets.weights(WeightScheme::B);
    let mut current: Vec<Poly> = polys.iter().map(|p| jets.embed_base(p)).collect();
    let mut generators = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m > 0 {
            current = current.iter().map(|p| derivation_d(p, &jets)).collect::<Result<_>>()?;
        }
        for (p, &d) in current.iter().zip(&datum.degrees) {
            let deg = p.weighted_homogeneous_degree(&weights);
            if !p.is_zero() && deg != Some((d as usize + m) as u64) {
                return Err(Error::Input(format!("P^({m}) has degree {deg:?}, expected {}", d as usize + m)));
            }
        }
        generators.push(current.clone());
    }
    Ok(NilconeJetIdeal {
        jets,
        generators,
        degrees: datum.degrees.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilconeDimension {
    pub n: usize,
    pub computed: usize,
    /// `(n+1)(d - l)`.
    pub expected: usize,
    pub complete_intersection: bool,
}

pub fn nilcone_dimension_check(datum: &LieAlgebraDatum, n: usize, field: Field, config: &GbConfig) -> Result<NilconeDimension> {
    let jets = invariant_jets(datum, n, field)?;
    let computed = dimension_budgeted(&jets.ideal()?, config)?.dim;
    let expected = (n + 1) * (datum.dim - datum.rank);
    Ok(NilconeDimension {
        n,
        computed,
        expected,
        complete_intersection: computed == expected,
    })
}

/// Truncated Hilbert series of `k[g_n] / (P_i^(m))` under `deg x^(m) = m + 1`.
pub fn nilcone_hilbert(datum: &LieAlgebraDatum, n: usize, degree_bound: usize, field: Field, config: &GbConfig) -> Result<Vec<u64>> {
    let jets = invariant_jets(datum, n, field)?;
    let weights = jets.weights();
    let gb = buchberger_with(&jets.ideal()?, &MonomialOrder::WeightedGrevLex(weights.clone()), config)?;
    hilbert_coefficients(&gb, &weights, degree_bound)
}

/// `prod_{m,i} (1 - t^{d_i+m}) / prod_m (1 - t^{m+1})^d` through `t^degree_bound`.
pub fn predicted_series(datum: &LieAlgebraDatum, n: usize, degree_bound: usize) -> Vec<i64> {
    let numerator: Vec<u32> = (0..=n as u32).flat_map(|m| datum.degrees.iter().map(move |&d| d + m)).collect();
    let denominator: Vec<u32> = (0..=n as u32).flat_map(|m| std::iter::repeat_n(m + 1, datum.dim)).collect();
    series_from_product(&numerator, &denominator, degree_bound)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessCheck {
    pub n: usize,
    pub computed: Vec<u64>,
    pub predicted: Vec<i64>,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Compares the quotient's Hilbert series with the complete-intersection
/// product formula. A graded complete intersection with finite-dimensional
/// pieces has exactly this series, which is the freeness statement.
pub fn hilbert_freeness_check(datum: &LieAlgebraDatum, n: usize, degree_bound: usize, field: Field, config: &GbConfig) -> Result<FreenessCheck> {
    let dim = nilcone_dimension_check(datum, n, field, config)?;
    if !dim.complete_intersection {
        return Err(Error::Input(format!(
            "the invariants do not form a regular sequence at level {n} (dimension {} instead of {}); run the dimension check",
            dim.computed, dim.expected
        )));
    }
    let computed = nilcone_hilbert(datum, n, degree_bound, field, config)?;
    let predicted = predicted_series(datum, n, degree_bound);
    let matches = computed.iter().zip(&predicted).all(|(&c, &p)| c as i64 == p);
    Ok(FreenessCheck {
        n,
        computed,
        predicted,
        matches,
    })
}

fn random_point(rng: &mut ChaCha8Rng, field: Field, len: usize) -> Vec<Coefficient> {
    let p = field.characteristic() as i64;
    (0..len).map(|_| field.from_i64(rng.random_range(0..p))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceCheck {
    pub rank: usize,
    /// `(n+1) l`.
    pub expected: usize,
}

/// Rank of the Jacobian of all `P_i^(m)` at a random point of `g_n(F_p)`.
pub fn independence_check(datum: &LieAlgebraDatum, n: usize, p: u32, seed: u64) -> Result<IndependenceCheck> {
    let field = Field::prime(p)?;
    let jets = invariant_jets(datum, n, field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let point = random_point(&mut rng, field, jets.jets.arity());
    let rows = jets
        .generators
        .iter()
        .flatten()
        .map(|g| (0..jets.jets.arity()).map(|k| g.partial_derivative(k).evaluate(&point)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(IndependenceCheck {
        rank: matrix_rank(rows),
        expected: (n + 1) * datum.rank,
    })
}

type Matrix = [[TruncatedSeries; 2]; 2];

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let entry = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

fn series(field: Field, coeffs: Vec<Coefficient>) -> TruncatedSeries {
    TruncatedSeries::new(field, coeffs).expect("coefficients lie in the field")
}

/// Product of random elementary matrices over `F_p[t]/(t^len)`, with its inverse.
fn random_sl2(rng: &mut ChaCha8Rng, field: Field, len: usize) -> (Matrix, Matrix) {
    let one = TruncatedSeries::constant(field, field.one(), len);
    let zero = TruncatedSeries::constant(field, field.zero(), len);
    let mut g: Matrix = [[one.clone(), zero.clone()], [zero.clone(), one.clone()]];
    for k in 0..4 {
        let s = series(field, random_point(rng, field, len));
        let e: Matrix = if k % 2 == 0 {
            [[one.clone(), s], [zero.clone(), one.clone()]]
        } else {
            [[one.clone(), zero.clone()], [s, one.clone()]]
        };
        g = mat_mul(&g, &e);
    }
    let neg = field.from_i64(-1);
    let inv = [[g[1][1].clone(), g[0][1].scale(&neg)], [g[1][0].scale(&neg), g[0][0].clone()]];
    (g, inv)
}

/// Normalized jet coordinates `x^(j) = j! c_j` of series `(e, f, h)`, level-major.
fn jet_coordinates(components: &[TruncatedSeries], field: Field) -> Vec<Coefficient> {
    let len = components[0].len();
    let mut out = Vec::with_capacity(len * components.len());
    let mut fact = field.one();
    for j in 0..len {
        if j > 0 {
            fact = &fact * &field.from_i64(j as i64);
        }
        for c in components {
            out.push(&c.coeffs()[j] * &fact);
        }
    }
    out
}

fn sl2_trial(jets: &NilconeJetIdeal, y: &[TruncatedSeries; 3], g: &Matrix, g_inv: &Matrix, field: Field) -> Result<bool> {
    let [e, f, h] = y;
    let two = field.from_i64(2);
    let x: Matrix = [[h.clone(), e.scale(&two)], [f.scale(&two), h.scale(&field.from_i64(-1))]];
    let conj = mat_mul(&mat_mul(g, &x), g_inv);
    let half = two.inv().expect("p is odd");
    let moved = [conj[0][1].scale(&half), conj[1][0].scale(&half), conj[0][0].clone()];
    let before = jet_coordinates(y, field);
    let after = jet_coordinates(&moved, field);
    for p in jets.generators.iter().flatten() {
        if p.evaluate(&before)? != p.evaluate(&after)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceCheck {
    pub passed: usize,
    pub failed: usize,
}

/// Evaluates every `P_i^(m)` at random `y(t)` and at `g(t) y(t) g(t)^{-1}` over
/// F_p; trials run in parallel, each with its own seeded stream.
pub fn adjoint_invariance_check(datum: &LieAlgebraDatum, n: usize, trials: usize, p: u32, seed: u64) -> Result<InvarianceCheck> {
    if datum.sampler.as_deref() != Some("sl2") || datum.variable_names() != ["e", "f", "h"] {
        return Err(Error::Unsupported(format!("no adjoint-action sampler for {}", datum.name)));
    }
    let field = Field::prime(p)?;
    if p == 2 {
        return Err(Error::Input("the sl2 sampler needs an odd prime".into()));
    }
    let jets = invariant_jets(datum, n, field)?;
    let len = n + 1;
    let outcomes: Vec<Result<bool>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            let y = [0, 1, 2].map(|_| series(field, random_point(&mut rng, field, len)));
            let (g, g_inv) = random_sl2(&mut rng, field, len);
            sl2_trial(&jets, &y, &g, &g_inv, field)
        })
        .collect();
    let mut passed = 0;
    for o in outcomes {
        if o? {
            passed += 1;
        }
    }
    Ok(InvarianceCheck {
        passed,
        failed: trials - passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_jets() {
        let jets = invariant_jets(&LieAlgebraDatum::sl2(), 1, Field::Rational).unwrap();
        let ring = jets.jets.ring();
        assert_eq!(jets.generators[0][0], parse_poly(ring, "h_0^2 + 4*e_0*f_0").unwrap());
        assert_eq!(jets.generators[1][0], parse_poly(ring, "2*h_0*h_1 + 4*e_0*f_1 + 4*e_1*f_0").unwrap());
        let w = jets.weights();
        assert_eq!(jets.generators[1][0].weighted_homogeneous_degree(&w), Some(3));
        assert!(matches!(invariant_jets(&LieAlgebraDatum::sl2(), 3, Field::Prime(3)), Err(Error::Characteristic { .. })));
    }

    #[test]
    fn sl2_dimensions() {
        for (n, dim) in [(0, 2), (1, 4)] {
            let d = nilcone_dimension_check(&LieAlgebraDatum::sl2(), n, Field::Rational, &GbConfig::default()).unwrap();
            assert_eq!((d.computed, d.expected, d.complete_intersection), (dim, dim, true));
        }
    }

    #[test]
    fn sl2_freeness_level_zero() {
        let c = hilbert_freeness_check(&LieAlgebraDatum::sl2(), 0, 4, Field::Rational, &GbConfig::default()).unwrap();
        assert_eq!(c.predicted, vec![1, 3, 5, 7, 9]);
        assert!(c.matches);
    }

    #[test]
    fn rank_zero_is_free() {
        let d: LieAlgebraDatum = serde_json::from_str(r#"{"name": "abelian", "dim": 2, "rank": 0, "invariants": [], "degrees": []}"#).unwrap();
        let c = hilbert_freeness_check(&d, 1, 5, Field::Rational, &GbConfig::default()).unwrap();
        assert!(c.matches);
        assert_eq!(c.computed, vec![1, 2, 5, 8, 14, 20]);
    }

    #[test]
    fn identity_conjugation_is_trivial() {
        let field = Field::Prime(101);
        let jets = invariant_jets(&LieAlgebraDatum::sl2(), 2, field).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let y = [0, 1, 2].map(|_| series(field, random_point(&mut rng, field, 3)));
        let one = TruncatedSeries::constant(field, field.one(), 3);
        let zero = TruncatedSeries::constant(field, field.zero(), 3);
        let id: Matrix = [[one.clone(), zero.clone()], [zero, one]];
        assert!(sl2_trial(&jets, &y, &id, &id, field).unwrap());
    }

    #[test]
    fn non_invariant_polynomial_fails() {
        let mut d = LieAlgebraDatum::sl2();
        d.invariants = vec!["h^2 + e*f".into()];
        let r = adjoint_invariance_check(&d, 1, 20, 101, 1).unwrap();
        assert!(r.failed > 0);
    }

    #[test]
    fn sampler_required() {
        let mut d = LieAlgebraDatum::sl2();
        d.sampler = None;
        assert!(matches!(adjoint_invariance_check(&d, 1, 1, 101, 0), Err(Error::Unsupported(_))));
    }
}
