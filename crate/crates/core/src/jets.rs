//! Jet rings and jet ideals.
//!
//! For `X = V(f_1, ..., f_s) ⊂ A^N` the jet scheme `X_m` lives in `A^{(m+1)N}`
//! with coordinates `U_i^(j)`, `0 <= j <= m`. Its equations are the
//! coefficients `F_0, ..., F_m` of `f(sum_j U^(j) t^j) mod t^(m+1)`.

use serde::Serialize;

use crate::algebra::{Coefficient, Field, JetLayout, Monomial, Poly, PolyRing, RingRef};
use crate::error::{Error, Result};
use crate::groebner::{dimension, DimensionReport, Ideal};

/// Grading of jet variables: `A` puts `deg U^(j) = j`, `B` puts `deg U^(j) = j + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WeightScheme {
    A,
    B,
}

/// Polynomial ring `k[U^(0), ..., U^(m)]` over a base ring in `N` variables.
///
/// Variable `U_i^(j)` has index `j*N + i` and is named `<base name>_<j>`.
#[derive(Clone, Debug)]
pub struct JetRing {
    base: RingRef,
    level: usize,
    ring: RingRef,
}

impl JetRing {
    pub fn new(base: &RingRef, level: usize) -> Result<JetRing> {
        Self::with_levels(base, 0, level).map(|ring| JetRing {
            base: base.clone(),
            level,
            ring,
        })
    }

    fn with_levels(base: &RingRef, first: usize, last: usize) -> Result<RingRef> {
        let names = (first..=last)
            .flat_map(|j| base.names().iter().map(move |n| format!("{n}_{j}")))
            .collect();
        let layout = JetLayout {
            base_arity: base.arity(),
            first_level: first,
            last_level: last,
        };
        PolyRing::with_jet_layout(names, base.field(), layout)
    }

    pub fn base(&self) -> &RingRef {
        &self.base
    }

    pub fn base_arity(&self) -> usize {
        self.base.arity()
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.base_arity() + i
    }

    pub fn var(&self, i: usize, j: usize) -> Poly {
        Poly::var(&self.ring, self.index(i, j))
    }

    pub fn weights(&self, scheme: WeightScheme) -> Vec<u32> {
        (0..=self.level)
            .flat_map(|j| {
                let w = match scheme {
                    WeightScheme::A => j as u32,
                    WeightScheme::B => j as u32 + 1,
                };
                std::iter::repeat_n(w, self.base_arity())
            })
            .collect()
    }

    /// The ring of level `1..=m` variables, where fibers of `X_m -> X` live.
    pub fn fiber_ring(&self) -> Result<RingRef> {
        if self.level == 0 {
            return PolyRing::new(Vec::<String>::new(), self.field());
        }
        Self::with_levels(&self.base, 1, self.level)
    }

    /// Sends base variable `x_i` to `U_i^(0)`.
    pub fn embed_base(&self, f: &Poly) -> Poly {
        let map: Vec<usize> = (0..self.base_arity()).collect();
        f.rename_into(&self.ring, &map)
    }
}

/// The derivation `D` with `D(U_i^(j)) = U_i^(j+1)`, applied to `f` (which must
/// live in a jet ring over the same base with lower level) and landing in `target`.
pub fn derivation_d(f: &Poly, target: &JetRing) -> Result<Poly> {
    let Some(layout) = f.ring().jet_layout() else {
        return Err(Error::input("derivation needs a polynomial in a jet ring"));
    };
    if layout.first_level != 0 || layout.base_arity != target.base_arity() || f.field() != target.field() {
        return Err(Error::input("source and target jet rings do not match"));
    }
    if let Field::Prime(p) = target.field() {
        if (p as usize) <= target.level() {
            return Err(Error::Characteristic {
                characteristic: p,
                level: target.level(),
            });
        }
    }
    let field = target.field();
    let mut out = Poly::zero(target.ring());
    for (m, c) in f.terms() {
        for k in m.support() {
            let (i, j) = (layout.base_index_of(k), layout.level_of(k));
            if j + 1 > target.level() {
                return Err(Error::input(format!(
                    "D of a level-{j} variable does not fit in a level-{} ring",
                    target.level()
                )));
            }
            let e = m.exps()[k];
            let mut exps = vec![0u32; target.arity()];
            for (idx, &x) in m.exps().iter().enumerate() {
                exps[target.index(layout.base_index_of(idx), layout.level_of(idx))] += x;
            }
            exps[target.index(i, j)] -= 1;
            exps[target.index(i, j + 1)] += 1;
            out = &out + &Poly::monomial(target.ring(), Monomial::new(exps), c * &field.from_i64(e as i64));
        }
    }
    Ok(out)
}

/// Generators of `X ⊂ A^N` with the asserted codimension.
#[derive(Clone, Debug)]
pub struct VarietyDatum {
    ring: RingRef,
    generators: Vec<Poly>,
    codim: usize,
    integral: bool,
}

impl VarietyDatum {
    pub fn new(ring: &RingRef, generators: Vec<Poly>, codim: usize, integral: bool) -> Result<VarietyDatum> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::input("generators live in different rings"));
        }
        if codim > ring.arity() {
            return Err(Error::input(format!("codimension {codim} exceeds ambient dimension {}", ring.arity())));
        }
        Ok(VarietyDatum {
            ring: ring.clone(),
            generators,
            codim,
            integral,
        })
    }

    /// A hypersurface `V(f)`, asserted integral.
    pub fn hypersurface(f: Poly) -> Result<VarietyDatum> {
        let ring = f.ring().clone();
        Self::new(&ring, vec![f], 1, true)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn ambient_dim(&self) -> usize {
        self.ring.arity()
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    /// `n = N - r`.
    pub fn dim(&self) -> usize {
        self.ambient_dim() - self.codim
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// Complete intersection presentation: as many generators as the codimension.
    pub fn is_lci(&self) -> bool {
        self.generators.len() == self.codim
    }

    pub fn ideal(&self) -> Result<Ideal> {
        Ideal::new(&self.ring, self.generators.iter().cloned())
    }

    /// Checks `dim V(generators) = N - r` with the Gröbner engine.
    pub fn check_dimension(&self) -> Result<DimensionReport> {
        let report = dimension(&self.ideal()?)?;
        if report.dim != self.dim() {
            return Err(Error::input(format!(
                "asserted codimension {} but the generators cut out dimension {} in A^{}",
                self.codim,
                report.dim,
                self.ambient_dim()
            )));
        }
        Ok(report)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Coefficients of the truncated substitution; valid in every characteristic.
    Substitution,
    /// `D^j(f) / j!`; needs `char k > m`.
    Derivation,
}

#[derive(Clone, Debug)]
pub struct JetIdealResult {
    jets: JetRing,
    /// `equations[s][j]` is `F_j` for generator `s`.
    equations: Vec<Vec<Poly>>,
    provenance: Provenance,
}

impl JetIdealResult {
    pub fn jet_ring(&self) -> &JetRing {
        &self.jets
    }

    pub fn level(&self) -> usize {
        self.jets.level()
    }

    pub fn equations(&self) -> &[Vec<Poly>] {
        &self.equations
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn ideal(&self) -> Result<Ideal> {
        let ideal = Ideal::new(self.jets.ring(), self.equations.iter().flatten().cloned())?;
        Ok(match self.provenance {
            Provenance::Substitution => ideal,
            Provenance::Derivation => ideal.from_derivation(self.level()),
        })
    }
}

/// Truncated product of two series with polynomial coefficients.
fn series_mul(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let len = a.len();
    let ring = a[0].ring();
    let mut out = vec![Poly::zero(ring); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b[..len - i].iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

fn substitution_equations(f: &Poly, jets: &JetRing) -> Vec<Poly> {
    let m = jets.level();
    let ring = jets.ring();
    let generic: Vec<Vec<Poly>> = (0..jets.base_arity())
        .map(|i| (0..=m).map(|j| jets.var(i, j)).collect())
        .collect();
    let mut powers: Vec<Vec<Vec<Poly>>> = generic.iter().map(|s| vec![s.clone()]).collect();
    let mut acc = vec![Poly::zero(ring); m + 1];
    for (mono, c) in f.terms() {
        let mut t: Vec<Poly> = (0..=m)
            .map(|j| if j == 0 { Poly::constant(ring, c.clone()) } else { Poly::zero(ring) })
            .collect();
        for (i, &e) in mono.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() < e as usize {
                let next = series_mul(powers[i].last().unwrap(), &generic[i]);
                powers[i].push(next);
            }
            t = series_mul(&t, &powers[i][e as usize - 1]);
        }
        for (a, b) in acc.iter_mut().zip(t) {
            *a = &*a + &b;
        }
    }
    acc
}

fn factorial_in(field: Field, j: usize) -> Coefficient {
    (1..=j as i64).fold(field.one(), |acc, k| &acc * &field.from_i64(k))
}

/// Jet equations by truncated substitution.
pub fn jet_equations(datum: &VarietyDatum, m: usize) -> Result<JetIdealResult> {
    let jets = JetRing::new(datum.ring(), m)?;
    let equations = datum.generators().iter().map(|f| substitution_equations(f, &jets)).collect();
    Ok(JetIdealResult {
        jets,
        equations,
        provenance: Provenance::Substitution,
    })
}

/// Substitutes `U^(k) -> k! U^(k)`, taking a polynomial in the normalized
/// coordinates `U^(k) = D^k(U)` to the raw truncated-coefficient coordinates.
pub fn normalized_to_raw(f: &Poly, jets: &JetRing) -> Poly {
    let field = jets.field();
    let images: Vec<Poly> = (0..jets.arity())
        .map(|k| {
            let level = k / jets.base_arity();
            Poly::var(jets.ring(), k).scale(&factorial_in(field, level))
        })
        .collect();
    f.map_vars(jets.ring(), &images)
}

/// Jet equations from the derivation: `D^j(f) / j!` rewritten in raw
/// coordinates, which reproduces the substitution equations exactly.
/// Refuses F_p with `p <= m`.
pub fn jet_equations_by_derivation(datum: &VarietyDatum, m: usize) -> Result<JetIdealResult> {
    let jets = JetRing::new(datum.ring(), m)?;
    if let Field::Prime(p) = jets.field() {
        if p as usize <= m {
            return Err(Error::Characteristic {
                characteristic: p,
                level: m,
            });
        }
    }
    let mut equations = Vec::new();
    for f in datum.generators() {
        let mut current = jets.embed_base(f);
        let mut eqs = vec![current.clone()];
        for j in 1..=m {
            current = derivation_d(&current, &jets)?;
            let inv = factorial_in(jets.field(), j).inv().expect("j! invertible when char > m");
            eqs.push(normalized_to_raw(&current.scale(&inv), &jets));
        }
        equations.push(eqs);
    }
    Ok(JetIdealResult {
        jets,
        equations,
        provenance: Provenance::Derivation,
    })
}

/// Scales `U_i^(j)` by `a^j`: the action of `t -> a t` on `m`-jets.
pub fn rescale_action(coords: &[Coefficient], a: &Coefficient, base_arity: usize, m: usize) -> Result<Vec<Coefficient>> {
    if coords.len() != base_arity * (m + 1) {
        return Err(Error::input(format!(
            "{} coordinates for {} base variables at level {m}",
            coords.len(),
            base_arity
        )));
    }
    let field = a.field();
    let mut scale = field.one();
    let mut out = Vec::with_capacity(coords.len());
    for chunk in coords.chunks(base_arity) {
        for c in chunk {
            out.push(c * &scale);
        }
        scale = &scale * a;
    }
    Ok(out)
}

fn check_point(point: &[Coefficient], field: Field, arity: usize) -> Result<()> {
    if point.len() != arity {
        return Err(Error::input(format!("point has {} coordinates, expected {arity}", point.len())));
    }
    if point.iter().any(|c| !field.contains(c)) {
        return Err(Error::input(format!("point coordinates must lie in {field}")));
    }
    Ok(())
}

/// Ideal of `pi_m^{-1}(point)` in the level `1..=m` variables.
pub fn fiber_ideal(result: &JetIdealResult, point: &[Coefficient]) -> Result<Ideal> {
    let jets = result.jet_ring();
    let n = jets.base_arity();
    check_point(point, jets.field(), n)?;
    let fiber = jets.fiber_ring()?;
    // level 0 -> constants, level j >= 1 -> fiber variable (j-1)*N + i
    let images: Vec<Poly> = (0..jets.arity())
        .map(|k| {
            if k < n {
                Poly::constant(&fiber, point[k].clone())
            } else {
                Poly::var(&fiber, k - n)
            }
        })
        .collect();
    let mut gens = Vec::new();
    for eqs in result.equations() {
        let f0 = eqs[0].map_vars(&fiber, &images);
        if !f0.is_zero() {
            return Err(Error::input("point does not lie on the variety"));
        }
        gens.extend(eqs[1..].iter().map(|f| f.map_vars(&fiber, &images)));
    }
    let ideal = Ideal::new(&fiber, gens)?;
    Ok(match result.provenance() {
        Provenance::Substitution => ideal,
        Provenance::Derivation => ideal.from_derivation(result.level()),
    })
}

/// Determinant by cofactor expansion along the first row.
fn determinant(rows: &[Vec<Poly>]) -> Poly {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let ring = rows[0][0].ring().clone();
    let mut acc = Poly::zero(&ring);
    for col in 0..n {
        if rows[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &rows[0][col] * &determinant(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug)]
pub struct SingularLocus {
    pub ideal: Ideal,
    /// Set when the presentation is not a complete intersection: the minors then
    /// need not cut out the singular locus.
    pub heuristic: bool,
}

/// Generators plus all `r x r` minors of the Jacobian matrix.
pub fn singular_locus_ideal(datum: &VarietyDatum) -> Result<SingularLocus> {
    let ring = datum.ring();
    let r = datum.codim();
    let jac: Vec<Vec<Poly>> = datum
        .generators()
        .iter()
        .map(|f| (0..ring.arity()).map(|i| f.partial_derivative(i)).collect())
        .collect();
    let mut gens: Vec<Poly> = datum.generators().to_vec();
    if r == 0 {
        // the empty minor: A^N is smooth
        gens.push(Poly::one(ring));
    } else if jac.len() >= r {
        for rows in subsets(jac.len(), r) {
            for cols in subsets(ring.arity(), r) {
                let sub: Vec<Vec<Poly>> = rows.iter().map(|&a| cols.iter().map(|&b| jac[a][b].clone()).collect()).collect();
                gens.push(determinant(&sub));
            }
        }
    }
    Ok(SingularLocus {
        ideal: Ideal::new(ring, gens)?,
        heuristic: !datum.is_lci(),
    })
}

/// Rank of a matrix over a field by Gaussian elimination.
pub(crate) fn matrix_rank(mut rows: Vec<Vec<Coefficient>>) -> usize {
    let ncols = rows.first().map(Vec::len).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().unwrap();
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] * &inv;
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank at `point` of the Jacobian of the ideal's generators.
pub fn jacobian_rank_at(ideal: &Ideal, point: &[Coefficient]) -> Result<usize> {
    let ring = ideal.ring();
    check_point(point, ring.field(), ring.arity())?;
    let mut rows = Vec::new();
    for g in ideal.generators() {
        if !g.evaluate(point)?.is_zero() {
            return Err(Error::input("point does not satisfy the generators"));
        }
        let row = (0..ring.arity())
            .map(|i| g.partial_derivative(i).evaluate(point))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(matrix_rank(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn datum(vars: &[&str], gens: &[&str], codim: usize) -> VarietyDatum {
        let r = PolyRing::new(vars.iter().copied(), Field::Rational).unwrap();
        let g = gens.iter().map(|s| parse_poly(&r, s).unwrap()).collect();
        VarietyDatum::new(&r, g, codim, true).unwrap()
    }

    fn jp(jets: &JetRing, s: &str) -> Poly {
        parse_poly(jets.ring(), s).unwrap()
    }

    #[test]
    fn expansion_examples() {
        let d = datum(&["x"], &["x^2"], 1);
        let res = jet_equations(&d, 1).unwrap();
        let j = res.jet_ring();
        assert_eq!(res.equations()[0], vec![jp(j, "x_0^2"), jp(j, "2*x_0*x_1")]);

        let d = datum(&["x", "y"], &["x^2 - y^3"], 1);
        let res = jet_equations(&d, 1).unwrap();
        let j = res.jet_ring();
        assert_eq!(res.equations()[0], vec![jp(j, "x_0^2 - y_0^3"), jp(j, "2*x_0*x_1 - 3*y_0^2*y_1")]);

        let d = datum(&["x", "y", "z"], &["x*y - z^2"], 1);
        let res = jet_equations(&d, 2).unwrap();
        let j = res.jet_ring();
        assert_eq!(res.equations()[0][2], jp(j, "x_0*y_2 + x_1*y_1 + x_2*y_0 - 2*z_0*z_2 - z_1^2"));
    }

    #[test]
    fn derivation_examples() {
        let base = PolyRing::new(["u", "v"], Field::Rational).unwrap();
        let j1 = JetRing::new(&base, 1).unwrap();
        assert_eq!(derivation_d(&j1.var(0, 0), &j1).unwrap(), j1.var(0, 1));
        assert!(derivation_d(&Poly::from_i64(j1.ring(), 5), &j1).unwrap().is_zero());
        let uv = &j1.var(0, 0) * &j1.var(1, 0);
        assert_eq!(derivation_d(&uv, &j1).unwrap(), jp(&j1, "u_1*v_0 + u_0*v_1"));
        // level overflow
        assert!(derivation_d(&j1.var(0, 1), &j1).is_err());
        // characteristic guard
        let b3 = PolyRing::new(["u"], Field::Prime(3)).unwrap();
        let j3 = JetRing::new(&b3, 3).unwrap();
        assert!(matches!(derivation_d(&j3.var(0, 0), &j3), Err(Error::Characteristic { .. })));
    }

    #[test]
    fn derivation_path_matches_substitution() {
        let d = datum(&["x", "y", "z"], &["x^2 + y^3 + z^5 - x*y*z"], 1);
        let a = jet_equations(&d, 4).unwrap();
        let b = jet_equations_by_derivation(&d, 4).unwrap();
        assert_eq!(a.equations(), b.equations());
        assert_eq!(b.provenance(), Provenance::Derivation);
    }

    #[test]
    fn rescale_examples() {
        let q = Field::Rational;
        let v: Vec<_> = (1..=6).map(|k| q.from_i64(k)).collect();
        assert_eq!(rescale_action(&v, &q.one(), 2, 2).unwrap(), v);
        let z = rescale_action(&v, &q.zero(), 2, 2).unwrap();
        assert_eq!(z[..2], v[..2]);
        assert!(z[2..].iter().all(Coefficient::is_zero));
        assert!(rescale_action(&v, &q.one(), 4, 2).is_err());
    }

    #[test]
    fn fiber_examples() {
        let q = Field::Rational;
        let cusp = datum(&["x", "y"], &["x^2 - y^3"], 1);
        let origin = [q.zero(), q.zero()];
        let f1 = fiber_ideal(&jet_equations(&cusp, 1).unwrap(), &origin).unwrap();
        assert!(f1.is_zero());
        assert_eq!(f1.ring().arity(), 2);
        let f2 = fiber_ideal(&jet_equations(&cusp, 2).unwrap(), &origin).unwrap();
        assert_eq!(dimension(&f2).unwrap().dim, 3);
        assert!(fiber_ideal(&jet_equations(&cusp, 2).unwrap(), &[q.one(), q.zero()]).is_err());

        let line = datum(&["x", "y"], &["x - y"], 1);
        let f = fiber_ideal(&jet_equations(&line, 3).unwrap(), &[q.one(), q.one()]).unwrap();
        assert_eq!(dimension(&f).unwrap().dim, 3);
    }

    #[test]
    fn singular_locus_examples() {
        let cusp = datum(&["x", "y"], &["x^2 - y^3"], 1);
        let s = singular_locus_ideal(&cusp).unwrap();
        assert!(!s.heuristic);
        let r = cusp.ring();
        assert_eq!(
            s.ideal.generators(),
            &[parse_poly(r, "x^2 - y^3").unwrap(), parse_poly(r, "2*x").unwrap(), parse_poly(r, "-3*y^2").unwrap()]
        );
        assert_eq!(dimension(&s.ideal).unwrap().dim, 0);

        let a1 = datum(&["x", "y", "z"], &["x^2 + y*z"], 1);
        assert_eq!(dimension(&singular_locus_ideal(&a1).unwrap().ideal).unwrap().dim, 0);

        let line = datum(&["x", "y"], &["x - y"], 1);
        assert_eq!(dimension(&singular_locus_ideal(&line).unwrap().ideal), Err(Error::EmptyVariety));

        let cubic = datum(&["a", "b", "c", "d"], &["a*c - b^2", "b*d - c^2", "a*d - b*c"], 2);
        assert!(singular_locus_ideal(&cubic).unwrap().heuristic);
    }

    #[test]
    fn jacobian_rank_examples() {
        let q = Field::Rational;
        let cusp = datum(&["x", "y"], &["x^2 - y^3"], 1);
        let x1 = jet_equations(&cusp, 1).unwrap().ideal().unwrap();
        let zero: Vec<_> = (0..4).map(|_| q.zero()).collect();
        assert_eq!(jacobian_rank_at(&x1, &zero).unwrap(), 0);
        // (1,1) with tangent vector (3,2): 2*1*3 - 3*1*2 = 0
        let p = [q.from_i64(1), q.from_i64(1), q.from_i64(3), q.from_i64(2)];
        assert_eq!(jacobian_rank_at(&x1, &p).unwrap(), 2);
        let bad = [q.from_i64(1), q.from_i64(2), q.zero(), q.zero()];
        assert!(jacobian_rank_at(&x1, &bad).is_err());

        let plane = datum(&["x", "y"], &["x"], 1);
        let jets = jet_equations(&plane, 3).unwrap().ideal().unwrap();
        let pt: Vec<_> = (0..8).map(|k| if k % 2 == 1 { q.from_i64(k) } else { q.zero() }).collect();
        assert_eq!(jacobian_rank_at(&jets, &pt).unwrap(), 4);
    }
}
