//! Dimension bounds for fibers of `pi_m` over a single point.

use serde::Serialize;

use super::ensure;
use crate::algebra::{Coefficient, Poly};
use crate::error::{Error, Result};
use crate::groebner::{dimension_budgeted, GbConfig};
use crate::jets::{fiber_ideal, jet_equations, matrix_rank, VarietyDatum};

fn fiber_dimension(datum: &VarietyDatum, point: &[Coefficient], m: usize, config: &GbConfig) -> Result<usize> {
    let jets = jet_equations(datum, m)?;
    let ideal = fiber_ideal(&jets, point)?;
    Ok(dimension_budgeted(&ideal, config)?.dim)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentBound {
    /// `dim pi_{2m}^{-1}(x)`.
    pub lhs: usize,
    /// `dim_x X + m dim T_x X`.
    pub rhs: usize,
    pub tangent_dim: usize,
    pub holds: bool,
}

/// Checks `dim pi_{2m}^{-1}(x) >= dim_x X + m dim T_x X`, taking `dim_x X`
/// to be the asserted dimension of `X`.
pub fn tangent_bound_check(datum: &VarietyDatum, point: &[Coefficient], m: usize, config: &GbConfig) -> Result<TangentBound> {
    let n_ambient = datum.ambient_dim();
    ensure(point.len() == n_ambient, format!("point has {} coordinates, expected {n_ambient}", point.len()))?;
    let mut rows = Vec::new();
    for f in datum.generators() {
        ensure(f.evaluate(point)?.is_zero(), "point does not lie on the variety")?;
        rows.push((0..n_ambient).map(|i| f.partial_derivative(i).evaluate(point)).collect::<Result<Vec<_>>>()?);
    }
    let tangent_dim = n_ambient - matrix_rank(rows);
    let lhs = fiber_dimension(datum, point, 2 * m, config)?;
    let rhs = datum.dim() + m * tangent_dim;
    Ok(TangentBound {
        lhs,
        rhs,
        tangent_dim,
        holds: lhs >= rhs,
    })
}

/// Order of vanishing of `f` at `point`: the lowest degree in its Taylor
/// expansion there.
pub fn multiplicity_at(f: &Poly, point: &[Coefficient]) -> Result<u32> {
    let ring = f.ring();
    ensure(point.len() == ring.arity(), format!("point has {} coordinates, expected {}", point.len(), ring.arity()))?;
    ensure(point.iter().all(|c| ring.field().contains(c)), format!("point coordinates must lie in {}", ring.field()))?;
    let shifted: Vec<Poly> = (0..ring.arity())
        .map(|i| &Poly::var(ring, i) + &Poly::constant(ring, point[i].clone()))
        .collect();
    f.map_vars(ring, &shifted)
        .lowest_degree()
        .ok_or_else(|| Error::Input("f vanishes identically".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultBoundRow {
    pub m: usize,
    pub fiber_dim: usize,
    /// `N m - floor(m / a)`.
    pub bound: usize,
    pub holds: bool,
}

/// Checks `dim (pi_m^D)^{-1}(y) <= N m - floor(m/a)` for `m = 1..=max_m`, where
/// `a` is the multiplicity of `f` at `y`.
pub fn mult_bound_check(f: &Poly, point: &[Coefficient], max_m: usize, config: &GbConfig) -> Result<(u32, Vec<MultBoundRow>)> {
    let a = multiplicity_at(f, point)?;
    ensure(a >= 1, "point does not lie on the divisor")?;
    let datum = VarietyDatum::hypersurface(f.clone())?;
    let n = datum.ambient_dim();
    let rows = (1..=max_m)
        .map(|m| {
            let fiber_dim = fiber_dimension(&datum, point, m, config)?;
            let bound = n * m - m / a as usize;
            Ok(MultBoundRow {
                m,
                fiber_dim,
                bound,
                holds: fiber_dim <= bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((a, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Field, PolyRing};

    #[test]
    fn multiplicities() {
        let r = PolyRing::new(["x", "y"], Field::Rational).unwrap();
        let q = Field::Rational;
        let f = parse_poly(&r, "x^2 - y^3").unwrap();
        assert_eq!(multiplicity_at(&f, &[q.zero(), q.zero()]).unwrap(), 2);
        assert_eq!(multiplicity_at(&f, &[q.one(), q.one()]).unwrap(), 1);
        assert_eq!(multiplicity_at(&f, &[q.one(), q.zero()]).unwrap(), 0);
    }

    #[test]
    fn cusp_tangent_bound() {
        let r = PolyRing::new(["x", "y"], Field::Rational).unwrap();
        let d = VarietyDatum::hypersurface(parse_poly(&r, "x^2 - y^3").unwrap()).unwrap();
        let zero = vec![Field::Rational.zero(); 2];
        let t = tangent_bound_check(&d, &zero, 1, &GbConfig::default()).unwrap();
        assert_eq!((t.lhs, t.rhs, t.tangent_dim, t.holds), (3, 3, 2, true));
        let one = vec![Field::Rational.one(); 2];
        let t = tangent_bound_check(&d, &one, 1, &GbConfig::default()).unwrap();
        assert_eq!((t.lhs, t.rhs), (2, 2));
    }

    #[test]
    fn line_mult_bound() {
        let r = PolyRing::new(["x"], Field::Rational).unwrap();
        let (a, rows) = mult_bound_check(&parse_poly(&r, "x").unwrap(), &[Field::Rational.zero()], 3, &GbConfig::default()).unwrap();
        assert_eq!(a, 1);
        assert!(rows.iter().all(|row| row.fiber_dim == 0 && row.bound == 0 && row.holds));
    }
}
