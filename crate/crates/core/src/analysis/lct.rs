//! Log canonical threshold from jet dimensions: `c = n - sup_m dim D_m / (m+1)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::{ensure, jet_dimension, SingularData};
use crate::algebra::Poly;
use crate::error::Result;
use crate::groebner::GbConfig;
use crate::jets::VarietyDatum;

#[derive(Clone, Debug, Serialize)]
pub struct LctEstimate {
    /// Ambient dimension.
    pub n: usize,
    pub max_m: usize,
    /// `(m, dim D_m)` for each computed level.
    pub dims: Vec<(usize, usize)>,
    /// `n - max dim D_m / (m+1)` as `"p/q"`; an upper bound for the threshold.
    pub estimate: String,
    /// The level attaining the maximum (smallest such `m`).
    pub argmax: usize,
    /// Set when a period was supplied and the maximum is attained at a level
    /// with `period | m+1`.
    pub exact: bool,
    /// Set when a level ran out of budget and only a prefix was used.
    pub truncated: bool,
    #[serde(skip)]
    pub value: BigRational,
}

pub fn lct_estimate(f: &Poly, max_m: usize, period: Option<usize>, config: &GbConfig) -> Result<LctEstimate> {
    ensure(!f.is_zero() && !f.is_constant(), "f must be a nonconstant polynomial")?;
    ensure(period != Some(0), "period must be positive")?;
    let datum = VarietyDatum::hypersurface(f.clone())?;
    let n = datum.ambient_dim();
    let sing = SingularData::new(&datum, config)?;
    let results: Vec<Result<usize>> = (0..=max_m)
        .into_par_iter()
        .map(|m| jet_dimension(&datum, &sing, m, config).map(|r| r.dim))
        .collect();
    let mut dims = Vec::new();
    let mut truncated = false;
    for (m, r) in results.into_iter().enumerate() {
        match r {
            Ok(d) => dims.push((m, d)),
            Err(e) if e.is_budget() && m > 0 => {
                truncated = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let ratio = |&(m, d): &(usize, usize)| BigRational::new(BigInt::from(d), BigInt::from(m + 1));
    let best = dims.iter().map(ratio).max().expect("level 0 is always computed");
    let attaining: Vec<usize> = dims.iter().filter(|p| ratio(p) == best).map(|p| p.0).collect();
    let value = BigRational::from_integer(BigInt::from(n)) - best;
    let exact = period.is_some_and(|p| attaining.iter().any(|m| (m + 1) % p == 0));
    Ok(LctEstimate {
        n,
        max_m,
        dims,
        estimate: super::rational_string(&value),
        argmax: attaining[0],
        exact,
        truncated,
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Field, PolyRing};

    fn lct(vars: &[&str], f: &str, max_m: usize) -> LctEstimate {
        let r = PolyRing::new(vars.iter().copied(), Field::Rational).unwrap();
        lct_estimate(&parse_poly(&r, f).unwrap(), max_m, None, &GbConfig::default()).unwrap()
    }

    #[test]
    fn smooth_and_double_line() {
        let e = lct(&["x", "y"], "x", 3);
        assert_eq!(e.estimate, "1");
        assert_eq!(e.dims, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        let e = lct(&["x", "y"], "x^2", 3);
        assert_eq!(e.estimate, "1/2");
        assert_eq!(e.argmax, 1);
        assert!(!e.exact);
    }

    #[test]
    fn rejects_constants() {
        let r = PolyRing::new(["x"], Field::Rational).unwrap();
        assert!(lct_estimate(&Poly::one(&r), 2, None, &GbConfig::default()).is_err());
    }
}
