//! Numerical conditions on a log resolution of an l.c.i. variety.
//!
//! For `X ⊂ A^N` of codimension `r` and a log resolution of `(A^N, X)` with
//! `X` pulling back to `sum a_i E_i` and relative canonical divisor
//! `sum b_i E_i`, where `E_1` is the strict transform (`a_1 = 1`, `b_1 = r-1`):
//! `X` has canonical singularities iff `b_i >= r a_i` for all `i >= 2`, and log
//! canonical ones iff `b_i >= r a_i - 1` for all `i`.

use serde::{Deserialize, Serialize};

use super::ensure;
use crate::error::Result;

/// `(a_i, b_i)`: multiplicity of `X` along `E_i` and discrepancy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divisor(pub u64, pub u64);

/// JSON form: `{"r": 1, "divisors": [[1, 0], [2, 1], [3, 2], [6, 4]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionDatum {
    pub r: u64,
    pub divisors: Vec<Divisor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionVerdict {
    pub canonical_condition: bool,
    pub log_canonical_condition: bool,
    /// Divisors (1-based, with their `(a, b)`) where `b_i < r a_i`, `i >= 2`.
    pub canonical_failures: Vec<(usize, Divisor)>,
    /// Divisors where `b_i < r a_i - 1`.
    pub log_canonical_failures: Vec<(usize, Divisor)>,
    pub predicted: String,
}

impl ResolutionDatum {
    pub fn validate(&self) -> Result<()> {
        ensure(self.r >= 1, "codimension r must be positive")?;
        let Some(&Divisor(a1, b1)) = self.divisors.first() else {
            return Err(crate::Error::Input("at least the strict transform E_1 is required".into()));
        };
        ensure(a1 == 1 && b1 == self.r - 1, format!("E_1 must be (1, {}), got ({a1}, {b1})", self.r - 1))?;
        ensure(self.divisors.iter().all(|d| d.0 >= 1), "multiplicities a_i must be positive")
    }
}

pub fn resolution_check(datum: &ResolutionDatum) -> Result<ResolutionVerdict> {
    datum.validate()?;
    let r = datum.r;
    let indexed = || datum.divisors.iter().copied().enumerate().map(|(i, d)| (i + 1, d));
    let canonical_failures: Vec<_> = indexed().skip(1).filter(|(_, Divisor(a, b))| *b < r * a).collect();
    let log_canonical_failures: Vec<_> = indexed().filter(|(_, Divisor(a, b))| b + 1 < r * a).collect();
    let canonical = canonical_failures.is_empty();
    let log_canonical = log_canonical_failures.is_empty();
    let predicted = if canonical {
        "canonical: X_m is irreducible of dimension (m+1) dim X for every m >= 1".to_string()
    } else if log_canonical {
        "log canonical but not canonical: dim X_m = (m+1) dim X for every m, with some X_m reducible".to_string()
    } else {
        let (i, Divisor(a, b)) = log_canonical_failures[0];
        format!("not log canonical (E_{i} = ({a}, {b})): dim X_m > (m+1) dim X for some m")
    };
    Ok(ResolutionVerdict {
        canonical_condition: canonical,
        log_canonical_condition: log_canonical,
        canonical_failures,
        log_canonical_failures,
        predicted,
    })
}
