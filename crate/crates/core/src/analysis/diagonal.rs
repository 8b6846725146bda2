//! Diagonal hypersurfaces `x_1^{d_1} + ... + x_n^{d_n}`.
//!
//! The fiber over the origin is stratified by the orders `a_i = ord x_i(t)`,
//! `1 <= a_i <= m+1` (order `m+1` meaning the truncation vanishes). With
//! `r = min a_i d_i`, a stratum with `r >= m+1` is an open subset of an affine
//! space of dimension `sum (m+1-a_i)`; otherwise its dimension is at most
//! `r - a_i + sum_{j != i} (m+1-a_j)` for an index `i` attaining `r` whose
//! degree is prime to the characteristic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::ensure;
use crate::error::Result;

const MAX_STRATA: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiagonalVerdict {
    AllIrreducible,
    FailsAtSomeLevel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub orders: Vec<usize>,
    /// `min a_i d_i`.
    pub r: usize,
    /// Every `x_i(t)` is unconstrained beyond its order.
    pub free: bool,
    /// Exact dimension when `free`, an upper bound otherwise.
    pub bound: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelStrata {
    pub m: usize,
    /// `(n-1)(m+1)`.
    pub expected: usize,
    /// Largest stratum bound: an upper bound for `dim pi_m^{-1}(0)`.
    pub max_bound: usize,
    /// Largest dimension of a free stratum: a lower bound for `dim pi_m^{-1}(0)`.
    pub max_free: usize,
    pub strata: Vec<Stratum>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagonalReport {
    pub degrees: Vec<u32>,
    /// `sum 1/d_i` as `"p/q"`.
    pub reciprocal_sum: String,
    pub verdict: DiagonalVerdict,
    pub levels: LevelStrata,
}

/// Verdict from `sum 1/d_i > 1` plus the stratum table at level `m`.
/// `characteristic` is 0 for Q.
pub fn diagonal_analyzer(degrees: &[u32], m: usize, characteristic: u32) -> Result<DiagonalReport> {
    let n = degrees.len();
    ensure(n >= 3, format!("need at least 3 variables, got {n}"))?;
    ensure(degrees.iter().all(|&d| d >= 1), "degrees must be positive")?;
    if characteristic != 0 {
        let divisible = degrees.iter().filter(|&&d| d % characteristic == 0).count();
        ensure(divisible <= 1, format!("{divisible} degrees divisible by the characteristic {characteristic}"))?;
    }
    let strata_count = (m as u64 + 1).checked_pow(n as u32).unwrap_or(u64::MAX);
    ensure(strata_count <= MAX_STRATA, format!("{strata_count} strata exceed the limit {MAX_STRATA}"))?;

    let sum = degrees
        .iter()
        .fold(BigRational::zero(), |acc, &d| acc + BigRational::new(BigInt::one(), BigInt::from(d)));
    let verdict = if sum > BigRational::one() {
        DiagonalVerdict::AllIrreducible
    } else {
        DiagonalVerdict::FailsAtSomeLevel
    };
    Ok(DiagonalReport {
        degrees: degrees.to_vec(),
        reciprocal_sum: super::rational_string(&sum),
        verdict,
        levels: strata(degrees, m, characteristic),
    })
}

fn strata(degrees: &[u32], m: usize, characteristic: u32) -> LevelStrata {
    let n = degrees.len();
    let top = m + 1;
    let mut orders = vec![1usize; n];
    let mut out = Vec::new();
    loop {
        out.push(stratum(degrees, &orders, top, characteristic));
        // odometer over {1..=m+1}^n
        let mut k = 0;
        while k < n && orders[k] == top {
            orders[k] = 1;
            k += 1;
        }
        if k == n {
            break;
        }
        orders[k] += 1;
    }
    LevelStrata {
        m,
        expected: (n - 1) * top,
        max_bound: out.iter().map(|s| s.bound).max().unwrap_or(0),
        max_free: out.iter().filter(|s| s.free).map(|s| s.bound).max().unwrap_or(0),
        strata: out,
    }
}

fn stratum(degrees: &[u32], orders: &[usize], top: usize, characteristic: u32) -> Stratum {
    let products: Vec<usize> = orders.iter().zip(degrees).map(|(&a, &d)| a * d as usize).collect();
    let r = *products.iter().min().unwrap();
    let full: usize = orders.iter().map(|&a| top - a).sum();
    if r >= top {
        return Stratum {
            orders: orders.to_vec(),
            r,
            free: true,
            bound: full,
        };
    }
    // r - a_i + sum_{j != i} (m+1-a_j) = r + full - (m+1) for any admissible i
    let admissible = (0..orders.len()).any(|i| products[i] == r && (characteristic == 0 || !degrees[i].is_multiple_of(characteristic)));
    let bound = if admissible { r + full - top } else { full };
    Stratum {
        orders: orders.to_vec(),
        r,
        free: false,
        bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let v = |d: &[u32]| diagonal_analyzer(d, 2, 0).unwrap().verdict;
        assert_eq!(v(&[2, 3, 5]), DiagonalVerdict::AllIrreducible);
        assert_eq!(v(&[2, 3, 7]), DiagonalVerdict::FailsAtSomeLevel);
        assert_eq!(v(&[3, 3, 3]), DiagonalVerdict::FailsAtSomeLevel);
        assert_eq!(diagonal_analyzer(&[2, 3, 5], 1, 0).unwrap().reciprocal_sum, "31/30");
        assert!(diagonal_analyzer(&[2, 3], 1, 0).is_err());
        assert!(diagonal_analyzer(&[2, 2, 3], 1, 2).is_err());
    }

    #[test]
    fn bounds_for_e8() {
        // x^2 + y^3 + z^5, fiber over 0 has dims 3, 5, 7 at m = 1, 2, 3
        for (m, dim) in [(1, 3), (2, 5), (3, 7)] {
            let s = diagonal_analyzer(&[2, 3, 5], m, 0).unwrap().levels;
            assert!(s.max_free <= dim && dim <= s.max_bound, "m={m}: {} {}", s.max_free, s.max_bound);
            assert!(s.max_bound < s.expected);
        }
    }

    #[test]
    fn fermat_cubic_is_free_at_level_two() {
        let s = diagonal_analyzer(&[3, 3, 3], 2, 0).unwrap().levels;
        assert_eq!(s.max_free, 6);
        assert_eq!(s.max_bound, 6);
        assert_eq!(s.expected, 6);
    }
}
