//! Positive gradings under which an ideal's generators are homogeneous.
//!
//! Homogeneous input keeps Buchberger's algorithm degree-by-degree, which on
//! jet ideals of quasi-homogeneous singularities is the difference between
//! milliseconds and hours.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Ideal;
use crate::algebra::MonomialOrder;

const SEARCH: i64 = 6;
const MAX_WEIGHT: u32 = 1 << 16;

/// Positive integer weights making every generator homogeneous, if the
/// heuristic search over the solution space finds one.
pub fn homogenizing_weights(ideal: &Ideal) -> Option<Vec<u32>> {
    let n = ideal.ring().arity();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for g in ideal.generators() {
        let mut terms = g.terms().map(|(m, _)| m);
        let Some(first) = terms.next() else { continue };
        for m in terms {
            rows.push(
                m.exps()
                    .iter()
                    .zip(first.exps())
                    .map(|(&a, &b)| BigRational::from_integer(BigInt::from(a as i64 - b as i64)))
                    .collect(),
            );
        }
    }
    let (pivots, rref) = row_reduce(rows, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return None;
    }
    // weights are determined by the free coordinates; try small positive values
    let mut params = vec![1i64; free.len()];
    loop {
        if let Some(w) = solution(&pivots, &rref, &free, &params, n) {
            return Some(w);
        }
        let mut k = 0;
        while k < params.len() && params[k] == SEARCH {
            params[k] = 1;
            k += 1;
        }
        if k == params.len() || free.len() > 4 {
            return None;
        }
        params[k] += 1;
    }
}

fn solution(pivots: &[usize], rref: &[Vec<BigRational>], free: &[usize], params: &[i64], n: usize) -> Option<Vec<u32>> {
    let mut w = vec![BigRational::zero(); n];
    for (&f, &p) in free.iter().zip(params) {
        w[f] = BigRational::from_integer(BigInt::from(p));
    }
    for (row, &p) in rref.iter().zip(pivots) {
        let v: BigRational = free.iter().map(|&f| -&row[f] * &w[f]).sum();
        w[p] = v;
    }
    if w.iter().any(|x| !x.is_positive()) {
        return None;
    }
    let lcm = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = w.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let out: Option<Vec<u32>> = ints.iter().map(|x| (x / &g).to_u32().filter(|&v| v <= MAX_WEIGHT)).collect();
    out
}

/// Reduced row echelon form; returns pivot columns and the nonzero rows.
fn row_reduce(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> (Vec<usize>, Vec<Vec<BigRational>>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &factor * p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (pivots, rows)
}

/// GrevLex refined by a homogenizing grading when one is found.
pub fn natural_order(ideal: &Ideal) -> MonomialOrder {
    match homogenizing_weights(ideal) {
        Some(w) if w.iter().any(|&x| x != 1) => MonomialOrder::WeightedGrevLex(w),
        _ => MonomialOrder::GrevLex,
    }
}
