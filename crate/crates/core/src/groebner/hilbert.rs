//! Truncated weighted Hilbert functions from standard monomials.

use super::GroebnerBasis;
use crate::algebra::Monomial;
use crate::error::{Error, Result};

/// Number of standard monomials (not divisible by any leading monomial) in each
/// weighted degree `0..=degree_bound`.
pub fn hilbert_coefficients(gb: &GroebnerBasis, weights: &[u32], degree_bound: usize) -> Result<Vec<u64>> {
    let arity = gb.ring().arity();
    if weights.len() != arity {
        return Err(Error::input(format!("{} weights for {} variables", weights.len(), arity)));
    }
    if weights.contains(&0) {
        return Err(Error::input("weights must be positive"));
    }
    let mut counts = vec![0u64; degree_bound + 1];
    let mut exps = vec![0u32; arity];
    walk(gb.leading_monomials(), weights, degree_bound, 0, 0, &mut exps, &mut counts);
    Ok(counts)
}

fn divisible(leading: &[Monomial], exps: &[u32]) -> bool {
    leading.iter().any(|m| m.exps().iter().zip(exps).all(|(a, b)| a <= b))
}

fn walk(leading: &[Monomial], weights: &[u32], bound: usize, k: usize, deg: usize, exps: &mut [u32], counts: &mut [u64]) {
    if k == exps.len() {
        counts[deg] += 1;
        return;
    }
    let w = weights[k] as usize;
    let mut e = 0;
    loop {
        let d = deg + e * w;
        if d > bound {
            break;
        }
        exps[k] = e as u32;
        if divisible(leading, exps) {
            break;
        }
        walk(leading, weights, bound, k + 1, d, exps, counts);
        e += 1;
    }
    exps[k] = 0;
}

/// Coefficients through `t^degree_bound` of `prod (1 - t^a) / prod (1 - t^b)`.
pub fn series_from_product(numerator: &[u32], denominator: &[u32], degree_bound: usize) -> Vec<i64> {
    let mut s = vec![0i64; degree_bound + 1];
    s[0] = 1;
    for &a in numerator {
        let a = a as usize;
        for d in (a..=degree_bound).rev() {
            s[d] -= s[d - a];
        }
    }
    for &b in denominator {
        let b = b as usize;
        // multiply by 1/(1 - t^b) = 1 + t^b + t^2b + ...
        for d in b..=degree_bound {
            s[d] += s[d - b];
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Field, MonomialOrder, PolyRing};
    use crate::groebner::{buchberger, Ideal};

    fn coeffs(vars: &[&str], gens: &[&str], weights: &[u32], bound: usize) -> Vec<u64> {
        let r = PolyRing::new(vars.iter().copied(), Field::Rational).unwrap();
        let i = Ideal::new(&r, gens.iter().map(|g| parse_poly(&r, g).unwrap())).unwrap();
        let gb = buchberger(&i, &MonomialOrder::GrevLex).unwrap();
        hilbert_coefficients(&gb, weights, bound).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(coeffs(&["x"], &[], &[1], 3), vec![1, 1, 1, 1]);
        assert_eq!(coeffs(&["x"], &["x^2"], &[1], 3), vec![1, 1, 0, 0]);
        assert_eq!(coeffs(&["x", "y", "z"], &["x^2 + y*z"], &[1, 1, 1], 3), vec![1, 3, 5, 7]);
    }

    #[test]
    fn product_series() {
        // (1 - t^2)/(1 - t)^3 = 1 + 3t + 5t^2 + ...
        assert_eq!(series_from_product(&[2], &[1, 1, 1], 4), vec![1, 3, 5, 7, 9]);
        // 1/(1 - t^2)
        assert_eq!(series_from_product(&[], &[2], 5), vec![1, 0, 1, 0, 1, 0]);
    }
}
