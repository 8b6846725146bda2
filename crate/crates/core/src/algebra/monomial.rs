//! Monomials and monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector; its length is the arity of the owning ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; arity];
        e[index] = exp;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

/// Global monomial orders.
///
/// `JetRevLex` is the graded reverse lexicographic order on a jet ring laid out
/// level-major (variable `k` is `U_{k mod N}^{(k div N)}`), with variables ranked
/// `U_i^(j) < U_i'^(j')` when `j > j'`, or `j = j'` and `i > i'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    WeightedGrevLex(Vec<u32>),
    JetRevLex { base_arity: usize },
}

impl MonomialOrder {
    /// Checks that the order is usable on monomials of `arity` variables.
    pub fn validate(&self, arity: usize) -> Result<()> {
        match self {
            MonomialOrder::WeightedGrevLex(w) => {
                if w.len() != arity {
                    return Err(Error::input(format!("{} weights for {} variables", w.len(), arity)));
                }
                if w.contains(&0) {
                    return Err(Error::input("weights must be positive"));
                }
            }
            MonomialOrder::JetRevLex { base_arity }
                if (*base_arity == 0 || !arity.is_multiple_of(*base_arity)) => {
                    return Err(Error::input(format!(
                        "jet order with base arity {base_arity} does not fit {arity} variables"
                    )));
                }
            _ => {}
        }
        Ok(())
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        if u.arity() != v.arity() {
            return Err(Error::input(format!("arity mismatch: {} vs {}", u.arity(), v.arity())));
        }
        self.validate(u.arity())?;
        Ok(self.cmp_exps(u.exps(), v.exps()))
    }

    /// Unchecked comparison of exponent slices of equal length.
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex | MonomialOrder::JetRevLex { .. } => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| revlex_tie(a, b))
            }
            MonomialOrder::WeightedGrevLex(w) => {
                let da: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                let db: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                da.cmp(&db).then_with(|| revlex_tie(a, b))
            }
        }
    }

    /// Degree used by the pair-selection strategy.
    pub fn sort_degree(&self, exps: &[u32]) -> u64 {
        match self {
            MonomialOrder::WeightedGrevLex(w) => exps.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum(),
            _ => exps.iter().map(|&e| e as u64).sum(),
        }
    }
}

// The last differing variable decides: smaller exponent there means larger monomial.
fn revlex_tie(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_degree_first() {
        let o = MonomialOrder::GrevLex;
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 3]), &m(&[2, 0])).unwrap(), Ordering::Greater);
        // x*z < y^2 in grevlex (3 vars), but x*z > y^2 in lex
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn identity_is_equal() {
        for o in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::WeightedGrevLex(vec![1, 2, 3])] {
            assert_eq!(o.compare(&m(&[1, 4, 2]), &m(&[1, 4, 2])).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn jet_order_prefers_lower_levels() {
        let o = MonomialOrder::JetRevLex { base_arity: 1 };
        // X^(0) vs X^(1)
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 1])).unwrap(), Ordering::Greater);
        let o = MonomialOrder::JetRevLex { base_arity: 2 };
        // X_1^(1) > X_2^(1) > X_1^(2)
        assert_eq!(o.compare(&m(&[0, 0, 1, 0, 0, 0]), &m(&[0, 0, 0, 1, 0, 0])).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 0, 0, 1, 0, 0]), &m(&[0, 0, 0, 0, 1, 0])).unwrap(), Ordering::Greater);
        assert!(o.compare(&m(&[1, 0, 0]), &m(&[0, 1, 0])).is_err());
    }

    #[test]
    fn arity_and_weight_errors() {
        assert!(MonomialOrder::GrevLex.compare(&m(&[1]), &m(&[1, 0])).is_err());
        assert!(MonomialOrder::WeightedGrevLex(vec![1, 0]).compare(&m(&[1, 0]), &m(&[0, 1])).is_err());
    }

    fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            Just(MonomialOrder::JetRevLex { base_arity: 2 }),
            proptest::collection::vec(1u32..5, 4).prop_map(MonomialOrder::WeightedGrevLex),
        ]
    }

    proptest! {
        #[test]
        fn order_axioms(
            o in order_strategy(),
            a in proptest::collection::vec(0u32..4, 4),
            b in proptest::collection::vec(0u32..4, 4),
            c in proptest::collection::vec(0u32..4, 4),
        ) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            let ab = o.compare(&a, &b).unwrap();
            prop_assert_eq!(ab, o.compare(&b, &a).unwrap().reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            // multiplicative
            prop_assert_eq!(ab, o.compare(&a.mul(&c), &b.mul(&c)).unwrap());
            // transitive
            let bc = o.compare(&b, &c).unwrap();
            if ab != Ordering::Less && bc != Ordering::Less {
                prop_assert_ne!(o.compare(&a, &c).unwrap(), Ordering::Less);
            }
            // global: 1 is minimal
            prop_assert_ne!(o.compare(&Monomial::one(4), &a).unwrap(), Ordering::Greater);
        }
    }
}
