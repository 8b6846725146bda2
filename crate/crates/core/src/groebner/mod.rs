//! Gröbner bases, normal forms, Krull dimension and Hilbert functions.

mod arith;
mod dimension;
mod engine;
mod grading;
mod hilbert;

use serde::Serialize;

use crate::algebra::{Field, Monomial, MonomialOrder, Poly, RingRef};
use crate::error::{Error, Result};
use arith::{Arith, ModArith, RationalArith};
use engine::{Engine, Outcome, Stats, Terms};

pub use dimension::{dimension, dimension_budgeted, dimension_with, max_independent_set, DimensionCertificate, DimensionMethod, DimensionReport};
pub use grading::{homogenizing_weights, natural_order};
pub use hilbert::{hilbert_coefficients, series_from_product};

/// Resource limits for the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GbConfig {
    /// Maximum number of critical pairs taken from the queue.
    pub max_pairs: u64,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { max_pairs: 200_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: RingRef,
    generators: Vec<Poly>,
    derivation_level: Option<usize>,
}

impl Ideal {
    /// Zero generators are dropped; the empty list is the zero ideal.
    pub fn new(ring: &RingRef, generators: impl IntoIterator<Item = Poly>) -> Result<Ideal> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::input("generator lives in a different ring"));
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            derivation_level: None,
        })
    }

    /// Marks the ideal as built from `j!`-normalised derivatives up to `level`,
    /// which makes the engine refuse F_p with `p <= level`.
    pub fn from_derivation(mut self, level: usize) -> Ideal {
        self.derivation_level = Some(self.derivation_level.map_or(level, |l| l.max(level)));
        self
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn derivation_level(&self) -> Option<usize> {
        self.derivation_level
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Sum of two ideals in the same ring.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut out = Ideal::new(&self.ring, self.generators.iter().chain(&other.generators).cloned())?;
        out.derivation_level = match (self.derivation_level, other.derivation_level) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        Ok(out)
    }
}

/// Pair selection strategy recorded with each basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SelectionStrategy {
    /// Lowest lcm degree first, ties broken by pair indices; no sugar.
    Normal,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GbStats {
    pub pairs_considered: u64,
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ideal: Ideal,
    order: MonomialOrder,
    basis: Vec<Poly>,
    leading: Vec<Monomial>,
    strategy: SelectionStrategy,
    stats: GbStats,
}

impl GroebnerBasis {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &RingRef {
        self.ideal.ring()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Elements sorted by increasing leading monomial.
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// Always true: the engine only returns reduced bases.
    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn strategy(&self) -> SelectionStrategy {
        self.strategy
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }
}

fn check_characteristic(ideal: &Ideal) -> Result<()> {
    if let (Field::Prime(p), Some(level)) = (ideal.ring().field(), ideal.derivation_level()) {
        if (p as usize) <= level {
            return Err(Error::Characteristic {
                characteristic: p,
                level,
            });
        }
    }
    Ok(())
}

pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ideal, order, &GbConfig::default())
}

pub fn buchberger_with(ideal: &Ideal, order: &MonomialOrder, config: &GbConfig) -> Result<GroebnerBasis> {
    order.validate(ideal.ring().arity())?;
    check_characteristic(ideal)?;
    match ideal.ring().field() {
        Field::Rational => run(&RationalArith, ideal, order, config),
        Field::Prime(p) => run(&ModArith { p }, ideal, order, config),
    }
}

fn import<A: Arith>(engine: &Engine<'_, A>, f: &Poly) -> Terms<A::E> {
    let mut terms: Terms<A::E> = f
        .terms()
        .map(|(m, c)| (m.exps().to_vec().into_boxed_slice(), engine.arith.import(c)))
        .collect();
    engine.sort_terms(&mut terms);
    terms
}

fn export<A: Arith>(arith: &A, ring: &RingRef, terms: &Terms<A::E>) -> Poly {
    Poly::from_terms(ring, terms.iter().map(|(m, c)| (Monomial::new(m.to_vec()), arith.export(c))))
}

fn run<A: Arith>(arith: &A, ideal: &Ideal, order: &MonomialOrder, config: &GbConfig) -> Result<GroebnerBasis> {
    let engine = Engine { arith, order };
    let ring = ideal.ring();
    let gens: Vec<_> = ideal.generators().iter().map(|g| import(&engine, g)).collect();
    let mut stats = Stats::default();
    let outcome = engine.groebner(gens, config.max_pairs, &mut stats)?;
    let (basis, leading) = match outcome {
        Outcome::Unit => (vec![Poly::one(ring)], vec![Monomial::one(ring.arity())]),
        Outcome::Basis(elems) => {
            let leading = elems.iter().map(|e| Monomial::new(e.lm().to_vec())).collect();
            (elems.iter().map(|e| export(arith, ring, &e.terms)).collect(), leading)
        }
    };
    Ok(GroebnerBasis {
        ideal: ideal.clone(),
        order: order.clone(),
        basis,
        leading,
        strategy: SelectionStrategy::Normal,
        stats: GbStats {
            pairs_considered: stats.pairs_considered,
            pairs_reduced: stats.pairs_reduced,
            zero_reductions: stats.zero_reductions,
        },
    })
}

/// Fully reduced remainder of `f` modulo the basis; zero iff `f` lies in the ideal.
pub fn normal_form(f: &Poly, gb: &GroebnerBasis) -> Result<Poly> {
    if f.ring() != gb.ring() {
        return Err(Error::input("polynomial and basis live in different rings"));
    }
    match gb.ring().field() {
        Field::Rational => nf_with(&RationalArith, f, gb),
        Field::Prime(p) => nf_with(&ModArith { p }, f, gb),
    }
}

fn nf_with<A: Arith>(arith: &A, f: &Poly, gb: &GroebnerBasis) -> Result<Poly> {
    let engine = Engine { arith, order: &gb.order };
    let elems: Vec<_> = gb.basis.iter().map(|g| engine::element_from_sorted(import(&engine, g))).collect();
    let active: Vec<usize> = (0..elems.len()).collect();
    let r = engine.reduce(import(&engine, f), &elems, &active, true);
    Ok(export(arith, gb.ring(), &r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, PolyRing};

    fn ideal(ring: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|g| parse_poly(ring, g).unwrap())).unwrap()
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = PolyRing::new(["x", "y"], Field::Rational).unwrap();
        let gb = buchberger(&ideal(&r, &["x^2 - y"]), &MonomialOrder::Lex).unwrap();
        assert_eq!(gb.basis(), &[parse_poly(&r, "x^2 - y").unwrap()]);
    }

    #[test]
    fn linear_elimination() {
        let r = PolyRing::new(["x", "y"], Field::Rational).unwrap();
        let gb = buchberger(&ideal(&r, &["x - y", "y - 1"]), &MonomialOrder::Lex).unwrap();
        let expected = vec![parse_poly(&r, "y - 1").unwrap(), parse_poly(&r, "x - 1").unwrap()];
        assert_eq!(gb.basis(), expected.as_slice());
    }

    #[test]
    fn unit_ideal() {
        let r = PolyRing::new(["x", "y"], Field::Rational).unwrap();
        let gb = buchberger(&ideal(&r, &["x*y - 1", "x"]), &MonomialOrder::GrevLex).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.basis(), &[Poly::one(&r)]);
    }

    #[test]
    fn normal_form_examples() {
        let r = PolyRing::new(["x", "y"], Field::Rational).unwrap();
        let gb = buchberger(&ideal(&r, &["x^2 - y"]), &MonomialOrder::GrevLex).unwrap();
        assert!(normal_form(&parse_poly(&r, "x^2 - y").unwrap(), &gb).unwrap().is_zero());
        assert_eq!(normal_form(&Poly::one(&r), &gb).unwrap(), Poly::one(&r));
    }

    #[test]
    fn reduced_basis_is_interreduced() {
        let r = PolyRing::new(["x", "y", "z"], Field::Rational).unwrap();
        let gb = buchberger(&ideal(&r, &["x^2 + y*z", "x*y - z^2", "y^3 - x*z"]), &MonomialOrder::GrevLex).unwrap();
        for (k, g) in gb.basis().iter().enumerate() {
            assert!(g.leading_term(gb.order()).unwrap().1.is_one());
            for (l, lm) in gb.leading_monomials().iter().enumerate() {
                if l != k {
                    assert!(g.terms().all(|(m, _)| !lm.divides(m)));
                }
            }
        }
    }

    #[test]
    fn derivation_guard() {
        let r = PolyRing::new(["x"], Field::Prime(3)).unwrap();
        let i = ideal(&r, &["x^2"]).from_derivation(3);
        assert!(matches!(buchberger(&i, &MonomialOrder::GrevLex), Err(Error::Characteristic { .. })));
        let i = ideal(&r, &["x^2"]).from_derivation(2);
        assert!(buchberger(&i, &MonomialOrder::GrevLex).is_ok());
    }

    #[test]
    fn budget_is_reported() {
        let r = PolyRing::new(["x", "y", "z"], Field::Prime(101)).unwrap();
        let i = ideal(&r, &["x*y - z", "y*z - x", "x*z - y"]);
        let err = buchberger_with(&i, &MonomialOrder::GrevLex, &GbConfig { max_pairs: 1 }).unwrap_err();
        assert!(err.is_budget());
    }
}
