//! Krull dimension from the leading monomials of a Gröbner basis.
//!
//! `dim k[x]/I` is the largest size of a variable set `S` such that no leading
//! monomial is supported inside `S`. Equivalently `n` minus the size of a
//! smallest set of variables meeting every leading-monomial support.

use serde::Serialize;

use super::grading::natural_order;
use super::{buchberger_with, GbConfig, GroebnerBasis, Ideal};
use crate::algebra::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DimensionMethod {
    Groebner,
    Counting,
    DiagonalFormula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum DimensionCertificate {
    /// A maximum-size set of variables independent modulo the initial ideal.
    IndependentSet { variables: Vec<usize>, names: Vec<String> },
    /// `(prime, count)` pairs from point enumeration.
    PointCounts { counts: Vec<(u32, u64)> },
    /// Dimension read off from a closed formula over a stratification.
    Formula { description: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub dim: usize,
    pub method: DimensionMethod,
    pub certificate: DimensionCertificate,
}

impl DimensionReport {
    /// For Gröbner reports: the certificate avoids every leading-monomial support
    /// and no variable can be added to it.
    pub fn verify_against(&self, leading: &[Monomial]) -> bool {
        let DimensionCertificate::IndependentSet { variables, .. } = &self.certificate else {
            return false;
        };
        if variables.len() != self.dim {
            return false;
        }
        let arity = leading.first().map(Monomial::arity).unwrap_or(0);
        let mut inside = vec![false; arity.max(variables.iter().map(|v| v + 1).max().unwrap_or(0))];
        for &v in variables {
            inside[v] = true;
        }
        let avoids = |inside: &[bool]| leading.iter().all(|m| !m.support().all(|i| inside[i]));
        if !avoids(&inside) {
            return false;
        }
        (0..inside.len()).filter(|&v| !inside[v]).all(|v| {
            let mut bigger = inside.clone();
            bigger[v] = true;
            !avoids(&bigger)
        })
    }
}

type Mask = u128;

/// Largest variable set avoiding every support, as sorted indices.
pub fn max_independent_set(arity: usize, leading: &[Monomial]) -> Result<Vec<usize>> {
    if arity > Mask::BITS as usize {
        return Err(Error::input(format!("dimension search supports at most {} variables", Mask::BITS)));
    }
    let mut sets: Vec<Mask> = leading
        .iter()
        .map(|m| m.support().fold(0, |acc, i| acc | (1 as Mask) << i))
        .collect();
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    // keep only inclusion-minimal supports
    let mut minimal: Vec<Mask> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|&t| t & !s == 0) {
            minimal.push(s);
        }
    }
    if minimal.contains(&0) {
        return Err(Error::EmptyVariety);
    }
    let all: Mask = if arity == Mask::BITS as usize { Mask::MAX } else { ((1 as Mask) << arity) - 1 };
    let mut best = all;
    hitting_set(&minimal, 0, &mut best);
    let independent = all & !best;
    Ok((0..arity).filter(|&i| independent >> i & 1 == 1).collect())
}

fn hitting_set(sets: &[Mask], chosen: Mask, best: &mut Mask) {
    let Some(&unhit) = sets.iter().find(|&&s| s & chosen == 0) else {
        if chosen.count_ones() < best.count_ones() {
            *best = chosen;
        }
        return;
    };
    // disjoint unhit sets each need their own variable
    let mut lower = 0;
    let mut used: Mask = 0;
    for &s in sets {
        if s & chosen == 0 && s & used == 0 {
            used |= s;
            lower += 1;
        }
    }
    if chosen.count_ones() + lower >= best.count_ones() {
        return;
    }
    let mut rest = unhit;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        hitting_set(sets, chosen | (1 as Mask) << v, best);
    }
}

pub(crate) fn report_from_basis(gb: &GroebnerBasis) -> Result<DimensionReport> {
    if gb.is_unit() {
        return Err(Error::EmptyVariety);
    }
    let ring = gb.ring();
    let variables = max_independent_set(ring.arity(), gb.leading_monomials())?;
    let names = variables.iter().map(|&i| ring.names()[i].clone()).collect();
    Ok(DimensionReport {
        dim: variables.len(),
        method: DimensionMethod::Groebner,
        certificate: DimensionCertificate::IndependentSet { variables, names },
    })
}

/// Krull dimension of `k[x]/I`, under GrevLex refined by a homogenizing
/// grading when one exists.
pub fn dimension(ideal: &Ideal) -> Result<DimensionReport> {
    dimension_budgeted(ideal, &GbConfig::default())
}

pub fn dimension_budgeted(ideal: &Ideal, config: &GbConfig) -> Result<DimensionReport> {
    dimension_with(ideal, &natural_order(ideal), config)
}

pub fn dimension_with(ideal: &Ideal, order: &MonomialOrder, config: &GbConfig) -> Result<DimensionReport> {
    if ideal.is_zero() {
        let ring = ideal.ring();
        let variables: Vec<usize> = (0..ring.arity()).collect();
        return Ok(DimensionReport {
            dim: ring.arity(),
            method: DimensionMethod::Groebner,
            certificate: DimensionCertificate::IndependentSet {
                names: ring.names().to_vec(),
                variables,
            },
        });
    }
    let gb = buchberger_with(ideal, order, config)?;
    report_from_basis(&gb)
}
