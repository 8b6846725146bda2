//! Complete-intersection presentations of l.c.i. affine toric varieties.
//!
//! A Nakajima ladder starts from the free semigroup `S_0 = N^r` and at step `i`
//! adjoins `e` and `x - e` for some nonzero `x` in `S_{i-1}`. Realizing the two
//! new generators as variables `v_i`, `w_i` gives one binomial `v_i w_i - u^x`
//! per step.

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, Monomial, Poly, PolyRing};
use crate::analysis::{certify_jets, JetVerdict};
use crate::error::{Error, Result};
use crate::groebner::GbConfig;
use crate::jets::VarietyDatum;

/// JSON form: `{"r": 1, "steps": [[2]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NakajimaLadder {
    pub r: usize,
    pub steps: Vec<Vec<u32>>,
}

impl NakajimaLadder {
    /// Step `i` (0-based) is read over `u_1..u_r, v_1, w_1, ..., v_i, w_i`;
    /// shorter vectors are padded with zeros.
    pub fn validate(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::Input("r must be positive".into()));
        }
        for (i, x) in self.steps.iter().enumerate() {
            let width = self.r + 2 * i;
            if x.len() > width {
                return Err(Error::Input(format!("step {} has {} entries but only {width} generators exist", i + 1, x.len())));
            }
            if x.iter().all(|&e| e == 0) {
                return Err(Error::Input(format!("step {} is the zero vector", i + 1)));
            }
        }
        Ok(())
    }

    pub fn variable_names(&self) -> Vec<String> {
        let mut names: Vec<String> = (1..=self.r).map(|k| format!("u{k}")).collect();
        for k in 1..=self.steps.len() {
            names.push(format!("v{k}"));
            names.push(format!("w{k}"));
        }
        names
    }
}

#[derive(Clone, Debug)]
pub struct ToricPresentation {
    pub ladder: NakajimaLadder,
    pub datum: VarietyDatum,
}

pub fn ladder_to_presentation(ladder: &NakajimaLadder, field: Field) -> Result<ToricPresentation> {
    ladder.validate()?;
    let ring = PolyRing::new(ladder.variable_names(), field)?;
    let arity = ring.arity();
    let generators = ladder
        .steps
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let v = ladder.r + 2 * i;
            let mut exps = vec![0u32; arity];
            exps[..x.len()].copy_from_slice(x);
            let vw = &Poly::var(&ring, v) * &Poly::var(&ring, v + 1);
            &vw - &Poly::monomial(&ring, Monomial::new(exps), field.one())
        })
        .collect();
    let datum = VarietyDatum::new(&ring, generators, ladder.steps.len(), true)?;
    Ok(ToricPresentation {
        ladder: ladder.clone(),
        datum,
    })
}

/// Certifies `X_m` for the toric variety of the ladder through the general criterion.
pub fn toric_jet_certify(ladder: &NakajimaLadder, m: usize, field: Field, config: &GbConfig) -> Result<JetVerdict> {
    let p = ladder_to_presentation(ladder, field)?;
    certify_jets(&p.datum, m, config)
}
