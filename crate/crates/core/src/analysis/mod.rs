//! Decision procedures for jet schemes of l.c.i. varieties.
//!
//! For an l.c.i. variety `X` of dimension `n`, every component of `X_m` has
//! dimension at least `n(m+1)`, and `X_m` is the union of the irreducible
//! `n(m+1)`-dimensional closure of `pi_m^{-1}(X_reg)` with `pi_m^{-1}(X_sing)`.
//! Hence `X_m` is irreducible iff `dim pi_m^{-1}(X_sing) < n(m+1)` and pure
//! dimensional iff `dim X_m <= n(m+1)`.

mod bounds;
mod diagonal;
mod lct;
mod resolution;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{MonomialOrder, Poly};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, dimension_budgeted, hilbert_coefficients, normal_form, DimensionCertificate, DimensionMethod, DimensionReport, GbConfig, Ideal};
use crate::jets::{fiber_ideal, jet_equations, singular_locus_ideal, VarietyDatum};

pub use bounds::{multiplicity_at, mult_bound_check, tangent_bound_check, MultBoundRow, TangentBound};
pub use diagonal::{diagonal_analyzer, DiagonalReport, DiagonalVerdict, LevelStrata, Stratum};
pub use lct::{lct_estimate, LctEstimate};
pub use resolution::{resolution_check, Divisor, ResolutionDatum, ResolutionVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Irreducible,
    PureDimensionalOnly,
    NotPureDimensional,
    Inconclusive,
}

/// How the singular locus was handled when fibering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingularLocusKind {
    /// `X` is smooth; `pi_m^{-1}(X_sing)` is empty.
    Empty,
    /// `X_sing = {0}` set-theoretically; the fiber over the origin is used.
    Origin,
    /// Jet ideal plus the singular-locus equations in the level-0 variables.
    General,
}

#[derive(Clone, Debug, Serialize)]
pub struct JetEvidence {
    pub total: DimensionReport,
    pub sing_fiber: Option<DimensionReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct JetVerdict {
    pub level: usize,
    /// `n = dim X`.
    pub n: usize,
    /// `n(m+1)`.
    pub expected: usize,
    pub dim_total: usize,
    /// `None` when `X` is smooth.
    pub dim_sing_fiber: Option<usize>,
    pub verdict: Verdict,
    pub singular_locus: SingularLocusKind,
    pub evidence: JetEvidence,
    pub warnings: Vec<String>,
}

/// Singular locus of a datum, classified once and reused across levels.
#[derive(Clone, Debug)]
pub struct SingularData {
    kind: SingularLocusKind,
    ideal: Ideal,
    heuristic: bool,
}

impl SingularData {
    pub fn new(datum: &VarietyDatum, config: &GbConfig) -> Result<SingularData> {
        let locus = singular_locus_ideal(datum)?;
        let gb = buchberger_with(&locus.ideal, &MonomialOrder::GrevLex, config)?;
        let kind = if gb.is_unit() {
            SingularLocusKind::Empty
        } else if supported_at_origin(&gb)? {
            SingularLocusKind::Origin
        } else {
            SingularLocusKind::General
        };
        Ok(SingularData {
            kind,
            ideal: locus.ideal,
            heuristic: locus.heuristic,
        })
    }

    pub fn kind(&self) -> SingularLocusKind {
        self.kind
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }
}

/// Whether `V(I) = {0}`: `I` is zero-dimensional of length `delta` and every
/// `x_i^delta` lies in `I`.
fn supported_at_origin(gb: &crate::groebner::GroebnerBasis) -> Result<bool> {
    let ring = gb.ring();
    let n = ring.arity();
    let mut pure = vec![None; n];
    for m in gb.leading_monomials() {
        let support: Vec<usize> = m.support().collect();
        if let [i] = support[..] {
            let e = m.exps()[i];
            pure[i] = Some(pure[i].map_or(e, |p: u32| p.min(e)));
        }
    }
    if pure.iter().any(Option::is_none) {
        return Ok(false);
    }
    let bound: u32 = pure.iter().map(|e| e.unwrap() - 1).sum();
    let delta: u64 = hilbert_coefficients(gb, &vec![1; n], bound as usize)?.iter().sum();
    for i in 0..n {
        let power = Poly::var(ring, i).pow(delta as u32);
        if !normal_form(&power, gb)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim pi_m^{-1}(X_sing)`, or `None` when `X` is smooth.
pub fn sing_fiber_dimension(datum: &VarietyDatum, sing: &SingularData, m: usize, config: &GbConfig) -> Result<Option<DimensionReport>> {
    match sing.kind {
        SingularLocusKind::Empty => Ok(None),
        SingularLocusKind::Origin => {
            let jets = jet_equations(datum, m)?;
            let zero = vec![datum.ring().field().zero(); datum.ambient_dim()];
            let ideal = fiber_ideal(&jets, &zero)?;
            dimension_budgeted(&ideal, config).map(Some)
        }
        SingularLocusKind::General => {
            let jets = jet_equations(datum, m)?;
            let embedded = sing.ideal.generators().iter().map(|g| jets.jet_ring().embed_base(g));
            let ideal = Ideal::new(jets.jet_ring().ring(), jets.ideal()?.generators().iter().cloned().chain(embedded))?;
            dimension_budgeted(&ideal, config).map(Some)
        }
    }
}

/// `dim X_m` from a Gröbner basis of the full jet ideal.
pub fn jet_dimension_direct(datum: &VarietyDatum, m: usize, config: &GbConfig) -> Result<DimensionReport> {
    dimension_budgeted(&jet_equations(datum, m)?.ideal()?, config)
}

/// `dim X_m`. For a complete intersection `pi_m^{-1}(X_reg)` is smooth of
/// dimension `n(m+1)`, so `dim X_m = max(n(m+1), dim pi_m^{-1}(X_sing))` and only
/// the singular fiber needs a Gröbner basis; otherwise the full jet ideal is used.
pub fn jet_dimension(datum: &VarietyDatum, sing: &SingularData, m: usize, config: &GbConfig) -> Result<DimensionReport> {
    if !datum.is_lci() || sing.heuristic {
        return jet_dimension_direct(datum, m, config);
    }
    let expected = datum.dim() * (m + 1);
    let fiber = sing_fiber_dimension(datum, sing, m, config)?;
    Ok(decomposition_report(expected, fiber.as_ref()))
}

fn decomposition_report(expected: usize, fiber: Option<&DimensionReport>) -> DimensionReport {
    let description = match fiber {
        None => format!("X smooth: n(m+1) = {expected}"),
        Some(f) => {
            let witness = match &f.certificate {
                DimensionCertificate::IndependentSet { names, .. } => format!(" (independent: {})", names.join(", ")),
                _ => String::new(),
            };
            format!("max(n(m+1), dim pi_m^-1(X_sing)) = max({expected}, {}{witness})", f.dim)
        }
    };
    DimensionReport {
        dim: fiber.map_or(expected, |f| f.dim.max(expected)),
        method: DimensionMethod::Groebner,
        certificate: DimensionCertificate::Formula { description },
    }
}

fn decide(datum: &VarietyDatum, expected: usize, dim_total: usize, sing: Option<usize>, heuristic: bool, warnings: &mut Vec<String>) -> Verdict {
    if !datum.is_integral() {
        warnings.push("variety not asserted integral; the criterion does not apply".into());
        return Verdict::Inconclusive;
    }
    if dim_total > expected {
        return Verdict::NotPureDimensional;
    }
    if !datum.is_lci() || heuristic {
        warnings.push(format!(
            "presentation has {} generators for codimension {}; not a complete intersection",
            datum.generators().len(),
            datum.codim()
        ));
        return Verdict::Inconclusive;
    }
    match sing {
        Some(d) if d >= expected => Verdict::PureDimensionalOnly,
        _ => Verdict::Irreducible,
    }
}

/// Applies the irreducibility criterion to `X_m`.
pub fn certify_jets(datum: &VarietyDatum, m: usize, config: &GbConfig) -> Result<JetVerdict> {
    datum.check_dimension()?;
    let sing = SingularData::new(datum, config)?;
    certify_with(datum, &sing, m, config)
}

pub fn certify_with(datum: &VarietyDatum, sing: &SingularData, m: usize, config: &GbConfig) -> Result<JetVerdict> {
    let n = datum.dim();
    let expected = n * (m + 1);
    let mut warnings = Vec::new();
    let sing_report = sing_fiber_dimension(datum, sing, m, config)?;
    let dim_sing = sing_report.as_ref().map(|r| r.dim);
    let total = if datum.is_lci() && !sing.heuristic {
        decomposition_report(expected, sing_report.as_ref())
    } else {
        jet_dimension_direct(datum, m, config)?
    };
    let verdict = decide(datum, expected, total.dim, dim_sing, sing.heuristic, &mut warnings);
    Ok(JetVerdict {
        level: m,
        n,
        expected,
        dim_total: total.dim,
        dim_sing_fiber: dim_sing,
        verdict,
        singular_locus: sing.kind,
        evidence: JetEvidence {
            total,
            sing_fiber: sing_report,
        },
        warnings,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub m: usize,
    pub dim_total: usize,
    pub dim_sing_fiber: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionTable {
    pub n: usize,
    pub rows: Vec<TableRow>,
    /// Set when a level ran out of budget; rows stop before it.
    pub truncated_at: Option<usize>,
    /// `dim(m+1) >= dim(m) + n` on consecutive singular-fiber rows; `None` when not applicable.
    pub monotone: Option<bool>,
    pub warnings: Vec<String>,
}

/// Jet dimensions for `m = 0..=max_m`, levels computed in parallel.
pub fn jet_dimension_table(datum: &VarietyDatum, max_m: usize, config: &GbConfig) -> Result<DimensionTable> {
    datum.check_dimension()?;
    let sing = SingularData::new(datum, config)?;
    let n = datum.dim();
    let results: Vec<Result<TableRow>> = (0..=max_m)
        .into_par_iter()
        .map(|m| {
            let fiber = sing_fiber_dimension(datum, &sing, m, config)?;
            let total = if datum.is_lci() && !sing.heuristic {
                decomposition_report(datum.dim() * (m + 1), fiber.as_ref()).dim
            } else {
                jet_dimension_direct(datum, m, config)?.dim
            };
            let fiber = fiber.map(|r| r.dim);
            Ok(TableRow {
                m,
                dim_total: total,
                dim_sing_fiber: fiber,
            })
        })
        .collect();
    let mut rows = Vec::new();
    let mut truncated_at = None;
    let mut warnings = Vec::new();
    for (m, r) in results.into_iter().enumerate() {
        match r {
            Ok(row) => rows.push(row),
            Err(e) if e.is_budget() => {
                truncated_at = Some(m);
                warnings.push(format!("table truncated at m = {m}: {e}"));
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let monotone = if datum.is_lci() && sing.kind != SingularLocusKind::Empty {
        Some(rows.windows(2).all(|w| match (w[0].dim_sing_fiber, w[1].dim_sing_fiber) {
            (Some(a), Some(b)) => b >= a + n,
            _ => true,
        }))
    } else {
        None
    };
    if monotone == Some(false) {
        warnings.push("fiber dimensions violate dim(m+1) >= dim(m) + n".into());
    }
    if sing.heuristic {
        warnings.push("not a complete intersection: singular-locus minors are heuristic".into());
    }
    Ok(DimensionTable {
        n,
        rows,
        truncated_at,
        monotone,
        warnings,
    })
}

pub(crate) fn ensure(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Input(msg.into()))
    }
}

/// `p/q` in lowest terms, or just `p` for integers.
pub(crate) fn rational_string(q: &num_rational::BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
