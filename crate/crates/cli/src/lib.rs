//! Session parsing and dispatch for the `jetforge` binary.

pub mod session;

use std::time::Instant;

use jetforge_core::algebra::{parse_poly, Coefficient, Field, Poly, RingRef};
use jetforge_core::analysis::{
    certify_jets, diagonal_analyzer, jet_dimension_table, lct_estimate, mult_bound_check, resolution_check, tangent_bound_check, ResolutionDatum,
    Verdict,
};
use jetforge_core::groebner::{dimension_budgeted, GbConfig, Ideal};
use jetforge_core::jets::{fiber_ideal, jet_equations, jet_equations_by_derivation, VarietyDatum};
use jetforge_core::nilcone::{
    adjoint_invariance_check, hilbert_freeness_check, independence_check, nilcone_dimension_check, LieAlgebraDatum,
};
use jetforge_core::oracle::{count_points, dimension_estimate, DEFAULT_MAX_POINTS};
use jetforge_core::toric::{ladder_to_presentation, toric_jet_certify, NakajimaLadder};
use jetforge_core::{Error, Result};
use serde::Serialize;
use serde_json::{json, Value};

pub use session::{parse_input, parse_field, Command, Diagnostic, Options, Session};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_pairs: u64,
    pub max_points: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub result: Value,
    pub timing: Timing,
    pub budget: Budget,
    pub warnings: Vec<String>,
}

/// Effective limits: session flags win over `outer`, which wins over defaults.
pub fn budget(session: &Options, outer: &Options) -> Budget {
    Budget {
        max_pairs: session.max_pairs.or(outer.max_pairs).unwrap_or(GbConfig::default().max_pairs),
        max_points: session.max_points.or(outer.max_points).unwrap_or(DEFAULT_MAX_POINTS),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn ring_of(session: &Session) -> &RingRef {
    session.ring.as_ref().expect("checked by parse_input")
}

fn ideal_of(session: &Session) -> Result<Ideal> {
    Ideal::new(ring_of(session), session.generators.iter().cloned())
}

fn datum_of(session: &Session, args: &session::DatumArgs) -> Result<VarietyDatum> {
    let codim = args.codim.unwrap_or(session.generators.len());
    VarietyDatum::new(ring_of(session), session.generators.clone(), codim, !args.not_integral)
}

fn point_of(ring: &RingRef, coords: &[String]) -> Result<Vec<Coefficient>> {
    if coords.len() != ring.arity() {
        return Err(Error::Input(format!("point has {} coordinates, expected {}", coords.len(), ring.arity())));
    }
    coords
        .iter()
        .map(|c| {
            let p = parse_poly(ring, c)?;
            if !p.is_constant() {
                return Err(Error::Input(format!("point coordinate `{c}` is not a constant")));
            }
            Ok(p.constant_term())
        })
        .collect()
}

fn single_generator(session: &Session) -> Result<Poly> {
    match session.generators.as_slice() {
        [f] => Ok(f.clone()),
        g => Err(Error::Input(format!("expected one generator, found {}", g.len()))),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{path}: {e}")))
}

fn verdict_warnings(verdict: Verdict, extra: &[String], warnings: &mut Vec<String>) {
    warnings.extend(extra.iter().cloned());
    if verdict == Verdict::Inconclusive {
        warnings.push("verdict is inconclusive".into());
    }
}

/// Runs a parsed session. Budgets come from [`budget`].
pub fn run(session: &Session, budget: &Budget) -> Result<Report> {
    let start = Instant::now();
    let config = GbConfig {
        max_pairs: budget.max_pairs,
    };
    let mut warnings = Vec::new();
    let result = match &session.invocation.command {
        Command::Jets { m, derivation } => {
            let datum = VarietyDatum::new(ring_of(session), session.generators.clone(), session.generators.len(), true)?;
            let jets = if *derivation {
                jet_equations_by_derivation(&datum, *m)?
            } else {
                jet_equations(&datum, *m)?
            };
            let equations: Vec<Value> = datum
                .generators()
                .iter()
                .zip(jets.equations())
                .map(|(f, eqs)| {
                    json!({
                        "generator": f.to_string(),
                        "F": eqs.iter().map(Poly::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json!({
                "level": m,
                "variables": jets.jet_ring().ring().names(),
                "equations": equations,
            })
        }
        Command::Dim => to_value(&dimension_budgeted(&ideal_of(session)?, &config)?),
        Command::Fiber { point, m } => {
            let ring = ring_of(session);
            let point = point_of(ring, point)?;
            let datum = VarietyDatum::new(ring, session.generators.clone(), session.generators.len(), true)?;
            let fiber = fiber_ideal(&jet_equations(&datum, *m)?, &point)?;
            json!({
                "m": m,
                "point": point.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "dimension": to_value(&dimension_budgeted(&fiber, &config)?),
            })
        }
        Command::Irreducible { m, datum } | Command::Puredim { m, datum } => {
            let v = certify_jets(&datum_of(session, datum)?, *m, &config)?;
            verdict_warnings(v.verdict, &v.warnings, &mut warnings);
            let holds = match (&session.invocation.command, v.verdict) {
                (_, Verdict::Inconclusive) => None,
                (Command::Irreducible { .. }, verdict) => Some(verdict == Verdict::Irreducible),
                (_, verdict) => Some(matches!(verdict, Verdict::Irreducible | Verdict::PureDimensionalOnly)),
            };
            json!({ "holds": holds, "verdict": to_value(&v) })
        }
        Command::Table { max_m, datum } => {
            let t = jet_dimension_table(&datum_of(session, datum)?, *max_m, &config)?;
            warnings.extend(t.warnings.iter().cloned());
            to_value(&t)
        }
        Command::Lct { max_m, period } => {
            let est = lct_estimate(&single_generator(session)?, *max_m, *period, &config)?;
            if !est.exact {
                warnings.push("lct estimate is an upper bound over the computed levels".into());
            }
            to_value(&est)
        }
        Command::Diagonal { degrees, m } => {
            let characteristic = session.ring.as_ref().map_or(0, |r| r.field().characteristic());
            to_value(&diagonal_analyzer(degrees, *m, characteristic)?)
        }
        Command::Rescheck { file } => {
            let datum: ResolutionDatum = read_json(file)?;
            to_value(&resolution_check(&datum)?)
        }
        Command::Toric { file, m, field } => {
            let ladder: NakajimaLadder = read_json(file)?;
            let field = parse_field(field).map_err(Error::Input)?;
            let presentation = ladder_to_presentation(&ladder, field)?;
            let v = toric_jet_certify(&ladder, *m, field, &config)?;
            verdict_warnings(v.verdict, &v.warnings, &mut warnings);
            json!({
                "variables": presentation.datum.ring().names(),
                "generators": presentation.datum.generators().iter().map(Poly::to_string).collect::<Vec<_>>(),
                "verdict": to_value(&v),
            })
        }
        Command::Nilcone {
            algebra,
            n,
            degree_bound,
            trials,
            prime,
            seed,
            field,
        } => {
            let datum = match LieAlgebraDatum::builtin(algebra) {
                Some(d) => d,
                None => read_json(algebra)?,
            };
            let field = parse_field(field).map_err(Error::Input)?;
            let dimension = nilcone_dimension_check(&datum, *n, field, &config)?;
            let freeness = if dimension.complete_intersection {
                Some(hilbert_freeness_check(&datum, *n, *degree_bound, field, &config)?)
            } else {
                warnings.push("not a complete intersection; freeness check skipped".into());
                None
            };
            let independence = independence_check(&datum, *n, *prime, *seed)?;
            let invariance = match adjoint_invariance_check(&datum, *n, *trials, *prime, *seed) {
                Ok(c) => Some(c),
                Err(Error::Unsupported(msg)) => {
                    warnings.push(msg);
                    None
                }
                Err(e) => return Err(e),
            };
            warnings.push(format!("invariance and independence are randomized checks over F_{prime}"));
            json!({
                "algebra": datum.name,
                "dimension": to_value(&dimension),
                "freeness": to_value(&freeness),
                "independence": to_value(&independence),
                "invariance": to_value(&invariance),
            })
        }
        Command::Count { q } => {
            let field = Field::prime(*q)?;
            let ring = ring_of(session);
            let ideal = match ring.field() {
                Field::Rational => {
                    let target = ring.with_field(field)?;
                    let gens = session.generators.iter().map(|g| g.change_field(&target)).collect::<Result<Vec<_>>>()?;
                    Ideal::new(&target, gens.into_iter().filter(|g| !g.is_zero()))?
                }
                f if f == field => ideal_of(session)?,
                f => return Err(Error::Input(format!("ring is over {f}, cannot count over F_{q}"))),
            };
            to_value(&count_points(&ideal, budget.max_points)?)
        }
        Command::Dimest { primes } => {
            let est = dimension_estimate(&ideal_of(session)?, primes, budget.max_points)?;
            warnings.push("dimension estimate from point counts is heuristic".into());
            if !est.bad_primes.is_empty() {
                warnings.push(format!("discarded primes {:?}", est.bad_primes));
            }
            to_value(&est)
        }
        Command::Multbound { point, max_m } => {
            let f = single_generator(session)?;
            let point = point_of(ring_of(session), point)?;
            let (a, rows) = mult_bound_check(&f, &point, *max_m, &config)?;
            json!({ "multiplicity": a, "rows": to_value(&rows) })
        }
        Command::Tangent { point, m, datum } => {
            let point = point_of(ring_of(session), point)?;
            to_value(&tangent_bound_check(&datum_of(session, datum)?, &point, *m, &config)?)
        }
    };
    Ok(Report {
        command: session.command_text.clone(),
        result,
        timing: Timing {
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        },
        budget: budget.clone(),
        warnings,
    })
}

/// Process exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_budget() {
        2
    } else {
        1
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Input(_) => "input",
        Error::BudgetExhausted { .. } => "budget",
        Error::EmptyVariety => "empty-variety",
        Error::Characteristic { .. } => "characteristic",
        Error::Unsupported(_) => "unsupported",
        Error::Inconclusive(_) => "inconclusive",
    }
}
