//! Brute-force point counts over prime fields.
//!
//! Variables that occur in no generator contribute a factor `q` each; the rest
//! are enumerated by backtracking, checking each generator as soon as all of its
//! variables are assigned. The search is split on the first variable's value.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Field, Poly};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// Default cap on the enumerated search space.
pub const DEFAULT_MAX_POINTS: u64 = 100_000_000;
pub const MAX_VARIABLES: usize = 16;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountReport {
    pub q: u32,
    pub variables: usize,
    /// Variables occurring in some generator.
    pub enumerated: usize,
    pub count: u128,
    /// `log_q(count)`; `None` for an empty variety.
    pub log_ratio: Option<f64>,
}

/// `(coefficient, [(position, exponent)])`.
type Term = (u64, Vec<(usize, u32)>);

struct Compiled {
    p: u64,
    gens: Vec<Vec<Term>>,
    /// Generators to check once position `k` is assigned.
    ready: Vec<Vec<usize>>,
}

impl Compiled {
    fn holds(&self, g: usize, vals: &[u64]) -> bool {
        let p = self.p;
        let mut acc = 0u64;
        for (c, vars) in &self.gens[g] {
            let mut t = *c;
            for &(pos, e) in vars {
                t = t * pow_mod(vals[pos], e, p) % p;
            }
            acc = (acc + t) % p;
        }
        acc == 0
    }

    fn count_from(&self, k: usize, vals: &mut Vec<u64>) -> u64 {
        if k == vals.len() {
            return 1;
        }
        let mut total = 0;
        for v in 0..self.p {
            vals[k] = v;
            if self.ready[k].iter().all(|&g| self.holds(g, vals)) {
                total += self.count_from(k + 1, vals);
            }
        }
        total
    }
}

fn pow_mod(mut b: u64, mut e: u32, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Enumeration order: variables of generators with fewest variables first, so
/// that generators become checkable early.
fn variable_order(gens: &[Poly]) -> Vec<usize> {
    let mut by_size: Vec<Vec<usize>> = gens.iter().map(Poly::variables).collect();
    by_size.sort_by_key(Vec::len);
    let mut order = Vec::new();
    for vars in by_size {
        for v in vars {
            if !order.contains(&v) {
                order.push(v);
            }
        }
    }
    order
}

fn compile(gens: &[Poly], order: &[usize], p: u32) -> Compiled {
    let mut pos = vec![usize::MAX; gens.first().map_or(0, |g| g.ring().arity())];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let mut ready = vec![Vec::new(); order.len()];
    let mut compiled = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        let terms = g
            .terms()
            .map(|(m, c)| {
                let value = match c {
                    crate::algebra::Coefficient::Modular { value, .. } => *value as u64,
                    _ => unreachable!("counting runs over F_p"),
                };
                let vars = m.support().map(|i| (pos[i], m.exps()[i])).collect();
                (value, vars)
            })
            .collect();
        compiled.push(terms);
        let last = g.variables().iter().map(|&v| pos[v]).max().expect("constant generators are handled earlier");
        ready[last].push(gi);
    }
    Compiled {
        p: p as u64,
        gens: compiled,
        ready,
    }
}

/// Number of common zeros of the ideal in `F_p^v`.
pub fn count_points(ideal: &Ideal, max_points: u64) -> Result<CountReport> {
    let ring = ideal.ring();
    let Field::Prime(p) = ring.field() else {
        return Err(Error::Input("point counting needs a ring over F_p".into()));
    };
    let v = ring.arity();
    if v > MAX_VARIABLES {
        return Err(Error::Input(format!("{v} variables exceed the counting limit of {MAX_VARIABLES}")));
    }
    let q = p as u128;
    let overflow = || Error::Input(format!("{p}^{v} points do not fit the counter"));
    let mut gens = Vec::new();
    for g in ideal.generators() {
        if g.is_constant() {
            // a nonzero constant: no points
            return Ok(report(p, v, 0, 0));
        }
        gens.push(g.clone());
    }
    let order = variable_order(&gens);
    let enumerated = order.len();
    let space = q.checked_pow(enumerated as u32).ok_or_else(overflow)?;
    if space > max_points as u128 {
        return Err(Error::BudgetExhausted {
            what: "point enumeration",
            limit: max_points,
            required: u64::try_from(space).ok(),
        });
    }
    let free = q.checked_pow((v - enumerated) as u32).ok_or_else(overflow)?;
    let partial: u128 = if enumerated == 0 {
        1
    } else {
        let compiled = compile(&gens, &order, p);
        (0..p as u64)
            .into_par_iter()
            .map(|first| {
                let mut vals = vec![0u64; enumerated];
                vals[0] = first;
                if compiled.ready[0].iter().all(|&g| compiled.holds(g, &vals)) {
                    compiled.count_from(1, &mut vals) as u128
                } else {
                    0
                }
            })
            .sum()
    };
    let count = partial.checked_mul(free).ok_or_else(overflow)?;
    Ok(report(p, v, enumerated, count))
}

fn report(q: u32, variables: usize, enumerated: usize, count: u128) -> CountReport {
    CountReport {
        q,
        variables,
        enumerated,
        count,
        log_ratio: (count > 0).then(|| (count as f64).ln() / (q as f64).ln()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimensionEstimate {
    /// Rounded median of the usable log-ratios.
    pub estimate: usize,
    pub per_prime: Vec<CountReport>,
    /// Primes where the reduction failed or the count is degenerate.
    pub bad_primes: Vec<u32>,
    /// Always set: point counts only suggest a dimension.
    pub heuristic: bool,
}

/// Dimension guess from point counts of the reductions modulo each prime.
pub fn dimension_estimate(ideal: &Ideal, primes: &[u32], max_points: u64) -> Result<DimensionEstimate> {
    if primes.is_empty() {
        return Err(Error::Input("at least one prime is required".into()));
    }
    let ring = ideal.ring();
    let mut per_prime = Vec::new();
    let mut bad_primes = Vec::new();
    for &p in primes {
        let field = Field::prime(p)?;
        if let Field::Prime(own) = ring.field() {
            if own != p {
                return Err(Error::Input(format!("ideal is over F_{own}, cannot reduce modulo {p}")));
            }
        }
        let target = ring.with_field(field)?;
        let reduced: Result<Vec<Poly>> = ideal.generators().iter().map(|g| g.change_field(&target)).collect();
        let Ok(reduced) = reduced else {
            bad_primes.push(p);
            continue;
        };
        let reduced = Ideal::new(&target, reduced)?;
        let report = count_points(&reduced, max_points)?;
        let everything = (p as u128).checked_pow(ring.arity() as u32) == Some(report.count);
        if report.count == 0 || (everything && !reduced.is_zero()) || (!ideal.is_zero() && reduced.is_zero()) {
            bad_primes.push(p);
        } else {
            per_prime.push(report);
        }
    }
    let mut ratios: Vec<f64> = per_prime.iter().filter_map(|r| r.log_ratio).collect();
    if ratios.is_empty() {
        return Err(Error::Inconclusive(format!("no usable prime among {primes:?}")));
    }
    ratios.sort_by(f64::total_cmp);
    let mid = ratios.len() / 2;
    let median = if ratios.len() % 2 == 1 { ratios[mid] } else { (ratios[mid - 1] + ratios[mid]) / 2.0 };
    Ok(DimensionEstimate {
        estimate: median.round() as usize,
        per_prime,
        bad_primes,
        heuristic: true,
    })
}
