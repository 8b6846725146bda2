//! Buchberger's algorithm with the Gebauer–Möller pair update.
//!
//! Polynomials are kept as term vectors sorted in descending order for the
//! active monomial order; basis elements are monic.

use std::cmp::Ordering;

use super::arith::Arith;
use crate::algebra::MonomialOrder;
use crate::error::{Error, Result};

pub(crate) type Exps = Box<[u32]>;
pub(crate) type Terms<E> = Vec<(Exps, E)>;

#[inline]
fn mask_of(e: &[u32]) -> u64 {
    let mut m = 0u64;
    for (i, &x) in e.iter().enumerate() {
        if x > 0 {
            m |= 1 << (i % 64);
        }
    }
    m
}

#[inline]
fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[inline]
fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

#[inline]
fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

#[derive(Clone, Debug)]
pub(crate) struct Element<E> {
    pub terms: Terms<E>,
    mask: u64,
}

impl<E> Element<E> {
    pub fn lm(&self) -> &[u32] {
        &self.terms[0].0
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Stats {
    pub pairs_considered: u64,
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exps,
    degree: u64,
}

pub(crate) struct Engine<'a, A: Arith> {
    pub arith: &'a A,
    pub order: &'a MonomialOrder,
}

pub(crate) enum Outcome<E> {
    Basis(Vec<Element<E>>),
    /// The ideal contains a nonzero constant.
    Unit,
}

impl<'a, A: Arith> Engine<'a, A> {
    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.order.cmp_exps(a, b)
    }

    pub fn sort_terms(&self, terms: &mut Terms<A::E>) {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
    }

    fn make_monic(&self, mut terms: Terms<A::E>) -> Terms<A::E> {
        let lc = &terms[0].1;
        if !self.arith.is_one(lc) {
            let inv = self.arith.inv(lc);
            for t in terms.iter_mut() {
                t.1 = self.arith.mul(&t.1, &inv);
            }
        }
        terms
    }

    fn element(&self, terms: Terms<A::E>) -> Element<A::E> {
        let terms = self.make_monic(terms);
        let mask = mask_of(&terms[0].0);
        Element { terms, mask }
    }

    /// `a[start..] - c * x^shift * g[1..]`, both descending.
    fn sub_shifted(&self, a: &[(Exps, A::E)], g: &[(Exps, A::E)], c: &A::E, shift: &[u32]) -> Terms<A::E> {
        let mut out = Vec::with_capacity(a.len() + g.len());
        let mut i = 0;
        let mut j = 0;
        let mut pending: Option<(Exps, A::E)> = None;
        loop {
            if pending.is_none() && j < g.len() {
                let m: Exps = g[j].0.iter().zip(shift).map(|(x, y)| x + y).collect();
                pending = Some((m, self.arith.mul(c, &g[j].1)));
                j += 1;
            }
            match (&pending, a.get(i)) {
                (None, None) => break,
                (None, Some(_)) => {
                    out.extend_from_slice(&a[i..]);
                    break;
                }
                (Some(_), None) => {
                    let (m, v) = pending.take().unwrap();
                    out.push((m, self.arith.neg(&v)));
                }
                (Some((m, v)), Some((am, av))) => match self.cmp(am, m) {
                    Ordering::Greater => {
                        out.push((am.clone(), av.clone()));
                        i += 1;
                    }
                    Ordering::Less => {
                        let (m, v) = pending.take().unwrap();
                        out.push((m, self.arith.neg(&v)));
                    }
                    Ordering::Equal => {
                        let s = self.arith.sub(av, v);
                        if !self.arith.is_zero(&s) {
                            out.push((am.clone(), s));
                        }
                        pending = None;
                        i += 1;
                    }
                },
            }
        }
        out
    }

    fn find_reducer(&self, basis: &[Element<A::E>], active: &[usize], m: &[u32], mask: u64) -> Option<usize> {
        active
            .iter()
            .copied()
            .find(|&k| basis[k].mask & !mask == 0 && divides(basis[k].lm(), m))
    }

    /// Reduces `p` by the active elements. With `full`, every term is reduced;
    /// otherwise only the leading term is reduced.
    pub fn reduce(&self, mut p: Terms<A::E>, basis: &[Element<A::E>], active: &[usize], full: bool) -> Terms<A::E> {
        let mut rem: Terms<A::E> = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let (m, c) = &p[start];
            let mask = mask_of(m);
            match self.find_reducer(basis, active, m, mask) {
                Some(k) => {
                    let g = &basis[k];
                    let shift: Vec<u32> = m.iter().zip(g.lm()).map(|(x, y)| x - y).collect();
                    let c = c.clone();
                    p = self.sub_shifted(&p[start + 1..], &g.terms[1..], &c, &shift);
                    start = 0;
                }
                None => {
                    if !full {
                        rem.extend(p.drain(start..));
                        return rem;
                    }
                    start += 1;
                    rem.push(p[start - 1].clone());
                }
            }
        }
        rem
    }

    fn spoly(&self, f: &Element<A::E>, g: &Element<A::E>, l: &[u32]) -> Terms<A::E> {
        let sf: Vec<u32> = l.iter().zip(f.lm()).map(|(x, y)| x - y).collect();
        let sg: Vec<u32> = l.iter().zip(g.lm()).map(|(x, y)| x - y).collect();
        let fshift: Terms<A::E> = f.terms[1..]
            .iter()
            .map(|(m, c)| (m.iter().zip(&sf).map(|(x, y)| x + y).collect(), c.clone()))
            .collect();
        let one = self.arith.inv(&g.terms[0].1);
        self.sub_shifted(&fshift, &g.terms[1..], &one, &sg)
    }

    fn update(&self, basis: &[Element<A::E>], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
        let hl = basis[h].lm();
        let mut c: Vec<(usize, Exps)> = active.iter().map(|&g| (g, lcm(hl, basis[g].lm()))).collect();
        let mut d: Vec<(usize, Exps)> = Vec::new();
        while !c.is_empty() {
            let (g1, l1) = c.remove(0);
            let keep = coprime(hl, basis[g1].lm())
                || (!c.iter().any(|(_, l2)| divides(l2, &l1)) && !d.iter().any(|(_, l2)| divides(l2, &l1)));
            if keep {
                d.push((g1, l1));
            }
        }
        pairs.retain(|p| {
            let l1h = lcm(basis[p.i].lm(), hl);
            let lh2 = lcm(hl, basis[p.j].lm());
            !divides(hl, &p.lcm) || *l1h == *p.lcm || *lh2 == *p.lcm
        });
        for (g, l) in d {
            if !coprime(hl, basis[g].lm()) {
                let degree = self.order.sort_degree(&l);
                pairs.push(Pair {
                    i: g.min(h),
                    j: g.max(h),
                    lcm: l,
                    degree,
                });
            }
        }
        active.retain(|&g| !divides(hl, basis[g].lm()));
        active.push(h);
    }

    /// Reduced Gröbner basis of the given (nonzero) generators, sorted by leading monomial.
    pub fn groebner(&self, gens: Vec<Terms<A::E>>, max_pairs: u64, stats: &mut Stats) -> Result<Outcome<A::E>> {
        let mut basis: Vec<Element<A::E>> = Vec::new();
        let mut active: Vec<usize> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        for g in gens {
            let r = self.reduce(g, &basis, &active, false);
            if r.is_empty() {
                continue;
            }
            if r[0].0.iter().all(|&e| e == 0) {
                return Ok(Outcome::Unit);
            }
            basis.push(self.element(r));
            let h = basis.len() - 1;
            self.update(&basis, &mut active, &mut pairs, h);
        }
        while !pairs.is_empty() {
            // normal strategy: lowest lcm degree, then index tie-break
            let (best, _) = pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| a.degree.cmp(&b.degree).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)))
                .unwrap();
            let pair = pairs.swap_remove(best);
            stats.pairs_considered += 1;
            if stats.pairs_considered > max_pairs {
                return Err(Error::BudgetExhausted {
                    what: "Buchberger pairs",
                    limit: max_pairs,
                    required: None,
                });
            }
            let s = self.spoly(&basis[pair.i], &basis[pair.j], &pair.lcm);
            let r = self.reduce(s, &basis, &active, false);
            stats.pairs_reduced += 1;
            if r.is_empty() {
                stats.zero_reductions += 1;
                continue;
            }
            if r[0].0.iter().all(|&e| e == 0) {
                return Ok(Outcome::Unit);
            }
            basis.push(self.element(r));
            let h = basis.len() - 1;
            self.update(&basis, &mut active, &mut pairs, h);
        }
        // minimal basis: active leading monomials are pairwise non-divisible
        let mut gb: Vec<Element<A::E>> = active.iter().map(|&k| basis[k].clone()).collect();
        gb.sort_by(|a, b| self.cmp(a.lm(), b.lm()));
        let all: Vec<usize> = (0..gb.len()).collect();
        for k in 0..gb.len() {
            let others: Vec<usize> = all.iter().copied().filter(|&o| o != k).collect();
            let head = gb[k].terms[0].clone();
            let tail = gb[k].terms[1..].to_vec();
            let mut reduced = vec![head];
            reduced.extend(self.reduce(tail, &gb, &others, true));
            gb[k].terms = reduced;
        }
        Ok(Outcome::Basis(gb))
    }
}

/// Wraps already sorted, monic terms as a basis element.
pub(crate) fn element_from_sorted<E>(terms: Terms<E>) -> Element<E> {
    let mask = mask_of(&terms[0].0);
    Element { terms, mask }
}
