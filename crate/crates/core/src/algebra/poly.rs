//! Sparse multivariate polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::coeff::{Coefficient, Field};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// How the variables of a jet-structured ring are laid out: variable `k` is
/// `U_{k mod N}^{(first_level + k div N)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct JetLayout {
    pub base_arity: usize,
    pub first_level: usize,
    pub last_level: usize,
}

impl JetLayout {
    pub fn level_of(&self, var: usize) -> usize {
        self.first_level + var / self.base_arity
    }

    pub fn base_index_of(&self, var: usize) -> usize {
        var % self.base_arity
    }

    pub fn arity(&self) -> usize {
        self.base_arity * (self.last_level + 1 - self.first_level)
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    field: Field,
    jet: Option<JetLayout>,
}

pub type RingRef = Arc<PolyRing>;

pub(crate) fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>, field: Field) -> Result<RingRef> {
        Self::build(names.into_iter().map(Into::into).collect(), field, None)
    }

    pub(crate) fn with_jet_layout(names: Vec<String>, field: Field, jet: JetLayout) -> Result<RingRef> {
        if jet.arity() != names.len() {
            return Err(Error::input("jet layout does not match variable count"));
        }
        Self::build(names, field, Some(jet))
    }

    fn build(names: Vec<String>, field: Field, jet: Option<JetLayout>) -> Result<RingRef> {
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        for (i, n) in names.iter().enumerate() {
            if !valid_identifier(n) {
                return Err(Error::input(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::input(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(Arc::new(PolyRing { names, field, jet }))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn jet_layout(&self) -> Option<JetLayout> {
        self.jet
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables over another field.
    pub fn with_field(&self, field: Field) -> Result<RingRef> {
        Self::build(self.names.clone(), field, self.jet)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: RingRef,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Poly {
    pub fn zero(ring: &RingRef) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: Coefficient) -> Poly {
        Self::monomial(ring, Monomial::one(ring.arity()), c)
    }

    pub fn from_i64(ring: &RingRef, c: i64) -> Poly {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn one(ring: &RingRef) -> Poly {
        Self::from_i64(ring, 1)
    }

    pub fn var(ring: &RingRef, index: usize) -> Poly {
        Self::monomial(ring, Monomial::var(ring.arity(), index, 1), ring.field().one())
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: Coefficient) -> Poly {
        assert_eq!(m.arity(), ring.arity(), "monomial arity does not match ring");
        assert!(ring.field().contains(&c), "coefficient not in ring's field");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: ring.clone(), terms }
    }

    /// Sums the given terms, combining duplicates and dropping zeros.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, Coefficient)>) -> Poly {
        let mut p = Poly::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity does not match ring");
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field().zero())
    }

    pub fn constant_term(&self) -> Coefficient {
        self.coefficient(&Monomial::one(self.ring.arity()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree among the terms (the order of vanishing at the origin).
    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// The common weighted degree if every term has the same one.
    pub fn weighted_homogeneous_degree(&self, weights: &[u32]) -> Option<u64> {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().max_by(|a, b| order.cmp_exps(a.0.exps(), b.0.exps()))
    }

    /// Indices of variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.arity()];
        for m in self.terms.keys() {
            for i in m.support() {
                seen[i] = true;
            }
        }
        seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect()
    }

    pub fn scale(&self, c: &Coefficient) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coefficient) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(u, a)| (u.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Poly {
        let field = self.field();
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exps()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] -= 1;
            out.add_term(Monomial::new(exps), c * &field.from_i64(e as i64));
        }
        out
    }

    /// Exact value at a point with coordinates in the ring's field.
    pub fn evaluate(&self, point: &[Coefficient]) -> Result<Coefficient> {
        if point.len() != self.ring.arity() {
            return Err(Error::input(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.arity()
            )));
        }
        let field = self.field();
        if let Some(bad) = point.iter().find(|c| !field.contains(c)) {
            return Err(Error::input(format!("coordinate {bad} is not in {field}")));
        }
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`, all in `target`.
    pub fn map_vars(&self, target: &RingRef, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.ring.arity());
        assert_eq!(target.field(), self.field());
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (img, &e) in images.iter().zip(m.exps()) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Relabels variables into a ring of the same field: variable `i` goes to `index_map[i]`.
    pub fn rename_into(&self, target: &RingRef, index_map: &[usize]) -> Poly {
        assert_eq!(index_map.len(), self.ring.arity());
        assert_eq!(target.field(), self.field());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.arity()];
            for (i, &x) in m.exps().iter().enumerate() {
                e[index_map[i]] += x;
            }
            (Monomial::new(e), c.clone())
        });
        Poly::from_terms(target, terms)
    }

    /// Coefficientwise image in another ring with the same variables (e.g. Q -> F_p).
    pub fn change_field(&self, target: &RingRef) -> Result<Poly> {
        if target.arity() != self.ring.arity() {
            return Err(Error::input("target ring has a different number of variables"));
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let image = match (c, target.field()) {
                (Coefficient::Rational(q), f) => f.from_rational(q)?,
                (Coefficient::Modular { .. }, f) if f == self.field() => c.clone(),
                _ => return Err(Error::input("cannot map F_p coefficients into another field")),
            };
            out.add_term(m.clone(), image);
        }
        Ok(out)
    }

    fn check_ring(&self, other: &Poly) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = Poly::zero(&self.ring);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Poly {
    /// Terms in descending graded reverse lexicographic order, e.g. `x^2*y - 3/2*z + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp_exps(b.0.exps(), a.0.exps()));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if m.is_one() || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
