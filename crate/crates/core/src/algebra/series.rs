//! Truncated power series in one variable `t`, i.e. elements of `k[t]/(t^(m+1))`.

use super::coeff::{Coefficient, Field};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    field: Field,
    coeffs: Vec<Coefficient>,
}

impl TruncatedSeries {
    /// Series with the given coefficients of `t^0 .. t^m`.
    pub fn new(field: Field, coeffs: Vec<Coefficient>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::input("a truncated series needs at least one coefficient"));
        }
        if coeffs.iter().any(|c| !field.contains(c)) {
            return Err(Error::input(format!("series coefficient outside {field}")));
        }
        Ok(TruncatedSeries { field, coeffs })
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Result<Self> {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn constant(field: Field, c: Coefficient, len: usize) -> Self {
        let mut coeffs = vec![field.zero(); len];
        coeffs[0] = c;
        TruncatedSeries { field, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// Truncation length m+1.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        TruncatedSeries {
            field: self.field,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        let n = self.len();
        let mut coeffs = vec![self.field.zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TruncatedSeries { field: self.field, coeffs }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        TruncatedSeries {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(self.field, self.field.one(), self.len());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Coefficients of `f(s_1(t), ..., s_N(t)) mod t^(m+1)`.
pub fn substitute_series(f: &Poly, series: &[TruncatedSeries]) -> Result<TruncatedSeries> {
    let ring = f.ring();
    if series.len() != ring.arity() {
        return Err(Error::input(format!(
            "{} series supplied for {} variables",
            series.len(),
            ring.arity()
        )));
    }
    let field = ring.field();
    let len = series.first().map(TruncatedSeries::len).unwrap_or(1);
    if series.iter().any(|s| s.len() != len) {
        return Err(Error::input("series have different truncation lengths"));
    }
    if series.iter().any(|s| s.field() != field) {
        return Err(Error::input(format!("series not over {field}")));
    }
    // cache powers per variable
    let mut powers: Vec<Vec<TruncatedSeries>> = series
        .iter()
        .map(|s| vec![TruncatedSeries::constant(field, field.one(), len), s.clone()])
        .collect();
    let mut acc = TruncatedSeries::constant(field, field.zero(), len);
    for (m, c) in f.terms() {
        let mut t = TruncatedSeries::constant(field, c.clone(), len);
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e as usize {
                let next = powers[i].last().unwrap().mul(&series[i]);
                powers[i].push(next);
            }
            t = t.mul(&powers[i][e as usize]);
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::PolyRing;

    #[test]
    fn examples() {
        let q = Field::Rational;
        let r1 = PolyRing::new(["x"], q).unwrap();
        let x = Poly::var(&r1, 0);
        let t = TruncatedSeries::from_i64(q, &[0, 1, 0]).unwrap();
        assert_eq!(substitute_series(&x.pow(2), &[t]).unwrap(), TruncatedSeries::from_i64(q, &[0, 0, 1]).unwrap());
        let s = TruncatedSeries::from_i64(q, &[3, -1, 4, 1]).unwrap();
        assert_eq!(substitute_series(&x, std::slice::from_ref(&s)).unwrap(), s);

        let r2 = PolyRing::new(["x", "y"], q).unwrap();
        let f = &Poly::var(&r2, 0).pow(2) - &Poly::var(&r2, 1).pow(3);
        let xs = TruncatedSeries::from_i64(q, &[0, 0, 0, 1, 0, 0]).unwrap();
        let ys = TruncatedSeries::from_i64(q, &[0, 0, 1, 0, 0, 0]).unwrap();
        let out = substitute_series(&f, &[xs, ys]).unwrap();
        assert!(out.coeffs().iter().all(Coefficient::is_zero));
    }

    #[test]
    fn length_mismatch() {
        let q = Field::Rational;
        let r2 = PolyRing::new(["x", "y"], q).unwrap();
        let a = TruncatedSeries::from_i64(q, &[1, 2]).unwrap();
        let b = TruncatedSeries::from_i64(q, &[1, 2, 3]).unwrap();
        assert!(substitute_series(&Poly::var(&r2, 0), &[a.clone(), b]).is_err());
        assert!(substitute_series(&Poly::var(&r2, 0), &[a]).is_err());
    }
}
