//! Infix polynomial expressions: `x^2 - 3/2*y*z + (x + 1)^3`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::coeff::Coefficient;
use super::poly::{Poly, RingRef};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the parsed text.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at offset {}", self.message, self.offset)
    }
}

impl std::error::Error for ParseError {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Input(e.to_string())
    }
}

pub fn parse_poly(ring: &RingRef, text: &str) -> Result<Poly, ParseError> {
    let mut p = Parser { ring, text, pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected input"));
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a RingRef,
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_string(),
        };
        ParseError {
            offset: self.pos,
            message: format!("{msg} (found {found})"),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let start = self.pos;
                let d = self.power()?;
                let inv = if d.is_constant() { d.constant_term().inv() } else { None };
                match inv {
                    Some(inv) => acc = acc.scale(&inv),
                    None => {
                        return Err(ParseError {
                            offset: start,
                            message: "division by a non-constant or zero".into(),
                        })
                    }
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| ParseError {
                offset: start,
                message: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some('-') => {
                // unary minus inside a factor, e.g. `x*-1`
                self.pos += 1;
                Ok(-&self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let digits = self.digits().to_string();
                let n: BigInt = digits.parse().expect("digit string");
                let field = self.ring.field();
                let c: Coefficient = field
                    .from_rational(&BigRational::from_integer(n))
                    .map_err(|e| ParseError { offset: start, message: e.to_string() })?;
                Ok(Poly::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                match self.ring.index_of(name) {
                    Some(i) => Ok(Poly::var(self.ring, i)),
                    None => Err(ParseError {
                        offset: start,
                        message: format!("unknown variable `{name}`"),
                    }),
                }
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::Field;
    use crate::algebra::poly::PolyRing;

    #[test]
    fn parses_and_prints() {
        let r = PolyRing::new(["x", "y", "z"], Field::Rational).unwrap();
        let f = parse_poly(&r, "x^2 - 3/2*y*z + (x+1)^2 - x^2").unwrap();
        assert_eq!(f.to_string(), "x^2 - 3/2*y*z + 2*x + 1");
        assert_eq!(parse_poly(&r, &f.to_string()).unwrap(), f);
        assert_eq!(parse_poly(&r, "-x*-y").unwrap(), parse_poly(&r, "x*y").unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        let r = PolyRing::new(["x", "y"], Field::Rational).unwrap();
        let e = parse_poly(&r, "x + w").unwrap_err();
        assert_eq!(e.offset, 4);
        let e = parse_poly(&r, "(x + y").unwrap_err();
        assert_eq!(e.offset, 6);
        assert!(parse_poly(&r, "x / y").is_err());
        assert!(parse_poly(&r, "x^").is_err());
    }

    #[test]
    fn modular_literals() {
        let r = PolyRing::new(["x"], Field::Prime(7)).unwrap();
        assert_eq!(parse_poly(&r, "x^2 - 1").unwrap().to_string(), "x^2 + 6");
        assert_eq!(parse_poly(&r, "1/2").unwrap().to_string(), "4");
        assert!(parse_poly(&r, "1/7").is_err());
    }
}
