//! Exact polynomial arithmetic: coefficient fields, monomial orders, sparse
//! polynomials, truncated power series and the infix expression parser.

pub mod coeff;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod series;

pub use coeff::{Coefficient, Field};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_poly, ParseError};
pub use poly::{JetLayout, Poly, PolyRing, RingRef};
pub use series::{substitute_series, TruncatedSeries};
