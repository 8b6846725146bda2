#![forbid(unsafe_code)]
//! Jet schemes of affine varieties.

pub mod algebra;
pub mod analysis;
pub mod error;
pub mod groebner;
pub mod jets;
pub mod nilcone;
pub mod oracle;
pub mod toric;

pub use error::{Error, Result};
