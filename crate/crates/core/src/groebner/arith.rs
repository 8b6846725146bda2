//! Field arithmetic specialised per coefficient field, used inside the engine.

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::coeff::{inv_mod, mul_mod, sub_mod};
use crate::algebra::{Coefficient, Field};

pub(crate) trait Arith: Send + Sync {
    type E: Clone + Debug + PartialEq + Send + Sync;

    fn is_zero(&self, a: &Self::E) -> bool;
    fn is_one(&self, a: &Self::E) -> bool;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// `a` must be nonzero.
    fn inv(&self, a: &Self::E) -> Self::E;
    fn import(&self, c: &Coefficient) -> Self::E;
    fn export(&self, a: &Self::E) -> Coefficient;
}

pub(crate) struct RationalArith;

impl Arith for RationalArith {
    type E = BigRational;

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn import(&self, c: &Coefficient) -> BigRational {
        match c {
            Coefficient::Rational(q) => q.clone(),
            _ => panic!("expected a rational coefficient"),
        }
    }
    fn export(&self, a: &BigRational) -> Coefficient {
        Coefficient::Rational(a.clone())
    }
}

pub(crate) struct ModArith {
    pub p: u32,
}

impl Arith for ModArith {
    type E = u32;

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        sub_mod(*a, *b, self.p)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u32) -> u32 {
        sub_mod(0, *a, self.p)
    }
    fn inv(&self, a: &u32) -> u32 {
        inv_mod(*a, self.p)
    }
    fn import(&self, c: &Coefficient) -> u32 {
        match c {
            Coefficient::Modular { value, modulus } if *modulus == self.p => *value,
            _ => panic!("expected a coefficient mod {}", self.p),
        }
    }
    fn export(&self, a: &u32) -> Coefficient {
        Field::Prime(self.p).from_i64(*a as i64)
    }
}
