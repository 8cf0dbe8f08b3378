//! Scalar-generic numerics.
//!
//! Verdicts use [`Rational`](crate::Rational); the same polynomial code is
//! reused with `f64` for Monte-Carlo comparisons and plots.

use num_bigint::BigInt;
use num_traits::{Num, One, ToPrimitive};

use crate::Rational;

/// Any exact or floating field element the polynomial evaluators accept.
pub trait Scalar: Num + Clone {
    fn from_u64(x: u64) -> Self;
}

impl Scalar for f64 {
    fn from_u64(x: u64) -> Self {
        x as f64
    }
}

impl Scalar for Rational {
    fn from_u64(x: u64) -> Self {
        Rational::from_integer(BigInt::from(x))
    }
}

pub(crate) fn pow<S: Scalar>(base: &S, exp: usize) -> S {
    num_traits::pow(base.clone(), exp)
}

/// `2^{-e}` as an exact rational.
pub fn inv_pow2(e: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << e)
}

/// `n^k` as an exact rational.
pub fn int_pow(n: usize, k: usize) -> Rational {
    Rational::from_integer(num_traits::pow(BigInt::from(n), k))
}

/// Lossy conversion for report fields.
pub fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
