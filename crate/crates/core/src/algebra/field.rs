//! Exact scalar fields.
//!
//! Every curve and surface computation in the crate is generic over [`Field`].
//! The concrete fields are the rationals ([`Rational`]), simple algebraic
//! extensions of degree two or three ([`super::NfElem`], wrapped by
//! [`FieldElem`]), and the univariate rational function field
//! ([`super::RatFn`]) used to run constructions with a symbolic parameter.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    /// Rescales a point of weight-one projective space to a smaller
    /// representative. The default leaves it unchanged.
    fn normalize_projective(_v: &mut [Self]) {}

    fn try_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    fn square(&self) -> Self {
        self.clone() * self
    }

    fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// The rational value of a constant element, if it is one.
    fn to_rational(&self) -> Option<Rational>;
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `n` or `n/d` with optional sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Exact square root of a rational, when it exists.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = exact_root(q.numer(), 2)?;
    let d = exact_root(q.denom(), 2)?;
    Some(Rational::new(n, d))
}

/// Exact `k`-th root of an integer (negative radicands allowed for odd `k`).
pub fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

pub fn is_rational_square(q: &Rational) -> bool {
    rational_sqrt(q).is_some()
}
