//! A common interface over the three coefficient rings.
//!
//! The condition predicates and the quality functional are identical in
//! shape over the rational integers Z, the Gaussian integers Z[i], and the
//! Hurwitz order I; only the element operations differ. [`RingElem`]
//! captures exactly what those generic algorithms need: ring operations,
//! a multiplicative integer norm, one-sided divisibility and gcds (which
//! collapse to the ordinary ones in the commutative rings), and a textual
//! form for the CLI and the tuple store.
//!
//! Over Z the norm is the absolute value |n| — not n^2 — so Z-tuples score
//! exactly half of what the same tuples score over Z[i] or I.

use crate::gaussian::{self, GaussianInt};
use crate::hurwitz::{self, HurwitzInt};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Identifies the coefficient ring of a tuple. Serialized as "Z", "Zi",
/// "Hurwitz" in the store and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ring {
    Z,
    Zi,
    Hurwitz,
}

impl Ring {
    pub fn as_str(&self) -> &'static str {
        match self {
            Ring::Z => "Z",
            Ring::Zi => "Zi",
            Ring::Hurwitz => "Hurwitz",
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Ring {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Z" => Ok(Ring::Z),
            "Zi" => Ok(Ring::Zi),
            "Hurwitz" => Ok(Ring::Hurwitz),
            other => Err(format!("unknown ring {other:?} (expected Z, Zi, or Hurwitz)")),
        }
    }
}

/// Element operations shared by Z, Z[i], and the Hurwitz order.
///
/// The norm is multiplicative and vanishes only at zero. One-sided gcds
/// require at least one nonzero argument; callers uphold that (the
/// condition predicates validate tuples up front).
pub trait RingElem: Clone + fmt::Debug + fmt::Display + PartialEq + Eq + Sized {
    const RING: Ring;

    fn zero() -> Self;
    fn one() -> Self;
    /// Embed a rational integer (always central).
    fn from_int(n: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn norm(&self) -> BigUint;
    fn is_unit(&self) -> bool {
        self.norm().is_one()
    }
    /// Does d divide a with a quotient on the right of d (a = d*q)?
    fn divides_right(d: &Self, a: &Self) -> bool;
    /// Does d divide a with a quotient on the left of d (a = q*d)?
    fn divides_left(d: &Self, a: &Self) -> bool;
    /// Greatest common right divisor; not both arguments zero.
    fn gcd_right(a: &Self, b: &Self) -> Self;
    /// Greatest common left divisor; not both arguments zero.
    fn gcd_left(a: &Self, b: &Self) -> Self;
    /// Parse the textual form this ring uses in the CLI and the store.
    fn parse(s: &str) -> Result<Self, String>;
}

impl RingElem for BigInt {
    const RING: Ring = Ring::Z;

    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }

    fn one() -> Self {
        <BigInt as One>::one()
    }

    fn from_int(n: &BigInt) -> Self {
        n.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    /// |n|: the absolute value, so that quality over Z matches the
    /// classical height/radical ratio (and is half the Z[i] value).
    fn norm(&self) -> BigUint {
        self.abs().to_biguint().expect("absolute value is nonnegative")
    }

    fn divides_right(d: &Self, a: &Self) -> bool {
        if Zero::is_zero(d) {
            return Zero::is_zero(a);
        }
        Zero::is_zero(&(a % d))
    }

    fn divides_left(d: &Self, a: &Self) -> bool {
        Self::divides_right(d, a)
    }

    fn gcd_right(a: &Self, b: &Self) -> Self {
        Integer::gcd(a, b)
    }

    fn gcd_left(a: &Self, b: &Self) -> Self {
        Integer::gcd(a, b)
    }

    fn parse(s: &str) -> Result<Self, String> {
        s.trim().parse::<BigInt>().map_err(|e| format!("invalid integer {s:?}: {e}"))
    }
}

impl RingElem for GaussianInt {
    const RING: Ring = Ring::Zi;

    fn zero() -> Self {
        GaussianInt::zero()
    }

    fn one() -> Self {
        GaussianInt::one()
    }

    fn from_int(n: &BigInt) -> Self {
        GaussianInt::from_int(n)
    }

    fn is_zero(&self) -> bool {
        GaussianInt::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        GaussianInt::add(self, other)
    }

    fn neg(&self) -> Self {
        GaussianInt::neg(self)
    }

    fn mul(&self, other: &Self) -> Self {
        GaussianInt::mul(self, other)
    }

    fn norm(&self) -> BigUint {
        GaussianInt::norm(self)
    }

    fn divides_right(d: &Self, a: &Self) -> bool {
        if GaussianInt::is_zero(d) {
            return GaussianInt::is_zero(a);
        }
        gaussian::exact_div(a, d).is_some()
    }

    fn divides_left(d: &Self, a: &Self) -> bool {
        Self::divides_right(d, a)
    }

    fn gcd_right(a: &Self, b: &Self) -> Self {
        gaussian::gcd(a, b).expect("not both zero")
    }

    fn gcd_left(a: &Self, b: &Self) -> Self {
        gaussian::gcd(a, b).expect("not both zero")
    }

    fn parse(s: &str) -> Result<Self, String> {
        s.parse::<GaussianInt>().map_err(|e| e.to_string())
    }
}

impl RingElem for HurwitzInt {
    const RING: Ring = Ring::Hurwitz;

    fn zero() -> Self {
        HurwitzInt::zero()
    }

    fn one() -> Self {
        HurwitzInt::one()
    }

    fn from_int(n: &BigInt) -> Self {
        HurwitzInt::from_int(n)
    }

    fn is_zero(&self) -> bool {
        HurwitzInt::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        HurwitzInt::add(self, other)
    }

    fn neg(&self) -> Self {
        HurwitzInt::neg(self)
    }

    fn mul(&self, other: &Self) -> Self {
        HurwitzInt::mul(self, other)
    }

    fn norm(&self) -> BigUint {
        HurwitzInt::norm(self)
    }

    fn divides_right(d: &Self, a: &Self) -> bool {
        hurwitz::right_divides(d, a)
    }

    fn divides_left(d: &Self, a: &Self) -> bool {
        hurwitz::left_divides(d, a)
    }

    fn gcd_right(a: &Self, b: &Self) -> Self {
        hurwitz::gcd_right(a, b).expect("not both zero")
    }

    fn gcd_left(a: &Self, b: &Self) -> Self {
        hurwitz::gcd_left(a, b).expect("not both zero")
    }

    fn parse(s: &str) -> Result<Self, String> {
        s.parse::<HurwitzInt>().map_err(|e| e.to_string())
    }
}
