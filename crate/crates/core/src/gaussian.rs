//! Exact arithmetic in the ring of Gaussian integers Z[i].
//!
//! Z[i] is Euclidean with respect to the norm N(a+bi) = a^2 + b^2, which
//! gives division with remainder, gcds, and unique factorization up to the
//! units {1, -1, i, -i}. Rational primes behave in exactly three ways here:
//! 2 ramifies as -i*(1+i)^2, primes p = 1 (mod 4) split into a conjugate
//! pair of primes of norm p, and primes q = 3 (mod 4) stay prime. The
//! factorization routine leans on those splitting laws: it factors the norm
//! over Z and lifts each rational prime to its Gaussian divisors.

use crate::arith::{factorize, Budget};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A Gaussian integer re + im*i with arbitrary-precision coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GaussianError {
    #[error("division by zero in Z[i]")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined in Z[i]")]
    GcdOfZeros,
    #[error("cannot factor zero")]
    FactorZero,
    #[error("factoring the norm {norm} ran out of budget (unfactored part {cofactor})")]
    IncompleteNormFactorization { norm: BigUint, cofactor: BigUint },
    #[error("invalid Gaussian integer literal {0:?}")]
    Parse(String),
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInt::new(1, 0)
    }

    /// The imaginary unit i.
    pub fn i_unit() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn from_int(n: &BigInt) -> Self {
        GaussianInt { re: n.clone(), im: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// N(a+bi) = a^2 + b^2; zero iff the element is zero.
    pub fn norm(&self) -> BigUint {
        (&self.re * &self.re + &self.im * &self.im)
            .to_biguint()
            .expect("sum of squares is nonnegative")
    }

    /// Units are exactly the elements of norm 1: {1, -1, i, -i}.
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn conj(&self) -> Self {
        GaussianInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn neg(&self) -> Self {
        GaussianInt { re: -&self.re, im: -&self.im }
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussianInt { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GaussianInt { re: &self.re - &other.re, im: &self.im - &other.im }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussianInt {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    /// Multiplication by i: (a, b) -> (-b, a).
    fn rotate(&self) -> Self {
        GaussianInt { re: -&self.im, im: self.re.clone() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The unique associate with re > 0 and im >= 0 (zero maps to zero).
    ///
    /// Exactly one of z, iz, -z, -iz lands in that half-open quadrant, which
    /// makes gcds and factor lists canonical.
    pub fn first_quadrant(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut z = self.clone();
        for _ in 0..3 {
            if z.re.is_positive() && !z.im.is_negative() {
                return z;
            }
            z = z.rotate();
        }
        z
    }
}

/// Nearest integer to t/d for d > 0, ties toward negative infinity.
fn round_half_down(t: &BigInt, d: &BigInt) -> BigInt {
    let num: BigInt = t * 2 + d - 1i32;
    num.div_floor(&(d * 2))
}

/// Euclidean division: a = q*b + r with N(r) < N(b).
///
/// q is the coordinatewise nearest integer to the exact quotient a/b, ties
/// broken toward negative infinity; that pins down a single (q, r) pair and
/// gives the stronger bound N(r) <= N(b)/2.
pub fn divmod(a: &GaussianInt, b: &GaussianInt) -> Result<(GaussianInt, GaussianInt), GaussianError> {
    if b.is_zero() {
        return Err(GaussianError::DivisionByZero);
    }
    let d = BigInt::from(b.norm());
    let t = a.mul(&b.conj());
    let q = GaussianInt { re: round_half_down(&t.re, &d), im: round_half_down(&t.im, &d) };
    let r = a.sub(&q.mul(b));
    Ok((q, r))
}

/// a / b when the division is exact, None otherwise (or when b = 0).
pub fn exact_div(a: &GaussianInt, b: &GaussianInt) -> Option<GaussianInt> {
    let (q, r) = divmod(a, b).ok()?;
    r.is_zero().then_some(q)
}

/// Greatest common divisor, normalized to the first-quadrant associate.
pub fn gcd(a: &GaussianInt, b: &GaussianInt) -> Result<GaussianInt, GaussianError> {
    if a.is_zero() && b.is_zero() {
        return Err(GaussianError::GcdOfZeros);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = divmod(&x, &y).expect("y is nonzero");
        x = y;
        y = r;
    }
    Ok(x.first_quadrant())
}

/// Factorization of a nonzero Gaussian integer into first-quadrant primes.
///
/// `unit * product(prime^exponent)` recomposes the input exactly; primes are
/// sorted by (norm, re, im) and pairwise non-associate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianFactorization {
    pub unit: GaussianInt,
    pub factors: Vec<(GaussianInt, u32)>,
}

impl GaussianFactorization {
    pub fn value(&self) -> GaussianInt {
        let mut acc = self.unit.clone();
        for (p, e) in &self.factors {
            acc = acc.mul(&p.pow(*e));
        }
        acc
    }
}

/// A square root of -1 modulo a prime p = 1 (mod 4): raise the smallest
/// quadratic nonresidue to the power (p-1)/4 (Euler's criterion certifies
/// the nonresidue, so the search is deterministic).
fn sqrt_minus_one_mod(p: &BigUint) -> BigUint {
    let one = BigUint::one();
    let pm1 = p - &one;
    let exp_half = &pm1 >> 1;
    let exp_quarter = &pm1 >> 2;
    let mut g = BigUint::from(2u32);
    loop {
        if g.modpow(&exp_half, p) == pm1 {
            return g.modpow(&exp_quarter, p);
        }
        g += 1u32;
    }
}

/// Strip as many copies of `pi` from `z` as divide exactly; returns the
/// multiplicity and the quotient.
fn strip(z: GaussianInt, pi: &GaussianInt, at_most: u32) -> (u32, GaussianInt) {
    let mut cur = z;
    let mut count = 0;
    while count < at_most {
        match exact_div(&cur, pi) {
            Some(w) => {
                cur = w;
                count += 1;
            }
            None => break,
        }
    }
    (count, cur)
}

/// Factor a nonzero Gaussian integer under the given effort budget.
///
/// Works through the norm: N(z) is factored over Z, and every rational
/// prime is lifted by the splitting laws — 2 contributes 1+i, p = 1 (mod 4)
/// contributes gcd(p, s+i) for s a square root of -1 mod p (and/or its
/// conjugate), q = 3 (mod 4) stays a rational prime. If the norm cannot be
/// fully factored within budget the call fails rather than emit composites.
pub fn factor(z: &GaussianInt, budget: &Budget) -> Result<GaussianFactorization, GaussianError> {
    if z.is_zero() {
        return Err(GaussianError::FactorZero);
    }
    let norm = z.norm();
    let f = factorize(&norm, budget);
    if !f.is_complete() {
        return Err(GaussianError::IncompleteNormFactorization { norm, cofactor: f.cofactor });
    }
    let mut rest = z.clone();
    let mut factors: Vec<(GaussianInt, u32)> = Vec::new();
    for (p, e) in &f.factors {
        if p.to_u32() == Some(2) {
            let pi = GaussianInt::new(1, 1);
            let (count, next) = strip(rest, &pi, *e);
            debug_assert_eq!(count, *e, "multiplicity of 1+i equals the 2-adic valuation of the norm");
            factors.push((pi, count));
            rest = next;
            continue;
        }
        let residue = (p % 4u32).to_u32().expect("residue fits");
        if residue == 3 {
            debug_assert!(e % 2 == 0, "inert primes appear in norms with even exponent");
            let pi = GaussianInt::new(BigInt::from(p.clone()), BigInt::zero());
            let (count, next) = strip(rest, &pi, e / 2);
            debug_assert_eq!(count, e / 2);
            factors.push((pi, count));
            rest = next;
        } else {
            let s = sqrt_minus_one_mod(p);
            let witness = GaussianInt::new(BigInt::from(s), BigInt::one());
            let rational = GaussianInt::new(BigInt::from(p.clone()), BigInt::zero());
            let pi = gcd(&rational, &witness).expect("inputs nonzero");
            let pi_conj = pi.conj().first_quadrant();
            let (a, next) = strip(rest, &pi, *e);
            let (b, next) = strip(next, &pi_conj, e - a);
            debug_assert_eq!(a + b, *e, "split prime exponents cover the norm valuation");
            if a > 0 {
                factors.push((pi, a));
            }
            if b > 0 {
                factors.push((pi_conj, b));
            }
            rest = next;
        }
    }
    debug_assert!(rest.is_unit(), "after removing all primes only a unit remains");
    factors.sort_by(|x, y| {
        (x.0.norm(), &x.0.re, &x.0.im).cmp(&(y.0.norm(), &y.0.re, &y.0.im))
    });
    Ok(GaussianFactorization { unit: rest, factors })
}

impl fmt::Display for GaussianInt {
    /// Renders as "a+bi" with zero components omitted ("0" for zero): "13",
    /// "6i", "-11+6i", "2-3i". The unit coefficient keeps its digit ("1i")
    /// so every rendering is a sign-separated list of integer terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&self.re.to_string());
        }
        if !self.im.is_zero() {
            if !out.is_empty() && self.im.is_positive() {
                out.push('+');
            }
            out.push_str(&self.im.to_string());
            out.push('i');
        }
        write!(f, "{out}")
    }
}

impl FromStr for GaussianInt {
    type Err = GaussianError;

    /// Parses a sum of signed terms over the unit i: "0", "-11+6i", "2-3i",
    /// "6i", and bare "i" / "-i". Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || GaussianError::Parse(s.to_string());
        if compact.is_empty() {
            return Err(bad());
        }
        let bytes = compact.as_bytes();
        let mut pos = 0usize;
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        while pos < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(bad()); // terms after the first need an explicit sign
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits = &compact[start..pos];
            let imaginary = pos < bytes.len() && bytes[pos] == b'i';
            if imaginary {
                pos += 1;
            }
            let magnitude = if digits.is_empty() {
                if !imaginary {
                    return Err(bad()); // a bare sign or stray character
                }
                BigInt::one()
            } else {
                BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(bad)?
            };
            let term = sign * magnitude;
            if imaginary {
                im += term;
            } else {
                re += term;
            }
        }
        Ok(GaussianInt { re, im })
    }
}
