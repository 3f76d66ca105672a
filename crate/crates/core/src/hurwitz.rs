//! Exact arithmetic in the Hurwitz order I of integer quaternions.
//!
//! Elements are quaternions q + r*i + s*j + t*k whose coefficients are
//! either all rational integers or all half-odd-integers. Internally every
//! element carries *doubled* coordinates [h0, h1, h2, h3] (the element is
//! (h0 + h1*i + h2*j + h3*k)/2 with all four of the same parity), which
//! keeps the half-integer units exact and all arithmetic in BigInt.
//!
//! The ring is noncommutative, so division and gcds come in left and right
//! flavors. It is norm Euclidean: rounding the exact quotient to a nearest
//! element of I — trying both the integer lattice and the half-integer
//! coset — always leaves a remainder with N(r) <= N(b)/2 < N(b). Rounding
//! to the integer lattice alone would not be enough: the Lipschitz
//! quaternions miss points at squared distance 1.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A Hurwitz quaternion in doubled coordinates: the element is
/// (h[0] + h[1]*i + h[2]*j + h[3]*k)/2, all h[m] of equal parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HurwitzInt {
    h: [BigInt; 4],
}

/// The three imaginary basis units, as conjugation axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    I,
    J,
    K,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HurwitzError {
    #[error("division by zero in the Hurwitz order")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined in the Hurwitz order")]
    GcdOfZeros,
    #[error("doubled coordinates must share parity, got [{}, {}, {}, {}]", .0[0], .0[1], .0[2], .0[3])]
    MixedParity(Box<[BigInt; 4]>),
    #[error("invalid Hurwitz integer literal {0:?}")]
    Parse(String),
}

impl HurwitzInt {
    /// Build from doubled coordinates, enforcing the parity invariant.
    pub fn from_doubled(
        h0: impl Into<BigInt>,
        h1: impl Into<BigInt>,
        h2: impl Into<BigInt>,
        h3: impl Into<BigInt>,
    ) -> Result<Self, HurwitzError> {
        let h = [h0.into(), h1.into(), h2.into(), h3.into()];
        let parity = h[0].is_odd();
        if h.iter().any(|c| c.is_odd() != parity) {
            return Err(HurwitzError::MixedParity(Box::new(h)));
        }
        Ok(HurwitzInt { h })
    }

    /// The element q + r*i + s*j + t*k with integer coefficients.
    pub fn from_ints(
        q: impl Into<BigInt>,
        r: impl Into<BigInt>,
        s: impl Into<BigInt>,
        t: impl Into<BigInt>,
    ) -> Self {
        HurwitzInt {
            h: [q.into() * 2, r.into() * 2, s.into() * 2, t.into() * 2],
        }
    }

    /// Embed a rational integer as a central element.
    pub fn from_int(n: &BigInt) -> Self {
        HurwitzInt::from_ints(n.clone(), 0, 0, 0)
    }

    /// Doubled coordinates [h0, h1, h2, h3].
    pub fn doubled(&self) -> &[BigInt; 4] {
        &self.h
    }

    pub fn zero() -> Self {
        HurwitzInt::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        HurwitzInt::from_ints(1, 0, 0, 0)
    }

    pub fn i_unit() -> Self {
        HurwitzInt::from_ints(0, 1, 0, 0)
    }

    pub fn j_unit() -> Self {
        HurwitzInt::from_ints(0, 0, 1, 0)
    }

    pub fn k_unit() -> Self {
        HurwitzInt::from_ints(0, 0, 0, 1)
    }

    /// The 24 units: the 8 signed basis elements and the 16 half-integer
    /// elements (+-1 +- i +- j +- k)/2, in a fixed order.
    pub fn units() -> Vec<HurwitzInt> {
        let mut out = Vec::with_capacity(24);
        for slot in 0..4 {
            for sign in [2i64, -2] {
                let mut h = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
                h[slot] = BigInt::from(sign);
                out.push(HurwitzInt { h });
            }
        }
        for mask in 0..16u32 {
            let pick = |bit: u32| if mask >> bit & 1 == 0 { BigInt::one() } else { -BigInt::one() };
            out.push(HurwitzInt { h: [pick(0), pick(1), pick(2), pick(3)] });
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().all(|c| c.is_zero())
    }

    /// N(z) = z * conj(z) = (h0^2 + h1^2 + h2^2 + h3^2)/4, always an
    /// integer thanks to the parity invariant.
    pub fn norm(&self) -> BigUint {
        let sum: BigInt = self.h.iter().map(|c| c * c).sum();
        (sum / 4i32).to_biguint().expect("nonnegative")
    }

    /// Tr(z) = z + conj(z) = 2q, which is exactly the doubled real part.
    pub fn trace(&self) -> BigInt {
        self.h[0].clone()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn conj(&self) -> Self {
        HurwitzInt {
            h: [self.h[0].clone(), -&self.h[1], -&self.h[2], -&self.h[3]],
        }
    }

    pub fn neg(&self) -> Self {
        HurwitzInt { h: self.h.clone().map(|c| -c) }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut h = self.h.clone();
        for (lhs, rhs) in h.iter_mut().zip(&other.h) {
            *lhs += rhs;
        }
        HurwitzInt { h }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut h = self.h.clone();
        for (lhs, rhs) in h.iter_mut().zip(&other.h) {
            *lhs -= rhs;
        }
        HurwitzInt { h }
    }

    /// Quaternion product under i*j = k, j*k = i, k*i = j and
    /// anticommutation of distinct imaginary units. Not commutative.
    pub fn mul(&self, other: &Self) -> Self {
        let a = &self.h;
        let b = &other.h;
        let p0 = &a[0] * &b[0] - &a[1] * &b[1] - &a[2] * &b[2] - &a[3] * &b[3];
        let p1 = &a[0] * &b[1] + &a[1] * &b[0] + &a[2] * &b[3] - &a[3] * &b[2];
        let p2 = &a[0] * &b[2] - &a[1] * &b[3] + &a[2] * &b[0] + &a[3] * &b[1];
        let p3 = &a[0] * &b[3] + &a[1] * &b[2] - &a[2] * &b[1] + &a[3] * &b[0];
        // Each component of the doubled-vector product is even (a term-by-
        // term parity check over the four parity cases), so halving is exact.
        HurwitzInt { h: [p0 / 2, p1 / 2, p2 / 2, p3 / 2] }
    }

    /// z^2 by the closed form q^2 - r^2 - s^2 - t^2 + 2q(ri + sj + tk),
    /// which in doubled coordinates is [(h0^2-h1^2-h2^2-h3^2)/2, h0*h1,
    /// h0*h2, h0*h3].
    pub fn square(&self) -> Self {
        let h = &self.h;
        let d0 = (&h[0] * &h[0] - &h[1] * &h[1] - &h[2] * &h[2] - &h[3] * &h[3]) / 2;
        HurwitzInt { h: [d0, &h[0] * &h[1], &h[0] * &h[2], &h[0] * &h[3]] }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = HurwitzInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// -u * z * u for the basis unit u on the given axis: fixes the real
    /// part and the axis component, negates the other two imaginary parts.
    pub fn conjugate_by_unit(&self, axis: Axis) -> Self {
        let keep = match axis {
            Axis::I => 1,
            Axis::J => 2,
            Axis::K => 3,
        };
        let mut h = self.h.clone();
        for (m, c) in h.iter_mut().enumerate().skip(1) {
            if m != keep {
                *c *= -1;
            }
        }
        HurwitzInt { h }
    }

    /// Lexicographic comparison key on doubled coordinates, used to pick
    /// canonical unit associates.
    fn lex_key(&self) -> &[BigInt; 4] {
        &self.h
    }
}

/// Nearest integer m to t/(2n) for n > 0, ties toward negative infinity,
/// returned as the even doubled coordinate 2m.
fn nearest_even_doubled(t: &BigInt, n: &BigInt) -> BigInt {
    let num: BigInt = t * 2 + n * 2 - 1i32;
    num.div_floor(&(n * 4)) * 2
}

/// Nearest odd integer to t/n for n > 0, ties toward negative infinity.
fn nearest_odd_doubled(t: &BigInt, n: &BigInt) -> BigInt {
    let k = (t - n).div_floor(&(n * 2));
    let o: BigInt = &k * 2 + 1;
    if (t - (&o + 1i32) * n).is_positive() {
        o + 2
    } else {
        o
    }
}

/// Round the exact quotient with doubled numerator coordinates `p` over the
/// positive denominator `n` to the one or two nearest Hurwitz integers:
/// the closest all-even point and the closest all-odd point.
fn quotient_candidates(p: &[BigInt; 4], n: &BigInt) -> [HurwitzInt; 2] {
    let even = HurwitzInt {
        h: [
            nearest_even_doubled(&p[0], n),
            nearest_even_doubled(&p[1], n),
            nearest_even_doubled(&p[2], n),
            nearest_even_doubled(&p[3], n),
        ],
    };
    let odd = HurwitzInt {
        h: [
            nearest_odd_doubled(&p[0], n),
            nearest_odd_doubled(&p[1], n),
            nearest_odd_doubled(&p[2], n),
            nearest_odd_doubled(&p[3], n),
        ],
    };
    [even, odd]
}

fn pick_quotient(
    candidates: [HurwitzInt; 2],
    remainder_of: impl Fn(&HurwitzInt) -> HurwitzInt,
) -> (HurwitzInt, HurwitzInt) {
    let [c0, c1] = candidates;
    let r0 = remainder_of(&c0);
    let r1 = remainder_of(&c1);
    let (n0, n1) = (r0.norm(), r1.norm());
    if n0 < n1 || (n0 == n1 && c0.lex_key() <= c1.lex_key()) {
        (c0, r0)
    } else {
        (c1, r1)
    }
}

/// Right division: a = b*q + r with N(r) <= N(b)/2 < N(b).
///
/// The quotient approximates b^-1 * a = conj(b)*a / N(b); both the nearest
/// integer point and the nearest half-integer point are tried and the one
/// with the smaller remainder wins (ties: lexicographically smaller q).
pub fn divmod_right(a: &HurwitzInt, b: &HurwitzInt) -> Result<(HurwitzInt, HurwitzInt), HurwitzError> {
    if b.is_zero() {
        return Err(HurwitzError::DivisionByZero);
    }
    let n = BigInt::from(b.norm());
    let p = b.conj().mul(a);
    let cands = quotient_candidates(&p.h, &n);
    Ok(pick_quotient(cands, |q| a.sub(&b.mul(q))))
}

/// Left division: a = q*b + r with N(r) <= N(b)/2 < N(b).
///
/// The quotient approximates a * b^-1 = a*conj(b) / N(b).
pub fn divmod_left(a: &HurwitzInt, b: &HurwitzInt) -> Result<(HurwitzInt, HurwitzInt), HurwitzError> {
    if b.is_zero() {
        return Err(HurwitzError::DivisionByZero);
    }
    let n = BigInt::from(b.norm());
    let p = a.mul(&b.conj());
    let cands = quotient_candidates(&p.h, &n);
    Ok(pick_quotient(cands, |q| a.sub(&q.mul(b))))
}

/// Does d divide a on the right, i.e. a = d*q for some q in I?
pub fn right_divides(d: &HurwitzInt, a: &HurwitzInt) -> bool {
    if d.is_zero() {
        return a.is_zero();
    }
    divmod_right(a, d).expect("d nonzero").1.is_zero()
}

/// Does d divide a on the left, i.e. a = q*d for some q in I?
pub fn left_divides(d: &HurwitzInt, a: &HurwitzInt) -> bool {
    if d.is_zero() {
        return a.is_zero();
    }
    divmod_left(a, d).expect("d nonzero").1.is_zero()
}

/// Canonical unit associate: multiply by the unit (on the stated side) that
/// minimizes the doubled-coordinate lexicographic key.
fn normalize_by_unit(g: HurwitzInt, on_right: bool) -> HurwitzInt {
    let mut best = g.clone();
    for u in HurwitzInt::units() {
        let cand = if on_right { g.mul(&u) } else { u.mul(&g) };
        if cand.lex_key() < best.lex_key() {
            best = cand;
        }
    }
    best
}

/// Greatest common right divisor: the generator g of the right ideal
/// a*I + b*I, so a = g*x and b = g*y, and every d with d | a and d | b on
/// the right also right-divides g. Defined up to a unit on the right;
/// normalized to the lexicographically least associate.
pub fn gcd_right(a: &HurwitzInt, b: &HurwitzInt) -> Result<HurwitzInt, HurwitzError> {
    if a.is_zero() && b.is_zero() {
        return Err(HurwitzError::GcdOfZeros);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = divmod_right(&x, &y).expect("y nonzero");
        x = y;
        y = r;
    }
    Ok(normalize_by_unit(x, true))
}

/// Greatest common left divisor: the generator of I*a + I*b (a = x*g,
/// b = y*g). Defined up to a unit on the left; normalized to the
/// lexicographically least associate.
pub fn gcd_left(a: &HurwitzInt, b: &HurwitzInt) -> Result<HurwitzInt, HurwitzError> {
    if a.is_zero() && b.is_zero() {
        return Err(HurwitzError::GcdOfZeros);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = divmod_left(&x, &y).expect("y nonzero");
        x = y;
        y = r;
    }
    Ok(normalize_by_unit(x, false))
}

impl fmt::Display for HurwitzInt {
    /// Renders "q+ri+sj+tk" with zero components omitted and half-integer
    /// coefficients as fractions over 2: "1+24i-288k",
    /// "1/2+1/2i+1/2j+1/2k", "0".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (c, suffix) in self.h.iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() && c.is_positive() {
                out.push('+');
            }
            if c.is_even() {
                out.push_str(&(c / 2i32).to_string());
            } else {
                out.push_str(&c.to_string());
                out.push_str("/2");
            }
            out.push_str(suffix);
        }
        write!(f, "{out}")
    }
}

impl FromStr for HurwitzInt {
    type Err = HurwitzError;

    /// Parses a sum of signed terms with optional /2 denominators and unit
    /// suffixes i, j, k: "1+24i-288k", "1/2+1/2i+1/2j+1/2k", "-i". The
    /// accumulated coefficients must form a valid Hurwitz integer (all
    /// integers or all halves of odd integers).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || HurwitzError::Parse(s.to_string());
        if compact.is_empty() {
            return Err(bad());
        }
        let bytes = compact.as_bytes();
        let mut pos = 0usize;
        let mut h = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        while pos < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(bad());
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits = &compact[start..pos];
            let halved = pos + 1 < bytes.len() && bytes[pos] == b'/' && bytes[pos + 1] == b'2';
            if halved {
                if digits.is_empty() {
                    return Err(bad());
                }
                pos += 2;
            }
            let slot = match bytes.get(pos) {
                Some(b'i') => {
                    pos += 1;
                    1
                }
                Some(b'j') => {
                    pos += 1;
                    2
                }
                Some(b'k') => {
                    pos += 1;
                    3
                }
                _ => 0,
            };
            // Doubled contribution: n/2 adds n, a plain n adds 2n, a bare
            // unit adds 2.
            let doubled = if digits.is_empty() {
                if slot == 0 {
                    return Err(bad());
                }
                BigInt::from(2)
            } else {
                let value = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(bad)?;
                if halved {
                    value
                } else {
                    value * 2
                }
            };
            h[slot] += sign * doubled;
        }
        let [a, b, c, d] = h;
        HurwitzInt::from_doubled(a, b, c, d)
    }
}
