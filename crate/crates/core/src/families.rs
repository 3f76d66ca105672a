//! Constructors for the explicit high-quality tuple families.
//!
//! Two engines drive everything here. Over the Gaussian integers, solutions
//! of the Pell equation (x − y)² − 3y² = 1 feed quartets of quadratic forms
//! whose fifth powers sum to zero and whose radical collapses far below the
//! largest norm. Over the Hurwitz quaternions, powers of two and solutions
//! of a² − 2b² = 1 feed triples — and, through a table of recursion
//! coefficients, n-tuples — with the same shape.
//!
//! Every constructor re-verifies its defining identities on the exact
//! integers it builds and panics on mismatch: the identities are the
//! correctness spine of the whole artifact, so a silent drift here must
//! never survive construction.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{big_log, pell_stream, Budget};
use crate::conditions::{classify, Classification, ConditionError};
use crate::gaussian::GaussianInt;
use crate::hurwitz::{gcd_left, gcd_right, Axis, HurwitzInt};
use crate::quality::{quality, QualityError, QualityReport, Q_MARGIN};
use crate::ring::Ring;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    /// The quadratic-form quartet needs an odd x.
    #[error("x = {0} must be odd")]
    EvenX(BigInt),
    /// (x, y) must solve (x − y)² − 3y² = 1 with x, y ≥ 1.
    #[error("({x}, {y}) does not satisfy (x - y)^2 - 3y^2 = 1 with x, y >= 1")]
    NotPellForQuartet { x: BigInt, y: BigInt },
    /// (a, b) must solve a² − 2b² = 1 with a, b ≥ 1.
    #[error("({a}, {b}) does not satisfy a^2 - 2b^2 = 1 with a, b >= 1")]
    NotPellForQuaternion { a: BigInt, b: BigInt },
    /// Coefficient rows exist for every m, but only odd m is meaningful
    /// downstream (tuples use m = 2n − 5).
    #[error("m = {0} must be odd")]
    EvenM(u32),
    /// Tuple length outside the supported range.
    #[error("n = {got} outside the supported range {min}..={max}")]
    UnsupportedN { got: u32, min: u32, max: u32 },
    /// The n-tuple construction needs N(x) strictly above the sum of the
    /// coefficient magnitudes; `required` is the least admissible norm.
    #[error("norm {norm} too small for an n = {n} tuple; need at least {required}")]
    NormTooSmall { n: u32, norm: BigUint, required: BigUint },
    #[error("unknown family id {0:?} (expected elkies4, hurwitz-power3, hurwitz-pell3, or hurwitz-n)")]
    UnknownFamily(String),
    #[error("family hurwitz-n needs a tuple length n")]
    MissingN,
}

/// Per-tuple quality lower bound of the quintic Gaussian family.
pub const QUARTET_BOUND: f64 = 10.0 / 3.0;

// ---------------------------------------------------------------------------
// Gaussian quintic quadruples
// ---------------------------------------------------------------------------

/// One member of the Gaussian quintic family: four quadratic forms in a
/// Pell-constrained pair (x, y), raised to the fifth power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElkiesQuadruple {
    pub x: BigInt,
    pub y: BigInt,
    /// The four forms: a = x² + 2xy − 2y², b = −(x² − 2xy − 2y²),
    /// c = (−x² − 2y²) + 2xy·i, d = (x² + 2y²) + 2xy·i.
    pub a: GaussianInt,
    pub b: GaussianInt,
    pub c: GaussianInt,
    pub d: GaussianInt,
    /// (a⁵, b⁵, i·c⁵, i·d⁵) — sums to zero exactly.
    pub tuple: [GaussianInt; 4],
}

/// Build the quadruple for one Pell pair, verifying every defining identity
/// on the spot.
///
/// Preconditions: x odd, x ≥ 1, y ≥ 1, and (x − y)² − 3y² = 1.
pub fn elkies_quadruple(x: &BigInt, y: &BigInt) -> Result<ElkiesQuadruple, FamilyError> {
    if (x % 2i32).is_zero() {
        return Err(FamilyError::EvenX(x.clone()));
    }
    let pell: BigInt = (x - y) * (x - y) - 3i32 * y * y;
    if x.sign() != num_bigint::Sign::Plus || y.sign() != num_bigint::Sign::Plus || !pell.is_one() {
        return Err(FamilyError::NotPellForQuartet { x: x.clone(), y: y.clone() });
    }

    let x2: BigInt = x * x;
    let y2: BigInt = y * y;
    let xy: BigInt = x * y;
    let a = GaussianInt::from_int(&(&x2 + 2i32 * &xy - 2i32 * &y2));
    let b = GaussianInt::from_int(&(-(&x2 - 2i32 * &xy - 2i32 * &y2)));
    let c = GaussianInt::new(-&x2 - 2i32 * &y2, 2i32 * &xy);
    let d = GaussianInt::new(&x2 + 2i32 * &y2, 2i32 * &xy);

    let i = GaussianInt::i_unit();
    let a5 = a.pow(5);
    let b5 = b.pow(5);
    let c5 = i.mul(&c.pow(5));
    let d5 = i.mul(&d.pow(5));

    // The zero sum is the raison d'être of the quartet.
    let total = a5.add(&b5).add(&c5).add(&d5);
    assert!(total.is_zero(), "quintic quartet sum is {total}, not zero, at (x, y) = ({x}, {y})");

    // Norm skeleton: b is a unit, c and d are conjugate-sized, a dominates.
    assert!(b.norm().is_one(), "N(b) = {} at (x, y) = ({x}, {y})", b.norm());
    assert_eq!(c.norm(), d.norm(), "N(c) != N(d) at (x, y) = ({x}, {y})");
    assert!(c.norm() <= a.norm(), "N(c) > N(a) at (x, y) = ({x}, {y})");

    // Linear and bilinear identities among the forms. Any shared prime
    // divisor of two forms would divide these combinations, whose only
    // primes come from x and 2y — and the Pell relation rules those out;
    // that is what makes the pairwise-gcd condition provable.
    let four_xy: BigInt = 4i32 * &xy;
    assert_eq!(a.add(&b), GaussianInt::from_int(&four_xy));
    assert_eq!(c.add(&d), GaussianInt::new(0, four_xy.clone()));
    assert_eq!(
        a.mul(&b).sub(&c.mul(&d)),
        GaussianInt::from_int(&(16i32 * &x2 * &y2)),
        "a·b − c·d mismatch at (x, y) = ({x}, {y})"
    );

    // Fifth-power sum split: a⁵ + b⁵ = 4xy·((2x⁴ − 6y⁴)² + x⁸ + 44y⁸) and
    // i·c⁵ + i·d⁵ is its negative. Nonvanishing of the positive factor is
    // what rules out the signed subsums of the quartet.
    let x4: BigInt = &x2 * &x2;
    let y4: BigInt = &y2 * &y2;
    let split: BigInt = {
        let s: BigInt = 2i32 * &x4 - 6i32 * &y4;
        &four_xy * (&s * &s + &x4 * &x4 + 44i32 * &y4 * &y4)
    };
    assert_eq!(a5.add(&b5), GaussianInt::from_int(&split));
    assert_eq!(c5.add(&d5), GaussianInt::from_int(&split).neg());

    Ok(ElkiesQuadruple { x: x.clone(), y: y.clone(), a, b, c, d, tuple: [a5, b5, c5, d5] })
}

/// Pell pairs (x, y) feeding the quartet family, smallest first:
/// (3, 1), (11, 4), (41, 15), … from the u² − 3v² = 1 stream via
/// (x, y) = (u + v, v). Every emitted x is odd (checked per item).
pub fn elkies_pell_pairs() -> impl Iterator<Item = (BigInt, BigInt)> {
    pell_stream(3, 2, 1)
        .expect("3 is not a square and (2, 1) solves u^2 - 3 v^2 = 1")
        .map(|s| {
            let x = BigInt::from(&s.u + &s.v);
            let y = BigInt::from(s.v);
            assert!(!(&x % 2i32).is_zero(), "Pell stream produced an even x = {x}");
            (x, y)
        })
}

/// The first `count` quadruples in Pell order.
pub fn elkies_stream(count: usize) -> Vec<ElkiesQuadruple> {
    elkies_pell_pairs()
        .take(count)
        .map(|(x, y)| elkies_quadruple(&x, &y).expect("stream pairs satisfy the preconditions"))
        .collect()
}

// ---------------------------------------------------------------------------
// Quaternion power triples
// ---------------------------------------------------------------------------

/// The triple (2^{2ℓ}, 1, −2^{2ℓ} − 1) of central Hurwitz elements.
///
/// Its last entry is a perfect square in the quaternions — it equals
/// (2^ℓ·i + k)², which the constructor re-checks — so the largest norm is a
/// fourth power while the radical stays near 2·(2^{2ℓ} + 1)'s square-free
/// part, pushing the quality toward 2 as ℓ grows.
pub fn hurwitz_power_triple(l: u32) -> [HurwitzInt; 3] {
    let power: BigInt = BigInt::one() << (2 * l);
    let last: BigInt = -&power - 1i32;
    let root = HurwitzInt::from_ints(0, BigInt::one() << l, 0, 1);
    assert_eq!(
        root.square(),
        HurwitzInt::from_int(&last),
        "(2^l i + k)^2 != -2^(2l) - 1 at l = {l}"
    );
    [HurwitzInt::from_int(&power), HurwitzInt::one(), HurwitzInt::from_int(&last)]
}

/// Per-tuple quality lower bound of the power-triple family: 4ℓ/(2ℓ + 2).
pub fn power_triple_bound(l: u32) -> f64 {
    4.0 * l as f64 / (2.0 * l as f64 + 2.0)
}

// ---------------------------------------------------------------------------
// Quaternion Pell triples
// ---------------------------------------------------------------------------

/// Pell pairs (a, b) with a² − 2b² = 1, smallest first:
/// (3, 2), (17, 12), (99, 70), (577, 408), …
pub fn hurwitz_pell_pairs() -> impl Iterator<Item = (BigInt, BigInt)> {
    pell_stream(2, 3, 2)
        .expect("2 is not a square and (3, 2) solves a^2 - 2 b^2 = 1")
        .map(|s| (BigInt::from(s.u), BigInt::from(s.v)))
}

/// The trace-2 quaternion x = y²·(−i)·y²·i built from y = a + b·i + b·j.
///
/// Cross-checked against the closed form 1 + 4ab·i − 8a²b²·k, and against
/// N(x) = N(y)⁴ and Tr(x) = 2.
///
/// Preconditions: a, b ≥ 1 and a² − 2b² = 1.
pub fn hurwitz_pell_x(a: &BigInt, b: &BigInt) -> Result<HurwitzInt, FamilyError> {
    let pell: BigInt = a * a - 2i32 * b * b;
    if a.sign() != num_bigint::Sign::Plus || b.sign() != num_bigint::Sign::Plus || !pell.is_one() {
        return Err(FamilyError::NotPellForQuaternion { a: a.clone(), b: b.clone() });
    }
    let y = HurwitzInt::from_ints(a.clone(), b.clone(), b.clone(), 0);
    let y2 = y.square();
    // (−i)·y²·i is conjugation of y² by the unit i.
    let x = y2.mul(&y2.conjugate_by_unit(Axis::I));

    let ab: BigInt = a * b;
    let closed = HurwitzInt::from_ints(1, 4i32 * &ab, 0, -8i32 * &ab * &ab);
    assert_eq!(x, closed, "product form of x disagrees with 1 + 4ab·i - 8a²b²·k at ({a}, {b})");
    assert_eq!(x.norm(), y.norm().pow(4), "N(x) != N(y)^4 at ({a}, {b})");
    assert_eq!(x.trace(), BigInt::from(2), "Tr(x) != 2 at ({a}, {b})");
    Ok(x)
}

/// The triple (x, x̄, −2) for a Pell pair (a, b).
///
/// Verifies the zero sum (equivalent to Tr(x) = 2) and that the three
/// entries are pairwise coprime on both sides.
pub fn hurwitz_triple(a: &BigInt, b: &BigInt) -> Result<[HurwitzInt; 3], FamilyError> {
    let x = hurwitz_pell_x(a, b)?;
    let xbar = x.conj();
    let minus_two = HurwitzInt::from_int(&BigInt::from(-2));
    let sum = x.add(&xbar).add(&minus_two);
    assert!(sum.is_zero(), "triple sum is {sum}, not zero, at ({a}, {b})");

    let entries = [x, xbar, minus_two];
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let r = gcd_right(&entries[i], &entries[j]).expect("entries are nonzero");
            let l = gcd_left(&entries[i], &entries[j]).expect("entries are nonzero");
            assert!(
                r.is_unit() && l.is_unit(),
                "entries {i} and {j} share a factor at ({a}, {b})"
            );
        }
    }
    Ok(entries)
}

/// Per-tuple quality lower bound of the Pell-triple family:
/// 4·log N(y) / (log N(y) + log 2) with N(y) = a² + 2b².
pub fn pell_triple_bound(a: &BigInt, b: &BigInt) -> f64 {
    let ny: BigUint = (a * a + 2i32 * b * b).magnitude().clone();
    let log_ny = big_log(&ny).value;
    4.0 * log_ny / (log_ny + 2f64.ln())
}

// ---------------------------------------------------------------------------
// Coefficient rows for trace-2 power sums
// ---------------------------------------------------------------------------

/// Coefficients c_0..c_{(m−1)/2} with x^m + x̄^m = Σ c_i·N(x)^i for every
/// quaternion x of trace 2.
///
/// The rows satisfy row(m+2) = 2·row(m+1) − N·row(m) starting from
/// row(0) = row(1) = [2]: substituting x^{m+2} = 2x^{m+1} − N·x^m (the
/// characteristic relation of x + x̄ = 2, x·x̄ = N) and likewise for x̄.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    pub m: u32,
    /// c_0 (the constant term, always 2^m) through c_{(m−1)/2}; signs
    /// strictly alternate starting positive.
    pub coefficients: Vec<BigInt>,
}

impl CoeffTable {
    /// Σ c_i·norm^i — the exact value of x^m + x̄^m at N(x) = norm.
    pub fn evaluate(&self, norm: &BigInt) -> BigInt {
        let mut acc = BigInt::from(0);
        for c in self.coefficients.iter().rev() {
            acc = acc * norm + c;
        }
        acc
    }

    /// Σ |c_i|, the magnitude threshold of the n-tuple construction.
    pub fn abs_sum(&self) -> BigUint {
        let mut acc = BigUint::from(0u32);
        for c in &self.coefficients {
            acc += c.magnitude();
        }
        acc
    }

    /// Π |c_i|, the radical ceiling in the n-tuple quality bound.
    pub fn abs_product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for c in &self.coefficients {
            acc *= c.magnitude();
        }
        acc
    }
}

/// The coefficient row for an odd power m ≥ 1.
pub fn coeff_table(m: u32) -> Result<CoeffTable, FamilyError> {
    if m.is_multiple_of(2) {
        return Err(FamilyError::EvenM(m));
    }
    let mut prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut cur: Vec<BigInt> = vec![BigInt::from(2)];
    for _ in 1..m {
        // next = 2·cur − (shift of prev by one power of the norm).
        let mut next: Vec<BigInt> = cur.iter().map(|c| c * 2i32).collect();
        for (i, c) in prev.iter().enumerate() {
            if i + 1 == next.len() {
                next.push(-c);
            } else {
                next[i + 1] -= c;
            }
        }
        prev = cur;
        cur = next;
    }
    let table = CoeffTable { m, coefficients: cur };
    assert_eq!(table.coefficients.len(), (m as usize).div_ceil(2));
    assert_eq!(table.coefficients[0], BigInt::one() << m, "c_0 != 2^m at m = {m}");
    for (i, c) in table.coefficients.iter().enumerate() {
        let ok = if i % 2 == 0 { c.sign() == num_bigint::Sign::Plus } else { c.sign() == num_bigint::Sign::Minus };
        assert!(ok, "coefficient c_{i} of row m = {m} breaks the sign alternation");
    }
    Ok(table)
}

// ---------------------------------------------------------------------------
// Quaternion n-tuples
// ---------------------------------------------------------------------------

pub const NTUPLE_MIN_N: u32 = 4;
pub const NTUPLE_MAX_N: u32 = 12;

/// The n-tuple (x^m, x̄^m, −c_0, −c_1·N(x), …, −c_{n−3}·N(x)^{n−3}) with
/// m = 2n − 5 and x the trace-2 quaternion of the Pell pair (a, b).
///
/// The zero sum is exactly the coefficient identity for x^m + x̄^m and is
/// re-verified on the built entries. Requires N(x) > Σ|c_i| (else the
/// subset-sum condition downstream could fail); the error reports the
/// least admissible norm.
pub fn hurwitz_ntuple(n: u32, a: &BigInt, b: &BigInt) -> Result<Vec<HurwitzInt>, FamilyError> {
    if !(NTUPLE_MIN_N..=NTUPLE_MAX_N).contains(&n) {
        return Err(FamilyError::UnsupportedN { got: n, min: NTUPLE_MIN_N, max: NTUPLE_MAX_N });
    }
    let x = hurwitz_pell_x(a, b)?;
    let m = 2 * n - 5;
    let table = coeff_table(m).expect("2n - 5 is odd");
    let norm = x.norm();
    let threshold = table.abs_sum();
    if norm <= threshold {
        return Err(FamilyError::NormTooSmall {
            n,
            norm,
            required: threshold + 1u32,
        });
    }
    let norm_int = BigInt::from(norm);
    let mut entries = vec![x.pow(m), x.conj().pow(m)];
    let mut norm_power = BigInt::one();
    for c in &table.coefficients {
        entries.push(HurwitzInt::from_int(&(-(c * &norm_power))));
        norm_power *= &norm_int;
    }
    debug_assert_eq!(entries.len(), n as usize);
    let sum = entries.iter().fold(HurwitzInt::zero(), |acc, e| acc.add(e));
    assert!(sum.is_zero(), "n-tuple sum is {sum}, not zero, at (n, a, b) = ({n}, {a}, {b})");
    Ok(entries)
}

/// Per-tuple quality lower bound of the n-tuple family:
/// 4(2n − 5)·log N(y) / (log N(y) + log Π|c_i|).
pub fn ntuple_bound(n: u32, a: &BigInt, b: &BigInt) -> f64 {
    let m = 2 * n - 5;
    let table = coeff_table(m).expect("2n - 5 is odd");
    let ny: BigUint = (a * a + 2i32 * b * b).magnitude().clone();
    let log_ny = big_log(&ny).value;
    let log_c = big_log(&table.abs_product()).value;
    4.0 * m as f64 * log_ny / (log_ny + log_c)
}

// ---------------------------------------------------------------------------
// Uniform family access for generation, scoring, and persistence
// ---------------------------------------------------------------------------

/// Which family to generate, with its per-family shape parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Gaussian quintic quadruples, indexed by Pell pairs of (x−y)²−3y²=1.
    Elkies4,
    /// Power triples (2^{2ℓ}, 1, −2^{2ℓ}−1), indexed by ℓ = 1, 2, ….
    HurwitzPower3,
    /// Pell triples (x, x̄, −2), indexed by Pell pairs of a²−2b²=1.
    HurwitzPell3,
    /// n-tuples from the coefficient rows, indexed by qualifying Pell pairs.
    HurwitzN { n: u32 },
}

impl FamilySpec {
    pub fn id(&self) -> &'static str {
        match self {
            FamilySpec::Elkies4 => "elkies4",
            FamilySpec::HurwitzPower3 => "hurwitz-power3",
            FamilySpec::HurwitzPell3 => "hurwitz-pell3",
            FamilySpec::HurwitzN { .. } => "hurwitz-n",
        }
    }

    /// The ring the family's tuples live in.
    pub fn ring(&self) -> Ring {
        match self {
            FamilySpec::Elkies4 => Ring::Zi,
            _ => Ring::Hurwitz,
        }
    }

    /// Parse a CLI family id; `n` is required for (and only used by)
    /// "hurwitz-n".
    pub fn from_id(id: &str, n: Option<u32>) -> Result<FamilySpec, FamilyError> {
        match id {
            "elkies4" => Ok(FamilySpec::Elkies4),
            "hurwitz-power3" => Ok(FamilySpec::HurwitzPower3),
            "hurwitz-pell3" => Ok(FamilySpec::HurwitzPell3),
            "hurwitz-n" => n.map(|n| FamilySpec::HurwitzN { n }).ok_or(FamilyError::MissingN),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

/// A generated tuple in whichever ring its family uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyTuple {
    Gaussian(Vec<GaussianInt>),
    Hurwitz(Vec<HurwitzInt>),
}

impl FamilyTuple {
    pub fn len(&self) -> usize {
        match self {
            FamilyTuple::Gaussian(v) => v.len(),
            FamilyTuple::Hurwitz(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Canonical display strings of the entries, parseable by the ring
    /// modules.
    pub fn entry_strings(&self) -> Vec<String> {
        match self {
            FamilyTuple::Gaussian(v) => v.iter().map(|e| e.to_string()).collect(),
            FamilyTuple::Hurwitz(v) => v.iter().map(|e| e.to_string()).collect(),
        }
    }

    /// Condition classification, dispatched over the underlying ring.
    pub fn classify(&self, f_set: &[u64]) -> Result<Classification, ConditionError> {
        match self {
            FamilyTuple::Gaussian(v) => classify(v, f_set),
            FamilyTuple::Hurwitz(v) => classify(v, f_set),
        }
    }

    /// Quality report, dispatched over the underlying ring.
    pub fn quality(&self, budget: &Budget) -> Result<QualityReport, QualityError> {
        match self {
            FamilyTuple::Gaussian(v) => quality(v, budget),
            FamilyTuple::Hurwitz(v) => quality(v, budget),
        }
    }
}

/// One generated family member, positioned for resumable streams.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratedTuple {
    pub family: FamilySpec,
    /// Zero-based position in the family's enumeration order.
    pub index: u64,
    /// Human-readable generation parameters, e.g. "x=3,y=1" or "l=4".
    pub params: String,
    /// The construction's per-tuple quality lower bound.
    pub bound: f64,
    pub tuple: FamilyTuple,
}

/// Generate `count` members of `spec` starting at `start_index` in the
/// family's enumeration order (index 0 is the smallest member).
pub fn generate(
    spec: FamilySpec,
    start_index: u64,
    count: u64,
) -> Result<Vec<GeneratedTuple>, FamilyError> {
    let start = usize::try_from(start_index).expect("start index fits a usize");
    let count = usize::try_from(count).expect("count fits a usize");
    let mut out = Vec::with_capacity(count);
    match spec {
        FamilySpec::Elkies4 => {
            for (k, (x, y)) in elkies_pell_pairs().enumerate().skip(start).take(count) {
                let quad = elkies_quadruple(&x, &y)?;
                out.push(GeneratedTuple {
                    family: spec,
                    index: k as u64,
                    params: format!("x={x},y={y}"),
                    bound: QUARTET_BOUND,
                    tuple: FamilyTuple::Gaussian(quad.tuple.to_vec()),
                });
            }
        }
        FamilySpec::HurwitzPower3 => {
            for k in start..start + count {
                let l = u32::try_from(k + 1).expect("power exponent fits a u32");
                out.push(GeneratedTuple {
                    family: spec,
                    index: k as u64,
                    params: format!("l={l}"),
                    bound: power_triple_bound(l),
                    tuple: FamilyTuple::Hurwitz(hurwitz_power_triple(l).to_vec()),
                });
            }
        }
        FamilySpec::HurwitzPell3 => {
            for (k, (a, b)) in hurwitz_pell_pairs().enumerate().skip(start).take(count) {
                let triple = hurwitz_triple(&a, &b)?;
                out.push(GeneratedTuple {
                    family: spec,
                    index: k as u64,
                    params: format!("a={a},b={b}"),
                    bound: pell_triple_bound(&a, &b),
                    tuple: FamilyTuple::Hurwitz(triple.to_vec()),
                });
            }
        }
        FamilySpec::HurwitzN { n } => {
            if !(NTUPLE_MIN_N..=NTUPLE_MAX_N).contains(&n) {
                return Err(FamilyError::UnsupportedN {
                    got: n,
                    min: NTUPLE_MIN_N,
                    max: NTUPLE_MAX_N,
                });
            }
            // Norms grow along the Pell stream, so the pairs below the
            // magnitude threshold form a finite prefix; skip them.
            let qualifying = hurwitz_pell_pairs().filter_map(|(a, b)| {
                match hurwitz_ntuple(n, &a, &b) {
                    Ok(entries) => Some((a, b, entries)),
                    Err(FamilyError::NormTooSmall { .. }) => None,
                    Err(e) => panic!("Pell stream pair rejected: {e}"),
                }
            });
            for (k, (a, b, entries)) in qualifying.enumerate().skip(start).take(count) {
                out.push(GeneratedTuple {
                    family: spec,
                    index: k as u64,
                    params: format!("n={n},a={a},b={b}"),
                    bound: ntuple_bound(n, &a, &b),
                    tuple: FamilyTuple::Hurwitz(entries),
                });
            }
        }
    }
    Ok(out)
}

/// Does the generated tuple meet its construction's quality bound?
/// (Always true mathematically; this evaluates the inequality on the
/// computed report, with the standard comparison margin.)
pub fn verify_quality_bound(t: &GeneratedTuple, budget: &Budget) -> Result<bool, QualityError> {
    let report = t.tuple.quality(budget)?;
    Ok(report.q >= t.bound - Q_MARGIN)
}
