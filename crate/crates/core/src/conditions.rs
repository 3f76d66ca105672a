//! Admissibility predicates for zero-sum tuples, generic over the ring.
//!
//! A tuple (a_1, ..., a_n) of nonzero ring elements is screened by six
//! conditions:
//!
//! - (Z)  the entries sum to zero;
//! - (S1) no vanishing subsum: no coefficient vector over {0, 1} that uses
//!   at least one 0 and at least one 1 makes sum(b_m * a_m) = 0;
//! - (S2) like (S1) but with coefficients from {-1, 0, 1};
//! - (G1) the one-sided gcds (left and right) of all n entries are units;
//! - (G2) for every pair of entries, both one-sided gcds are units;
//! - (F)  no entry is a multiple of any f in a finite set F of rational
//!   integers with min F >= 3.
//!
//! The admissible class requires Z, S1, G1; the restricted class requires
//! Z, S2, G2, F. Since {0,1} is contained in {-1,0,1} and pairwise
//! coprimality is weaker than joint coprimality, S2 implies S1 and G2
//! implies G1, so the restricted class is contained in the admissible one.
//!
//! Subsum checks enumerate all 2^n (resp. 3^n) coefficient vectors; tuples
//! longer than [`SUBSUM_MAX_LEN`] are rejected rather than silently
//! truncated.

use crate::ring::RingElem;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Hard cap on subsum enumeration length (3^24 ternary vectors is already
/// a stretch; anything longer is certainly a mistake).
pub const SUBSUM_MAX_LEN: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConditionError {
    #[error("zero-sum tuples need at least 3 entries, got {0}")]
    TooShort(usize),
    #[error("subsum enumeration is capped at {max} entries, got {got}")]
    TooLong { got: usize, max: usize },
    #[error("tuple entries must be nonzero (entry {0} is zero)")]
    ZeroEntry(usize),
    #[error("divisor set must have minimum >= 3, got {0}")]
    SmallDivisor(u64),
}

/// One of the six screening conditions, for failure reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Condition {
    Z,
    S1,
    S2,
    G1,
    G2,
    F,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Z => "Z",
            Condition::S1 => "S1",
            Condition::S2 => "S2",
            Condition::G1 => "G1",
            Condition::G2 => "G2",
            Condition::F => "F",
        };
        f.write_str(s)
    }
}

/// Evaluated flags for all six conditions plus the divisor set they were
/// evaluated against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionProfile {
    pub zero_sum: bool,
    pub s1: bool,
    pub s2: bool,
    pub g1: bool,
    pub g2: bool,
    pub f: bool,
    pub f_set: Vec<u64>,
}

/// Result of [`classify`]: the profile, the two memberships, and every
/// condition that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub profile: ConditionProfile,
    pub in_a: bool,
    pub in_u: bool,
    pub failed: Vec<Condition>,
}

fn validate_nonzero<R: RingElem>(a: &[R]) -> Result<(), ConditionError> {
    for (idx, entry) in a.iter().enumerate() {
        if entry.is_zero() {
            return Err(ConditionError::ZeroEntry(idx));
        }
    }
    Ok(())
}

fn validate_f_set(f_set: &[u64]) -> Result<(), ConditionError> {
    if let Some(&small) = f_set.iter().find(|&&f| f < 3) {
        return Err(ConditionError::SmallDivisor(small));
    }
    Ok(())
}

/// Condition (Z): the entries sum to the ring zero. Requires n >= 3.
pub fn check_zero_sum<R: RingElem>(a: &[R]) -> Result<bool, ConditionError> {
    if a.len() < 3 {
        return Err(ConditionError::TooShort(a.len()));
    }
    validate_nonzero(a)?;
    let mut sum = R::zero();
    for entry in a {
        sum = sum.add(entry);
    }
    Ok(sum.is_zero())
}

/// Shared subsum search. Coefficients range over {0, 1} (`signed = false`)
/// or {-1, 0, 1} (`signed = true`); a hit needs at least one 0, at least
/// one +1, and a vanishing weighted sum. Returns true when NO hit exists.
fn no_vanishing_subsum<R: RingElem>(a: &[R], signed: bool) -> Result<bool, ConditionError> {
    if a.len() > SUBSUM_MAX_LEN {
        return Err(ConditionError::TooLong { got: a.len(), max: SUBSUM_MAX_LEN });
    }
    validate_nonzero(a)?;

    // Depth-first over coefficient positions with an incremental sum.
    fn search<R: RingElem>(a: &[R], pos: usize, sum: &R, zeros: usize, ones: usize, signed: bool) -> bool {
        if pos == a.len() {
            return zeros > 0 && ones > 0 && sum.is_zero();
        }
        if search(a, pos + 1, sum, zeros + 1, ones, signed) {
            return true;
        }
        let plus = sum.add(&a[pos]);
        if search(a, pos + 1, &plus, zeros, ones + 1, signed) {
            return true;
        }
        if signed {
            let minus = sum.sub(&a[pos]);
            if search(a, pos + 1, &minus, zeros, ones, signed) {
                return true;
            }
        }
        false
    }

    Ok(!search(a, 0, &R::zero(), 0, 0, signed))
}

/// Condition (S1): no vanishing subsum with coefficients in {0, 1}.
pub fn check_s1<R: RingElem>(a: &[R]) -> Result<bool, ConditionError> {
    no_vanishing_subsum(a, false)
}

/// Condition (S2): no vanishing subsum with coefficients in {-1, 0, 1}.
pub fn check_s2<R: RingElem>(a: &[R]) -> Result<bool, ConditionError> {
    no_vanishing_subsum(a, true)
}

/// Condition (G1): the left gcd and the right gcd of all entries are both
/// units. Entries must be nonzero.
pub fn check_g1<R: RingElem>(a: &[R]) -> Result<bool, ConditionError> {
    validate_nonzero(a)?;
    if a.is_empty() {
        return Ok(true);
    }
    for one_sided in [R::gcd_right as fn(&R, &R) -> R, R::gcd_left] {
        let mut g = a[0].clone();
        for entry in &a[1..] {
            if g.is_unit() {
                break;
            }
            g = one_sided(&g, entry);
        }
        if !g.is_unit() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Condition (G2): every pair of entries has unit gcds on both sides.
pub fn check_g2<R: RingElem>(a: &[R]) -> Result<bool, ConditionError> {
    validate_nonzero(a)?;
    for (idx, x) in a.iter().enumerate() {
        for y in &a[idx + 1..] {
            if !R::gcd_right(x, y).is_unit() || !R::gcd_left(x, y).is_unit() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Condition (F): no entry is divisible, on either side, by any f in the
/// divisor set (f taken as the embedded central integer). Empty set: true.
pub fn check_f<R: RingElem>(a: &[R], f_set: &[u64]) -> Result<bool, ConditionError> {
    validate_nonzero(a)?;
    validate_f_set(f_set)?;
    for &f in f_set {
        let divisor = R::from_int(&f.into());
        for entry in a {
            if R::divides_right(&divisor, entry) || R::divides_left(&divisor, entry) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Evaluate all six conditions and both memberships.
///
/// Admissible (in_a) means Z, S1, G1 all hold; restricted (in_u) means Z,
/// S2, G2, F all hold. `failed` lists every condition that is false.
pub fn classify<R: RingElem>(a: &[R], f_set: &[u64]) -> Result<Classification, ConditionError> {
    let zero_sum = check_zero_sum(a)?;
    let s1 = check_s1(a)?;
    let s2 = check_s2(a)?;
    let g1 = check_g1(a)?;
    let g2 = check_g2(a)?;
    let f = check_f(a, f_set)?;
    let profile = ConditionProfile {
        zero_sum,
        s1,
        s2,
        g1,
        g2,
        f,
        f_set: f_set.to_vec(),
    };
    let mut failed = Vec::new();
    for (ok, label) in [
        (zero_sum, Condition::Z),
        (s1, Condition::S1),
        (s2, Condition::S2),
        (g1, Condition::G1),
        (g2, Condition::G2),
        (f, Condition::F),
    ] {
        if !ok {
            failed.push(label);
        }
    }
    Ok(Classification {
        in_a: zero_sum && s1 && g1,
        in_u: zero_sum && s2 && g2 && f,
        profile,
        failed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianInt;
    use crate::hurwitz::HurwitzInt;
    use num_bigint::BigInt;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn zero_sum_examples() {
        assert!(check_zero_sum(&ints(&[1, 2, -3])).unwrap());
        assert!(!check_zero_sum(&ints(&[1, 1, 1])).unwrap());
        assert_eq!(check_zero_sum(&ints(&[1, -1])).err(), Some(ConditionError::TooShort(2)));
        assert_eq!(
            check_zero_sum(&ints(&[1, 0, -1])).err(),
            Some(ConditionError::ZeroEntry(1))
        );
    }

    #[test]
    fn zero_sum_of_a_trace_two_conjugate_pair() {
        // x + conj(x) - 2 = 0 whenever Tr(x) = 2.
        let x = HurwitzInt::from_ints(1, 24, 0, -288);
        let tuple = vec![x.clone(), x.conj(), HurwitzInt::from_int(&BigInt::from(-2))];
        assert!(check_zero_sum(&tuple).unwrap());
    }

    #[test]
    fn s1_examples() {
        // b = (1, 1, 0, 0) vanishes on (1, -1, 2, -2).
        assert!(!check_s1(&ints(&[1, -1, 2, -2])).unwrap());
        assert!(check_s1(&ints(&[1, 2, -3])).unwrap());
        assert!(check_s1(&ints(&[1, 1, -2])).unwrap());
    }

    #[test]
    fn s2_examples() {
        assert!(check_s2(&ints(&[1, 2, -3])).unwrap());
        // b = (1, -1, 0) vanishes on (1, 1, -2).
        assert!(!check_s2(&ints(&[1, 1, -2])).unwrap());
        // The all-entries subsum does not count: it has no 0 coefficient.
        assert!(check_s2(&ints(&[1, 2, 3])).unwrap());
    }

    #[test]
    fn s2_on_a_quaternion_conjugate_pair() {
        let x = HurwitzInt::from_ints(1, 24, 0, -288);
        let tuple = vec![x.clone(), x.conj(), HurwitzInt::from_int(&BigInt::from(-2))];
        assert!(check_s2(&tuple).unwrap());
    }

    #[test]
    fn subsum_length_cap() {
        let long = ints(&[1; 25]);
        assert_eq!(
            check_s1(&long).err(),
            Some(ConditionError::TooLong { got: 25, max: SUBSUM_MAX_LEN })
        );
        assert!(check_s2(&ints(&[1; 24][..9])).is_ok());
    }

    /// Independent oracle: check S1/S2 by iterating coefficient vectors as
    /// base-2/base-3 counters over i64 entries, no recursion, no ring.
    fn oracle_subsum_free(entries: &[i64], signed: bool) -> bool {
        let n = entries.len();
        let base = if signed { 3u64 } else { 2 };
        let total = base.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let (mut sum, mut zeros, mut ones) = (0i64, 0usize, 0usize);
            for &e in entries {
                let digit = (c % base) as i64;
                c /= base;
                match digit {
                    0 => zeros += 1,
                    1 => {
                        ones += 1;
                        sum += e;
                    }
                    _ => sum -= e,
                }
            }
            if zeros > 0 && ones > 0 && sum == 0 {
                return false;
            }
        }
        true
    }

    #[test]
    fn subsum_checks_match_the_counter_oracle() {
        let cases: &[&[i64]] = &[
            &[1, 2, -3],
            &[1, 1, -2],
            &[1, -1, 2, -2],
            &[3, 5, -8],
            &[2, 3, -5, 7, -7],
            &[4, -4, 1, 2, -3],
            &[6, 10, 15, -31],
            &[1, 2, 4, 8, -15],
        ];
        for &entries in cases {
            let tuple = ints(entries);
            assert_eq!(
                check_s1(&tuple).unwrap(),
                oracle_subsum_free(entries, false),
                "S1 on {entries:?}"
            );
            assert_eq!(
                check_s2(&tuple).unwrap(),
                oracle_subsum_free(entries, true),
                "S2 on {entries:?}"
            );
        }
    }

    #[test]
    fn s2_implies_s1_exhaustively_for_small_tuples() {
        // All 3-tuples over [-4, 4] without zeros.
        let range: Vec<i64> = (-4..=4).filter(|&v| v != 0).collect();
        for &a in &range {
            for &b in &range {
                for &c in &range {
                    let tuple = ints(&[a, b, c]);
                    let s1 = check_s1(&tuple).unwrap();
                    let s2 = check_s2(&tuple).unwrap();
                    assert!(!s2 || s1, "S2 must imply S1 on ({a}, {b}, {c})");
                }
            }
        }
    }

    #[test]
    fn g1_g2_examples() {
        assert!(!check_g2(&ints(&[6, 10, 15])).unwrap());
        assert!(check_g2(&ints(&[2, 3, -5])).unwrap());
        // Jointly coprime but pairwise not: G1 holds, G2 fails.
        assert!(check_g1(&ints(&[6, 10, 15])).unwrap());
        assert!(!check_g1(&ints(&[6, 10, 8])).unwrap());
    }

    #[test]
    fn g2_on_a_quaternion_conjugate_pair() {
        let x = HurwitzInt::from_ints(1, 24, 0, -288);
        let tuple = vec![x.clone(), x.conj(), HurwitzInt::from_int(&BigInt::from(-2))];
        assert!(check_g2(&tuple).unwrap());
        assert!(check_g1(&tuple).unwrap());
    }

    #[test]
    fn g2_implies_g1_randomized() {
        // Structured samples where the implication is exercised both ways.
        let samples: &[&[i64]] = &[
            &[2, 3, -5],
            &[6, 10, 15],
            &[4, 6, -10],
            &[9, 16, -25],
            &[5, 7, 11, -23],
            &[12, 18, 30, -60],
        ];
        for &entries in samples {
            let tuple = ints(entries);
            let g1 = check_g1(&tuple).unwrap();
            let g2 = check_g2(&tuple).unwrap();
            assert!(!g2 || g1, "G2 must imply G1 on {entries:?}");
        }
    }

    #[test]
    fn f_condition_examples() {
        // -8 = 4 * (-2) is a multiple of 4; multiples of either sign count.
        assert!(!check_f(&ints(&[3, 5, -8]), &[4]).unwrap());
        assert!(check_f(&ints(&[3, 5, -7]), &[4]).unwrap());
        assert!(!check_f(&ints(&[4, 5, -9]), &[4]).unwrap());
        assert!(check_f(&ints(&[4, 5, -9]), &[]).unwrap());
        assert_eq!(
            check_f(&ints(&[1, 2, 3]), &[2, 4]).err(),
            Some(ConditionError::SmallDivisor(2))
        );
    }

    #[test]
    fn f_condition_over_the_gaussian_ring() {
        // 3-3i = 3*(1-i) is a multiple of 3 in Z[i], so F = {3} rejects the
        // first tuple; replacing it with 1+2i (norm 5, coprime to 3) passes.
        let tuple = vec![GaussianInt::new(3, -3), GaussianInt::new(1, 1), GaussianInt::new(5, 0)];
        assert!(!check_f(&tuple, &[3]).unwrap());
        let tuple = vec![GaussianInt::new(1, 2), GaussianInt::new(1, 1), GaussianInt::new(5, 0)];
        assert!(check_f(&tuple, &[3]).unwrap());
    }

    #[test]
    fn classify_reports_memberships_and_failures() {
        // (1, 1, -2): Z, S1, G1, G2, F hold; S2 fails via b = (1, -1, 0).
        let c = classify(&ints(&[1, 1, -2]), &[]).unwrap();
        assert!(c.in_a);
        assert!(!c.in_u);
        assert_eq!(c.failed, vec![Condition::S2]);
        assert!(c.profile.zero_sum && c.profile.s1 && c.profile.g1 && c.profile.g2 && c.profile.f);
        assert!(!c.profile.s2);

        let c = classify(&ints(&[2, 3, -5]), &[]).unwrap();
        assert!(c.in_a && c.in_u);
        assert!(c.failed.is_empty());

        // Restricted membership always implies admissible membership.
        let c = classify(&ints(&[1, 2, -3]), &[7]).unwrap();
        assert!(!c.in_u || c.in_a);
    }

    #[test]
    fn classify_agrees_across_rings_on_integer_tuples() {
        // Ring-independent conditions (Z, S1, S2) must agree for the same
        // rational integers viewed in Z, Z[i], and the Hurwitz order.
        let cases: &[&[i64]] = &[&[1, 2, -3], &[1, 1, -2], &[3, 5, -8], &[1, -1, 2, -2]];
        for &entries in cases {
            let z_tuple = ints(entries);
            let g_tuple: Vec<GaussianInt> =
                z_tuple.iter().map(<GaussianInt as RingElem>::from_int).collect();
            let h_tuple: Vec<HurwitzInt> =
                z_tuple.iter().map(<HurwitzInt as RingElem>::from_int).collect();
            let z = classify(&z_tuple, &[]).unwrap();
            let g = classify(&g_tuple, &[]).unwrap();
            let h = classify(&h_tuple, &[]).unwrap();
            for (name, other) in [("Zi", &g.profile), ("Hurwitz", &h.profile)] {
                assert_eq!(z.profile.zero_sum, other.zero_sum, "{name} Z on {entries:?}");
                assert_eq!(z.profile.s1, other.s1, "{name} S1 on {entries:?}");
                assert_eq!(z.profile.s2, other.s2, "{name} S2 on {entries:?}");
            }
        }
    }
}
