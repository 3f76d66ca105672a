//! Natural logarithms of arbitrary-precision integers with error tracking.
//!
//! Qualities are ratios of logarithms of norms that routinely exceed 2^53,
//! so `ln` cannot go through a lossy integer-to-float cast. Instead we take
//! the top 53 bits exactly and add the discarded bit count times ln 2:
//! `ln(n) = ln(mantissa) + shift * ln 2`, with every rounding step charged
//! to an explicit absolute error bound.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// A logarithm together with a bound on its absolute error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BigLog {
    pub value: f64,
    pub abs_error_bound: f64,
}

/// ln(n) for n >= 1. `big_log(1)` is exactly zero with zero error.
///
/// The error bound is conservative: the result is correct to within a few
/// ulps, i.e. relative error well under 1e-12 for every n >= 2.
pub fn big_log(n: &BigUint) -> BigLog {
    assert!(!n.is_zero(), "big_log requires n >= 1");
    let bits = n.bits();
    if bits <= 53 {
        let exact = n.to_u64().expect("fits in 53 bits") as f64;
        let value = exact.ln();
        if value == 0.0 {
            return BigLog { value: 0.0, abs_error_bound: 0.0 };
        }
        // One rounding from ln; the u64 -> f64 conversion was exact.
        return BigLog { value, abs_error_bound: f64::EPSILON * (2.0 * value.abs() + 4.0) };
    }
    let shift = bits - 53;
    let top = (n >> shift).to_u64().expect("exactly 53 bits");
    // n = top * 2^shift * (1 + theta) with 0 <= theta < 2^-52, so dropping
    // the low bits costs at most ln(1 + 2^-52) < 2^-52 = f64::EPSILON * 2.
    let value = (top as f64).ln() + shift as f64 * std::f64::consts::LN_2;
    // Charges: truncation (2 eps), ln rounding, LN_2 representation, the
    // multiply and the add, each at most eps relative to the final value.
    let abs_error_bound = f64::EPSILON * (2.0 * value + 40.0);
    BigLog { value, abs_error_bound }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn log_of_one_is_exactly_zero() {
        let l = big_log(&BigUint::from(1u32));
        assert_eq!(l.value, 0.0);
        assert_eq!(l.abs_error_bound, 0.0);
    }

    #[test]
    fn log_of_two() {
        let l = big_log(&BigUint::from(2u32));
        assert_eq!(l.value, std::f64::consts::LN_2);
        assert!(l.abs_error_bound < 1e-14);
    }

    #[test]
    fn log_of_2_pow_100() {
        let n = BigUint::from(1u32) << 100;
        let l = big_log(&n);
        let want = 100.0 * std::f64::consts::LN_2;
        assert!((l.value - want).abs() <= l.abs_error_bound.max(1e-12));
        assert!((l.value - want).abs() < 1e-10);
    }

    #[test]
    fn log_of_10_pow_50() {
        let n = BigUint::from(10u32).pow(50);
        let l = big_log(&n);
        assert!((l.value - 115.12925464970229).abs() < 1e-10);
    }

    #[test]
    fn additive_over_products() {
        // ln(a*b) = ln(a) + ln(b) within the combined error bounds.
        let pairs: [(u64, u64); 4] = [
            (3, 5),
            (12345, 67891),
            (u64::MAX, 987_654_321),
            (1 << 62, (1 << 61) + 12345),
        ];
        for (a, b) in pairs {
            let (ba, bb) = (BigUint::from(a), BigUint::from(b));
            let prod = &ba * &bb;
            let (la, lb, lp) = (big_log(&ba), big_log(&bb), big_log(&prod));
            let slack = la.abs_error_bound + lb.abs_error_bound + lp.abs_error_bound + 1e-12;
            assert!(
                (la.value + lb.value - lp.value).abs() <= slack,
                "a = {a}, b = {b}"
            );
        }
    }

    #[test]
    fn relative_error_stays_tiny() {
        // Spot-check against exact powers where the true log is known in
        // closed form: n = 3^k has ln(n) = k * ln(3).
        let ln3 = 3f64.ln();
        for k in [1u32, 10, 100, 1000] {
            let n = BigUint::from(3u32).pow(k);
            let l = big_log(&n);
            let want = k as f64 * ln3;
            assert!((l.value - want).abs() / want < 1e-12, "k = {k}");
            assert!(l.abs_error_bound / l.value < 1e-12, "bound itself is tiny, k = {k}");
        }
    }

    #[test]
    #[should_panic(expected = "n >= 1")]
    fn zero_is_rejected() {
        big_log(&BigUint::zero());
    }
}
