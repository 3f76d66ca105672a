//! Streams of solutions to the Pell equation u^2 - d*v^2 = 1.
//!
//! Successive solutions come from multiplying units in Z[sqrt(d)]: if
//! (u0, v0) is the fundamental solution, then (u, v) -> (u*u0 + d*v*v0,
//! u*v0 + v*u0) walks the full solution sequence. The stream yields the
//! fundamental solution first and never terminates on its own.

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

/// One solution of u^2 - d*v^2 = 1 with u, v >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellSolution {
    pub u: BigUint,
    pub v: BigUint,
    pub d: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PellError {
    #[error("d = {0} is a perfect square; u^2 - d*v^2 = 1 has no solutions with v >= 1")]
    SquareD(u64),
    #[error("({u}, {v}) does not satisfy u^2 - {d}*v^2 = 1 with v >= 1")]
    BadFundamental { u: u64, v: u64, d: u64 },
}

/// Infinite iterator of Pell solutions for `d`, seeded by the fundamental
/// solution `(u0, v0)`. Validates that `d >= 2` is not a perfect square and
/// that the seed actually solves the equation.
pub fn pell_stream(d: u64, u0: u64, v0: u64) -> Result<impl Iterator<Item = PellSolution>, PellError> {
    let root = (d as f64).sqrt() as u64;
    for r in root.saturating_sub(1)..=root + 1 {
        if r * r == d {
            return Err(PellError::SquareD(d));
        }
    }
    let lhs = (u0 as u128) * (u0 as u128);
    let rhs = (d as u128) * (v0 as u128) * (v0 as u128) + 1;
    if v0 == 0 || lhs != rhs {
        return Err(PellError::BadFundamental { u: u0, v: v0, d });
    }
    let (bu0, bv0) = (BigUint::from(u0), BigUint::from(v0));
    let bd = BigUint::from(d);
    let mut state: Option<(BigUint, BigUint)> = None;
    Ok(std::iter::from_fn(move || {
        let next = match &state {
            None => (bu0.clone(), bv0.clone()),
            Some((u, v)) => (u * &bu0 + &bd * v * &bv0, u * &bv0 + v * &bu0),
        };
        state = Some(next.clone());
        Some(PellSolution { u: next.0, v: next.1, d })
    }))
}

impl PellSolution {
    /// Check u^2 - d*v^2 == 1 exactly.
    pub fn verify(&self) -> bool {
        let lhs = &self.u * &self.u;
        let rhs = BigUint::from(self.d) * &self.v * &self.v + 1u32;
        !self.v.is_zero() && lhs == rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn take_pairs(d: u64, u0: u64, v0: u64, k: usize) -> Vec<(BigUint, BigUint)> {
        pell_stream(d, u0, v0)
            .expect("valid stream")
            .take(k)
            .map(|s| (s.u, s.v))
            .collect()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn d3_stream_from_fundamental() {
        let got = take_pairs(3, 2, 1, 6);
        let want: Vec<(BigUint, BigUint)> = [(2u64, 1u64), (7, 4), (26, 15), (97, 56), (362, 209), (1351, 780)]
            .iter()
            .map(|&(u, v)| (big(u), big(v)))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn d3_stream_from_second_solution() {
        // Seeding with a non-fundamental solution walks its own subsequence.
        let got = take_pairs(3, 7, 4, 1);
        assert_eq!(got, vec![(big(7), big(4))]);
    }

    #[test]
    fn d2_stream_from_fundamental() {
        let got = take_pairs(2, 3, 2, 5);
        let want: Vec<(BigUint, BigUint)> = [(3u64, 2u64), (17, 12), (99, 70), (577, 408), (3363, 2378)]
            .iter()
            .map(|&(u, v)| (big(u), big(v)))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn every_item_solves_the_equation() {
        for sol in pell_stream(3, 2, 1).unwrap().take(40) {
            assert!(sol.verify());
        }
        for sol in pell_stream(2, 3, 2).unwrap().take(40) {
            assert!(sol.verify());
        }
    }

    #[test]
    fn square_d_is_rejected() {
        assert_eq!(pell_stream(4, 3, 1).err(), Some(PellError::SquareD(4)));
        assert_eq!(pell_stream(9, 3, 1).err(), Some(PellError::SquareD(9)));
        assert_eq!(
            pell_stream(1_000_000, 3, 1).err(),
            Some(PellError::SquareD(1_000_000))
        );
    }

    #[test]
    fn bad_seed_is_rejected() {
        assert_eq!(
            pell_stream(3, 2, 2).err(),
            Some(PellError::BadFundamental { u: 2, v: 2, d: 3 })
        );
        // v = 0 solves the equation trivially but seeds a constant stream.
        assert_eq!(
            pell_stream(3, 1, 0).err(),
            Some(PellError::BadFundamental { u: 1, v: 0, d: 3 })
        );
    }

    #[test]
    fn solutions_grow_monotonically() {
        let items: Vec<_> = pell_stream(2, 3, 2).unwrap().take(10).collect();
        for w in items.windows(2) {
            assert!(w[0].u < w[1].u);
            assert!(w[0].v < w[1].v);
        }
    }
}
