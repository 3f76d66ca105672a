//! Tuple quality: log(max norm) / log(rad(product of norms)), computed over
//! exact integers with certified floating-point error bounds.
//!
//! The radical is assembled from per-entry norm factorizations — the prime
//! support of a product is the union of the supports of its parts — so a
//! tuple of huge perfect-power norms never forces a factorization of the
//! full product. When an entry's norm resists the effort budget, the
//! unresolved cofactor is folded into the radical wholesale; the radical
//! then over-estimates and the reported quality is a certified lower bound.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::arith::{big_log, factorize, Budget};
use crate::ring::RingElem;

/// Comparison margin for quality values: a tuple passes a bound `B` when
/// `q >= B - Q_MARGIN`. Wide enough to absorb every propagated log error
/// (see [`QualityReport::abs_error`]), narrow enough to reject any tuple
/// whose true quality sits below the bound by a visible amount.
pub const Q_MARGIN: f64 = 1e-9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QualityError {
    /// Quality requires every entry nonzero (a zero norm has no logarithm).
    #[error("entry {0} is zero; quality needs nonzero entries")]
    ZeroEntry(usize),
    /// Every entry is a unit: the norm product is 1, its radical is 1, and
    /// the defining ratio divides by log 1.
    #[error("quality undefined: all entries are units, so the radical is 1")]
    Undefined,
    #[error("quality of an empty tuple")]
    Empty,
}

/// Quality of one tuple, with the exact integers behind the ratio.
#[derive(Clone, Debug, PartialEq)]
pub struct QualityReport {
    /// Largest entry norm.
    pub max_norm: BigUint,
    /// Product of all entry norms.
    pub norm_product: BigUint,
    /// Radical of `norm_product` when `rad_complete`; otherwise an upper
    /// bound on it (identified primes times every unresolved cofactor).
    pub rad_value: BigUint,
    /// Whether every entry norm was fully factored.
    pub rad_complete: bool,
    /// `log(max_norm) / log(rad_value)`, correct to within `abs_error`.
    pub q: f64,
    /// True exactly when `rad_complete` is false: `rad_value` then
    /// over-estimates the true radical, so `q` under-estimates the true
    /// quality.
    pub q_is_lower_bound: bool,
    /// Bound on |reported q − log(max_norm)/log(rad_value)| from the
    /// floating-point log evaluations. Far below [`Q_MARGIN`] at any
    /// magnitude this library reaches.
    pub abs_error: f64,
}

/// Quality of the tuple `a` over its ring.
///
/// Norms are computed exactly; each is factored separately under `budget`
/// and the prime supports are merged. Entries of norm 1 contribute nothing
/// and are skipped. Errors: a zero entry, an empty tuple, or an all-unit
/// tuple (radical 1, quality undefined).
pub fn quality<R: RingElem>(a: &[R], budget: &Budget) -> Result<QualityReport, QualityError> {
    if a.is_empty() {
        return Err(QualityError::Empty);
    }
    let mut norms = Vec::with_capacity(a.len());
    for (idx, entry) in a.iter().enumerate() {
        if RingElem::is_zero(entry) {
            return Err(QualityError::ZeroEntry(idx));
        }
        norms.push(entry.norm());
    }
    let max_norm = norms.iter().max().cloned().expect("tuple is nonempty");
    let mut norm_product = BigUint::one();
    for n in &norms {
        norm_product *= n;
    }

    let mut primes: BTreeSet<BigUint> = BTreeSet::new();
    let mut unresolved = BigUint::one();
    let mut rad_complete = true;
    for n in &norms {
        if n.is_one() {
            continue;
        }
        let f = factorize(n, budget);
        if !f.is_complete() {
            rad_complete = false;
            unresolved *= &f.cofactor;
        }
        for (p, _) in f.factors {
            primes.insert(p);
        }
    }
    let mut rad_value = unresolved;
    for p in &primes {
        rad_value *= p;
    }
    if rad_value.is_one() {
        return Err(QualityError::Undefined);
    }

    let num = big_log(&max_norm);
    let den = big_log(&rad_value);
    // rad_value >= 2, so den.value >= ln 2 and the ratio is well defined.
    let q = num.value / den.value;
    // First-order propagation through the quotient, plus one rounding of
    // the division itself.
    let abs_error =
        (num.abs_error_bound + q.abs() * den.abs_error_bound) / den.value + f64::EPSILON * q.abs();

    Ok(QualityReport {
        max_norm,
        norm_product,
        rad_value,
        rad_complete,
        q,
        q_is_lower_bound: !rad_complete,
        abs_error,
    })
}

/// Running maxima over a stream of quality values: the empirical stand-in
/// for the limit superior of the qualities of a tuple sequence.
///
/// Single-writer: one tracker per sequence, fed in generation order.
#[derive(Clone, Debug)]
pub struct SequenceTracker {
    window: usize,
    history: Vec<(u64, f64)>,
    best_q: f64,
}

impl Default for SequenceTracker {
    fn default() -> Self {
        Self::new(10)
    }
}

impl SequenceTracker {
    /// Tracker with the given window length for the recent maximum
    /// (clamped to at least 1).
    pub fn new(window: usize) -> Self {
        SequenceTracker { window: window.max(1), history: Vec::new(), best_q: f64::NEG_INFINITY }
    }

    /// Append a report's quality; its index is the running count.
    pub fn track(&mut self, report: &QualityReport) {
        self.track_value(report.q);
    }

    /// Append a raw quality value; its index is the running count.
    pub fn track_value(&mut self, q: f64) {
        let index = self.history.len() as u64;
        self.history.push((index, q));
        if q > self.best_q {
            self.best_q = q;
        }
    }

    /// Number of values tracked so far.
    pub fn count(&self) -> u64 {
        self.history.len() as u64
    }

    /// Largest quality seen, or `None` before the first value.
    pub fn best_q(&self) -> Option<f64> {
        if self.history.is_empty() { None } else { Some(self.best_q) }
    }

    /// Largest quality among the most recent `window` values, or `None`
    /// before the first value.
    pub fn recent_window_max(&self) -> Option<f64> {
        if self.history.is_empty() {
            return None;
        }
        let start = self.history.len().saturating_sub(self.window);
        self.history[start..].iter().map(|&(_, q)| q).fold(None, |acc, q| match acc {
            None => Some(q),
            Some(m) => Some(if q > m { q } else { m }),
        })
    }

    /// Every tracked `(index, q)` pair in arrival order.
    pub fn history(&self) -> &[(u64, f64)] {
        &self.history
    }

    pub fn window(&self) -> usize {
        self.window
    }
}
