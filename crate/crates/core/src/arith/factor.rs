//! Budgeted integer factorization and radicals.
//!
//! Pipeline: perfect-power reduction first (the tuple families produce norms
//! that are high powers of small factorable cores), then trial division by
//! small primes, then Pollard rho with Brent's cycle detection under a
//! configurable iteration budget. Running out of budget is not an error: the
//! unfinished composite is returned as a `cofactor`, which keeps the radical
//! an *upper* bound and therefore keeps derived qualities certified *lower*
//! bounds.

use super::primes::{is_prime_u64, mul_mod_u64};
use super::is_prime;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

/// Effort limits for [`factorize`] and everything built on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Trial-divide by every prime up to this bound.
    pub trial_bound: u64,
    /// Total Pollard-rho iterations allowed per `factorize` call.
    pub rho_iterations: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { trial_bound: 1_000_000, rho_iterations: 10_000_000 }
    }
}

impl Budget {
    /// Budget with a custom rho allowance and the default trial bound.
    pub fn with_rho(rho_iterations: u64) -> Self {
        Budget { rho_iterations, ..Budget::default() }
    }
}

/// Result of factoring a positive integer.
///
/// The product of `prime^exponent` over `factors` times `cofactor` equals
/// the input exactly. `factors` lists pairwise distinct primes in ascending
/// order, every one vetted by a primality check; `cofactor` is 1 when the
/// factorization is complete and otherwise a composite that exceeded the
/// effort budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigUint, u32)>,
    pub cofactor: BigUint,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }

    /// Recompose the factored value.
    pub fn value(&self) -> BigUint {
        let mut acc = self.cofactor.clone();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        acc
    }

    /// Product of the distinct primes, times the cofactor when incomplete.
    ///
    /// Complete: exactly rad(n). Incomplete: an upper bound on rad(n),
    /// because the cofactor replaces the radical of its own prime support.
    pub fn radical(&self) -> (BigUint, bool) {
        let mut acc = self.cofactor.clone();
        for (p, _) in &self.factors {
            acc *= p;
        }
        (acc, self.is_complete())
    }
}

const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

fn sieve(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
    }
    primes
}

fn cached_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(DEFAULT_TRIAL_BOUND))
}

/// Run `f` with the list of primes up to `bound`. Bounds at or below the
/// default reuse a shared table; larger bounds sieve on the fly.
pub(crate) fn with_primes<R>(bound: u64, f: impl FnOnce(&[u64]) -> R) -> R {
    if bound <= DEFAULT_TRIAL_BOUND {
        let primes = cached_primes();
        let cut = primes.partition_point(|&p| p <= bound);
        f(&primes[..cut])
    } else {
        f(&sieve(bound))
    }
}

/// Integer p-th root check: largest `r` with `r^p == n`, if `n` is an exact
/// p-th power with `r >= 2`.
fn exact_root_u64(n: u64, p: u32) -> Option<u64> {
    let guess = (n as f64).powf(1.0 / p as f64).round() as u64;
    for r in guess.saturating_sub(1)..=guess + 1 {
        if r >= 2 {
            if let Some(v) = r.checked_pow(p) {
                if v == n {
                    return Some(r);
                }
            }
        }
    }
    None
}

fn perfect_power_u64(n: u64) -> (u64, u32) {
    if n < 4 {
        return (n, 1);
    }
    const SMALL_PRIMES: [u32; 18] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61];
    let mut base = n;
    let mut exp = 1u32;
    'outer: loop {
        let bits = 64 - base.leading_zeros();
        for &p in SMALL_PRIMES.iter().take_while(|&&p| p < bits) {
            if let Some(r) = exact_root_u64(base, p) {
                base = r;
                exp *= p;
                continue 'outer;
            }
        }
        return (base, exp);
    }
}

/// Write `n = base^exponent` with the exponent maximal; `exponent = 1` when
/// `n` is not a perfect power. By convention `1 -> (1, 1)`.
pub fn perfect_power_decompose(n: &BigUint) -> (BigUint, u32) {
    if let Some(n64) = n.to_u64() {
        let (b, e) = perfect_power_u64(n64);
        return (BigUint::from(b), e);
    }
    let mut base = n.clone();
    let mut exp = 1u32;
    'outer: loop {
        let bits = base.bits();
        let mut candidates = Vec::new();
        with_primes(bits.saturating_sub(1), |ps| candidates.extend_from_slice(ps));
        for p in candidates {
            let r = base.nth_root(p as u32);
            if r.pow(p as u32) == base {
                base = r;
                exp *= p as u32;
                continue 'outer;
            }
        }
        return (base, exp);
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn add_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

/// Brent-interval Pollard rho on u64: one curve `x -> x^2 + c`, budget
/// counted in f-evaluations. Returns a nontrivial factor or None.
fn brent_u64(n: u64, c: u64, budget: &mut u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let f = |x: u64| add_mod_u64(mul_mod_u64(x, x, n), c, n);
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut x = 0u64;
    let mut ys = 0u64;
    while g == 1 {
        x = y;
        if *budget < r {
            *budget = 0;
            return None;
        }
        *budget -= r;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0u64;
        while k < r && g == 1 {
            ys = y;
            let lim = BATCH.min(r - k);
            if *budget < lim {
                *budget = 0;
                return None;
            }
            *budget -= lim;
            for _ in 0..lim {
                y = f(y);
                q = mul_mod_u64(q, x.abs_diff(y), n);
            }
            g = gcd_u64(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if g == n {
        // Batch overshot: single-step from the last checkpoint.
        loop {
            ys = f(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_u64(n: u64, budget: &mut u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mut c = 1u64;
    while *budget > 0 {
        if let Some(d) = brent_u64(n, c, budget) {
            return Some(d);
        }
        c += 1;
    }
    None
}

fn brent_big(n: &BigUint, c: u64, budget: &mut u64) -> Option<BigUint> {
    const BATCH: u64 = 64;
    let cc = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &cc) % n;
    let abs_diff = |a: &BigUint, b: &BigUint| if a >= b { a - b } else { b - a };
    let one = BigUint::one();
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = one.clone();
    let mut g = one.clone();
    let mut x = BigUint::zero();
    let mut ys = BigUint::zero();
    while g.is_one() {
        x = y.clone();
        if *budget < r {
            *budget = 0;
            return None;
        }
        *budget -= r;
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0u64;
        while k < r && g.is_one() {
            ys = y.clone();
            let lim = BATCH.min(r - k);
            if *budget < lim {
                *budget = 0;
                return None;
            }
            *budget -= lim;
            for _ in 0..lim {
                y = f(&y);
                q = q * abs_diff(&x, &y) % n;
            }
            g = q.gcd(n);
            k += lim;
        }
        r <<= 1;
    }
    if g == *n {
        loop {
            ys = f(&ys);
            g = abs_diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

fn rho_big(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let mut c = 1u64;
    while *budget > 0 {
        if let Some(d) = brent_big(n, c, budget) {
            return Some(d);
        }
        c += 1;
    }
    None
}

/// Merge a prime power into the factor list.
fn push_prime(factors: &mut Vec<(BigUint, u32)>, p: BigUint, e: u32) {
    for (q, k) in factors.iter_mut() {
        if *q == p {
            *k += e;
            return;
        }
    }
    factors.push((p, e));
}

/// u64 tail of the pipeline: trial division, then perfect powers + rho on a
/// work stack of (composite, multiplicity) pairs.
fn factor_u64(n: u64, trial_bound: u64, rho_left: &mut u64, factors: &mut Vec<(BigUint, u32)>, cofactor: &mut BigUint) {
    let mut m = n;
    with_primes(trial_bound, |ps| {
        for &p in ps {
            if p.checked_mul(p).is_none_or(|pp| pp > m) {
                break;
            }
            if m.is_multiple_of(p) {
                let mut e = 0u32;
                while m.is_multiple_of(p) {
                    m /= p;
                    e += 1;
                }
                push_prime(factors, BigUint::from(p), e);
            }
        }
        // If the loop ran to exhaustion with p^2 <= m, factors <= trial_bound
        // may remain; the stack below handles that via rho. If it broke on
        // p^2 > m, the remainder is prime by exhaustion.
    });
    if m == 1 {
        return;
    }
    let mut stack: Vec<(u64, u32)> = vec![(m, 1)];
    while let Some((c, mult)) = stack.pop() {
        if is_prime_u64(c) {
            push_prime(factors, BigUint::from(c), mult);
            continue;
        }
        let (b, e) = perfect_power_u64(c);
        if e > 1 {
            stack.push((b, mult * e));
            continue;
        }
        match rho_u64(c, rho_left) {
            Some(d) => {
                stack.push((d, mult));
                stack.push((c / d, mult));
            }
            None => {
                *cofactor *= BigUint::from(c).pow(mult);
            }
        }
    }
}

fn factor_big(n: &BigUint, trial_bound: u64, rho_left: &mut u64, factors: &mut Vec<(BigUint, u32)>, cofactor: &mut BigUint) {
    let mut m = n.clone();
    with_primes(trial_bound, |ps| {
        for &p in ps {
            if m.bits() <= 42 && p * p > m.to_u64().expect("fits") {
                break;
            }
            if (&m % p).is_zero() {
                let mut e = 0u32;
                while (&m % p).is_zero() {
                    m /= p;
                    e += 1;
                }
                push_prime(factors, BigUint::from(p), e);
            }
        }
    });
    if m.is_one() {
        return;
    }
    if let Some(m64) = m.to_u64() {
        // Everything below the trial bound is already stripped; finish small.
        let mut sub = Vec::new();
        factor_u64(m64, 1, rho_left, &mut sub, cofactor);
        for (p, e) in sub {
            push_prime(factors, p, e);
        }
        return;
    }
    let mut stack: Vec<(BigUint, u32)> = vec![(m, 1)];
    while let Some((c, mult)) = stack.pop() {
        if let Some(c64) = c.to_u64() {
            let mut sub = Vec::new();
            let mut sub_cof = BigUint::one();
            factor_u64(c64, 1, rho_left, &mut sub, &mut sub_cof);
            for (p, e) in sub {
                push_prime(factors, p, e * mult);
            }
            if !sub_cof.is_one() {
                *cofactor *= sub_cof.pow(mult);
            }
            continue;
        }
        if is_prime(&c) {
            push_prime(factors, c, mult);
            continue;
        }
        let (b, e) = perfect_power_decompose(&c);
        if e > 1 {
            stack.push((b, mult * e));
            continue;
        }
        match rho_big(&c, rho_left) {
            Some(d) => {
                let rest = &c / &d;
                stack.push((d, mult));
                stack.push((rest, mult));
            }
            None => {
                *cofactor *= c.pow(mult);
            }
        }
    }
}

/// Factor a positive integer under the given effort budget.
///
/// Never fails: when the budget runs out the leftover composite lands in
/// `cofactor`. `factorize(1)` is the empty factorization.
pub fn factorize(n: &BigUint, budget: &Budget) -> Factorization {
    assert!(!n.is_zero(), "factorize requires n >= 1");
    if n.is_one() {
        return Factorization { factors: Vec::new(), cofactor: BigUint::one() };
    }
    let (base, outer_exp) = perfect_power_decompose(n);
    let mut factors = Vec::new();
    let mut cofactor = BigUint::one();
    let mut rho_left = budget.rho_iterations;
    if let Some(b64) = base.to_u64() {
        factor_u64(b64, budget.trial_bound, &mut rho_left, &mut factors, &mut cofactor);
    } else {
        factor_big(&base, budget.trial_bound, &mut rho_left, &mut factors, &mut cofactor);
    }
    if outer_exp > 1 {
        for (_, e) in factors.iter_mut() {
            *e *= outer_exp;
        }
        if !cofactor.is_one() {
            cofactor = cofactor.pow(outer_exp);
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Factorization { factors, cofactor }
}

/// rad(n): the largest square-free positive divisor, i.e. the product of the
/// distinct primes of `n`. Returns `(value, complete)`; when incomplete the
/// value is an upper bound on the true radical (the unfactored cofactor is
/// included wholesale).
pub fn radical(n: &BigUint, budget: &Budget) -> (BigUint, bool) {
    factorize(n, budget).radical()
}
