//! Arbitrary-precision integer services: primality, factorization under an
//! effort budget, radicals, perfect-power decomposition, Pell solution
//! streams, and natural logarithms of big integers with error bounds.
//!
//! Everything here is a pure function of its inputs and safe to call from
//! many threads; the only shared state is a lazily built, immutable prime
//! table.

mod biglog;
mod factor;
mod pell;
mod primes;

pub use biglog::{big_log, BigLog};
pub use factor::{factorize, perfect_power_decompose, radical, Budget, Factorization};
pub use pell::{pell_stream, PellError, PellSolution};
pub use primes::is_prime;

