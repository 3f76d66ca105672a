//! Exact arithmetic for zero-sum tuple qualities over three rings: the
//! rational integers `Z`, the Gaussian integers `Z[i]`, and the Hurwitz
//! quaternion order `I`.
//!
//! The quality of a tuple `(a_1, ..., a_n)` of nonzero ring elements is
//!
//! ```text
//! q(a) = log(max N(a_i)) / log(rad(N(a_1) * ... * N(a_n)))
//! ```
//!
//! where `N` is the ring's norm (absolute value over `Z`) and `rad` is the
//! radical — the product of the distinct primes — of a positive integer.
//! High-quality tuples are the experimental currency of the abc conjecture
//! and its n-term generalizations.
//!
//! The crate provides:
//!
//! * [`arith`]: primality, budgeted factorization, radicals, perfect-power
//!   decomposition, Pell solution streams, and logarithms of big integers
//!   with explicit error bounds;
//! * [`gaussian`] and [`hurwitz`]: exact ring arithmetic including Euclidean
//!   division, one-sided gcds, and (for `Z[i]`) prime factorization;
//! * [`ring`]: the common interface the condition and quality machinery is
//!   generic over;
//! * [`conditions`]: the zero-sum, subsum, coprimality, and forbidden-divisor
//!   predicates defining the admissible tuple sets `A(R, n)` and `U(R, F, n)`;
//! * [`quality`]: the quality functional with certified lower bounds under
//!   incomplete factorization, plus a running-maximum tracker;
//! * [`families`]: constructors for the explicit high-quality families
//!   (Elkies-style Gaussian quadruples, Hurwitz power triples, Hurwitz Pell
//!   triples, and the general-n trace-2 construction) with their per-tuple
//!   lower bounds;
//! * [`store`]: JSONL persistence and CSV export of scored tuple records.

pub mod arith;
pub mod conditions;
pub mod families;
pub mod gaussian;
pub mod hurwitz;
pub mod quality;
pub mod ring;
pub mod store;
