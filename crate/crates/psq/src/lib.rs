//! # psq — prime-plus-square toolkit
//!
//! Desk-computable number theory around representations `n = p + m²`
//! (`p` prime, `m ≥ 0` or `m ≥ 1` by configuration):
//!
//! - [`arith`] — bit-packed segmented sieve, Jacobi symbol, Möbius/totient,
//!   exact integer square roots.
//! - [`expsums`] — quadratic Gauss sums `V(a,q)`, the truncated series
//!   `Σ(n,Q)` built from them, the generating sums over primes and squares,
//!   and an exact coefficient-identity check (direct count vs. fast
//!   convolution).
//! - [`singular`] — the singular series `𝒫(n) = ∏_{p≥3} (1 − (n/p)/(p−1))`
//!   by truncated Euler product, local densities of `m^k ≡ n (mod p)`, and
//!   the cross-route convergence comparison against `Σ(n,Q)`.
//! - [`repr`] — representation counting, high-throughput batch scanning,
//!   and enumeration of the exceptional set (non-squares with no
//!   representation).
//! - [`bounds`] — the Hardy–Littlewood main-term prediction, Selberg and
//!   combinatorial sieve upper bounds, and ratio statistics against
//!   measured data.
//! - [`report`] — regression-stable text output (12 significant digits)
//!   and the CSV/JSON emitters shared with the CLI.
//!
//! Everything is deterministic: batch operations parallelize internally but
//! produce output that is independent of the worker count.

pub mod arith;
pub mod bounds;
mod error;
pub mod expsums;
pub mod report;
pub mod repr;
pub mod singular;

pub use error::{Error, Result};
