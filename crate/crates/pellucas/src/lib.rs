//! Exact-arithmetic tooling for the Diophantine equation
//! sigma_2(n) - n^2 = A*n + B.
//!
//! Outside a computable sporadic range every solution of that equation is a
//! product of two distinct primes, and for structured choices of (A, B) the
//! prime pairs are consecutive terms of Lucas sequences. This crate provides
//! the pieces end to end:
//!
//! * [`arith`] — primality, factorization, divisor-power sums, a segmented
//!   sigma_2 sieve, square-free and even-perfect predicates;
//! * [`lucas`] — fast-doubling evaluation of U_k(P, Q) and V_k(P, Q) plus
//!   checkers for the recurrence identities the families rest on;
//! * [`pell`] — the solution families of x^2 - D*y^2 = +/-4 for D = P^2 +/- 4;
//! * [`solver`] — sporadic brute force, semiprime search, pattern
//!   recognition, and Lucas-family generation for a given (A, B);
//! * [`sigma3`] — scans classifying the n with two distinct prime factors
//!   that divide sigma_3(n).
//!
//! ```
//! use num_bigint::BigInt;
//! use pellucas::solver::{EquationInstance, SolveConfig};
//!
//! let eq = EquationInstance::new(BigInt::from(3), BigInt::from(0)).unwrap();
//! let report = pellucas::solver::solve(&eq, &SolveConfig::default()).unwrap();
//! assert_eq!(report.sporadic, vec![10]);
//! ```

pub mod arith;
pub mod cli;
pub mod error;
pub mod guide;
pub mod lucas;
pub mod pell;
pub mod sigma3;
pub mod solver;

pub use error::{Error, Result};
