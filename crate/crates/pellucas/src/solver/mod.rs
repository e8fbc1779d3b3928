//! End-to-end solving of sigma_2(n) - n^2 = A*n + B: sporadic brute force
//! over n <= (|A|+|B|)^3, the semiprime search, pattern recognition, and
//! Lucas-family generation, cross-checked against each other.

mod patterns;
mod search;

pub use patterns::{
    family_solutions, recognize_patterns, split_distinct_semiprime, FamilyGeneration,
    FamilySolution, TheoremId, TheoremPattern,
};
pub use search::{brute_force, semiprime_search, BruteScan};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{sigma_k, DEFAULT_SEGMENT_LEN};
use crate::error::{Error, Result};

/// The equation sigma_2(n) - n^2 = A*n + B.
///
/// The pairs (A, B) = (0, 1) and (1, 1) are rejected at construction: their
/// solution sets are all primes and all prime squares respectively, so none
/// of the two-prime machinery applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationInstance {
    a: BigInt,
    b: BigInt,
}

impl EquationInstance {
    pub fn new(a: BigInt, b: BigInt) -> Result<Self> {
        let reason = if a.is_zero() && b.is_one() {
            Some("every prime n satisfies sigma_2(n) - n^2 = 1, so the solutions do not reduce to two-prime products")
        } else if a.is_one() && b.is_one() {
            Some("every n = p^2 with p prime satisfies sigma_2(n) - n^2 = n + 1, so the solutions do not reduce to two-prime products")
        } else {
            None
        };
        if let Some(reason) = reason {
            return Err(Error::ExcludedInstance {
                a: a.to_string(),
                b: b.to_string(),
                reason: reason.into(),
            });
        }
        Ok(EquationInstance { a, b })
    }

    pub(crate) fn new_unchecked(a: BigInt, b: BigInt) -> Self {
        debug_assert!(
            !(a.is_zero() && b.is_one()) && !(a.is_one() && b.is_one()),
            "built-in patterns never reconstruct an excluded pair"
        );
        EquationInstance { a, b }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// (|A| + |B|)^3; solutions above it are two-prime products.
    pub fn sporadic_bound(&self) -> BigUint {
        (self.a.abs() + self.b.abs()).magnitude().pow(3)
    }

    /// Direct check of the equation at n, via the divisor-power sum.
    pub fn holds(&self, n: &BigUint) -> Result<bool> {
        let sigma2 = BigInt::from(sigma_k(n, 2)?);
        let n = BigInt::from(n.clone());
        Ok(sigma2 - &n * &n == &self.a * &n + &self.b)
    }

    /// Check for n = p*q with p, q distinct primes, where the equation
    /// collapses to p^2 + q^2 + 1 - B = A*p*q.
    pub fn holds_semiprime(&self, p: &BigUint, q: &BigUint) -> bool {
        patterns::semiprime_identity_holds(&self.a, &self.b, p, q)
    }
}

/// Search limits for [`solve`]. Defaults keep a full run in seconds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveConfig {
    /// Brute-force scan cap; the scan stops at min(cap, sporadic bound).
    pub brute_cap: u64,
    /// Semiprime search covers pairs whose larger prime is at most this.
    pub q_limit: u64,
    /// Pattern recognition tries 0 <= P <= p_limit.
    pub p_limit: u32,
    /// Pattern recognition tries 1 <= m <= m_limit.
    pub m_limit: u32,
    /// Family generation runs indices k = 0 ..= k_limit.
    pub k_limit: u32,
    /// Sieve segment length for the brute-force scan.
    pub segment_len: u64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            brute_cap: 10_000_000,
            q_limit: 1_000_000,
            p_limit: 10,
            m_limit: 10,
            k_limit: 64,
            segment_len: DEFAULT_SEGMENT_LEN,
        }
    }
}

/// Everything a solve run produced.
#[derive(Debug, Clone)]
pub struct SolutionReport {
    pub a: BigInt,
    pub b: BigInt,
    pub sporadic_bound: BigUint,
    pub sporadic: Vec<u64>,
    pub sporadic_scanned_to: u64,
    pub sporadic_complete: bool,
    pub semiprime: Vec<(u64, u64)>,
    pub patterns: Vec<TheoremPattern>,
    pub families: Vec<FamilySolution>,
    pub diagnostics: Vec<String>,
    pub config: SolveConfig,
}

/// Run every search against `instance` and cross-check the results: a family
/// member whose larger prime is within `q_limit` must also have been found by
/// the semiprime search.
pub fn solve(instance: &EquationInstance, config: &SolveConfig) -> Result<SolutionReport> {
    let scan = brute_force(instance, config.brute_cap, config.segment_len)?;
    let semiprime = semiprime_search(instance, config.q_limit)?;
    let patterns = recognize_patterns(instance, config.p_limit, config.m_limit);

    let mut families = Vec::new();
    let mut diagnostics = Vec::new();
    for pattern in &patterns {
        let generation = family_solutions(pattern, config.k_limit)?;
        if let Some(note) = generation.diagnostic {
            diagnostics.push(format!(
                "{} (P = {}, m = {}): {}",
                pattern.id.tag(),
                pattern.p,
                pattern.m,
                note
            ));
        }
        families.extend(generation.solutions);
    }

    for family in &families {
        if let (Some(p), Some(q)) = (family.p.to_u64(), family.q.to_u64()) {
            if q <= config.q_limit && !semiprime.contains(&(p, q)) {
                return Err(Error::Internal(format!(
                    "family member {} = {} * {} missing from the semiprime search",
                    family.n, p, q
                )));
            }
        }
    }

    Ok(SolutionReport {
        a: instance.a().clone(),
        b: instance.b().clone(),
        sporadic_bound: instance.sporadic_bound(),
        sporadic: scan.solutions,
        sporadic_scanned_to: scan.scanned_to,
        sporadic_complete: scan.complete,
        semiprime,
        patterns,
        families,
        diagnostics,
        config: config.clone(),
    })
}
