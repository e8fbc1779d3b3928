//! The two unstructured searches: block-sieved brute force over the sporadic
//! range, and the per-prime quadratic solve that finds every two-prime
//! solution with its larger prime below a limit.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use super::{patterns::semiprime_identity_holds, EquationInstance};
use crate::arith::{is_prime_u64, primes_up_to, sigma2_segment_bounded};
use crate::error::{Error, Result};

// sigma_2(n) - n^2 stays inside i128 up to here; brute scans are clamped.
const MAX_BRUTE_CAP: u64 = 1 << 62;

/// Result of a sporadic scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteScan {
    pub solutions: Vec<u64>,
    pub scanned_to: u64,
    pub complete: bool,
}

/// Scan n = 1 .. min(cap, (|A|+|B|)^3) for solutions, sieving sigma_2 one
/// segment at a time. Blocks go to worker threads; hits are merged back in
/// block order, so the output is deterministic. A bound below 1 still scans
/// n = 1, which may legitimately be a solution.
pub fn brute_force(
    instance: &EquationInstance,
    cap: u64,
    segment_len: u64,
) -> Result<BruteScan> {
    let bound = instance.sporadic_bound();
    let cap = cap.min(MAX_BRUTE_CAP);
    let end = bound.to_u64().map_or(cap, |b| b.min(cap)).clamp(1, MAX_BRUTE_CAP);
    let complete = BigUint::from(end) >= bound;
    let segment_len = segment_len.max(1);

    let blocks: Vec<(u64, u64)> = (1..=end)
        .step_by(segment_len as usize)
        .map(|lo| (lo, (lo + segment_len).min(end + 1)))
        .collect();
    let matcher = EquationMatcher::new(instance);
    let per_block: Vec<Result<Vec<u64>>> = blocks
        .par_iter()
        .map(|&(lo, hi)| {
            let values = sigma2_segment_bounded(lo, hi, segment_len)?;
            let mut hits = Vec::new();
            for (offset, sigma2) in values.iter().enumerate() {
                let n = lo + offset as u64;
                let lhs = sigma2 - (n as u128) * (n as u128);
                if matcher.matches(n, lhs) {
                    hits.push(n);
                }
            }
            Ok(hits)
        })
        .collect();

    let mut solutions = Vec::new();
    for block in per_block {
        solutions.extend(block?);
    }
    Ok(BruteScan { solutions, scanned_to: end, complete })
}

/// For each prime q <= q_limit, solve p^2 - A*q*p + (q^2 + 1 - B) = 0 for p
/// and keep prime roots p < q. Every two-prime solution whose larger prime is
/// at most q_limit shows up exactly once, as the unordered pair (p, q).
pub fn semiprime_search(
    instance: &EquationInstance,
    q_limit: u64,
) -> Result<Vec<(u64, u64)>> {
    let primes = primes_up_to(q_limit);
    let fast = FastCoefficients::new(instance);
    let per_prime: Vec<Vec<(u64, u64)>> = primes
        .par_iter()
        .map(|&q| {
            let roots = match fast {
                Some(ref c) => c.roots(q).unwrap_or_else(|| big_roots(instance, q)),
                None => big_roots(instance, q),
            };
            roots
                .into_iter()
                .filter(|&p| p >= 2 && p < q && is_prime_u64(p))
                .map(|p| (p, q))
                .collect()
        })
        .collect();

    let mut pairs: Vec<(u64, u64)> = per_prime.into_iter().flatten().collect();
    pairs.sort_by_key(|&(p, q)| (p as u128) * (q as u128));
    for &(p, q) in &pairs {
        if !semiprime_identity_holds(
            instance.a(),
            instance.b(),
            &BigUint::from(p),
            &BigUint::from(q),
        ) {
            return Err(Error::Internal(format!(
                "semiprime candidate ({p}, {q}) fails re-verification"
            )));
        }
    }
    Ok(pairs)
}

/// Decides sigma_2(n) - n^2 == A*n + B given the left side; i128 when the
/// coefficients allow it, exact big-integer comparison otherwise.
struct EquationMatcher {
    a: BigInt,
    b: BigInt,
    fast: Option<(i128, i128)>,
}

impl EquationMatcher {
    fn new(instance: &EquationInstance) -> Self {
        EquationMatcher {
            a: instance.a().clone(),
            b: instance.b().clone(),
            fast: instance.a().to_i128().zip(instance.b().to_i128()),
        }
    }

    fn matches(&self, n: u64, lhs: u128) -> bool {
        if let Some((a, b)) = self.fast {
            if let Some(rhs) = a.checked_mul(n as i128).and_then(|t| t.checked_add(b)) {
                return rhs >= 0 && lhs == rhs as u128;
            }
        }
        BigInt::from(lhs) == &self.a * BigInt::from(n) + &self.b
    }
}

/// A^2 - 4 and 4(B - 1) precomputed in i128, when they fit.
struct FastCoefficients {
    a: i128,
    a2_minus_4: i128,
    four_b_minus_1: i128,
}

impl FastCoefficients {
    fn new(instance: &EquationInstance) -> Option<Self> {
        let a = instance.a().to_i128()?;
        let b = instance.b().to_i128()?;
        Some(FastCoefficients {
            a,
            a2_minus_4: a.checked_mul(a)?.checked_sub(4)?,
            four_b_minus_1: b.checked_sub(1)?.checked_mul(4)?,
        })
    }

    /// Integer roots of the quadratic at this q, or None on i128 overflow.
    fn roots(&self, q: u64) -> Option<Vec<u64>> {
        let q = q as i128;
        let disc = self.a2_minus_4.checked_mul(q.checked_mul(q)?)?.checked_add(self.four_b_minus_1)?;
        if disc < 0 {
            return Some(Vec::new());
        }
        let s = isqrt_u128(disc as u128);
        if s * s != disc as u128 {
            return Some(Vec::new());
        }
        let s = s as i128;
        let aq = self.a.checked_mul(q)?;
        let mut roots = Vec::new();
        for numerator in [aq.checked_add(s)?, aq.checked_sub(s)?] {
            if numerator >= 0 && numerator % 2 == 0 {
                if let Ok(p) = u64::try_from(numerator / 2) {
                    roots.push(p);
                }
            }
        }
        Some(roots)
    }
}

// Exact big-integer fallback for huge coefficients.
fn big_roots(instance: &EquationInstance, q: u64) -> Vec<u64> {
    let a = instance.a();
    let b = instance.b();
    let q_big = BigInt::from(q);
    let disc: BigInt = (a * a - 4) * &q_big * &q_big + 4 * (b - 1);
    if disc.is_negative() {
        return Vec::new();
    }
    let disc_mag = disc.magnitude();
    let s = disc_mag.sqrt();
    if &s * &s != *disc_mag {
        return Vec::new();
    }
    let s = BigInt::from(s);
    let aq = a * &q_big;
    let mut roots = Vec::new();
    for numerator in [&aq + &s, &aq - &s] {
        if numerator.is_negative() || numerator.magnitude().bit(0) {
            continue;
        }
        if let Some(p) = (numerator >> 1u32).to_u64() {
            roots.push(p);
        }
    }
    roots
}

fn isqrt_u128(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}
