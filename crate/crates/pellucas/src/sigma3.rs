//! Divisibility of sigma_3(n) by n for n with exactly two distinct prime
//! factors.
//!
//! Two scans are provided. `scan_pq_alpha` enumerates the shape n = p * q^a
//! (p with exponent one), optionally restricted to bases q not congruent
//! 1 mod 3; every hit it finds is expected to be an even perfect number, and
//! hits carry a flag rather than an assertion so a surprise shows up as data.
//! The broader `conjecture_scan` allows any exponents on both primes. Over
//! every range tried so far the hit set is exactly the even perfect numbers
//! with 28 removed: sigma_3(28) = 25112 leaves remainder 24.
//!
//! sigma_3 values are reduced modulo n with u128 intermediates throughout,
//! so the scans stay exact at any u64 bound.

use rayon::prelude::*;

use crate::arith::{is_even_perfect_u64, primes_up_to, sigma_k};
use crate::error::Result;
use num_bigint::BigUint;
use num_traits::Zero;

/// One n = p * q^alpha with n | sigma_3(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sigma3Hit {
    pub n: u64,
    pub p: u64,
    pub q: u64,
    pub alpha: u32,
    pub even_perfect: bool,
}

/// True iff n divides sigma_3(n).
pub fn divides_sigma3(n: &BigUint) -> Result<bool> {
    Ok((sigma_k(n, 3)? % n).is_zero())
}

/// Enumerate n = p * q^alpha <= bound over distinct primes p, q with
/// alpha >= 1, keeping those with n | sigma_3(n). With `restrict_q` only
/// bases q with q mod 3 != 1 are tried. Hits come back ascending in n,
/// deduplicated (for alpha = 1 both labelings of the pair describe the same
/// n), each flagged with `even_perfect`.
pub fn scan_pq_alpha(bound: u64, restrict_q: bool) -> Vec<Sigma3Hit> {
    if bound < 6 {
        return Vec::new();
    }
    let primes = primes_up_to(bound / 2);

    let mut hits: Vec<Sigma3Hit> = primes
        .par_iter()
        .filter(|&&q| !restrict_q || q % 3 != 1)
        .map(|&q| {
            let mut found = Vec::new();
            let mut power = q; // q^alpha
            let mut alpha = 1u32;
            loop {
                for &p in &primes {
                    if p == q {
                        continue;
                    }
                    let Some(n) = power.checked_mul(p) else { break };
                    if n > bound {
                        break;
                    }
                    if sigma3_mod(&[(p, 1), (q, alpha)], n) == 0 {
                        found.push(Sigma3Hit {
                            n,
                            p,
                            q,
                            alpha,
                            even_perfect: is_even_perfect_u64(n),
                        });
                    }
                }
                match power.checked_mul(q) {
                    Some(next) if next <= bound / 2 => power = next,
                    _ => break,
                }
                alpha += 1;
            }
            found
        })
        .flatten()
        .collect();

    // Same n can show up under both labelings when alpha = 1; keep the
    // representation with the larger alpha, then the smaller base.
    hits.sort_by_key(|h| (h.n, std::cmp::Reverse(h.alpha), h.q));
    hits.dedup_by_key(|h| h.n);
    hits
}

/// All n <= bound with exactly two distinct prime factors, any exponents on
/// both, such that n | sigma_3(n); each paired with its even-perfect flag.
/// Ascending and duplicate-free: the representation p < q is unique.
pub fn conjecture_scan(bound: u64) -> Vec<(u64, bool)> {
    if bound < 6 {
        return Vec::new();
    }
    let primes = primes_up_to(bound / 2);
    let mut hits: Vec<u64> = primes
        .par_iter()
        .enumerate()
        .map(|(i, &p)| {
            let mut found = Vec::new();
            let mut pa = p; // p^a
            let mut a = 1u32;
            loop {
                for &q in &primes[i + 1..] {
                    let mut qb = q; // q^b
                    let mut b = 1u32;
                    while let Some(n) = pa.checked_mul(qb) {
                        if n > bound {
                            break;
                        }
                        if sigma3_mod(&[(p, a), (q, b)], n) == 0 {
                            found.push(n);
                        }
                        let Some(next) = qb.checked_mul(q) else { break };
                        qb = next;
                        b += 1;
                    }
                    if pa.checked_mul(q).is_none_or(|n| n > bound) {
                        break;
                    }
                }
                match pa.checked_mul(p) {
                    Some(next) if next <= bound / 2 => pa = next,
                    _ => break,
                }
                a += 1;
            }
            found
        })
        .flatten()
        .collect();
    hits.sort_unstable();
    hits.into_iter().map(|n| (n, is_even_perfect_u64(n))).collect()
}

/// sigma_3 of the number with the given prime factorization, reduced mod n.
/// Each prime power contributes 1 + r^3 + ... + r^(3e) by Horner steps.
fn sigma3_mod(factors: &[(u64, u32)], n: u64) -> u128 {
    let n = n as u128;
    let mut acc = 1u128;
    for &(r, e) in factors {
        let rm = r as u128 % n;
        let r3 = rm * rm % n * rm % n;
        let mut term = 1u128;
        for _ in 0..e {
            term = (term * r3 + 1) % n;
        }
        acc = acc * term % n;
    }
    acc
}
