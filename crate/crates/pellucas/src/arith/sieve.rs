//! Prime sieving and the segmented sigma_2 sieve.
//!
//! The sigma_2 sieve walks divisors d up to sqrt(hi) and, at each multiple
//! m = d*q inside the segment, credits both d^2 and q^2 (once when d = q),
//! so a segment never needs divisors beyond sqrt of its upper end.

use crate::error::{Error, Result};
use std::sync::OnceLock;

/// Default length cap for one sigma_2 segment (values, not bytes).
pub const DEFAULT_SEGMENT_LEN: u64 = 1 << 20;

const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Primes up to `limit`, inclusive.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Cached prime table for trial division.
pub(crate) fn small_primes() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| primes_up_to(TRIAL_DIVISION_BOUND))
}

/// sigma_2 of every n in [lo, hi), one segment at the default length cap.
pub fn sigma2_segment(lo: u64, hi: u64) -> Result<Vec<u128>> {
    sigma2_segment_bounded(lo, hi, DEFAULT_SEGMENT_LEN)
}

/// sigma_2 of every n in [lo, hi); `max_len` caps the segment length.
pub fn sigma2_segment_bounded(lo: u64, hi: u64, max_len: u64) -> Result<Vec<u128>> {
    if lo == 0 {
        return Err(Error::ZeroOperand);
    }
    if hi <= lo {
        return Err(Error::EmptySegment { lo, hi });
    }
    let len = hi - lo;
    if len > max_len {
        return Err(Error::SegmentTooLong { lo, hi, len, max: max_len });
    }

    let mut out = vec![0u128; len as usize];
    let top = hi - 1;
    let mut d = 1u64;
    while d * d <= top {
        let dd = (d as u128) * (d as u128);
        // First multiple of d that is >= lo and >= d^2 (so the cofactor q >= d).
        let start = lo.max(d * d);
        let mut m = start.div_ceil(d) * d;
        while m < hi {
            let q = m / d;
            let idx = (m - lo) as usize;
            if q == d {
                out[idx] += dd;
            } else {
                out[idx] += dd + (q as u128) * (q as u128);
            }
            m += d;
        }
        d += 1;
    }
    Ok(out)
}
