//! Exact integer arithmetic services: primality, factorization, divisor-power
//! sums, a segmented sigma_2 sieve, and the square-free / even-perfect
//! predicates. Everything here is a pure function of its inputs.

mod factor;
mod primality;
mod sieve;

pub use factor::{factorize, factorize_u64, Factorization};
pub use primality::{is_prime, is_prime_u64, primality, Primality};
pub use sieve::{primes_up_to, sigma2_segment, sigma2_segment_bounded, DEFAULT_SEGMENT_LEN};

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// sigma_k(n) = sum of d^k over the divisors d of n, via the multiplicative
/// closed form. Each prime power contributes 1 + p^k + ... + p^(k*e),
/// accumulated by Horner steps so no division is ever performed.
pub fn sigma_k(n: &BigUint, k: u32) -> Result<BigUint> {
    if n.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let mut acc = BigUint::one();
    for (p, e) in factorize(n)?.factors {
        let pk = p.pow(k);
        let mut term = BigUint::one();
        for _ in 0..e {
            term = term * &pk + 1u32;
        }
        acc *= term;
    }
    Ok(acc)
}

/// True iff no square larger than 1 divides n.
pub fn is_squarefree(n: &BigUint) -> bool {
    if n.is_zero() {
        return false;
    }
    factorize(n).map(|f| f.is_squarefree()).unwrap_or(false)
}

pub fn is_squarefree_u64(n: u64) -> bool {
    is_squarefree(&BigUint::from(n))
}

/// True iff n = 2^(a-1) * (2^a - 1) with 2^a - 1 prime.
pub fn is_even_perfect(n: &BigUint) -> bool {
    if n.is_zero() || n.bit(0) {
        return false;
    }
    let e = n.trailing_zeros().expect("n is nonzero");
    let m = n >> e;
    let mersenne = (BigUint::one() << (e + 1)) - 1u32;
    m == mersenne && is_prime(&m)
}

pub fn is_even_perfect_u64(n: u64) -> bool {
    is_even_perfect(&BigUint::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// Naive divisor loop, the oracle for the closed form.
    fn sigma_k_naive(n: u64, k: u32) -> u128 {
        let mut sum = 0u128;
        for d in 1..=n {
            if n.is_multiple_of(d) {
                sum += (d as u128).pow(k);
            }
        }
        sum
    }

    #[test]
    fn sigma_spec_values() {
        assert_eq!(sigma_k(&big(10), 2).unwrap(), big(130));
        assert_eq!(sigma_k(&big(1), 3).unwrap(), big(1));
        assert_eq!(sigma_k(&big(6), 3).unwrap(), big(252));
        assert!(matches!(sigma_k(&big(0), 2), Err(Error::ZeroOperand)));
    }

    #[test]
    fn sigma_matches_naive_loop() {
        for n in 1..=10_000u64 {
            for k in 1..=3u32 {
                let closed = sigma_k(&big(n), k).unwrap();
                assert_eq!(closed, BigUint::from(sigma_k_naive(n, k)), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn sigma_zero_counts_divisors() {
        assert_eq!(sigma_k(&big(12), 0).unwrap(), big(6));
        assert_eq!(sigma_k(&big(1), 0).unwrap(), big(1));
    }

    #[test]
    fn squarefree_spec_values() {
        assert!(is_squarefree(&big(5)));
        assert!(!is_squarefree(&big(8)));
        assert!(is_squarefree(&big(13)));
        assert!(is_squarefree(&big(1)));
        assert!(!is_squarefree(&big(0)));
    }

    #[test]
    fn even_perfect_spec_values() {
        assert!(is_even_perfect(&big(6)));
        assert!(is_even_perfect(&big(28)));
        assert!(!is_even_perfect(&big(12)));
        assert!(is_even_perfect(&big(496)));
        assert!(is_even_perfect(&big(8128)));
        assert!(!is_even_perfect(&big(1)));
        assert!(!is_even_perfect(&big(2)));
    }

    #[test]
    fn even_perfect_agrees_with_sigma1_route() {
        for n in (2..=10_000u64).step_by(2) {
            let by_sigma = sigma_k(&big(n), 1).unwrap() == big(2 * n);
            assert_eq!(is_even_perfect(&big(n)), by_sigma, "disagree at {n}");
        }
    }

    proptest! {
        #[test]
        fn factorize_reconstructs(n in 1u64..5_000_000) {
            let f = factorize(&big(n)).unwrap();
            prop_assert_eq!(f.value(), big(n));
        }

        #[test]
        fn sigma_multiplicative_on_coprime_pairs(a in 1u64..2000, b in 1u64..2000) {
            prop_assume!(num_integer::gcd(a, b) == 1);
            let lhs = sigma_k(&big(a * b), 2).unwrap();
            let rhs = sigma_k(&big(a), 2).unwrap() * sigma_k(&big(b), 2).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
