//! Primality testing.
//!
//! Below 2^64 the strong-pseudoprime test with the fixed witness set
//! {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is exact. Above 2^64 we run
//! 40 strong-pseudoprime rounds (the first 40 primes as bases) plus a strong
//! Lucas test with Selfridge parameters; such numbers are reported as
//! [`Primality::ProbablePrime`] rather than silently trusted.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Three-valued primality verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Composite,
    /// Proven prime (deterministic range, below 2^64).
    Prime,
    /// Passed 40 strong-pseudoprime rounds and a strong Lucas test.
    ProbablePrime,
}

impl Primality {
    pub fn is_prime(self) -> bool {
        !matches!(self, Primality::Composite)
    }
}

/// True iff `n` is prime (probable prime above 2^64).
pub fn is_prime(n: &BigUint) -> bool {
    primality(n).is_prime()
}

/// Classify `n` as composite, proven prime, or probable prime.
pub fn primality(n: &BigUint) -> Primality {
    match n.to_u64() {
        Some(v) => {
            if is_prime_u64(v) {
                Primality::Prime
            } else {
                Primality::Composite
            }
        }
        None => primality_big(n),
    }
}

const SMALL_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic strong-pseudoprime test, exact for all of u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &SMALL_WITNESSES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

// First 40 primes, used as strong-test bases beyond the deterministic range.
const BIG_BASES: [u64; 40] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
];

fn primality_big(n: &BigUint) -> Primality {
    // Callers route everything below 2^64 elsewhere, so n is odd-checked here.
    if n.is_even() {
        return Primality::Composite;
    }
    for &p in &BIG_BASES {
        if (n % p).is_zero() {
            return Primality::Composite;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap();
    let d = &n_minus_1 >> s;
    for &a in &BIG_BASES {
        if !mr_round(n, &n_minus_1, &d, s, a) {
            return Primality::Composite;
        }
    }
    if !strong_lucas_prp(n) {
        return Primality::Composite;
    }
    Primality::ProbablePrime
}

fn mr_round(n: &BigUint, n_minus_1: &BigUint, d: &BigUint, s: u64, base: u64) -> bool {
    let mut x = BigUint::from(base).modpow(d, n);
    if x.is_one() || x == *n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigUint::from(2u32), n);
        if x == *n_minus_1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol (a/n) for odd positive n.
pub(crate) fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    debug_assert!(n.is_odd());
    let n_int = BigInt::from(n.clone());
    let mut a = a.mod_floor(&n_int).to_biguint().unwrap();
    let mut n = n.clone();
    let mut t = 1i32;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = (&n % 8u32).to_u32().unwrap();
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u32().unwrap() == 3 && (&n % 4u32).to_u32().unwrap() == 3 {
            t = -t;
        }
        a %= &n;
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice:
/// the first D in 5, -7, 9, -11, ... with (D/n) = -1, P = 1, Q = (1 - D)/4.
fn strong_lucas_prp(n: &BigUint) -> bool {
    if n.sqrt().pow(2) == *n {
        return false;
    }
    let mut d: i64 = 5;
    loop {
        let j = jacobi(&BigInt::from(d), n);
        if j == -1 {
            break;
        }
        if j == 0 {
            // gcd(|D|, n) > 1; n exceeds |D| here, so a proper factor exists.
            return false;
        }
        d = if d > 0 { -(d + 2) } else { -(d - 2) };
    }
    let q: i64 = (1 - d) / 4;
    let n_int = BigInt::from(n.clone());

    // delta = n + 1 = d0 * 2^s with d0 odd.
    let delta = n + 1u32;
    let s = delta.trailing_zeros().unwrap();
    let d0 = &delta >> s;

    // Walk the bits of d0, tracking (U_k, V_k, Q^k) mod n.  P = 1 throughout.
    let mut u = BigInt::zero();
    let mut v = BigInt::from(2);
    let mut qk = BigInt::one();
    let q_big = BigInt::from(q);
    let d_big = BigInt::from(d);
    let bits = d0.bits();
    for i in (0..bits).rev() {
        // (U, V, Q^k) -> (U*V, V^2 - 2 Q^k, Q^2k)
        u = (&u * &v).mod_floor(&n_int);
        v = (&v * &v - &qk - &qk).mod_floor(&n_int);
        qk = (&qk * &qk).mod_floor(&n_int);
        if d0.bit(i) {
            // index +1: U' = (U + V)/2, V' = (D*U + V)/2  (P = 1)
            let tu = half_mod(&u + &v, n);
            let tv = half_mod(&d_big * &u + &v, n);
            u = tu;
            v = tv;
            qk = (&qk * &q_big).mod_floor(&n_int);
        }
    }

    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk - &qk).mod_floor(&n_int);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(&n_int);
    }
    false
}

/// (x / 2) mod n for odd n, with x already reduced or reducible.
fn half_mod(x: BigInt, n: &BigUint) -> BigInt {
    let n_int = BigInt::from(n.clone());
    let x = x.mod_floor(&n_int);
    debug_assert!(!x.is_negative());
    if x.is_even() {
        x >> 1
    } else {
        (x + n_int) >> 1
    }
}
