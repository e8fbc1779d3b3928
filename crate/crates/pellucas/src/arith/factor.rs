//! Factorization: trial division over a cached prime table, then Brent-cycle
//! Pollard rho with a deterministic parameter schedule so repeated runs split
//! identically.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::primality::{is_prime, is_prime_u64};
use super::sieve::small_primes;
use crate::error::{Error, Result};

/// A multiset of (prime, exponent) pairs with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    /// Multiply the factorization back out.
    pub fn value(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }
}

/// Factor `n >= 1`; n = 1 gives the empty product.
pub fn factorize(n: &BigUint) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroOperand);
    }
    if let Some(v) = n.to_u64() {
        return Ok(Factorization {
            factors: factorize_u64(v)?
                .into_iter()
                .map(|(p, e)| (BigUint::from(p), e))
                .collect(),
        });
    }

    let mut remaining = n.clone();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for &p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > remaining {
            break;
        }
        let mut e = 0u32;
        while (&remaining % &pb).is_zero() {
            remaining /= &pb;
            e += 1;
        }
        if e > 0 {
            factors.push((pb, e));
        }
        if remaining.is_one() {
            break;
        }
    }
    if !remaining.is_one() {
        let mut primes = Vec::new();
        split_big(remaining, &mut primes);
        primes.sort();
        push_grouped(&mut factors, primes);
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Factorization { factors })
}

/// Factor a machine-word value.
pub fn factorize_u64(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::ZeroOperand);
    }
    let mut remaining = n;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for &p in small_primes() {
        if p.checked_mul(p).is_none_or(|sq| sq > remaining) {
            break;
        }
        if remaining.is_multiple_of(p) {
            let mut e = 0u32;
            while remaining.is_multiple_of(p) {
                remaining /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if remaining > 1 {
        let mut primes = Vec::new();
        split_u64(remaining, &mut primes);
        primes.sort_unstable();
        let mut grouped: Vec<(u64, u32)> = Vec::new();
        for p in primes {
            match grouped.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => grouped.push((p, 1)),
            }
        }
        factors.extend(grouped);
    }
    factors.sort_unstable();
    Ok(factors)
}

fn push_grouped(factors: &mut Vec<(BigUint, u32)>, primes: Vec<BigUint>) {
    for p in primes {
        match factors.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => factors.push((p, 1)),
        }
    }
}

fn split_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    // Deterministic schedule: x0 = 2 and c = 1, 2, 3, ... until a split lands.
    let mut c = 1u64;
    let d = loop {
        if let Some(d) = pollard_brent_u64(n, c) {
            break d;
        }
        c += 1;
    };
    split_u64(d, out);
    split_u64(n / d, out);
}

fn pollard_brent_u64(n: u64, c: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let step = |x: u64| {
        let t = mul(x, x);
        let t = t + c;
        if t >= n {
            t - n
        } else {
            t
        }
    };
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut x = y;
    let mut ys = y;
    let m = 128u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0u64;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = step(y);
                q = mul(q, x.abs_diff(y));
            }
            g = gcd_u64(q, n);
            k += m;
        }
        r <<= 1;
    }
    if g == n {
        // Backtrack one step at a time from the last saved point.
        loop {
            ys = step(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    if g == n {
        None
    } else {
        Some(g)
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn split_big(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let mut c = 1u64;
    let d = loop {
        if let Some(d) = pollard_brent_big(&n, c) {
            break d;
        }
        c += 1;
    };
    let q = &n / &d;
    split_big(d, out);
    split_big(q, out);
}

fn pollard_brent_big(n: &BigUint, c: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let c = BigUint::from(c);
    let step = |x: &BigUint| (x * x + &c) % n;
    let abs_diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let m = 128u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0u64;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = step(&y);
                q = (&q * abs_diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r <<= 1;
    }
    if g == *n {
        loop {
            ys = step(&ys);
            g = abs_diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if g == *n {
        None
    } else {
        Some(g)
    }
}
