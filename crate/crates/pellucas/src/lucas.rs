//! Lucas sequences of the first and second kind, plus checkers for the
//! order-2 recurrence identities the solution families are built on.
//!
//! U and V are defined by U_0 = 0, U_1 = 1, V_0 = 2, V_1 = P and the shared
//! recurrence X_n = P*X_{n-1} - Q*X_{n-2}. Evaluation is by fast doubling on
//! the pair (U_k, U_{k+1}); the plain iterative recurrence is kept public as
//! the test oracle. Negative indices use U_{-k} = -Q^{-k} U_k and
//! V_{-k} = Q^{-k} V_k, which stay integral exactly when |Q| = 1.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The pair (P, Q) parameterizing both Lucas sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LucasParams {
    pub p: i64,
    pub q: i64,
}

impl LucasParams {
    pub fn new(p: i64, q: i64) -> Self {
        LucasParams { p, q }
    }

    /// P^2 - 4Q, the discriminant shared by both sequences.
    pub fn discriminant(&self) -> i64 {
        self.p * self.p - 4 * self.q
    }
}

/// Seed and coefficients of a general order-2 recurrence
/// A_n = u*A_{n-1} + v*A_{n-2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecurrenceSeed {
    pub a0: i64,
    pub a1: i64,
    pub u: i64,
    pub v: i64,
}

/// U_k(P, Q) for any integer k.
pub fn lucas_u(params: LucasParams, k: i64) -> Result<BigInt> {
    if k < 0 {
        let qk = negative_index_sign(params.q, k)?;
        return Ok(-qk * uv_pair(params, k.unsigned_abs()).0);
    }
    Ok(uv_pair(params, k as u64).0)
}

/// V_k(P, Q) for any integer k.
pub fn lucas_v(params: LucasParams, k: i64) -> Result<BigInt> {
    let sign = if k < 0 { negative_index_sign(params.q, k)? } else { BigInt::one() };
    let (u_k, u_k1) = uv_pair(params, k.unsigned_abs());
    Ok(sign * (2 * u_k1 - params.p * u_k))
}

/// (U_k, V_k) at a non-negative index, one doubling pass.
pub(crate) fn lucas_uv(params: LucasParams, k: u64) -> (BigInt, BigInt) {
    let (u_k, u_k1) = uv_pair(params, k);
    let v_k = 2 * u_k1 - params.p * &u_k;
    (u_k, v_k)
}

// Q^{-k} for k < 0 collapses to Q^k when |Q| = 1; anything else is rejected
// because the extension would leave the integers.
fn negative_index_sign(q: i64, k: i64) -> Result<BigInt> {
    if q != 1 && q != -1 {
        return Err(Error::NegativeIndex { index: k, q });
    }
    Ok(if q == 1 || k % 2 == 0 { BigInt::one() } else { -BigInt::one() })
}

/// Fast doubling on (U_k, U_{k+1}):
///   U_{2k}   = U_k * (2*U_{k+1} - P*U_k)
///   U_{2k+1} = U_{k+1}^2 - Q*U_k^2
fn uv_pair(params: LucasParams, k: u64) -> (BigInt, BigInt) {
    let p = BigInt::from(params.p);
    let q = BigInt::from(params.q);
    let mut a = BigInt::zero(); // U_m
    let mut b = BigInt::one(); // U_{m+1}
    if k == 0 {
        return (a, b);
    }
    let bits = 64 - k.leading_zeros();
    for i in (0..bits).rev() {
        let doubled_a = &a * (2 * &b - &p * &a);
        let doubled_b = &b * &b - &q * &a * &a;
        if (k >> i) & 1 == 1 {
            a = doubled_b.clone();
            b = &p * doubled_b - &q * doubled_a;
        } else {
            a = doubled_a;
            b = doubled_b;
        }
    }
    (a, b)
}

/// U_k by plain iteration; the oracle the fast path is tested against.
pub fn lucas_u_iterative(params: LucasParams, k: i64) -> Result<BigInt> {
    iterative(params, k, BigInt::zero(), BigInt::one(), false)
}

/// V_k by plain iteration.
pub fn lucas_v_iterative(params: LucasParams, k: i64) -> Result<BigInt> {
    iterative(params, k, BigInt::from(2), BigInt::from(params.p), true)
}

fn iterative(params: LucasParams, k: i64, x0: BigInt, x1: BigInt, is_v: bool) -> Result<BigInt> {
    if k < 0 {
        let qk = negative_index_sign(params.q, k)?;
        let positive = unroll(params, k.unsigned_abs(), x0, x1);
        return Ok(if is_v { qk * positive } else { -qk * positive });
    }
    Ok(unroll(params, k as u64, x0, x1))
}

fn unroll(params: LucasParams, steps: u64, mut a: BigInt, mut b: BigInt) -> BigInt {
    for _ in 0..steps {
        let next = params.p * &b - params.q * &a;
        a = b;
        b = next;
    }
    a
}

/// s(k, u, v) = sum over i of C(k-i, i) * u^(k-2i) * v^i.
pub fn s_poly(k: u32, u: i64, v: i64) -> BigInt {
    let u = BigInt::from(u);
    let v = BigInt::from(v);
    let mut total = BigInt::zero();
    for i in 0..=(k / 2) {
        let coeff = binomial(BigInt::from(k - i), BigInt::from(i));
        total += coeff * u.pow(k - 2 * i) * v.pow(i);
    }
    total
}

/// Both sides of the Catalan-style identity
///   A_{n+r} A_{n-r} - A_n^2 = (-v)^(n-r) s^2(r-1, u, v) (v A0^2 + u A0 A1 - A1^2)
/// for the recurrence described by `seed`. Equality for every admissible
/// input is the tested contract; the caller gets both sides so a failure is
/// diagnosable.
pub fn check_catalan(seed: RecurrenceSeed, n: i64, r: i64) -> Result<(BigInt, BigInt)> {
    if r < 1 || r > n {
        return Err(Error::RankOutOfRange { r, n });
    }
    let terms = recurrence_terms(seed, (n + r) as usize);
    let lhs = &terms[(n + r) as usize] * &terms[(n - r) as usize] - terms[n as usize].pow(2);
    let s = s_poly((r - 1) as u32, seed.u, seed.v);
    let minus_v = BigInt::from(-seed.v);
    let rhs = minus_v.pow((n - r) as u32) * &s * &s * seed_form(seed, false);
    Ok((lhs, rhs))
}

/// Which of the three squared-term identities to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityVariant {
    /// v = 1, even indices 2n and 2n+2.
    EvenV1,
    /// v = 1, odd indices 2n-1 and 2n+1.
    OddV1,
    /// v = -1, indices n-1 and n+1.
    VMinus1,
}

/// Both sides of the squared-term identity selected by `variant`:
///
/// ```text
/// EvenV1:  1 + A_{2n}^2 + A_{2n+2}^2
///          = (u^2+2) A_{2n} A_{2n+2} - u^2 (A0^2 + u A0 A1 - A1^2) + 1
/// OddV1:   1 + A_{2n-1}^2 + A_{2n+1}^2
///          = (u^2+2) A_{2n-1} A_{2n+1} + u^2 (A0^2 + u A0 A1 - A1^2) + 1
/// VMinus1: 1 + A_{n-1}^2 + A_{n+1}^2
///          = (u^2-2) A_{n-1} A_{n+1} + u^2 (A0^2 - u A0 A1 + A1^2) + 1
/// ```
pub fn check_parity_identity(
    variant: ParityVariant,
    seed: RecurrenceSeed,
    n: i64,
) -> Result<(BigInt, BigInt)> {
    let expected_v = match variant {
        ParityVariant::EvenV1 | ParityVariant::OddV1 => 1,
        ParityVariant::VMinus1 => -1,
    };
    if seed.v != expected_v {
        return Err(Error::WrongV { expected: expected_v, got: seed.v });
    }
    let (i, j) = match variant {
        ParityVariant::EvenV1 => (2 * n, 2 * n + 2),
        ParityVariant::OddV1 => (2 * n - 1, 2 * n + 1),
        ParityVariant::VMinus1 => (n - 1, n + 1),
    };
    if i < 0 {
        return Err(Error::IndexUnderflow { index: i });
    }
    let terms = recurrence_terms(seed, j as usize);
    let ai = &terms[i as usize];
    let aj = &terms[j as usize];
    let u2 = BigInt::from(seed.u) * seed.u;
    let lhs = 1 + ai.pow(2) + aj.pow(2);
    // For v = -1 the seed combination flips sign: A0^2 - u A0 A1 + A1^2
    // equals -(v A0^2 + u A0 A1 - A1^2).
    let rhs = match variant {
        ParityVariant::EvenV1 => (&u2 + 2) * ai * aj - &u2 * seed_form(seed, true) + 1,
        ParityVariant::OddV1 => (&u2 + 2) * ai * aj + &u2 * seed_form(seed, true) + 1,
        ParityVariant::VMinus1 => (&u2 - 2) * ai * aj - &u2 * seed_form(seed, false) + 1,
    };
    Ok((lhs, rhs))
}

// seed_form(_, true)  = A0^2 + u A0 A1 - A1^2        (the v = 1 shape)
// seed_form(_, false) = v A0^2 + u A0 A1 - A1^2      (general shape)
fn seed_form(seed: RecurrenceSeed, unit_v: bool) -> BigInt {
    let a0 = BigInt::from(seed.a0);
    let a1 = BigInt::from(seed.a1);
    let lead = if unit_v { BigInt::one() } else { BigInt::from(seed.v) };
    lead * &a0 * &a0 + seed.u * &a0 * &a1 - &a1 * &a1
}

fn recurrence_terms(seed: RecurrenceSeed, upto: usize) -> Vec<BigInt> {
    let mut terms = Vec::with_capacity(upto + 2);
    terms.push(BigInt::from(seed.a0));
    terms.push(BigInt::from(seed.a1));
    while terms.len() <= upto {
        let next = seed.u * &terms[terms.len() - 1] + seed.v * &terms[terms.len() - 2];
        terms.push(next);
    }
    terms
}

/// One of the six addition/shift relations tying U and V together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LucasRelation {
    /// V_k = U_{k+1} - Q U_{k-1}
    VFromU = 1,
    /// (P^2 - 4Q) U_k = V_{k+1} - Q V_{k-1}
    UFromV = 2,
    /// 2 U_{k+l} = U_k V_l + U_l V_k
    UAddition = 3,
    /// 2 Q^l U_{k-l} = U_k V_l - U_l V_k
    USubtraction = 4,
    /// 2 V_{k+l} = (P^2 - 4Q) U_k U_l + V_k V_l
    VAddition = 5,
    /// 2 Q^l V_{k-l} = V_k V_l - (P^2 - 4Q) U_k U_l
    VSubtraction = 6,
}

impl TryFrom<u8> for LucasRelation {
    type Error = Error;

    fn try_from(id: u8) -> Result<Self> {
        Ok(match id {
            1 => LucasRelation::VFromU,
            2 => LucasRelation::UFromV,
            3 => LucasRelation::UAddition,
            4 => LucasRelation::USubtraction,
            5 => LucasRelation::VAddition,
            6 => LucasRelation::VSubtraction,
            other => return Err(Error::RelationId(other)),
        })
    }
}

/// Both sides of the chosen relation at (k, l). Relations 1 and 2 ignore l.
pub fn check_lucas_relation(
    relation: LucasRelation,
    params: LucasParams,
    k: i64,
    l: i64,
) -> Result<(BigInt, BigInt)> {
    let u = |i: i64| lucas_u(params, i);
    let v = |i: i64| lucas_v(params, i);
    let disc = BigInt::from(params.discriminant());
    Ok(match relation {
        LucasRelation::VFromU => (v(k)?, u(k + 1)? - params.q * u(k - 1)?),
        LucasRelation::UFromV => (&disc * u(k)?, v(k + 1)? - params.q * v(k - 1)?),
        LucasRelation::UAddition => (2 * u(k + l)?, u(k)? * v(l)? + u(l)? * v(k)?),
        LucasRelation::USubtraction => {
            (2 * q_power(params.q, l)? * u(k - l)?, u(k)? * v(l)? - u(l)? * v(k)?)
        }
        LucasRelation::VAddition => (2 * v(k + l)?, &disc * u(k)? * u(l)? + v(k)? * v(l)?),
        LucasRelation::VSubtraction => {
            (2 * q_power(params.q, l)? * v(k - l)?, v(k)? * v(l)? - &disc * u(k)? * u(l)?)
        }
    })
}

fn q_power(q: i64, l: i64) -> Result<BigInt> {
    if l >= 0 {
        return Ok(BigInt::from(q).pow(l as u32));
    }
    if q != 1 && q != -1 {
        return Err(Error::NegativeIndex { index: l, q });
    }
    Ok(if q == 1 || l % 2 == 0 { BigInt::one() } else { -BigInt::one() })
}
