//! Recognition of structured (A, B) pairs and generation of their
//! Lucas-sequence solution families.
//!
//! Ten built-in patterns are supported. Writing u = U(P, -1), v = V(P, -1),
//! u' = U(P, 1), v' = V(P, 1):
//!
//! | tag      | A        | B               | solutions n = p*q          |
//! |----------|----------|-----------------|-----------------------------|
//! | T1_1_c1  | P^2 + 2  | -P^2 + 1        | u_{2k-1} * u_{2k+1}         |
//! | T1_1_c2  | P^2 + 2  | P^2 + 1         | u_{2k} * u_{2k+2}           |
//! | T1_1_c3  | P^2 - 2  | P^2 + 1         | u'_{k-1} * u'_{k+1}         |
//! | T1_2_c1  | P^2 + 2  | -P^4 - 4P^2 + 1 | v_{2k} * v_{2k+2}           |
//! | T1_2_c2  | P^2 + 2  | P^4 + 4P^2 + 1  | v_{2k-1} * v_{2k+1}         |
//! | T1_2_c3  | P^2 - 2  | -P^4 + 4P^2 + 1 | v'_{k-1} * v'_{k+1}         |
//! | T3       | v_{2m}   | -u_{2m}^2 + 1   | u_{2k+1} * u_{2k+2m+1}, and |
//! |          |          |                 | u_{2k+1} * u_{2m-2k-1}      |
//! | T4       | v_{2m}   | u_{2m}^2 + 1    | u_{2k} * u_{2k+2m}, and     |
//! |          |          |                 | u_{2k} * u_{2m-2k}          |
//! | T5       | v_{2m}   | v_{2m}^2 - 3    | v_{2k+1} * v_{2k+2m+1}, and |
//! |          |          |                 | v_{2k+1} * v_{2m-2k-1}      |
//! | T6       | v_{2m}   | -v_{2m}^2 + 5   | v_{2k} * v_{2k+2m}, and     |
//! |          |          |                 | v_{2k} * v_{2m-2k}          |
//!
//! Both factors must themselves be prime, which is why families thin out
//! fast. T1_2_c1/c2, T5 and T6 additionally require P^2 + 4 square-free and
//! T1_2_c3 requires P^2 - 4 square-free. P is normalized to P >= 0: A and B
//! depend on P only through P^2, and the factor values for -P agree with
//! those for P up to sign.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::EquationInstance;
use crate::arith::{is_squarefree_u64, primality, Primality};
use crate::error::{Error, Result};
use crate::lucas::{lucas_u, lucas_v, LucasParams};

/// Tag of a built-in (A, B) pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T11C1,
    T11C2,
    T11C3,
    T12C1,
    T12C2,
    T12C3,
    T3,
    T4,
    T5,
    T6,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::T11C1,
        TheoremId::T11C2,
        TheoremId::T11C3,
        TheoremId::T12C1,
        TheoremId::T12C2,
        TheoremId::T12C3,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
    ];

    /// Stable tag used in reports and JSON output.
    pub fn tag(&self) -> &'static str {
        match self {
            TheoremId::T11C1 => "T1_1_c1",
            TheoremId::T11C2 => "T1_1_c2",
            TheoremId::T11C3 => "T1_1_c3",
            TheoremId::T12C1 => "T1_2_c1",
            TheoremId::T12C2 => "T1_2_c2",
            TheoremId::T12C3 => "T1_2_c3",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
        }
    }

    pub fn uses_m(&self) -> bool {
        matches!(self, TheoremId::T3 | TheoremId::T4 | TheoremId::T5 | TheoremId::T6)
    }
}

/// A pattern instance: tag plus its parameters. `m` is 0 for tags that do
/// not use it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TheoremPattern {
    pub id: TheoremId,
    pub p: i64,
    pub m: u32,
}

impl TheoremPattern {
    /// Reconstruct the (A, B) this pattern solves.
    pub fn instance(&self) -> EquationInstance {
        let p2 = BigInt::from(self.p) * self.p;
        let p4 = &p2 * &p2;
        let (a, b) = match self.id {
            TheoremId::T11C1 => (&p2 + 2, 1 - &p2),
            TheoremId::T11C2 => (&p2 + 2, &p2 + 1),
            TheoremId::T11C3 => (&p2 - 2, &p2 + 1),
            TheoremId::T12C1 => (&p2 + 2, 1 - &p4 - 4 * &p2),
            TheoremId::T12C2 => (&p2 + 2, &p4 + 4 * &p2 + 1),
            TheoremId::T12C3 => (&p2 - 2, 4 * &p2 - &p4 + 1),
            TheoremId::T3 | TheoremId::T4 | TheoremId::T5 | TheoremId::T6 => {
                let params = LucasParams::new(self.p, -1);
                let idx = 2 * self.m as i64;
                let v2m = lucas_v(params, idx).expect("non-negative index");
                match self.id {
                    TheoremId::T3 => {
                        let u2m = lucas_u(params, idx).expect("non-negative index");
                        (v2m, 1 - &u2m * &u2m)
                    }
                    TheoremId::T4 => {
                        let u2m = lucas_u(params, idx).expect("non-negative index");
                        (v2m.clone(), &u2m * &u2m + 1)
                    }
                    TheoremId::T5 => {
                        let sq = &v2m * &v2m;
                        (v2m, sq - 3)
                    }
                    TheoremId::T6 => {
                        let sq = &v2m * &v2m;
                        (v2m, 5 - sq)
                    }
                    _ => unreachable!(),
                }
            }
        };
        EquationInstance::new_unchecked(a, b)
    }

    /// Square-free side condition, where the pattern carries one.
    pub fn side_condition_holds(&self) -> bool {
        match self.id {
            TheoremId::T12C1 | TheoremId::T12C2 | TheoremId::T5 | TheoremId::T6 => {
                squarefree_nonzero(self.p * self.p + 4)
            }
            TheoremId::T12C3 => squarefree_nonzero(self.p * self.p - 4),
            _ => true,
        }
    }

    fn sequence(&self) -> (SequenceKind, LucasParams) {
        match self.id {
            TheoremId::T11C1 | TheoremId::T11C2 | TheoremId::T3 | TheoremId::T4 => {
                (SequenceKind::U, LucasParams::new(self.p, -1))
            }
            TheoremId::T11C3 => (SequenceKind::U, LucasParams::new(self.p, 1)),
            TheoremId::T12C1 | TheoremId::T12C2 | TheoremId::T5 | TheoremId::T6 => {
                (SequenceKind::V, LucasParams::new(self.p, -1))
            }
            TheoremId::T12C3 => (SequenceKind::V, LucasParams::new(self.p, 1)),
        }
    }

    /// Factor index pairs to try, given the per-family index cap.
    fn index_pairs(&self, k_limit: u32) -> Vec<[i64; 2]> {
        let k_range = 0..=(k_limit as i64);
        let m = self.m as i64;
        let mut pairs: Vec<[i64; 2]> = match self.id {
            TheoremId::T11C1 => k_range.map(|k| [2 * k - 1, 2 * k + 1]).collect(),
            TheoremId::T11C2 => k_range.map(|k| [2 * k, 2 * k + 2]).collect(),
            TheoremId::T11C3 | TheoremId::T12C3 => k_range.map(|k| [k - 1, k + 1]).collect(),
            TheoremId::T12C1 => k_range.map(|k| [2 * k, 2 * k + 2]).collect(),
            TheoremId::T12C2 => k_range.map(|k| [2 * k - 1, 2 * k + 1]).collect(),
            TheoremId::T3 | TheoremId::T5 => {
                k_range.map(|k| [2 * k + 1, 2 * k + 2 * m + 1]).collect()
            }
            TheoremId::T4 | TheoremId::T6 => k_range.map(|k| [2 * k, 2 * k + 2 * m]).collect(),
        };
        // The complementary families run k below m with the diagonal excluded.
        match self.id {
            TheoremId::T3 | TheoremId::T5 => {
                pairs.extend(
                    (0..m).filter(|k| m != 2 * k + 1).map(|k| [2 * k + 1, 2 * m - 2 * k - 1]),
                );
            }
            TheoremId::T4 | TheoremId::T6 => {
                pairs.extend((0..m).filter(|k| m != 2 * k).map(|k| [2 * k, 2 * m - 2 * k]));
            }
            _ => {}
        }
        pairs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SequenceKind {
    U,
    V,
}

fn squarefree_nonzero(x: i64) -> bool {
    x != 0 && is_squarefree_u64(x.unsigned_abs())
}

/// Every pattern whose reconstructed (A, B) matches `instance`, with
/// 0 <= P <= p_limit and 1 <= m <= m_limit, side conditions included.
pub fn recognize_patterns(
    instance: &EquationInstance,
    p_limit: u32,
    m_limit: u32,
) -> Vec<TheoremPattern> {
    let mut out = Vec::new();
    for id in TheoremId::ALL {
        for p in 0..=(p_limit as i64) {
            let m_values: Vec<u32> = if id.uses_m() { (1..=m_limit).collect() } else { vec![0] };
            for m in m_values {
                let pattern = TheoremPattern { id, p, m };
                if !pattern.side_condition_holds() {
                    continue;
                }
                let candidate = pattern.instance();
                if candidate.a() == instance.a() && candidate.b() == instance.b() {
                    out.push(pattern);
                }
            }
        }
    }
    out.sort();
    out
}

/// One verified family member n = p*q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySolution {
    pub n: BigUint,
    pub p: BigUint,
    pub q: BigUint,
    pub pattern: TheoremPattern,
    /// The two sequence indices the factors came from.
    pub indices: [i64; 2],
    /// True when a factor lies beyond the deterministic primality range.
    pub probable_prime: bool,
}

/// Outcome of family generation; `diagnostic` explains degenerate parameter
/// sets that can never produce a solution.
#[derive(Debug, Clone, Default)]
pub struct FamilyGeneration {
    pub solutions: Vec<FamilySolution>,
    pub diagnostic: Option<String>,
}

/// Generate and verify the family members of `pattern` for indices up to
/// `k_limit`. Candidate factors are taken by absolute value (negative-index
/// terms only differ in sign), must be distinct primes, and every survivor is
/// re-checked against the equation itself.
pub fn family_solutions(pattern: &TheoremPattern, k_limit: u32) -> Result<FamilyGeneration> {
    let instance = pattern.instance();
    let (kind, params) = pattern.sequence();
    let evaluate = |index: i64| -> BigUint {
        let value = match kind {
            SequenceKind::U => lucas_u(params, index),
            SequenceKind::V => lucas_v(params, index),
        };
        value.expect("|Q| = 1 for every built-in pattern").magnitude().clone()
    };

    let mut generation = FamilyGeneration {
        solutions: Vec::new(),
        diagnostic: degenerate_reason(kind, params),
    };
    let mut seen: Vec<(BigUint, BigUint)> = Vec::new();
    for indices in pattern.index_pairs(k_limit) {
        let f0 = evaluate(indices[0]);
        let f1 = evaluate(indices[1]);
        if f0 == f1 {
            continue;
        }
        let (p, q) = if f0 < f1 { (f0, f1) } else { (f1, f0) };
        let (vp, vq) = (primality(&p), primality(&q));
        if !vp.is_prime() || !vq.is_prime() {
            continue;
        }
        if seen.contains(&(p.clone(), q.clone())) {
            continue;
        }
        if !instance.holds_semiprime(&p, &q) {
            return Err(Error::Internal(format!(
                "family candidate {p} * {q} for {} (P = {}, m = {}) fails the equation",
                pattern.id.tag(),
                pattern.p,
                pattern.m
            )));
        }
        seen.push((p.clone(), q.clone()));
        generation.solutions.push(FamilySolution {
            n: &p * &q,
            p,
            q,
            pattern: *pattern,
            indices,
            probable_prime: vp == Primality::ProbablePrime || vq == Primality::ProbablePrime,
        });
    }
    generation.solutions.sort_by(|x, y| x.n.cmp(&y.n));
    Ok(generation)
}

// Parameter sets whose sequence stays inside {0, +/-1, +/-2} forever: no two
// distinct primes can ever show up as factors.
fn degenerate_reason(kind: SequenceKind, params: LucasParams) -> Option<String> {
    let bounded = match (kind, params.q) {
        (_, -1) => params.p == 0,
        (SequenceKind::U, 1) => params.p.abs() <= 1,
        (SequenceKind::V, 1) => params.p.abs() <= 2,
        _ => false,
    };
    bounded.then(|| {
        format!(
            "degenerate parameters (P, Q) = ({}, {}): the {} sequence is bounded inside \
             {{0, 1, 2}} in absolute value, so the family is empty",
            params.p,
            params.q,
            match kind {
                SequenceKind::U => "first-kind",
                SequenceKind::V => "second-kind",
            }
        )
    })
}

/// True when `n` is a product of two distinct primes, returning them.
pub fn split_distinct_semiprime(n: &BigUint) -> Option<(BigUint, BigUint)> {
    let f = crate::arith::factorize(n).ok()?;
    if f.factors.len() == 2 && f.factors.iter().all(|(_, e)| *e == 1) {
        Some((f.factors[0].0.clone(), f.factors[1].0.clone()))
    } else {
        None
    }
}

/// p^2 + q^2 + 1 - B compared against A*p*q; used to verify candidate pairs.
pub(crate) fn semiprime_identity_holds(a: &BigInt, b: &BigInt, p: &BigUint, q: &BigUint) -> bool {
    let p = BigInt::from(p.clone());
    let q = BigInt::from(q.clone());
    &p * &p + &q * &q + BigInt::one() - b == a * p * q
}
