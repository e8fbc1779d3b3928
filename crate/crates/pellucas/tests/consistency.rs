//! Cross-module consistency: the solution families and the Pell ladders are
//! two views of the same objects, and the searches must agree wherever they
//! overlap.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use pellucas::arith::is_prime;
use pellucas::pell::{solve_pm4, PellShape, Rhs};
use pellucas::solver::{
    brute_force, family_solutions, semiprime_search, EquationInstance, TheoremId, TheoremPattern,
};

/// The T1_1_c1 family at P is exactly the consecutive prime pairs on the
/// y-ladder of x^2 - (P^2 + 4) y^2 = -4: members are y_k * y_{k+1} with both
/// entries prime.
#[test]
fn t11c1_families_are_consecutive_prime_pell_pairs() {
    for p in 1..=3u64 {
        let k_limit = 16u32;
        let ladder = solve_pm4(&PellShape::Plus4 { p }, Rhs::Minus4, k_limit as usize + 2)
            .unwrap();
        let ys: Vec<BigUint> = ladder.into_iter().map(|s| s.y).collect();
        let mut expected: Vec<BigUint> = Vec::new();
        for pair in ys.windows(2) {
            if pair[0] != pair[1] && is_prime(&pair[0]) && is_prime(&pair[1]) {
                expected.push(&pair[0] * &pair[1]);
            }
        }

        let pattern = TheoremPattern { id: TheoremId::T11C1, p: p as i64, m: 0 };
        let family = family_solutions(&pattern, k_limit).unwrap();
        let got: Vec<BigUint> = family.solutions.iter().map(|s| s.n.clone()).collect();
        assert_eq!(got, expected, "P = {p}");
    }
}

/// Factor values of the emitted families are prime y-values of the ladder.
#[test]
fn t11c1_factors_sit_on_the_pell_ladder() {
    let pattern = TheoremPattern { id: TheoremId::T11C1, p: 1, m: 0 };
    let family = family_solutions(&pattern, 8).unwrap();
    let ladder: Vec<BigUint> = solve_pm4(&PellShape::Plus4 { p: 1 }, Rhs::Minus4, 12)
        .unwrap()
        .into_iter()
        .map(|s| s.y)
        .collect();
    for sol in &family.solutions {
        assert!(ladder.contains(&sol.p), "factor {} not on the ladder", sol.p);
        assert!(ladder.contains(&sol.q), "factor {} not on the ladder", sol.q);
    }
}

/// Brute force and the quadratic search agree on the two-prime solutions of
/// a structured instance inside the scanned range.
#[test]
fn brute_and_semiprime_search_agree_in_range() {
    for (a, b) in [(3i64, 0i64), (2, 5), (3, -4), (7, -8), (3, 6)] {
        let inst = EquationInstance::new(BigInt::from(a), BigInt::from(b)).unwrap();
        let limit = 5000u64;
        let scan = brute_force(&inst, limit, 1 << 12).unwrap();
        let scanned_to = scan.scanned_to;
        let brute_semiprimes: Vec<u64> = scan
            .solutions
            .iter()
            .copied()
            .filter(|&n| {
                pellucas::solver::split_distinct_semiprime(&BigUint::from(n)).is_some()
            })
            .collect();
        let searched: Vec<u64> = semiprime_search(&inst, scanned_to)
            .unwrap()
            .into_iter()
            .map(|(p, q)| p * q)
            .filter(|&n| n <= scanned_to)
            .collect();
        assert_eq!(brute_semiprimes, searched, "(A, B) = ({a}, {b})");
    }
}

/// Probable-prime labeling: deep family members beyond 2^64 carry the flag,
/// and their products still satisfy the equation identity.
#[test]
fn deep_family_members_verify_exactly() {
    let pattern = TheoremPattern { id: TheoremId::T11C1, p: 1, m: 0 };
    let inst = pattern.instance();
    let family = family_solutions(&pattern, 64).unwrap();
    // (F_131, F_133)? F_133 is composite; but F_131 pairs never form. The
    // known members stay small, so just confirm all reported members verify
    // and that flags line up with factor size.
    for sol in &family.solutions {
        assert!(inst.holds_semiprime(&sol.p, &sol.q));
        let beyond_machine = sol.p.to_u64().is_none() || sol.q.to_u64().is_none();
        assert_eq!(sol.probable_prime, beyond_machine);
    }
}
