//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `--nocapture` to see them) and holding a wall-clock budget.
//! Criteria take a shared lock so their timings do not fight each other.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rayon::prelude::*;

use pellucas::arith::{is_even_perfect_u64, sigma2_segment_bounded, sigma_k};
use pellucas::lucas::{
    check_catalan, check_lucas_relation, check_parity_identity, LucasParams, LucasRelation,
    ParityVariant, RecurrenceSeed,
};
use pellucas::pell::{solve_pm4, PellShape, Rhs};
use pellucas::sigma3::{conjecture_scan, divides_sigma3, scan_pq_alpha};
use pellucas::solver::{
    brute_force, family_solutions, recognize_patterns, semiprime_search,
    split_distinct_semiprime, EquationInstance, SolveConfig, TheoremId, TheoremPattern,
};

static GATE: Mutex<()> = Mutex::new(());

fn criterion<F>(name: &str, budget: Duration, f: F)
where
    F: FnOnce(),
{
    let _serial = GATE.lock().unwrap_or_else(|poisoned| poisoned.into_inner());
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) if elapsed <= budget => {
            println!("acceptance {name}: PASS ({elapsed:.2?}, budget {budget:?})");
        }
        Ok(()) => {
            println!("acceptance {name}: FAIL (over budget: {elapsed:.2?} > {budget:?})");
            panic!("{name} exceeded its wall-clock budget");
        }
        Err(cause) => {
            println!("acceptance {name}: FAIL ({elapsed:.2?})");
            resume_unwind(cause);
        }
    }
}

fn instance(a: i64, b: i64) -> EquationInstance {
    EquationInstance::new(BigInt::from(a), BigInt::from(b)).unwrap()
}

fn equation_holds(inst: &EquationInstance, n: u64) -> bool {
    inst.holds(&BigUint::from(n)).unwrap()
}

/// Criterion 1: the identity checkers return equal sides across the full
/// stated grids, with zero failures.
#[test]
fn criterion_1_identity_suite() {
    criterion("1 (identity suite)", Duration::from_secs(5), || {
        let mut checked = 0u64;
        for u in -3i64..=3 {
            for v in -3i64..=3 {
                for a0 in -2i64..=2 {
                    for a1 in -2i64..=2 {
                        let seed = RecurrenceSeed { a0, a1, u, v };
                        for n in 1..=20 {
                            for r in 1..=n {
                                let (lhs, rhs) = check_catalan(seed, n, r).unwrap();
                                assert_eq!(lhs, rhs, "catalan {seed:?} n={n} r={r}");
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
        for u in -4i64..=4 {
            for a0 in -2i64..=2 {
                for a1 in -2i64..=2 {
                    for n in 0..=15 {
                        let unit = RecurrenceSeed { a0, a1, u, v: 1 };
                        let (lhs, rhs) =
                            check_parity_identity(ParityVariant::EvenV1, unit, n).unwrap();
                        assert_eq!(lhs, rhs, "even_v1 {unit:?} n={n}");
                        checked += 1;
                        if n >= 1 {
                            let (lhs, rhs) =
                                check_parity_identity(ParityVariant::OddV1, unit, n).unwrap();
                            assert_eq!(lhs, rhs, "odd_v1 {unit:?} n={n}");
                            let minus = RecurrenceSeed { a0, a1, u, v: -1 };
                            let (lhs2, rhs2) =
                                check_parity_identity(ParityVariant::VMinus1, minus, n).unwrap();
                            assert_eq!(lhs2, rhs2, "v_minus1 {minus:?} n={n}");
                            checked += 2;
                        }
                    }
                }
            }
        }
        for p in -5i64..=5 {
            for q in [1i64, -1] {
                let params = LucasParams::new(p, q);
                for k in -10i64..=10 {
                    for l in -10i64..=10 {
                        for id in 1..=6u8 {
                            let relation = LucasRelation::try_from(id).unwrap();
                            let (lhs, rhs) =
                                check_lucas_relation(relation, params, k, l).unwrap();
                            assert_eq!(lhs, rhs, "relation {id} P={p} Q={q} k={k} l={l}");
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 300_000, "sweep unexpectedly small: {checked}");
    });
}

/// Criterion 2: for P in [1, 6] and both right-hand sides, a brute scan over
/// y <= 10^4 finds exactly the solutions the Lucas ladders emit.
#[test]
fn criterion_2_pell_completeness() {
    criterion("2 (pell completeness)", Duration::from_secs(10), || {
        const Y_MAX: u64 = 10_000;

        fn isqrt(n: u128) -> u128 {
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

        let brute = |d: u64, rhs: i64| -> Vec<(u128, u64)> {
            (0..=Y_MAX)
                .filter_map(|y| {
                    let t = (d as i128) * (y as i128) * (y as i128) + rhs as i128;
                    if t < 0 {
                        return None;
                    }
                    let x = isqrt(t as u128);
                    (x * x == t as u128).then_some((x, y))
                })
                .collect()
        };

        let emitted = |shape: &PellShape, rhs: Rhs| -> Vec<(u128, u64)> {
            let mut count = 8;
            loop {
                let sols = solve_pm4(shape, rhs, count).unwrap();
                if sols.last().unwrap().y.to_u64().is_none_or(|y| y > Y_MAX) {
                    return sols
                        .iter()
                        .filter(|s| s.y.to_u64().is_some_and(|y| y <= Y_MAX))
                        .map(|s| (s.x.to_u128().unwrap(), s.y.to_u64().unwrap()))
                        .collect();
                }
                count += 8;
            }
        };

        for p in 1..=6u64 {
            let shape = PellShape::Plus4 { p };
            let d = shape.discriminant();
            assert_eq!(brute(d, 4), emitted(&shape, Rhs::Plus4), "P={p} rhs=+4");
            assert_eq!(brute(d, -4), emitted(&shape, Rhs::Minus4), "P={p} rhs=-4");
        }
        for p in 3..=6u64 {
            let shape = PellShape::Minus4 { p };
            let d = shape.discriminant();
            assert_eq!(brute(d, 4), emitted(&shape, Rhs::Plus4), "P={p} minus-shape rhs=+4");
        }
    });
}

/// Criterion 3: (A, B) = (3, 0) end to end at its sporadic bound.
#[test]
fn criterion_3_equation_3_0() {
    criterion("3 (equation (3,0))", Duration::from_secs(1), || {
        let eq = instance(3, 0);
        let scan = brute_force(&eq, 27, 1 << 12).unwrap();
        assert_eq!(scan.solutions, vec![10]);
        assert!(scan.complete);

        let pattern = TheoremPattern { id: TheoremId::T11C1, p: 1, m: 0 };
        let family = family_solutions(&pattern, 6).unwrap();
        let ns: Vec<u64> = family.solutions.iter().map(|s| s.n.to_u64().unwrap()).collect();
        assert_eq!(ns, vec![10, 65, 20737]);
        for n in ns {
            assert!(equation_holds(&eq, n), "sigma_2({n}) - {n}^2 != 3*{n}");
        }
    });
}

/// Criterion 4: (A, B) = (2, 5) families are exactly the twin-prime products
/// in range, cross-checked against the semiprime search.
#[test]
fn criterion_4_equation_2_5_twin_primes() {
    criterion("4 (equation (2,5))", Duration::from_secs(5), || {
        let eq = instance(2, 5);
        let pattern = TheoremPattern { id: TheoremId::T11C3, p: 2, m: 0 };
        let family = family_solutions(&pattern, 20).unwrap();

        // Twin-prime products with the larger prime at most k_limit + 1.
        let mut expected = Vec::new();
        for p in 2u64..=20 {
            if pellucas::arith::is_prime_u64(p) && pellucas::arith::is_prime_u64(p + 2) {
                expected.push(p * (p + 2));
            }
        }
        let ns: Vec<u64> = family.solutions.iter().map(|s| s.n.to_u64().unwrap()).collect();
        assert_eq!(ns, expected);
        assert_eq!(ns, vec![15, 35, 143, 323]);
        for &n in &ns {
            assert!(equation_holds(&eq, n));
        }

        // The quadratic route sees every twin pair below 10^3 and only those.
        let pairs = semiprime_search(&eq, 1000).unwrap();
        for &(p, q) in &pairs {
            assert_eq!(q, p + 2, "non-twin pair ({p}, {q})");
            assert!(equation_holds(&eq, p * q));
        }
        for sol in &family.solutions {
            let pair = (sol.p.to_u64().unwrap(), sol.q.to_u64().unwrap());
            assert!(pairs.contains(&pair), "family pair {pair:?} missed by search");
        }
    });
}

/// Criterion 5: the two forms of the structured-solution condition agree on
/// the full integer grid 2 <= p, q <= 200, |A|, |B| <= 50.
#[test]
fn criterion_5_reduction_equivalence() {
    criterion("5 (reduction equivalence)", Duration::from_secs(30), || {
        let mismatches: u64 = (2i64..=200)
            .into_par_iter()
            .map(|p| {
                let mut local = 0u64;
                for q in 2i64..=200 {
                    for a in -50i64..=50 {
                        for b in -50i64..=50 {
                            let direct = p * p + q * q + 1 - b == a * p * q;
                            let completed =
                                (2 * p - a * q).pow(2) - (a * a - 4) * q * q == 4 * (b - 1);
                            if direct != completed {
                                local += 1;
                            }
                        }
                    }
                }
                local
            })
            .sum();
        assert_eq!(mismatches, 0);
    });
}

/// Criterion 6: for every structured instance with P <= 3, m <= 3, the brute
/// force scan to 10^7 and the structured searches see the same two-prime
/// solutions.
#[test]
fn criterion_6_oracle_cross_check() {
    criterion("6 (oracle cross-check)", Duration::from_secs(120), || {
        // Canonical instance grid, deduplicated on (A, B).
        let mut instances: Vec<EquationInstance> = Vec::new();
        let mut seen = BTreeSet::new();
        for id in TheoremId::ALL {
            for p in 0..=3i64 {
                let m_list: Vec<u32> = if id.uses_m() { vec![1, 2, 3] } else { vec![0] };
                for m in m_list {
                    let pattern = TheoremPattern { id, p, m };
                    if !pattern.side_condition_holds() {
                        continue;
                    }
                    let inst = pattern.instance();
                    if seen.insert((inst.a().clone(), inst.b().clone())) {
                        instances.push(inst);
                    }
                }
            }
        }
        assert_eq!(instances.len(), 35);

        const LIMIT: u64 = 10_000_000;
        const SEGMENT: u64 = 1 << 20;

        // One shared sieve pass evaluates every instance per n.
        let coeffs: Vec<(i128, i128)> = instances
            .iter()
            .map(|inst| (inst.a().to_i128().unwrap(), inst.b().to_i128().unwrap()))
            .collect();
        let blocks: Vec<(u64, u64)> = (1..=LIMIT)
            .step_by(SEGMENT as usize)
            .map(|lo| (lo, (lo + SEGMENT).min(LIMIT + 1)))
            .collect();
        let per_block: Vec<Vec<Vec<u64>>> = blocks
            .par_iter()
            .map(|&(lo, hi)| {
                let sigma = sigma2_segment_bounded(lo, hi, SEGMENT).unwrap();
                let mut hits: Vec<Vec<u64>> = vec![Vec::new(); coeffs.len()];
                for (offset, s2) in sigma.iter().enumerate() {
                    let n = lo + offset as u64;
                    let lhs = (s2 - (n as u128) * (n as u128)) as i128;
                    for (i, &(a, b)) in coeffs.iter().enumerate() {
                        if lhs == a * n as i128 + b {
                            hits[i].push(n);
                        }
                    }
                }
                hits
            })
            .collect();
        let mut brute_hits: Vec<Vec<u64>> = vec![Vec::new(); instances.len()];
        for block in per_block {
            for (i, hits) in block.into_iter().enumerate() {
                brute_hits[i].extend(hits);
            }
        }

        for (i, inst) in instances.iter().enumerate() {
            let semiprime: BTreeSet<u64> = semiprime_search(inst, LIMIT / 2)
                .unwrap()
                .into_iter()
                .map(|(p, q)| p * q)
                .filter(|&n| n <= LIMIT)
                .collect();
            let mut families: BTreeSet<u64> = BTreeSet::new();
            for pattern in recognize_patterns(inst, 3, 3) {
                for sol in family_solutions(&pattern, 24).unwrap().solutions {
                    if let Some(n) = sol.n.to_u64() {
                        if n <= LIMIT {
                            families.insert(n);
                        }
                    }
                }
            }
            let structured: BTreeSet<u64> = semiprime.union(&families).copied().collect();

            let brute: BTreeSet<u64> = brute_hits[i].iter().copied().collect();
            let brute_two_prime: BTreeSet<u64> = brute
                .iter()
                .copied()
                .filter(|&n| split_distinct_semiprime(&BigUint::from(n)).is_some())
                .collect();

            assert!(
                brute_two_prime.is_subset(&structured),
                "A={} B={}: brute two-prime hits missing from searches: {:?}",
                inst.a(),
                inst.b(),
                brute_two_prime.difference(&structured).collect::<Vec<_>>()
            );
            assert!(
                structured.is_subset(&brute),
                "A={} B={}: structured results missing from brute scan: {:?}",
                inst.a(),
                inst.b(),
                structured.difference(&brute).collect::<Vec<_>>()
            );
        }
    });
}

/// Criterion 7: the sigma_3 suite.
#[test]
fn criterion_7_sigma3_suite() {
    criterion("7 (sigma3 suite)", Duration::from_secs(60), || {
        let hits = scan_pq_alpha(1_000_000, true);
        assert!(!hits.is_empty());
        for h in &hits {
            assert!(h.even_perfect, "{} = {} * {}^{} is not even perfect", h.n, h.p, h.q, h.alpha);
        }

        let conjecture: Vec<(u64, bool)> = conjecture_scan(10_000);
        assert_eq!(conjecture, vec![(6, true), (496, true), (8128, true)]);

        assert!(!divides_sigma3(&BigUint::from(28u32)).unwrap());

        for n in [6u64, 28, 496, 8128] {
            assert!(is_even_perfect_u64(n));
            let divides = divides_sigma3(&BigUint::from(n)).unwrap();
            assert_eq!(divides, n != 28, "even perfect {n}");
        }
    });
}

/// Criterion 8: performance floor and deterministic parallel output.
#[test]
fn criterion_8_performance_and_determinism() {
    criterion("8 (performance floor)", Duration::from_secs(60), || {
        const LIMIT: u64 = 10_000_000;
        const SEGMENT: u64 = 1 << 20;

        // Single-worker sweep of [1, 10^7]; keep a checksum alive so the
        // sieve work cannot be optimized out.
        let start = Instant::now();
        let mut checksum = 0u128;
        let mut lo = 1u64;
        while lo <= LIMIT {
            let hi = (lo + SEGMENT).min(LIMIT + 1);
            let block = sigma2_segment_bounded(lo, hi, SEGMENT).unwrap();
            checksum ^= block.last().unwrap();
            lo = hi;
        }
        let sweep = start.elapsed();
        assert!(sweep < Duration::from_secs(60), "sequential sweep took {sweep:?}");
        assert_ne!(checksum, 0);
        // Spot-check the final segment against the closed form.
        assert_eq!(
            BigUint::from(*sigma2_segment_bounded(LIMIT, LIMIT + 1, 4).unwrap().first().unwrap()),
            sigma_k(&BigUint::from(LIMIT), 2).unwrap()
        );

        // The same solve on 1 and 4 rayon workers must match verbatim.
        let eq = instance(3, 0);
        let config = SolveConfig { q_limit: 10_000, ..SolveConfig::default() };
        let reports: Vec<String> = [1usize, 4]
            .iter()
            .map(|&threads| {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build()
                    .unwrap();
                let report = pool.install(|| pellucas::solver::solve(&eq, &config)).unwrap();
                format!("{report:?}")
            })
            .collect();
        assert_eq!(reports[0], reports[1], "reports differ across thread counts");
    });
}
