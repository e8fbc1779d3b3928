//! Solutions of x^2 - D*y^2 = +/-4 for the two discriminant shapes that
//! appear when the quadratic in the semiprime reduction is completed:
//! D = P^2 + 4 and D = P^2 - 4.
//!
//! For these shapes every solution is a pair of Lucas-sequence terms:
//!
//! * D = P^2 + 4, rhs +4: (x, y) = (V_{2k}(P,-1),   U_{2k}(P,-1))
//! * D = P^2 + 4, rhs -4: (x, y) = (V_{2k+1}(P,-1), U_{2k+1}(P,-1))
//! * D = P^2 - 4, rhs +4: (x, y) = (V_k(P,1),       U_k(P,1))
//!
//! Solutions are canonicalized to non-negative (x, y); callers that need the
//! sign freedom of the quadratic re-introduce it themselves.

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::lucas::{lucas_uv, LucasParams};

/// How a discriminant D relates to the supported shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PellShape {
    /// D = p^2 + 4 with p >= 1.
    Plus4 { p: u64 },
    /// D = p^2 - 4 with p >= 3.
    Minus4 { p: u64 },
    /// Neither shape; no solution family applies here.
    Unsupported { d: u64 },
}

impl PellShape {
    pub fn discriminant(&self) -> u64 {
        match *self {
            PellShape::Plus4 { p } => p * p + 4,
            PellShape::Minus4 { p } => (p * p).saturating_sub(4),
            PellShape::Unsupported { d } => d,
        }
    }
}

/// Right-hand side of the Pell-type equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rhs {
    Plus4,
    Minus4,
}

impl Rhs {
    pub fn value(&self) -> i64 {
        match self {
            Rhs::Plus4 => 4,
            Rhs::Minus4 => -4,
        }
    }
}

/// One solution together with the sequence index that generated it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub x: BigUint,
    pub y: BigUint,
    /// Index j with (x, y) = (|V_j|, |U_j|) of the generating sequence.
    pub index: u64,
}

/// Detect whether D is P^2 + 4 or P^2 - 4. The P^2 + 4 reading wins when both
/// apply (only D = 5, which is 1^2 + 4 and 3^2 - 4).
pub fn classify(d: u64) -> Result<PellShape> {
    let root = isqrt(d);
    if root * root == d {
        return Err(Error::SquareDiscriminant { d });
    }
    if d >= 4 {
        let p = isqrt(d - 4);
        if p * p + 4 == d && p >= 1 {
            return Ok(PellShape::Plus4 { p });
        }
    }
    let p = isqrt(d + 4);
    if p >= 3 && p * p - 4 == d {
        return Ok(PellShape::Minus4 { p });
    }
    Ok(PellShape::Unsupported { d })
}

/// The first `count` solutions of x^2 - D*y^2 = rhs in increasing y.
pub fn solve_pm4(shape: &PellShape, rhs: Rhs, count: usize) -> Result<Vec<PellSolution>> {
    if count == 0 {
        return Err(Error::ZeroCount);
    }
    validate_shape(shape)?;
    let (params, index_of): (LucasParams, fn(u64) -> u64) = match (*shape, rhs) {
        (PellShape::Unsupported { d }, _) => return Err(Error::UnsupportedShape { d }),
        (PellShape::Plus4 { p }, Rhs::Plus4) => (LucasParams::new(p as i64, -1), |k| 2 * k),
        (PellShape::Plus4 { p }, Rhs::Minus4) => (LucasParams::new(p as i64, -1), |k| 2 * k + 1),
        (PellShape::Minus4 { p }, Rhs::Plus4) => (LucasParams::new(p as i64, 1), |k| k),
        (PellShape::Minus4 { p: _ }, Rhs::Minus4) => {
            return Err(Error::MinusFourOnMinusShape { d: shape.discriminant() })
        }
    };
    let d = shape.discriminant();

    let mut out: Vec<PellSolution> = Vec::with_capacity(count);
    let mut k = 0u64;
    while out.len() < count {
        let index = index_of(k);
        let (u, v) = lucas_uv(params, index);
        let x = v.magnitude().clone();
        let y = u.magnitude().clone();
        // Defensive re-check of the defining equation on every emitted pair.
        if !is_solution(d, rhs, &BigInt::from(x.clone()), &BigInt::from(y.clone())) {
            return Err(Error::Internal(format!(
                "generated pair ({x}, {y}) fails x^2 - {d} y^2 = {}",
                rhs.value()
            )));
        }
        if out.last().is_none_or(|prev| prev.y < y) {
            out.push(PellSolution { x, y, index });
        }
        k += 1;
    }
    Ok(out)
}

/// Exact test of x^2 - D*y^2 = rhs.
pub fn is_solution(d: u64, rhs: Rhs, x: &BigInt, y: &BigInt) -> bool {
    let lhs = x * x - BigInt::from(d) * y * y;
    lhs == BigInt::from(rhs.value())
}

fn validate_shape(shape: &PellShape) -> Result<()> {
    match *shape {
        // p = 0 makes D = 4, a perfect square; p <= 2 on the minus shape
        // makes D <= 0.
        PellShape::Plus4 { p: 0 } => Err(Error::SquareDiscriminant { d: 4 }),
        PellShape::Minus4 { p } if p < 3 => {
            Err(Error::UnsupportedShape { d: (p * p).saturating_sub(4) })
        }
        _ => Ok(()),
    }
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(shape: &PellShape, rhs: Rhs, count: usize) -> Vec<(u64, u64)> {
        use num_traits::ToPrimitive;
        solve_pm4(shape, rhs, count)
            .unwrap()
            .into_iter()
            .map(|s| (s.x.to_u64().unwrap(), s.y.to_u64().unwrap()))
            .collect()
    }

    #[test]
    fn classify_shapes() {
        assert_eq!(classify(5).unwrap(), PellShape::Plus4 { p: 1 });
        assert_eq!(classify(21).unwrap(), PellShape::Minus4 { p: 5 });
        assert_eq!(classify(7).unwrap(), PellShape::Unsupported { d: 7 });
        assert_eq!(classify(8).unwrap(), PellShape::Plus4 { p: 2 });
        assert_eq!(classify(12).unwrap(), PellShape::Minus4 { p: 4 });
        assert!(matches!(classify(4), Err(Error::SquareDiscriminant { d: 4 })));
        assert!(matches!(classify(9), Err(Error::SquareDiscriminant { d: 9 })));
    }

    #[test]
    fn spec_solution_lists() {
        assert_eq!(
            pairs(&PellShape::Plus4 { p: 1 }, Rhs::Plus4, 3),
            vec![(2, 0), (3, 1), (7, 3)]
        );
        assert_eq!(
            pairs(&PellShape::Plus4 { p: 1 }, Rhs::Minus4, 3),
            vec![(1, 1), (4, 2), (11, 5)]
        );
        assert_eq!(
            pairs(&PellShape::Minus4 { p: 3 }, Rhs::Plus4, 3),
            vec![(2, 0), (3, 1), (7, 3)]
        );
    }

    #[test]
    fn rejects_unsupported_requests() {
        assert!(matches!(
            solve_pm4(&PellShape::Unsupported { d: 7 }, Rhs::Plus4, 1),
            Err(Error::UnsupportedShape { d: 7 })
        ));
        assert!(matches!(
            solve_pm4(&PellShape::Minus4 { p: 5 }, Rhs::Minus4, 1),
            Err(Error::MinusFourOnMinusShape { .. })
        ));
        assert!(matches!(
            solve_pm4(&PellShape::Plus4 { p: 0 }, Rhs::Plus4, 1),
            Err(Error::SquareDiscriminant { d: 4 })
        ));
        assert!(matches!(
            solve_pm4(&PellShape::Plus4 { p: 1 }, Rhs::Plus4, 0),
            Err(Error::ZeroCount)
        ));
    }

    #[test]
    fn is_solution_spec_values() {
        let b = BigInt::from;
        assert!(is_solution(5, Rhs::Minus4, &b(4), &b(2)));
        assert!(!is_solution(5, Rhs::Plus4, &b(3), &b(2)));
        assert!(is_solution(123, Rhs::Plus4, &b(2), &b(0)));
        // Signs do not matter.
        assert!(is_solution(5, Rhs::Minus4, &b(-4), &b(2)));
    }

    /// Brute scan over y: exactly the emitted pairs, nothing else.
    fn brute_matches(shape: PellShape, rhs: Rhs, y_max: u64) {
        let d = shape.discriminant();
        let mut brute = Vec::new();
        for y in 0..=y_max {
            let t = (d as i128) * (y as i128) * (y as i128) + rhs.value() as i128;
            if t < 0 {
                continue;
            }
            let x = (t as f64).sqrt() as i128;
            for cand in x.saturating_sub(2)..=x + 2 {
                if cand >= 0 && cand * cand == t {
                    brute.push((cand as u64, y));
                }
            }
        }
        use num_traits::ToPrimitive;
        let mut count = 4;
        let sols = loop {
            let sols = solve_pm4(&shape, rhs, count).unwrap();
            if sols.last().unwrap().y.to_u64().is_none_or(|y| y > y_max) {
                break sols;
            }
            count += 4;
        };
        let emitted: Vec<(u64, u64)> = sols
            .iter()
            .filter(|s| s.y.to_u64().is_some_and(|y| y <= y_max))
            .map(|s| (s.x.to_u64().unwrap(), s.y.to_u64().unwrap()))
            .collect();
        assert_eq!(brute, emitted, "shape {shape:?} rhs {rhs:?}");
    }

    #[test]
    fn completeness_small_scan() {
        for p in 1..=6u64 {
            brute_matches(PellShape::Plus4 { p }, Rhs::Plus4, 1000);
            brute_matches(PellShape::Plus4 { p }, Rhs::Minus4, 1000);
        }
        for p in 3..=6u64 {
            brute_matches(PellShape::Minus4 { p }, Rhs::Plus4, 1000);
        }
    }

    #[test]
    fn solutions_increase_in_y() {
        for p in 1..=5u64 {
            let sols = solve_pm4(&PellShape::Plus4 { p }, Rhs::Plus4, 8).unwrap();
            for w in sols.windows(2) {
                assert!(w[0].y < w[1].y);
            }
        }
    }
}
