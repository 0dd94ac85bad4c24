use std::sync::OnceLock;

use serde::Serialize;

use super::poly::{AlgebraicNumber, IntPoly, RationalFunction};
use crate::error::{Error, Result};

/// Polynomial and isolating interval of each breakpoint `α₁, …, α₈`.
const ALPHA_DATA: [(&[i64], f64, f64); 8] = [
    (&[-1, 3, 1, 1], 0.0, 1.0),
    (&[1, 1, -9, 0, 0, 1], 0.0, 1.0),
    (&[1, 0, -6, -1, 2], 0.0, 1.0),
    (&[6, 5, -24, -15, 12], 0.0, 1.0),
    (&[4, -3, -8, 4], 0.0, 1.0),
    (&[-4, 1, 8], 0.0, 1.0),
    (&[-1, -5, 0, 7], 0.0, 1.0),
    (&[-3, 0, 1, 1], 1.0, 2.0),
];

/// Breakpoint `α_k`, `k ∈ 1..=8`.
///
/// # Panics
///
/// If `k` is outside `1..=8`.
pub fn alpha(k: usize) -> AlgebraicNumber {
    assert!((1..=8).contains(&k), "breakpoints are numbered 1 to 8");
    let (c, lo, hi) = ALPHA_DATA[k - 1];
    AlgebraicNumber::new(IntPoly::new(c), lo, hi).expect("stored intervals bracket their roots")
}

/// `a` above which the stationary point of the second region lies inside
/// that region: the root of `2a³ - 3a² - 2a + 1` in `[1, 2]`.
pub fn stationary_threshold() -> AlgebraicNumber {
    AlgebraicNumber::new(IntPoly::new([1, -2, -3, 2]), 1.0, 2.0).expect("brackets its root")
}

/// Right endpoints of the ten branches: `α₁, …, α₇, 1, α₈, ∞`.
fn endpoints() -> &'static [f64; 10] {
    static CELL: OnceLock<[f64; 10]> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut e = [f64::INFINITY; 10];
        for k in 1..=7 {
            e[k - 1] = alpha(k).value();
        }
        e[7] = 1.0;
        e[8] = alpha(8).value();
        e
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Endpoint {
    Zero,
    One,
    Alpha(usize),
    Infinity,
}

impl Endpoint {
    pub fn value(self) -> f64 {
        match self {
            Endpoint::Zero => 0.0,
            Endpoint::One => 1.0,
            Endpoint::Alpha(k) => endpoints()[if k == 8 { 8 } else { k - 1 }],
            Endpoint::Infinity => f64::INFINITY,
        }
    }
}

/// One row of the global minimum table: on `[lo, hi]` the minimizer is
/// `(s₀(a), t₀(a))` and the minimum is `m(a)`.
#[derive(Clone, Debug, Serialize)]
pub struct MinBranch {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub s0: RationalFunction,
    pub t0: RationalFunction,
    pub m: RationalFunction,
}

impl MinBranch {
    pub fn contains(&self, a: f64) -> bool {
        self.lo.value() <= a && a <= self.hi.value()
    }
}

fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(num, den)
}

pub fn branches() -> &'static [MinBranch; 10] {
    static CELL: OnceLock<[MinBranch; 10]> = OnceLock::new();
    CELL.get_or_init(|| {
        use Endpoint::*;
        [
            MinBranch {
                lo: Zero,
                hi: Alpha(1),
                s0: rf(&[0, -4, 1], &[-4, -1, 0, 1]),
                t0: rf(&[2, 4, -2], &[4, 1, 0, -1]),
                m: rf(&[-4, 6, -2, 2, -1], &[-8, -2, 0, 2]),
            },
            MinBranch {
                lo: Alpha(1),
                hi: Alpha(2),
                s0: rf(&[0, -3, 0, 1], &[-1, -8, 0, 0, 1]),
                t0: rf(&[-1, -5, 1, 1], &[-1, -8, 0, 0, 1]),
                m: rf(&[-2, 1, -2, 1], &[-2, -16, 0, 0, 2]),
            },
            MinBranch {
                lo: Alpha(2),
                hi: Alpha(3),
                s0: rf(&[1, 2, 0, -2], &[3, 8, 0, 0, -1]),
                t0: rf(&[-2, -6, 1, 2], &[-3, -8, 0, 0, 1]),
                m: rf(&[-1, 0, 4, -12, 1, 0, 1], &[0, -6, -16, 0, 0, 2]),
            },
            MinBranch {
                lo: Alpha(3),
                hi: Alpha(4),
                s0: rf(&[1, 1, -2], &[1, 6, 5, -4]),
                t0: rf(&[1, 4, 1, -2], &[1, 6, 5, -4]),
                m: rf(&[-2, 1, 2, -9, 4], &[-2, -12, -10, 8]),
            },
            MinBranch {
                lo: Alpha(4),
                hi: Alpha(5),
                s0: rf(&[1, 1, 0, 1], &[1, 6, 3, -4]),
                t0: rf(&[1, 4, 2], &[1, 6, 3, -4]),
                m: rf(&[-2, 1, 0, -4, 4], &[-2, -12, -6, 8]),
            },
            MinBranch {
                lo: Alpha(5),
                hi: Alpha(6),
                s0: rf(&[1, -1, -3], &[1, -4, -4, 4]),
                t0: rf(&[1, -2, -4], &[1, -4, -4, 4]),
                m: rf(&[2, -5, -4, 8], &[2, -8, -8, 8]),
            },
            MinBranch {
                lo: Alpha(6),
                hi: Alpha(7),
                s0: rf(&[1, 2], &[1, 7]),
                t0: rf(&[1, 6, 8], &[1, 8, 7]),
                m: rf(&[2, 3, -2], &[2, 16, 14]),
            },
            MinBranch {
                lo: Alpha(7),
                hi: One,
                s0: rf(&[1, 2, 1], &[0, 4, 7]),
                t0: rf(&[1, 5, 4], &[0, 4, 7]),
                m: rf(&[-1, -2, 6, 6, -7], &[0, 0, 8, 14]),
            },
            MinBranch {
                lo: One,
                hi: Alpha(8),
                s0: rf(&[1, 2, 1], &[3, 2, 3, 2, 1]),
                t0: rf(&[2, 4, 3, 1], &[3, 2, 3, 2, 1]),
                m: rf(&[4, -2, -1, 0, 1], &[0, 6, 4, 6, 4, 2]),
            },
            MinBranch {
                lo: Alpha(8),
                hi: Infinity,
                s0: rf(&[1, 1], &[3, 2, 1]),
                t0: rf(&[2, 2, 1], &[3, 2, 1]),
                m: rf(&[1], &[0, 6, 4, 2]),
            },
        ]
    })
}

fn check(a: f64) -> Result<()> {
    if a.is_finite() && a > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("a must be positive and finite, got {a}")))
    }
}

/// Index into [`branches`] of the row containing `a`, taking the left row at
/// a shared endpoint.
pub fn branch_index(a: f64) -> Result<usize> {
    check(a)?;
    Ok(endpoints().iter().position(|&e| a <= e).expect("last endpoint is infinite"))
}

/// `m(a) = min { A(s, t, a) : 0 <= s <= t <= 1 }`.
pub fn m_of_a(a: f64) -> Result<f64> {
    Ok(branches()[branch_index(a)?].m.eval(a))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BranchPoint {
    pub branch: usize,
    pub s0: f64,
    pub t0: f64,
}

/// Minimizer from the branch containing `a`. Within `1e-12` of a breakpoint
/// the neighbouring branch is reported as well; the two agree except at
/// `α₄`, where the location jumps.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MinimizerLocation {
    pub primary: BranchPoint,
    pub other: Option<BranchPoint>,
}

impl MinimizerLocation {
    pub fn points(&self) -> impl Iterator<Item = BranchPoint> {
        std::iter::once(self.primary).chain(self.other)
    }
}

const NEAR_BREAKPOINT: f64 = 1e-12;

fn point(branch: usize, a: f64) -> BranchPoint {
    let b = &branches()[branch];
    BranchPoint {
        branch,
        s0: b.s0.eval(a),
        t0: b.t0.eval(a),
    }
}

pub fn location_of_min(a: f64) -> Result<MinimizerLocation> {
    let i = branch_index(a)?;
    let e = endpoints();
    let other = if i + 1 < e.len() && (e[i] - a).abs() <= NEAR_BREAKPOINT {
        Some(point(i + 1, a))
    } else if i > 0 && (a - e[i - 1]).abs() <= NEAR_BREAKPOINT {
        Some(point(i - 1, a))
    } else {
        None
    };
    Ok(MinimizerLocation {
        primary: point(i, a),
        other,
    })
}
