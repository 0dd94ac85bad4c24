//! Exact minimum formulas, minimizer locations and residue offset tables for
//! the supported coefficients `a ∈ {1, 2, 3, 4, 1/2}`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{BlockCounter, ThreeBlockColoring};
use crate::counting::TripleRule;
use crate::error::{Error, Result};

/// Coefficients with exact closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Supported {
    One,
    Two,
    Three,
    Four,
    Half,
}

impl Supported {
    pub const ALL: [Supported; 5] = [
        Supported::One,
        Supported::Two,
        Supported::Three,
        Supported::Four,
        Supported::Half,
    ];

    pub fn of(rule: TripleRule) -> Result<Supported> {
        match (rule.numer(), rule.denom()) {
            (1, 1) => Ok(Supported::One),
            (2, 1) => Ok(Supported::Two),
            (3, 1) => Ok(Supported::Three),
            (4, 1) => Ok(Supported::Four),
            (1, 2) => Ok(Supported::Half),
            _ => Err(Error::UnsupportedCoefficient(rule.to_string())),
        }
    }

    pub fn rule(self) -> TripleRule {
        match self {
            Supported::One => TripleRule::ONE,
            Supported::Two => TripleRule::TWO,
            Supported::Three => TripleRule::THREE,
            Supported::Four => TripleRule::FOUR,
            Supported::Half => TripleRule::HALF,
        }
    }
}

/// Residues `ℓ ∈ I` (mod 108) where the `a = 4` floor formula is one too
/// large.
pub const A4_EXCEPTIONS: [u64; 19] = [
    0, 1, 27, 28, 43, 47, 48, 53, 58, 63, 67, 68, 69, 73, 78, 83, 88, 89, 93,
];

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Block boundaries `(s₀, t₀)` of an optimal three-block coloring, with
/// every residue correction applied.
///
/// Values come straight from the floor formulas, so for very small `n` the
/// first block may be empty (`s₀ = 0`); use
/// [`ThreeBlockColoring::from_raw`] to get the equivalent coloring.
pub fn minimizer_location(n: usize, rule: TripleRule) -> Result<(i64, i64)> {
    let n = n as i64;
    let loc = match Supported::of(rule)? {
        Supported::One => (floor_div(4 * n + 2, 11), floor_div(10 * n, 11)),
        Supported::Two => {
            let dt = if n % 22 == 10 { -1 } else { 0 };
            (floor_div(3 * n + 1, 11), floor_div(10 * n, 11) + dt)
        }
        Supported::Three => {
            let r54 = n % 54;
            let ds = if r54 == 18 { -1 } else { 0 };
            let dt = if matches!(n % 9, 3 | 4 | 7 | 8) {
                -1
            } else if r54 == 18 {
                -2
            } else {
                0
            };
            (floor_div(4 * n, 18) + ds, floor_div(17 * n, 18) + dt)
        }
        Supported::Four => {
            let r = n % 108;
            let ds = match r {
                28 => -1,
                0 | 87 | 103 => 1,
                _ => 0,
            };
            let dt = match r {
                28 | 33 | 38 | 43 => -1,
                1 | 77 | 78 | 82 | 83 | 88 | 93 | 98 | 104 => 1,
                0 | 87 | 103 => 2,
                _ => 0,
            };
            (floor_div(5 * n - 4, 27) + ds, floor_div(26 * n - 34, 27) + dt)
        }
        Supported::Half => {
            let ds = if n % 19 == 17 { 1 } else { 0 };
            let dt = if n % 19 == 4 { 1 } else { 0 };
            (floor_div(4 * n + 7, 19) + ds, floor_div(12 * n + 6, 19) + dt)
        }
    };
    Ok(loc)
}

/// Minimum number of monochromatic triples.
///
/// For `a = 1` this is the minimum over all 2-colorings. For the other
/// supported coefficients it is the minimum over three-block colorings
/// `R^s B^{t-s} R^{n-t}`; for `a = 1/2` four blocks can do better.
pub fn exact_min_formula(n: usize, rule: TripleRule) -> Result<u64> {
    let ni = n as i64;
    let sq = ni * ni;
    let v = match Supported::of(rule)? {
        Supported::One => floor_div(sq - 4 * ni + 6, 11),
        Supported::Two => floor_div(sq - 10 * ni + 33, 44),
        Supported::Three => {
            let fix = match n % 54 {
                36 => 1,
                30 | 42 => -1,
                _ => 0,
            };
            floor_div(sq - 18 * ni + 101, 108) + fix
        }
        Supported::Four => {
            let fix = if A4_EXCEPTIONS.contains(&(n as u64 % 108)) {
                -1
            } else {
                0
            };
            floor_div(sq - 28 * ni + 245, 216) + fix
        }
        Supported::Half => {
            let fix = match n % 38 {
                18 | 20 => 1,
                19 => -1,
                _ => 0,
            };
            floor_div(15 * sq + 72, 76) + fix
        }
    };
    Ok(v.max(0) as u64)
}

/// Conjectured four-block optimum for `a = 1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjecturePrediction {
    pub n: usize,
    pub value: u64,
    pub s: usize,
    pub t: usize,
    pub u: usize,
}

/// `⌊(n² + 5)/6⌋` at `R^s B^{t-s} R^{u-t} B^{n-u}` with
/// `s = ⌊(n+3)/6⌋`, `t = ⌊(n+1)/2⌋`, `u = ⌊(5n+3)/6⌋`.
///
/// Below `n = 12` the prediction is returned inside
/// [`Error::OutOfDomain`]; at `n = 11` the true minimum is 20, not 21.
pub fn conjecture_formula(n: usize) -> Result<ConjecturePrediction> {
    let prediction = ConjecturePrediction {
        n,
        value: (n * n).div_ceil(6) as u64,
        s: (n + 3) / 6,
        t: n.div_ceil(2),
        u: (5 * n + 3) / 6,
    };
    if n < 12 {
        Err(Error::OutOfDomain { n, prediction })
    } else {
        Ok(prediction)
    }
}

/// `p(i, j) = 5i + 5i² - 3j - 4ij + 3j²`, twice the excess of the
/// `a = 1` count at `(s₀ + i, t₀ + j)` over its value at `(s₀, t₀)` when
/// `n ≡ 5 (mod 11)`.
pub fn lemma2_p(i: i64, j: i64) -> i64 {
    5 * i + 5 * i * i - 3 * j - 4 * i * j + 3 * j * j
}

/// Minimum count at `(s₀, t₀)` written as `(n² + βn)/γ + δ_ℓ` with `ℓ = n mod
/// modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueFormula {
    pub modulus: u64,
    pub beta: i64,
    pub gamma: i64,
    pub offsets: Vec<Ratio<i64>>,
}

impl ResidueFormula {
    /// `(n² - 4n)/11 + δ_ℓ` for `a = 1`.
    pub fn schur() -> Self {
        let d = |v| Ratio::new(v, 11);
        ResidueFormula {
            modulus: 11,
            beta: -4,
            gamma: 11,
            offsets: [0, 3, 4, 3, 0, 6, -1, 1, 1, -1, 6].map(d).to_vec(),
        }
    }

    /// `(n² - 10n)/44 + δ_ℓ` for `a = 2`.
    pub fn double() -> Self {
        let d = |v| Ratio::new(v, 44);
        ResidueFormula {
            modulus: 22,
            beta: -10,
            gamma: 44,
            offsets: [
                0, 9, 16, 21, 24, 25, 24, 21, 16, 9, 0, 33, 20, 5, 32, 13, -8, 13, 32, 5, 20, 33,
            ]
            .map(d)
            .to_vec(),
        }
    }

    /// Rebuilds `δ_ℓ` from the block count at the minimizer location for
    /// `n = modulus·k + ℓ`, checking that the offset is the same for every
    /// `k` in `periods`. Returns `None` if some residue is not stable.
    pub fn reconstruct(
        rule: TripleRule,
        modulus: u64,
        beta: i64,
        gamma: i64,
        periods: std::ops::RangeInclusive<u64>,
    ) -> Result<Option<Self>> {
        let mut offsets = Vec::with_capacity(modulus as usize);
        for ell in 0..modulus {
            let mut seen: Option<Ratio<i64>> = None;
            for k in periods.clone() {
                let n = (modulus * k + ell) as usize;
                if n == 0 {
                    continue;
                }
                let (s, t) = minimizer_location(n, rule)?;
                let block = ThreeBlockColoring::from_raw(n, s, t)?;
                let count = BlockCounter::new(n, rule).count_three(block.s, block.t) as i64;
                let ni = n as i64;
                let delta = Ratio::from_integer(count) - Ratio::new(ni * ni + beta * ni, gamma);
                match seen {
                    None => seen = Some(delta),
                    Some(d) if d == delta => {}
                    Some(_) => return Ok(None),
                }
            }
            offsets.push(seen.unwrap_or_default());
        }
        Ok(Some(ResidueFormula {
            modulus,
            beta,
            gamma,
            offsets,
        }))
    }

    pub fn offset(&self, n: usize) -> Ratio<i64> {
        self.offsets[n % self.modulus as usize]
    }

    /// `(n² + βn)/γ + δ_{n mod modulus}`.
    pub fn evaluate(&self, n: usize) -> Ratio<i64> {
        let n = n as i64;
        Ratio::new(n * n + self.beta * n, self.gamma) + self.offset(n as usize)
    }

    /// `(min δ, max δ)`.
    pub fn offset_range(&self) -> (Ratio<i64>, Ratio<i64>) {
        let lo = *self.offsets.iter().min().expect("nonempty table");
        let hi = *self.offsets.iter().max().expect("nonempty table");
        (lo, hi)
    }
}
