use serde::{Deserialize, Serialize};

/// Values of the sixteen linear forms whose signs decide the closed form of
/// `A(s, t, a)`; condition `Cᵢ` holds when form `i` is nonnegative.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionVector {
    pub values: [f64; 16],
}

impl ConditionVector {
    pub fn at(s: f64, t: f64, a: f64) -> Self {
        let (as_, at) = (a * s, a * t);
        ConditionVector {
            values: [
                1.0 - as_,
                1.0 - as_ - s,
                1.0 - as_ - t,
                t - as_,
                t - as_ - s,
                1.0 - at,
                1.0 - at - s,
                1.0 - at - t,
                1.0 - a,
                1.0 - a - s,
                s - a,
                1.0 - a - t,
                t - a,
                t - a - s,
                s - at,
                t - at - s,
            ],
        }
    }

    /// `Cᵢ`, `i ∈ 1..=16`.
    pub fn holds(&self, i: usize) -> bool {
        self.values[i - 1] >= 0.0
    }

    pub fn bits(&self) -> [bool; 16] {
        self.values.map(|v| v >= 0.0)
    }
}

/// Signed condition indices: `3` means `C₃`, `-3` means `¬C₃`.
const LITERALS: [&[i8]; 17] = [
    &[-1],
    &[3, 4, -6],
    &[3, -4, -6],
    &[-2, 4, -6],
    &[-2, -4, 6],
    &[1, -2, -4, -6],
    &[2, -3, 4, -6],
    &[2, -3, -4, 6],
    &[2, -3, -4, -6],
    &[3, 4, 6, -7],
    &[3, -4, 6, -7],
    &[-4, 8],
    &[-4, 7, -8],
    &[4, 8, -9],
    &[4, 7, -8, -9],
    &[-2, 4, 6, -9],
    &[2, -3, 4, 6, -9],
];

/// Numerators of `A` over `2a`, as `(coefficient, deg a, deg s, deg t)`.
const NUMERATORS: [&[(i8, u8, u8, u8)]; 17] = [
    &[(1, 0, 0, 2), (-2, 0, 1, 1), (1, 0, 2, 0), (-2, 0, 0, 1), (2, 0, 1, 0), (1, 0, 0, 0)],
    &[(-4, 1, 1, 1), (2, 1, 2, 0), (1, 0, 0, 2), (-2, 0, 1, 1), (2, 0, 2, 0), (2, 1, 1, 0)],
    &[(-1, 2, 2, 0), (-2, 1, 1, 1), (2, 1, 2, 0), (-2, 0, 1, 1), (2, 0, 2, 0), (2, 1, 1, 0)],
    &[(-2, 1, 1, 1), (2, 0, 0, 2), (-2, 0, 1, 1), (1, 0, 2, 0), (2, 1, 1, 0), (-2, 0, 0, 1), (2, 0, 1, 0)],
    &[
        (1, 2, 0, 2), (-1, 2, 2, 0), (1, 0, 0, 2), (-2, 0, 1, 1), (1, 0, 2, 0), (-2, 1, 0, 1),
        (2, 1, 1, 0), (-2, 0, 0, 1), (2, 0, 1, 0), (1, 0, 0, 0),
    ],
    &[(-1, 2, 2, 0), (1, 0, 0, 2), (-2, 0, 1, 1), (1, 0, 2, 0), (2, 1, 1, 0), (-2, 0, 0, 1), (2, 0, 1, 0)],
    &[
        (1, 2, 2, 0), (-2, 1, 1, 1), (2, 1, 2, 0), (2, 0, 0, 2), (-2, 0, 1, 1), (2, 0, 2, 0),
        (-2, 0, 0, 1), (1, 0, 0, 0),
    ],
    &[
        (1, 2, 0, 2), (2, 1, 2, 0), (1, 0, 0, 2), (-2, 0, 1, 1), (2, 0, 2, 0), (-2, 1, 0, 1),
        (-2, 0, 0, 1), (2, 0, 0, 0),
    ],
    &[(2, 1, 2, 0), (1, 0, 0, 2), (-2, 0, 1, 1), (2, 0, 2, 0), (-2, 0, 0, 1), (1, 0, 0, 0)],
    &[
        (1, 2, 0, 2), (-4, 1, 1, 1), (2, 1, 2, 0), (1, 0, 0, 2), (-2, 0, 1, 1), (2, 0, 2, 0),
        (-2, 1, 0, 1), (2, 1, 1, 0), (1, 0, 0, 0),
    ],
    &[
        (1, 2, 0, 2), (-1, 2, 2, 0), (-2, 1, 1, 1), (2, 1, 2, 0), (-2, 0, 1, 1), (2, 0, 2, 0),
        (-2, 1, 0, 1), (2, 1, 1, 0), (1, 0, 0, 0),
    ],
    &[
        (1, 2, 0, 2), (-1, 2, 2, 0), (2, 1, 0, 2), (-4, 1, 1, 1), (2, 1, 2, 0), (1, 0, 0, 2),
        (-2, 0, 1, 1), (1, 0, 2, 0), (-2, 1, 0, 1), (2, 1, 1, 0), (-2, 0, 0, 1), (2, 0, 1, 0),
        (1, 0, 0, 0),
    ],
    &[(-1, 2, 2, 0), (-4, 1, 1, 1), (2, 1, 2, 0), (-2, 0, 1, 1), (1, 0, 2, 0), (2, 1, 1, 0), (2, 0, 1, 0)],
    &[
        (1, 2, 0, 2), (2, 1, 0, 2), (-6, 1, 1, 1), (2, 1, 2, 0), (2, 0, 0, 2), (-2, 0, 1, 1),
        (1, 0, 2, 0), (-2, 1, 0, 1), (2, 1, 1, 0), (-2, 0, 0, 1), (2, 0, 1, 0), (1, 0, 0, 0),
    ],
    &[(-6, 1, 1, 1), (2, 1, 2, 0), (1, 0, 0, 2), (-2, 0, 1, 1), (1, 0, 2, 0), (2, 1, 1, 0), (2, 0, 1, 0)],
    &[
        (1, 2, 0, 2), (-2, 1, 1, 1), (2, 0, 0, 2), (-2, 0, 1, 1), (1, 0, 2, 0), (-2, 1, 0, 1),
        (2, 1, 1, 0), (-2, 0, 0, 1), (2, 0, 1, 0), (1, 0, 0, 0),
    ],
    &[
        (1, 2, 0, 2), (1, 2, 2, 0), (-2, 1, 1, 1), (2, 1, 2, 0), (2, 0, 0, 2), (-2, 0, 1, 1),
        (2, 0, 2, 0), (-2, 1, 0, 1), (-2, 0, 0, 1), (2, 0, 0, 0),
    ],
];

/// How a condition vector satisfies a region's literals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fit {
    No,
    /// Every literal holds with its form more than `eps` away from zero.
    Strict,
    /// Holds once forms within `eps` of zero are allowed either sign.
    Boundary,
}

/// One of the seventeen regions with a tabulated closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AreaRegion(u8);

impl AreaRegion {
    pub fn all() -> impl Iterator<Item = AreaRegion> {
        (1..=17).map(AreaRegion)
    }

    pub fn new(id: u8) -> Option<Self> {
        (1..=17).contains(&id).then_some(AreaRegion(id))
    }

    pub fn id(self) -> u8 {
        self.0
    }

    pub fn literals(self) -> &'static [i8] {
        LITERALS[self.0 as usize - 1]
    }

    pub fn monomials(self) -> &'static [(i8, u8, u8, u8)] {
        NUMERATORS[self.0 as usize - 1]
    }

    pub fn fit(self, cv: &ConditionVector, eps: f64) -> Fit {
        let mut strict = true;
        for &l in self.literals() {
            let v = cv.values[l.unsigned_abs() as usize - 1];
            if v.abs() <= eps {
                strict = false;
            } else if (v > 0.0) != (l > 0) {
                return Fit::No;
            }
        }
        if strict {
            Fit::Strict
        } else {
            Fit::Boundary
        }
    }

    /// The closed form `numerator / (2a)`.
    pub fn evaluate(self, s: f64, t: f64, a: f64) -> f64 {
        let num: f64 = self
            .monomials()
            .iter()
            .map(|&(c, i, j, k)| c as f64 * a.powi(i as i32) * s.powi(j as i32) * t.powi(k as i32))
            .sum();
        num / (2.0 * a)
    }

    /// `(∂/∂s, ∂/∂t)` of the closed form.
    pub fn gradient(self, s: f64, t: f64, a: f64) -> (f64, f64) {
        let (mut ds, mut dt) = (0.0, 0.0);
        for &(c, i, j, k) in self.monomials() {
            let base = c as f64 * a.powi(i as i32);
            if j > 0 {
                ds += base * j as f64 * s.powi(j as i32 - 1) * t.powi(k as i32);
            }
            if k > 0 {
                dt += base * k as f64 * s.powi(j as i32) * t.powi(k as i32 - 1);
            }
        }
        (ds / (2.0 * a), dt / (2.0 * a))
    }
}

impl std::fmt::Display for AreaRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "R{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_gradient_matches_differences() {
        let (s, t, a) = (0.21, 0.67, 1.3);
        let h = 1e-6;
        for r in AreaRegion::all() {
            let (gs, gt) = r.gradient(s, t, a);
            let ns = (r.evaluate(s + h, t, a) - r.evaluate(s - h, t, a)) / (2.0 * h);
            let nt = (r.evaluate(s, t + h, a) - r.evaluate(s, t - h, a)) / (2.0 * h);
            assert!((gs - ns).abs() < 1e-7 && (gt - nt).abs() < 1e-7, "{r}");
        }
    }

    #[test]
    fn gradient_in_first_region() {
        let (gs, gt) = AreaRegion(1).gradient(0.9, 0.95, 2.0);
        assert!((gs - (0.9 - 0.95 + 1.0) / 2.0).abs() < 1e-15);
        assert!((gt - (0.95 - 0.9 - 1.0) / 2.0).abs() < 1e-15);
    }
}
