use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntPoly(pub Vec<i64>);

impl IntPoly {
    pub fn new(coeffs: impl Into<Vec<i64>>) -> Self {
        let mut c = coeffs.into();
        while c.len() > 1 && c.last() == Some(&0) {
            c.pop();
        }
        IntPoly(c)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 && !(first && k == 0) {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let m = c.unsigned_abs();
            match (k, m) {
                (0, _) => write!(f, "{m}")?,
                (_, 1) => {}
                _ => write!(f, "{m}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("a")?,
                _ => write!(f, "a^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// The unique real root of `poly` inside `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraicNumber {
    pub poly: IntPoly,
    pub lo: f64,
    pub hi: f64,
}

impl AlgebraicNumber {
    /// Checks that the endpoint values differ in sign (or one is a root).
    pub fn new(poly: IntPoly, lo: f64, hi: f64) -> Result<Self> {
        let (fl, fh) = (poly.eval(lo), poly.eval(hi));
        if lo.is_nan() || hi.is_nan() || lo > hi || fl * fh > 0.0 {
            return Err(Error::Domain(format!(
                "[{lo}, {hi}] does not bracket a root of {poly}"
            )));
        }
        Ok(AlgebraicNumber { poly, lo, hi })
    }

    /// Bisected to machine precision.
    pub fn value(&self) -> f64 {
        let (lo, hi) = refine_root(self, 0.0);
        0.5 * (lo + hi)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root({}, [{}, {}])", self.poly, self.lo, self.hi)
    }
}

/// Bisects the isolating interval until it is at most `tol` wide or no
/// representable midpoint remains. An exact zero at a midpoint collapses the
/// interval to that point.
pub fn refine_root(x: &AlgebraicNumber, tol: f64) -> (f64, f64) {
    let (mut lo, mut hi) = (x.lo, x.hi);
    let mut f_lo = x.poly.eval(lo);
    if f_lo == 0.0 {
        return (lo, lo);
    }
    if x.poly.eval(hi) == 0.0 {
        return (hi, hi);
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = x.poly.eval(mid);
        if f_mid == 0.0 {
            return (mid, mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Quotient of two integer polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunction {
    pub num: IntPoly,
    pub den: IntPoly,
}

impl RationalFunction {
    pub fn new(num: impl Into<Vec<i64>>, den: impl Into<Vec<i64>>) -> Self {
        RationalFunction {
            num: IntPoly::new(num),
            den: IntPoly::new(den),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.num.eval(x) / self.den.eval(x)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
