use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::polygon::ConvexPolygon;
use super::regions::{AreaRegion, ConditionVector, Fit};
use crate::blocks::TripleClass;
use crate::error::{Error, Result};

/// Forms within this distance of zero count as on the region boundary.
pub const BOUNDARY_EPS: f64 = 1e-12;
/// Step of the central differences in [`gradient_area`].
pub const GRADIENT_STEP: f64 = 1e-6;

/// Block boundaries scaled to the unit interval: `I₁ = [0, s]`,
/// `I₂ = (s, t]`, `I₃ = (t, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockFractions {
    pub s: f64,
    pub t: f64,
}

impl BlockFractions {
    pub fn new(s: f64, t: f64) -> Result<Self> {
        if !(0.0 <= s && s <= t && t <= 1.0) {
            return Err(Error::Domain(format!("need 0 <= s <= t <= 1, got s = {s}, t = {t}")));
        }
        Ok(BlockFractions { s, t })
    }

    pub fn intervals(&self) -> [(f64, f64); 3] {
        [(0.0, self.s), (self.s, self.t), (self.t, 1.0)]
    }
}

fn check(s: f64, t: f64, a: f64) -> Result<BlockFractions> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("a must be positive, got {a}")));
    }
    BlockFractions::new(s, t)
}

/// `{(x, y) ∈ Iᵢ × Iⱼ : x + a·y ∈ I_k}` for each of the seven classes.
pub fn region_polygons(s: f64, t: f64, a: f64) -> Result<BTreeMap<TripleClass, ConvexPolygon>> {
    let iv = check(s, t, a)?.intervals();
    Ok(TripleClass::ALL
        .iter()
        .map(|&class| {
            let (i, j, k) = class.blocks();
            let ((x0, x1), (y0, y1), (z0, z1)) = (iv[i - 1], iv[j - 1], iv[k - 1]);
            let poly = ConvexPolygon::rect(x0, x1, y0, y1)
                .clip(1.0, a, z1)
                .clip(-1.0, -a, -z0);
            (class, poly)
        })
        .collect())
}

/// `A(s, t, a)` as the total area of the class polygons.
pub fn area_geometric(s: f64, t: f64, a: f64) -> Result<f64> {
    Ok(region_polygons(s, t, a)?.values().map(ConvexPolygon::area).sum())
}

/// The tabulated region containing `(s, t, a)`, if any.
///
/// A region whose forms all keep their sign away from zero wins; otherwise
/// the lowest-numbered region matching up to [`BOUNDARY_EPS`] is returned.
pub fn classify_region(s: f64, t: f64, a: f64) -> Result<Option<AreaRegion>> {
    check(s, t, a)?;
    let cv = ConditionVector::at(s, t, a);
    let mut strict = Vec::new();
    let mut boundary = None;
    for r in AreaRegion::all() {
        match r.fit(&cv, BOUNDARY_EPS) {
            Fit::Strict => strict.push(r),
            Fit::Boundary => {
                boundary.get_or_insert(r);
            }
            Fit::No => {}
        }
    }
    match strict.len() {
        0 => Ok(boundary),
        1 => Ok(Some(strict[0])),
        _ => Err(Error::Ambiguous(strict.iter().map(|r| r.id()).collect())),
    }
}

/// `A(s, t, a)` from the closed form of its region.
pub fn area_closed_form(s: f64, t: f64, a: f64) -> Result<f64> {
    match classify_region(s, t, a)? {
        Some(r) => Ok(r.evaluate(s, t, a)),
        None => Err(Error::UnlistedRegion { s, t, a }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GradientMethod {
    Closed,
    Numeric,
}

/// `(∂A/∂s, ∂A/∂t)`. Both methods refuse points whose difference stencil of
/// width [`GRADIENT_STEP`] leaves the triangle or changes a condition.
pub fn gradient_area(s: f64, t: f64, a: f64, method: GradientMethod) -> Result<(f64, f64)> {
    check(s, t, a)?;
    let h = GRADIENT_STEP;
    let on_boundary = Err(Error::OnBoundary { h });
    if s - h < 0.0 || t + h > 1.0 || s + h > t - h {
        return on_boundary;
    }
    let here = ConditionVector::at(s, t, a).bits();
    let stencil = [(s + h, t), (s - h, t), (s, t + h), (s, t - h)];
    if stencil.iter().any(|&(u, v)| ConditionVector::at(u, v, a).bits() != here) {
        return on_boundary;
    }
    match method {
        GradientMethod::Closed => match classify_region(s, t, a)? {
            Some(r) => Ok(r.gradient(s, t, a)),
            None => Err(Error::UnlistedRegion { s, t, a }),
        },
        GradientMethod::Numeric => {
            let f = |u, v| area_geometric(u, v, a);
            let ds = (f(s + h, t)? - f(s - h, t)?) / (2.0 * h);
            let dt = (f(s, t + h)? - f(s, t - h)?) / (2.0 * h);
            Ok((ds, dt))
        }
    }
}
