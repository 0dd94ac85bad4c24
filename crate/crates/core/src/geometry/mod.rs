//! The limiting area function `A(s, t, a)`: the density of monochromatic
//! pairs `(x/n, y/n)` in the unit square under the scaled coloring
//! `R^s B^{t-s} R^{n-t}`.
//!
//! [`area_geometric`] clips each class polygon out of the unit square and is
//! valid everywhere. [`area_closed_form`] evaluates the tabulated polynomial
//! of the region selected by [`classify_region`], and fails with
//! [`UnlistedRegion`](crate::Error::UnlistedRegion) outside the seventeen
//! listed regions.

mod area;
mod minimize;
mod polygon;
mod regions;

pub use area::{
    area_closed_form, area_geometric, classify_region, gradient_area, region_polygons,
    BlockFractions, GradientMethod, BOUNDARY_EPS, GRADIENT_STEP,
};
pub use minimize::{minimize_area, minimize_area_with, AreaMinimum, MinimizeOptions};
pub use polygon::ConvexPolygon;
pub use regions::{AreaRegion, ConditionVector, Fit};
