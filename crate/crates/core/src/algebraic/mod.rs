//! The piecewise rational global minimum `m(a)` of the limiting area
//! function and its algebraic breakpoints.

mod branches;
mod poly;

pub use branches::{
    alpha, branch_index, branches, location_of_min, m_of_a, stationary_threshold, BranchPoint,
    Endpoint, MinBranch, MinimizerLocation,
};
pub use poly::{refine_root, AlgebraicNumber, IntPoly, RationalFunction};
