//! Monochromatic generalized Schur triples `(x, y, x + ⌊a·y⌋)` under
//! 2-colorings of `{1, …, n}`.
//!
//! The crate is organised bottom-up:
//!
//! * [`counting`] enumerates triples for an arbitrary [`Coloring`] and runs
//!   the exhaustive minimizer over all 2-colorings.
//! * [`blocks`] counts block colorings `R^s B^{t-s} R^{n-t}` in O(1) per
//!   coloring, evaluates the closed-form sums and the exact minimum formulas
//!   for `a ∈ {1, 2, 3, 4, 1/2}`, and searches over block boundaries.
//! * [`geometry`] computes the limiting area function `A(s, t, a)` twice:
//!   by half-plane clipping and by the seventeen tabulated closed forms.
//! * [`algebraic`] holds the piecewise rational global minimum `m(a)` with
//!   its breakpoints stored as isolated polynomial roots.
//! * [`harness`] ties everything into verification campaigns, reference
//!   sequence checks, and plot data emission.

pub mod algebraic;
pub mod blocks;
pub mod counting;
pub mod error;
pub mod geometry;
pub mod harness;

pub use counting::{
    brute_force_min, count_mono, enumerate_triples, Color, Coloring, MinimizationResult,
    TripleList, TripleRule,
};
pub use error::{Error, Result};
