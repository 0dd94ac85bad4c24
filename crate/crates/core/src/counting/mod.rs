//! Exact enumeration and counting of monochromatic generalized Schur
//! triples, plus the exhaustive minimizer over all 2-colorings of `[n]`.

mod coloring;
mod exhaustive;
mod rule;
mod triples;

pub use coloring::{Color, Coloring};
pub use exhaustive::{
    brute_force_min, brute_force_min_with, ExhaustiveOptions, MaskCounter, MinimizationResult,
    DEFAULT_BRUTE_FORCE_CAP, DEFAULT_MAX_WITNESSES,
};
pub use rule::TripleRule;
pub use triples::{count_mono, enumerate_triples, Triple, TripleList};
