//! Block colorings: constant-time counting, closed forms, exact minimum
//! formulas and boundary search.

mod coloring;
mod search;
mod sums;
mod theorems;

pub use coloring::{
    mgst_block_count, BlockColoring, BlockCounter, FourBlockColoring, ThreeBlockColoring,
    TripleClass,
};
pub use search::{
    block_search_min, BlockSearchResult, Blocks, SearchMode, DEFAULT_WINDOW, FOUR_BLOCK_FULL_CAP,
};
pub use sums::{
    in_lemma5_region, in_thm5_region, lemma1_count, lemma5_sum_count, thm2_closed_count,
    thm5_sum_count,
};
pub use theorems::{
    conjecture_formula, exact_min_formula, lemma2_p, minimizer_location, ConjecturePrediction,
    ResidueFormula, Supported, A4_EXCEPTIONS,
};
