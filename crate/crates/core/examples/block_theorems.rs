//! Exact minimum formulas against block search, with the minimizing
//! boundaries for each supported coefficient.

use schur_triples::blocks::{
    block_search_min, exact_min_formula, minimizer_location, Blocks, SearchMode, Supported,
};

fn main() -> schur_triples::Result<()> {
    for which in Supported::ALL {
        let rule = which.rule();
        println!("a = {rule}");
        for n in [10, 22, 54, 100, 108, 217] {
            let formula = exact_min_formula(n, rule)?;
            let search = block_search_min(n, rule, Blocks::Three, &SearchMode::Full)?;
            let (s0, t0) = minimizer_location(n, rule)?;
            println!(
                "  n = {n:>3}  formula {formula:>6}  search {:>6}  at {:?}  predicted ({s0}, {t0})",
                search.minimum, search.boundaries
            );
        }
    }

    let four = block_search_min(30, schur_triples::TripleRule::HALF, Blocks::Four, &SearchMode::Full)?;
    println!("four blocks, a = 1/2, n = 30: {} at {:?}", four.minimum, four.boundaries);
    Ok(())
}
