//! Exhaustive minima for small n, printed as JSON lines.
//!
//! cargo run --release --example exhaustive_min -- 1/2 16

use schur_triples::counting::{brute_force_min_with, ExhaustiveOptions};
use schur_triples::TripleRule;

fn main() -> schur_triples::Result<()> {
    let mut args = std::env::args().skip(1);
    let rule: TripleRule = args.next().as_deref().unwrap_or("1").parse()?;
    let max_n: usize = args.next().map_or(Ok(14), |s| s.parse()).map_err(|e| {
        schur_triples::Error::Parse(format!("max n: {e}"))
    })?;

    let opts = ExhaustiveOptions {
        max_witnesses: 3,
        ..Default::default()
    };
    for n in 1..=max_n {
        let r = brute_force_min_with(n, rule, opts)?;
        println!("{}", serde_json::to_string(&r)?);
    }
    Ok(())
}
