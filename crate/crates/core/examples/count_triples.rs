//! Lists the monochromatic triples of a few colorings.
//!
//! cargo run --example count_triples -- RRBBBR 1

use schur_triples::{count_mono, enumerate_triples, Coloring, TripleRule};

fn main() -> schur_triples::Result<()> {
    let mut args = std::env::args().skip(1);
    let coloring: Coloring = args.next().as_deref().unwrap_or("BRBRBB").parse()?;
    let rule: TripleRule = args.next().as_deref().unwrap_or("1").parse()?;

    let list = enumerate_triples(coloring.len(), rule);
    println!("{coloring} ({}) under a = {rule}", coloring.to_run_length());
    println!("{} triples in [{}]", list.len(), coloring.len());
    for t in list.monochromatic(&coloring) {
        println!("  ({}, {}, {})", t.x, t.y, t.z);
    }
    println!("monochromatic: {}", count_mono(&coloring, rule));
    println!("complement:    {}", count_mono(&coloring.complement(), rule));
    Ok(())
}
