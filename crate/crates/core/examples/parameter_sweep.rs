//! Writes the numerical minimum of A and the tabulated m(a) over a range of
//! a as CSV.
//!
//! cargo run --release --example parameter_sweep -- sweep.csv

use schur_triples::harness::{emit_sweep, Config};

fn main() -> schur_triples::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "sweep.csv".into());
    let cfg = Config {
        grid: 200,
        ..Config::default()
    };
    let s = emit_sweep(0.05, 3.0, 60, out.as_ref(), &cfg)?;
    let worst = s.rows.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    println!("{} rows to {out}, {} flagged, max |A* - m| = {worst:.2e}", s.rows.len(), s.flagged.len());
    Ok(())
}
