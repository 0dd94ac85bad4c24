//! Runs a verification campaign and the reference sequence check, printing
//! JSON lines without timing.
//!
//! cargo run --release --example verify_campaign -- conjecture 20

use schur_triples::harness::{oeis_check, verify_theorem, Config, TheoremId};

fn main() -> schur_triples::Result<()> {
    let mut args = std::env::args().skip(1);
    let id: TheoremId = args.next().as_deref().unwrap_or("1").parse()?;
    let max_n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(60);
    let cfg = Config::default();

    let report = verify_theorem(id, max_n, &cfg)?;
    print!("{}", report.to_json_lines(false));
    let reference = oeis_check(25, None, &cfg)?;
    println!("{}", serde_json::to_string(&reference.summary(false))?);
    std::process::exit(report.exit_code());
}
