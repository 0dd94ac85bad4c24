use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use schur_triples::algebraic::{alpha, location_of_min, m_of_a, refine_root};
use schur_triples::blocks::{
    block_search_min, BlockColoring, Blocks, FourBlockColoring, SearchMode, ThreeBlockColoring,
};
use schur_triples::counting::{brute_force_min_with, count_mono, Coloring, ExhaustiveOptions, TripleRule};
use schur_triples::geometry::{area_closed_form, area_geometric, classify_region, minimize_area_with};
use schur_triples::harness::{emit_sweep, oeis_check, verify_theorem, Config, TheoremId, VerificationReport};
use schur_triples::Result;

#[derive(Parser)]
#[command(name = "schur", version, about = "Monochromatic generalized Schur triples")]
struct Cli {
    /// TOML file with caps, grid resolution and tolerances.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Blocks3,
    Blocks4,
}

#[derive(Clone, Copy, ValueEnum)]
enum AreaMethod {
    Geometric,
    Closed,
}

#[derive(Subcommand)]
enum Command {
    /// Count monochromatic triples of a word (R4B6R1 style accepted) or of
    /// block boundaries.
    Count {
        #[arg(long, default_value = "1")]
        a: TripleRule,
        #[arg(long, conflicts_with = "blocks")]
        coloring: Option<Coloring>,
        /// Block boundaries `s,t` or `s,t,u`, with `--n`.
        #[arg(long, value_delimiter = ',', requires = "n")]
        blocks: Option<Vec<usize>>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Minimum count over all colorings or over block colorings.
    Min {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        a: TripleRule,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: Mode,
        #[arg(long)]
        max_witnesses: Option<usize>,
        /// Override the exhaustive search cap.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Evaluate A(s, t, a).
    Area {
        #[arg(long)]
        s: f64,
        #[arg(long)]
        t: f64,
        #[arg(long)]
        a: f64,
        #[arg(long, value_enum, default_value = "geometric")]
        method: AreaMethod,
    },
    /// Numerically minimize A over 0 <= s <= t <= 1.
    Minarea {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Tabulated global minimum m(a) and its location.
    M {
        #[arg(long)]
        a: f64,
    },
    /// The eight breakpoints, refined by bisection.
    Alphas {
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Verification campaign; JSON lines on stdout, nonzero exit on mismatch.
    Verify {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        no_timestamp: bool,
    },
    /// Compare against the reference sequence of minimal counts.
    Oeis {
        #[arg(long, default_value_t = 25)]
        max_n: usize,
        #[arg(long)]
        bfile: Option<PathBuf>,
        #[arg(long)]
        no_timestamp: bool,
    },
    /// CSV of numerical against tabulated minima over a range of a.
    Sweep {
        #[arg(long)]
        a_min: f64,
        #[arg(long)]
        a_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Writes one line to stdout; a closed pipe ends the process quietly.
fn emit(line: impl Display) {
    if writeln!(std::io::stdout().lock(), "{line}").is_err() {
        std::process::exit(0);
    }
}

fn report(r: &VerificationReport, no_timestamp: bool) -> ExitCode {
    emit(r.to_json_lines(!no_timestamp).trim_end());
    ExitCode::from(r.exit_code() as u8)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Count { a, coloring, blocks, n } => {
            let coloring = match (coloring, blocks, n) {
                (Some(c), _, _) => c,
                (None, Some(b), Some(n)) => {
                    let block: BlockColoring = match b[..] {
                        [s, t] => ThreeBlockColoring::new(n, s, t)?.into(),
                        [s, t, u] => FourBlockColoring::new(n, s, t, u)?.into(),
                        _ => {
                            return Err(schur_triples::Error::Parse(
                                "--blocks takes s,t or s,t,u".into(),
                            ))
                        }
                    };
                    block.to_coloring()
                }
                _ => return Err(schur_triples::Error::Parse("pass --coloring or --blocks with --n".into())),
            };
            let count = count_mono(&coloring, a);
            emit(json!({ "coloring": coloring, "a": a, "count": count }));
        }
        Command::Min { n, a, mode, max_witnesses, cap } => {
            let out = match mode {
                Mode::Exhaustive => {
                    let opts = ExhaustiveOptions {
                        max_witnesses: max_witnesses.unwrap_or(cfg.max_witnesses),
                        cap: cap.unwrap_or(cfg.brute_force_cap),
                    };
                    serde_json::to_value(brute_force_min_with(n, a, opts)?)?
                }
                Mode::Blocks3 | Mode::Blocks4 => {
                    let blocks = if matches!(mode, Mode::Blocks3) { Blocks::Three } else { Blocks::Four };
                    let r = block_search_min(n, a, blocks, &SearchMode::Full)?;
                    json!({ "n": n, "a": a, "minimum": r.minimum, "boundaries": r.boundaries, "examined": r.examined })
                }
            };
            emit(out);
        }
        Command::Area { s, t, a, method } => {
            let region = classify_region(s, t, a)?.map(|r| r.to_string());
            let (name, area) = match method {
                AreaMethod::Geometric => ("geometric", area_geometric(s, t, a)?),
                AreaMethod::Closed => ("closed", area_closed_form(s, t, a)?),
            };
            emit(json!({ "s": s, "t": t, "a": a, "method": name, "region": region, "area": area }));
        }
        Command::Minarea { a, grid } => {
            if let Some(g) = grid {
                cfg.grid = g;
            }
            let m = minimize_area_with(a, &cfg.minimize_options())?;
            emit(json!({ "a": a, "s_star": m.s, "t_star": m.t, "A_star": m.area }));
        }
        Command::M { a } => {
            let loc = location_of_min(a)?;
            let p = loc.primary;
            let mut out = json!({ "a": a, "branch": p.branch + 1, "s0": p.s0, "t0": p.t0, "m": m_of_a(a)? });
            if let Some(o) = loc.other {
                out["other"] = json!({ "branch": o.branch + 1, "s0": o.s0, "t0": o.t0 });
            }
            emit(out);
        }
        Command::Alphas { tol } => {
            for k in 1..=8 {
                let x = alpha(k);
                let (lo, hi) = refine_root(&x, tol);
                emit(json!({ "k": k, "poly": x.poly.to_string(), "lo": lo, "hi": hi }));
            }
        }
        Command::Verify { theorem, max_n, no_timestamp } => {
            return Ok(report(&verify_theorem(theorem, max_n, &cfg)?, no_timestamp));
        }
        Command::Oeis { max_n, bfile, no_timestamp } => {
            return Ok(report(&oeis_check(max_n, bfile.as_deref(), &cfg)?, no_timestamp));
        }
        Command::Sweep { a_min, a_max, steps, out } => {
            let s = emit_sweep(a_min, a_max, steps, &out, &cfg)?;
            for &i in &s.flagged {
                let r = &s.rows[i];
                eprintln!("flagged a = {}: |A* - m| = {:e}", r.a, r.abs_diff);
            }
            if !s.flagged.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
