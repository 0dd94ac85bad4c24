use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Config;
use crate::algebraic::m_of_a;
use crate::error::{Error, Result};
use crate::geometry::minimize_area_with;

/// One row of the `a`-sweep: numerical minimum against the table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub a: f64,
    pub s_star: f64,
    pub t_star: f64,
    #[serde(rename = "A_star")]
    pub area_star: f64,
    pub m_closed: f64,
    pub abs_diff: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sweep {
    pub rows: Vec<SweepRow>,
    /// Indices of rows with `abs_diff` above the configured tolerance.
    pub flagged: Vec<usize>,
}

/// `steps` evenly spaced values from `a_min` to `a_max` inclusive.
pub fn sweep(a_min: f64, a_max: f64, steps: usize, cfg: &Config) -> Result<Sweep> {
    if steps < 2 || !(0.0 < a_min && a_min < a_max && a_max.is_finite()) {
        return Err(Error::PreconditionViolated(format!(
            "sweep needs 0 < a_min < a_max and steps >= 2, got {a_min}, {a_max}, {steps}"
        )));
    }
    let opts = cfg.minimize_options();
    let rows = (0..steps)
        .map(|i| {
            let a = a_min + (a_max - a_min) * i as f64 / (steps - 1) as f64;
            let m = minimize_area_with(a, &opts)?;
            let closed = m_of_a(a)?;
            Ok(SweepRow {
                a,
                s_star: m.s,
                t_star: m.t,
                area_star: m.area,
                m_closed: closed,
                abs_diff: (m.area - closed).abs(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let flagged = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r.abs_diff.is_nan() || r.abs_diff > cfg.sweep_tolerance)
        .map(|(i, _)| i)
        .collect();
    Ok(Sweep { rows, flagged })
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Runs [`sweep`] and writes the rows as CSV with header
/// `a,s_star,t_star,A_star,m_closed,abs_diff`.
pub fn emit_sweep(a_min: f64, a_max: f64, steps: usize, out: &Path, cfg: &Config) -> Result<Sweep> {
    let s = sweep(a_min, a_max, steps, cfg)?;
    write_sweep_csv(&s.rows, std::fs::File::create(out)?)?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_ranges() {
        let cfg = Config::default();
        assert!(sweep(2.0, 2.0, 1, &cfg).is_err());
        assert!(sweep(2.0, 1.0, 5, &cfg).is_err());
        assert!(sweep(0.0, 1.0, 5, &cfg).is_err());
    }

    #[test]
    fn narrow_sweep_near_one() {
        let cfg = Config::default();
        let s = sweep(1.0, 1.0 + 1e-9, 2, &cfg).unwrap();
        assert!(s.flagged.is_empty());
        for r in &s.rows {
            assert!((r.m_closed - 1.0 / 11.0).abs() < 1e-8);
        }
        let mut buf = Vec::new();
        write_sweep_csv(&s.rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("a,s_star,t_star,A_star,m_closed,abs_diff"));
        assert_eq!(text.lines().count(), 3);
    }
}
