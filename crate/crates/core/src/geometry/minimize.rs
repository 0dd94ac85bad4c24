use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::area::area_geometric;
use crate::algebraic::location_of_min;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimizeOptions {
    /// Grid points per unit length along each axis.
    pub grid: usize,
    /// Number of well separated grid minima to refine.
    pub starts: usize,
    /// Also refine from the tabulated minimizer location.
    pub seed_with_table: bool,
    /// Refinement stops once the step falls below this.
    pub min_step: f64,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        MinimizeOptions {
            grid: 400,
            starts: 6,
            seed_with_table: true,
            min_step: 1e-9,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AreaMinimum {
    pub s: f64,
    pub t: f64,
    pub area: f64,
}

fn a_at(s: f64, t: f64, a: f64) -> f64 {
    area_geometric(s, t, a).unwrap_or(f64::INFINITY)
}

fn better(x: &AreaMinimum, y: &AreaMinimum) -> bool {
    (x.area, x.s, x.t) < (y.area, y.s, y.t)
}

/// Pattern search over sixteen directions, halving the step whenever no
/// direction improves.
fn refine(start: AreaMinimum, a: f64, step: f64, min_step: f64) -> AreaMinimum {
    let dirs: Vec<(f64, f64)> = (0..16)
        .map(|k| {
            let th = k as f64 * std::f64::consts::PI / 8.0;
            (th.cos(), th.sin())
        })
        .collect();
    let mut cur = start;
    let mut h = step;
    while h >= min_step {
        let mut moved = false;
        for &(ds, dt) in &dirs {
            let (s, t) = (cur.s + h * ds, cur.t + h * dt);
            if !(0.0 <= s && s <= t && t <= 1.0) {
                continue;
            }
            let v = a_at(s, t, a);
            if v < cur.area {
                cur = AreaMinimum { s, t, area: v };
                moved = true;
                break;
            }
        }
        if !moved {
            h *= 0.5;
        }
    }
    cur
}

/// Numerical `min A(s, t, a)` over `0 <= s <= t <= 1`: a grid scan, then
/// local refinement from the best separated grid points.
pub fn minimize_area(a: f64) -> Result<AreaMinimum> {
    minimize_area_with(a, &MinimizeOptions::default())
}

pub fn minimize_area_with(a: f64, opts: &MinimizeOptions) -> Result<AreaMinimum> {
    area_geometric(0.0, 0.0, a)?;
    let n = opts.grid.max(2);
    let h = 1.0 / n as f64;
    let mut grid: Vec<AreaMinimum> = (0..=n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i..=n).map(move |j| {
                let (s, t) = (i as f64 * h, j as f64 * h);
                AreaMinimum { s, t, area: a_at(s, t, a) }
            })
        })
        .collect();
    grid.sort_by(|x, y| (x.area, x.s, x.t).partial_cmp(&(y.area, y.s, y.t)).expect("finite areas"));

    let mut starts: Vec<AreaMinimum> = Vec::new();
    for p in grid {
        if starts.len() >= opts.starts {
            break;
        }
        let far = starts.iter().all(|q| (p.s - q.s).abs().max((p.t - q.t).abs()) > 3.0 * h);
        if far {
            starts.push(p);
        }
    }
    if opts.seed_with_table {
        for p in location_of_min(a)?.points() {
            if 0.0 <= p.s0 && p.s0 <= p.t0 && p.t0 <= 1.0 {
                starts.push(AreaMinimum {
                    s: p.s0,
                    t: p.t0,
                    area: a_at(p.s0, p.t0, a),
                });
            }
        }
    }

    let best = starts
        .into_iter()
        .map(|p| refine(p, a, h, opts.min_step))
        .reduce(|x, y| if better(&y, &x) { y } else { x })
        .expect("at least one start");
    Ok(best)
}
