use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::blocks::{DEFAULT_WINDOW, FOUR_BLOCK_FULL_CAP};
use crate::counting::{DEFAULT_BRUTE_FORCE_CAP, DEFAULT_MAX_WITNESSES};
use crate::error::Result;
use crate::geometry::MinimizeOptions;

/// Caps, grid resolution and tolerances. Every field is optional in the
/// TOML file; missing ones keep their defaults.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub brute_force_cap: usize,
    /// Campaigns run the exhaustive search up to this `n`.
    pub brute_cross_check_max: usize,
    pub max_witnesses: usize,
    pub four_block_full_cap: usize,
    pub window: usize,
    /// Windowed campaigns also run the full search up to this `n`.
    pub full_cross_check_max: usize,
    pub grid: usize,
    pub refine_starts: usize,
    pub min_step: f64,
    pub sweep_tolerance: f64,
}

impl Default for Config {
    fn default() -> Self {
        let m = MinimizeOptions::default();
        Config {
            brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
            brute_cross_check_max: 22,
            max_witnesses: DEFAULT_MAX_WITNESSES,
            four_block_full_cap: FOUR_BLOCK_FULL_CAP,
            window: DEFAULT_WINDOW,
            full_cross_check_max: 300,
            grid: m.grid,
            refine_starts: m.starts,
            min_step: m.min_step,
            sweep_tolerance: 1e-6,
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Config::from_toml(&std::fs::read_to_string(path)?)
    }

    pub fn minimize_options(&self) -> MinimizeOptions {
        MinimizeOptions {
            grid: self.grid,
            starts: self.refine_starts,
            min_step: self.min_step,
            ..MinimizeOptions::default()
        }
    }
}
