use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sums::{in_lemma5_region, thm2_unchecked};
use super::BlockCounter;
use crate::counting::TripleRule;
use crate::error::{Error, Result};

/// Full four-block scans are cubic in `n`.
pub const FOUR_BLOCK_FULL_CAP: usize = 400;
pub const DEFAULT_WINDOW: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Blocks {
    Three,
    Four,
}

impl Blocks {
    pub fn boundaries(self) -> usize {
        match self {
            Blocks::Three => 2,
            Blocks::Four => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Full,
    /// Scan a box of half-width `radius` around `center`, one coordinate per
    /// boundary, clipped to valid colorings.
    Windowed { center: Vec<i64>, radius: usize },
}

impl SearchMode {
    pub fn windowed(center: impl Into<Vec<i64>>) -> Self {
        SearchMode::Windowed {
            center: center.into(),
            radius: DEFAULT_WINDOW,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSearchResult {
    pub minimum: u64,
    /// `(s, t)` or `(s, t, u)`, lexicographically smallest among optima.
    pub boundaries: Vec<usize>,
    pub examined: u64,
}

fn span(center: i64, radius: usize, lo: usize, hi: usize) -> (usize, usize) {
    let r = radius as i64;
    let a = (center - r).max(lo as i64);
    let b = (center + r).min(hi as i64);
    (a as usize, b as usize)
}

/// Minimum count over block colorings `R^s B^{t-s} R^{n-t}` or
/// `R^s B^{t-s} R^{u-t} B^{n-u}` with `1 <= s <= t (<= u) <= n`.
///
/// Rows of fixed `s` run in parallel; the merge keeps the smallest count and
/// then the smallest boundary tuple, so the output is deterministic. For
/// `a = 2` points inside the closed-form region use the floor-product
/// formula instead of the box counts.
pub fn block_search_min(
    n: usize,
    rule: TripleRule,
    blocks: Blocks,
    mode: &SearchMode,
) -> Result<BlockSearchResult> {
    if n == 0 {
        return Err(Error::PreconditionViolated("n must be at least 1".into()));
    }
    if let SearchMode::Windowed { center, .. } = mode {
        if center.len() != blocks.boundaries() {
            return Err(Error::PreconditionViolated(format!(
                "window center needs {} coordinates, got {}",
                blocks.boundaries(),
                center.len()
            )));
        }
    }
    if blocks == Blocks::Four && *mode == SearchMode::Full && n > FOUR_BLOCK_FULL_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: FOUR_BLOCK_FULL_CAP,
        });
    }
    let counter = BlockCounter::new(n, rule);
    let (s_lo, s_hi) = match mode {
        SearchMode::Full => (1, n),
        SearchMode::Windowed { center, radius } => span(center[0], *radius, 1, n),
    };

    let rows: Vec<(u64, Vec<usize>, u64)> = (s_lo..=s_hi)
        .into_par_iter()
        .map(|s| match blocks {
            Blocks::Three => three_row(&counter, s, mode),
            Blocks::Four => four_row(&counter, s, mode),
        })
        .collect();

    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut examined = 0;
    for (v, b, seen) in rows {
        examined += seen;
        if seen == 0 {
            continue;
        }
        if best.as_ref().is_none_or(|(m, _)| v < *m) {
            best = Some((v, b));
        }
    }
    let (minimum, boundaries) = best.ok_or_else(|| {
        Error::PreconditionViolated("the search window contains no valid block coloring".into())
    })?;
    Ok(BlockSearchResult {
        minimum,
        boundaries,
        examined,
    })
}

fn three_row(counter: &BlockCounter, s: usize, mode: &SearchMode) -> (u64, Vec<usize>, u64) {
    let n = counter.n();
    let rule = counter.rule();
    let (t_lo, t_hi) = match mode {
        SearchMode::Full => (s, n),
        SearchMode::Windowed { center, radius } => span(center[1], *radius, s, n),
    };
    let fast = rule == TripleRule::TWO;
    let mut best = (u64::MAX, 0);
    for t in t_lo..=t_hi {
        let v = if fast && in_lemma5_region(n, s, t, rule) {
            thm2_unchecked(n as i64, s as i64, t as i64) as u64
        } else {
            counter.count_three(s, t)
        };
        if v < best.0 {
            best = (v, t);
        }
    }
    let seen = (t_hi + 1).saturating_sub(t_lo) as u64;
    (best.0, vec![s, best.1], seen)
}

fn four_row(counter: &BlockCounter, s: usize, mode: &SearchMode) -> (u64, Vec<usize>, u64) {
    let n = counter.n();
    let (t_lo, t_hi) = match mode {
        SearchMode::Full => (s, n),
        SearchMode::Windowed { center, radius } => span(center[1], *radius, s, n),
    };
    let mut best = (u64::MAX, 0, 0);
    let mut seen = 0;
    for t in t_lo..=t_hi {
        let (u_lo, u_hi) = match mode {
            SearchMode::Full => (t, n),
            SearchMode::Windowed { center, radius } => span(center[2], *radius, t, n),
        };
        for u in u_lo..=u_hi {
            let v = counter.count_intervals(&[(1, s), (s + 1, t), (t + 1, u), (u + 1, n)]);
            seen += 1;
            if v < best.0 {
                best = (v, t, u);
            }
        }
    }
    (best.0, vec![s, best.1, best.2], seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{exact_min_formula, minimizer_location};

    fn full3(n: usize, rule: TripleRule) -> BlockSearchResult {
        block_search_min(n, rule, Blocks::Three, &SearchMode::Full).unwrap()
    }

    #[test]
    fn small_examples() {
        let r = full3(6, TripleRule::ONE);
        assert_eq!(r.minimum, 1);
        assert_eq!(r.examined, 21);
        let four = |n| block_search_min(n, TripleRule::HALF, Blocks::Four, &SearchMode::Full).unwrap();
        assert_eq!(four(11).minimum, 21);
        assert_eq!(four(12).minimum, 24);
    }

    #[test]
    fn ties_take_the_smallest_boundaries() {
        let rule = TripleRule::ONE;
        for n in 1..30 {
            let r = full3(n, rule);
            let counter = BlockCounter::new(n, rule);
            let first = (1..=n)
                .flat_map(|s| (s..=n).map(move |t| (s, t)))
                .find(|&(s, t)| counter.count_three(s, t) == r.minimum)
                .unwrap();
            assert_eq!(r.boundaries, vec![first.0, first.1]);
        }
    }

    #[test]
    fn fast_path_matches_box_counts() {
        let counter = BlockCounter::new(90, TripleRule::TWO);
        for s in 1..=90 {
            for t in s..=90 {
                if in_lemma5_region(90, s, t, TripleRule::TWO) {
                    assert_eq!(thm2_unchecked(90, s as i64, t as i64) as u64, counter.count_three(s, t));
                }
            }
        }
    }

    #[test]
    fn windowed_agrees_with_full() {
        for rule in [TripleRule::THREE, TripleRule::FOUR] {
            for n in (5..120).step_by(7) {
                let (s, t) = minimizer_location(n, rule).unwrap();
                let w = block_search_min(n, rule, Blocks::Three, &SearchMode::windowed([s, t])).unwrap();
                assert_eq!(w.minimum, full3(n, rule).minimum, "n = {n}, a = {rule}");
                assert_eq!(w.minimum, exact_min_formula(n, rule).unwrap());
            }
        }
    }

    #[test]
    fn guards() {
        assert!(matches!(
            block_search_min(401, TripleRule::HALF, Blocks::Four, &SearchMode::Full),
            Err(Error::CapExceeded { cap: 400, .. })
        ));
        assert!(block_search_min(10, TripleRule::ONE, Blocks::Three, &SearchMode::windowed([3])).is_err());
        assert!(block_search_min(0, TripleRule::ONE, Blocks::Three, &SearchMode::Full).is_err());
    }
}
