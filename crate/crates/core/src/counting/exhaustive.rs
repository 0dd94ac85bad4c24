use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Coloring, TripleRule};
use crate::error::{Error, Result};

/// Largest `n` the exhaustive search accepts unless overridden.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 26;
pub const DEFAULT_MAX_WITNESSES: usize = 16;

/// Masks are single `u64` words, so no override can go past this.
const MASK_LIMIT: usize = 63;

/// Word-parallel counter for colorings of `[n]`, `n <= 63`, stored as blue
/// masks.
///
/// For each `y` with shift `d = ⌊a·y⌋`, the pairs `(x, x + d)` that share
/// the color of `y` are `popcount(C & (C >> d))` where `C` is the color
/// class of `y`. That replaces the per-triple bit tests with `n` popcounts.
#[derive(Clone, Debug)]
pub struct MaskCounter {
    n: usize,
    full: u64,
    shifts: Vec<u32>,
}

impl MaskCounter {
    pub fn new(n: usize, rule: TripleRule) -> Self {
        assert!((1..=MASK_LIMIT).contains(&n), "mask counter needs 1 <= n <= 63");
        let shifts = (1..=n as u64)
            .map(|y| rule.floor_ay(y))
            .take_while(|&d| d < n as u64)
            .map(|d| d as u32)
            .collect();
        MaskCounter {
            n,
            full: (1u64 << n) - 1,
            shifts,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn count(&self, blue: u64) -> u64 {
        let red = !blue & self.full;
        let mut total = 0u32;
        for (i, &d) in self.shifts.iter().enumerate() {
            let class = if (blue >> i) & 1 == 1 { blue } else { red };
            total += (class & (class >> d)).count_ones();
        }
        total as u64
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ExhaustiveOptions {
    pub max_witnesses: usize,
    pub cap: usize,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        ExhaustiveOptions {
            max_witnesses: DEFAULT_MAX_WITNESSES,
            cap: DEFAULT_BRUTE_FORCE_CAP,
        }
    }
}

/// Minimum over all 2-colorings together with canonical witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimizationResult {
    pub n: usize,
    #[serde(rename = "a")]
    pub rule: TripleRule,
    pub minimum: u64,
    /// Lexicographically smallest optimal colorings with `1` colored red,
    /// at most `max_witnesses` of them.
    pub witnesses: Vec<Coloring>,
    #[serde(rename = "examined")]
    pub colorings_examined: u64,
}

/// Exhaustive minimum with default options (16 witnesses, cap 26).
pub fn brute_force_min(n: usize, rule: TripleRule) -> Result<MinimizationResult> {
    brute_force_min_with(n, rule, ExhaustiveOptions::default())
}

/// Exhaustive minimum over the `2^(n-1)` colorings that color `1` red.
///
/// Colorings are visited in lexicographic word order (`R < B`) by writing
/// positions `2..=n` as the bits of a counter, most significant first. The
/// counter range is split into shards by its high bits; each shard keeps its
/// own minimum and first witnesses, and shards are merged in order, so the
/// result does not depend on scheduling.
pub fn brute_force_min_with(
    n: usize,
    rule: TripleRule,
    opts: ExhaustiveOptions,
) -> Result<MinimizationResult> {
    if n == 0 {
        return Err(Error::PreconditionViolated("n must be at least 1".into()));
    }
    let cap = opts.cap.min(MASK_LIMIT);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let counter = MaskCounter::new(n, rule);
    let free = n - 1;
    let shard_bits = free.min(10);
    let per_shard = 1u64 << (free - shard_bits);

    let to_mask = |k: u64| -> u64 {
        if free == 0 {
            0
        } else {
            (k.reverse_bits() >> (64 - free)) << 1
        }
    };

    let shards: Vec<(u64, Vec<u64>)> = (0..1u64 << shard_bits)
        .into_par_iter()
        .map(|shard| {
            let start = shard * per_shard;
            let mut best = u64::MAX;
            let mut found: Vec<u64> = Vec::new();
            for k in start..start + per_shard {
                let mask = to_mask(k);
                let v = counter.count(mask);
                if v < best {
                    best = v;
                    found.clear();
                }
                if v == best && found.len() < opts.max_witnesses {
                    found.push(mask);
                }
            }
            (best, found)
        })
        .collect();

    let minimum = shards.iter().map(|(b, _)| *b).min().unwrap_or(0);
    let witnesses = shards
        .into_iter()
        .filter(|(b, _)| *b == minimum)
        .flat_map(|(_, w)| w)
        .take(opts.max_witnesses)
        .map(|mask| Coloring::from_mask(n, mask))
        .collect();

    Ok(MinimizationResult {
        n,
        rule,
        minimum,
        witnesses,
        colorings_examined: 1u64 << free,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{count_mono, Color};

    #[test]
    fn mask_counter_matches_triple_walk() {
        for (p, q) in [(1, 1), (1, 2), (2, 1), (5, 3)] {
            let rule = TripleRule::new(p, q).unwrap();
            for n in [1usize, 2, 7, 13, 40, 63] {
                let counter = MaskCounter::new(n, rule);
                let mut x = 0x9E37_79B9_7F4A_7C15u64;
                for _ in 0..200 {
                    x ^= x << 13;
                    x ^= x >> 7;
                    x ^= x << 17;
                    let c = Coloring::from_mask(n, x);
                    assert_eq!(counter.count(c.to_mask().unwrap()), count_mono(&c, rule));
                }
            }
        }
    }

    #[test]
    fn small_minima() {
        let r = brute_force_min(6, TripleRule::ONE).unwrap();
        assert_eq!(r.minimum, 1);
        assert_eq!(r.colorings_examined, 32);
        assert!(r.witnesses.iter().any(|w| w.to_word() == "RRBBBR"));
        assert_eq!(brute_force_min(4, TripleRule::HALF).unwrap().minimum, 3);
        assert_eq!(brute_force_min(1, TripleRule::ONE).unwrap().minimum, 0);
    }

    #[test]
    fn witnesses_are_canonical_sorted_and_optimal() {
        let rule = TripleRule::HALF;
        let r = brute_force_min_with(
            9,
            rule,
            ExhaustiveOptions {
                max_witnesses: 1000,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!r.witnesses.is_empty());
        for w in &r.witnesses {
            assert_eq!(w.get(1), Color::Red);
            assert_eq!(count_mono(w, rule), r.minimum);
        }
        // R < B, so compare with R mapped below B
        let words: Vec<String> = r.witnesses.iter().map(|w| w.to_word().replace('R', "A")).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn witness_cap_keeps_smallest() {
        let all = brute_force_min_with(
            10,
            TripleRule::ONE,
            ExhaustiveOptions {
                max_witnesses: 10_000,
                ..Default::default()
            },
        )
        .unwrap();
        let capped = brute_force_min_with(
            10,
            TripleRule::ONE,
            ExhaustiveOptions {
                max_witnesses: 2,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(capped.witnesses.len(), 2.min(all.witnesses.len()));
        assert_eq!(capped.witnesses[..], all.witnesses[..capped.witnesses.len()]);
    }

    #[test]
    fn cap_is_enforced() {
        match brute_force_min(27, TripleRule::ONE) {
            Err(Error::CapExceeded { n: 27, cap: 26 }) => {}
            other => panic!("expected CapExceeded, got {other:?}"),
        }
        let opts = ExhaustiveOptions {
            cap: 100,
            ..Default::default()
        };
        assert!(matches!(
            brute_force_min_with(64, TripleRule::ONE, opts),
            Err(Error::CapExceeded { cap: 63, .. })
        ));
    }

    #[test]
    fn json_shape() {
        let r = brute_force_min(6, TripleRule::ONE).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["n"], 6);
        assert_eq!(v["a"], "1/1");
        assert_eq!(v["minimum"], 1);
        assert_eq!(v["examined"], 32);
        assert!(v["witnesses"].as_array().unwrap().iter().all(|w| w.is_string()));
    }
}
