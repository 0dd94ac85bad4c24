use std::fmt;

use serde::{Deserialize, Serialize};

use crate::counting::{Color, Coloring, TripleRule};
use crate::error::{Error, Result};

/// The coloring `R^s B^{t-s} R^{n-t}` of `[n]`.
///
/// Blocks are `I₁ = [1, s]` (red), `I₂ = [s+1, t]` (blue) and
/// `I₃ = [t+1, n]` (red).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThreeBlockColoring {
    pub n: usize,
    pub s: usize,
    pub t: usize,
}

impl ThreeBlockColoring {
    pub fn new(n: usize, s: usize, t: usize) -> Result<Self> {
        if !(1 <= s && s <= t && t <= n) {
            return Err(Error::PreconditionViolated(format!(
                "three-block coloring needs 1 <= s <= t <= n, got (n, s, t) = ({n}, {s}, {t})"
            )));
        }
        Ok(ThreeBlockColoring { n, s, t })
    }

    /// Maps raw block boundaries, possibly with `s = 0`, onto an equivalent
    /// valid three-block coloring. `B^t R^{n-t}` is the color swap of
    /// `R^t B^{n-t}`, which has the same count.
    pub fn from_raw(n: usize, s: i64, t: i64) -> Result<Self> {
        let bad = || {
            Error::PreconditionViolated(format!(
                "boundaries ({s}, {t}) do not describe a coloring of [{n}]"
            ))
        };
        if s < 0 || t < s || t as usize > n {
            return Err(bad());
        }
        let (s, t) = (s as usize, t as usize);
        if s >= 1 {
            return ThreeBlockColoring::new(n, s, t);
        }
        if t == 0 {
            ThreeBlockColoring::new(n, n, n)
        } else {
            ThreeBlockColoring::new(n, t, n)
        }
    }

    pub fn intervals(&self) -> [(usize, usize); 3] {
        [(1, self.s), (self.s + 1, self.t), (self.t + 1, self.n)]
    }

    pub fn to_coloring(&self) -> Coloring {
        expand(self.n, &self.intervals())
    }
}

/// The coloring `R^s B^{t-s} R^{u-t} B^{n-u}` of `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourBlockColoring {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub u: usize,
}

impl FourBlockColoring {
    pub fn new(n: usize, s: usize, t: usize, u: usize) -> Result<Self> {
        if !(1 <= s && s <= t && t <= u && u <= n) {
            return Err(Error::PreconditionViolated(format!(
                "four-block coloring needs 1 <= s <= t <= u <= n, got ({n}, {s}, {t}, {u})"
            )));
        }
        Ok(FourBlockColoring { n, s, t, u })
    }

    pub fn intervals(&self) -> [(usize, usize); 4] {
        [
            (1, self.s),
            (self.s + 1, self.t),
            (self.t + 1, self.u),
            (self.u + 1, self.n),
        ]
    }

    pub fn to_coloring(&self) -> Coloring {
        expand(self.n, &self.intervals())
    }
}

/// Either block shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockColoring {
    Three(ThreeBlockColoring),
    Four(FourBlockColoring),
}

impl BlockColoring {
    pub fn n(&self) -> usize {
        match self {
            BlockColoring::Three(b) => b.n,
            BlockColoring::Four(b) => b.n,
        }
    }

    pub fn intervals(&self) -> Vec<(usize, usize)> {
        match self {
            BlockColoring::Three(b) => b.intervals().to_vec(),
            BlockColoring::Four(b) => b.intervals().to_vec(),
        }
    }

    pub fn to_coloring(&self) -> Coloring {
        expand(self.n(), &self.intervals())
    }
}

impl From<ThreeBlockColoring> for BlockColoring {
    fn from(b: ThreeBlockColoring) -> Self {
        BlockColoring::Three(b)
    }
}

impl From<FourBlockColoring> for BlockColoring {
    fn from(b: FourBlockColoring) -> Self {
        BlockColoring::Four(b)
    }
}

fn expand(n: usize, intervals: &[(usize, usize)]) -> Coloring {
    let mut c = Coloring::new(n);
    for (k, &(lo, hi)) in intervals.iter().enumerate() {
        if k % 2 == 1 {
            for i in lo..=hi {
                c.set(i, Color::Blue);
            }
        }
    }
    c
}

/// The block membership pattern of `(x, y, z)` for a three-block coloring,
/// e.g. `133` means `x ∈ I₁`, `y ∈ I₃`, `z ∈ I₃`.
///
/// These are the only patterns that can be monochromatic with positive
/// measure; `311` and `331` would need `z < x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TripleClass {
    C111,
    C222,
    C113,
    C131,
    C133,
    C313,
    C333,
}

impl TripleClass {
    pub const ALL: [TripleClass; 7] = [
        TripleClass::C111,
        TripleClass::C222,
        TripleClass::C113,
        TripleClass::C131,
        TripleClass::C133,
        TripleClass::C313,
        TripleClass::C333,
    ];

    /// Block indices `(i, j, k)` in `1..=3`.
    pub fn blocks(self) -> (usize, usize, usize) {
        match self {
            TripleClass::C111 => (1, 1, 1),
            TripleClass::C222 => (2, 2, 2),
            TripleClass::C113 => (1, 1, 3),
            TripleClass::C131 => (1, 3, 1),
            TripleClass::C133 => (1, 3, 3),
            TripleClass::C313 => (3, 1, 3),
            TripleClass::C333 => (3, 3, 3),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TripleClass::C111 => "111",
            TripleClass::C222 => "222",
            TripleClass::C113 => "113",
            TripleClass::C131 => "131",
            TripleClass::C133 => "133",
            TripleClass::C313 => "313",
            TripleClass::C333 => "333",
        }
    }
}

impl fmt::Display for TripleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Counts monochromatic triples of block colorings in time independent of
/// the block lengths.
///
/// For blocks `X`, `Y`, `Z` the number of `(x, y)` with `x ∈ X`, `y ∈ Y`,
/// `x + ⌊a·y⌋ ∈ Z` is a sum over `y` of a clamped linear function of
/// `⌊a·y⌋`. Because `⌊a·y⌋` is nondecreasing, the clamp thresholds are
/// single cut points in `y`, and the linear part is a prefix sum of
/// `⌊a·y⌋` taken from a table.
#[derive(Clone, Debug)]
pub struct BlockCounter {
    n: usize,
    rule: TripleRule,
    /// `prefix[y] = Σ_{y' <= y} ⌊a·y'⌋`.
    prefix: Vec<i64>,
}

impl BlockCounter {
    pub fn new(n: usize, rule: TripleRule) -> Self {
        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(0i64);
        let mut acc = 0i64;
        for y in 1..=n as u64 {
            acc += rule.floor_ay(y) as i64;
            prefix.push(acc);
        }
        BlockCounter { n, rule, prefix }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rule(&self) -> TripleRule {
        self.rule
    }

    /// Largest `y >= 0` with `⌊a·y⌋ <= m`, or `-1` when `m < 0`.
    #[inline]
    fn last_with_shift_at_most(&self, m: i64) -> i64 {
        if m < 0 {
            return -1;
        }
        let (p, q) = (self.rule.numer() as i128, self.rule.denom() as i128);
        ((q * (m as i128 + 1) - 1) / p) as i64
    }

    /// `Σ_{y=c}^{d} clamp(k - ⌊a·y⌋, 0, w)`.
    #[inline]
    fn clamped_sum(&self, c: i64, d: i64, k: i64, w: i64) -> i64 {
        if c > d || w <= 0 {
            return 0;
        }
        let y1 = self.last_with_shift_at_most(k - w).clamp(c - 1, d);
        let y2 = self.last_with_shift_at_most(k - 1).clamp(c - 1, d);
        let full = w * (y1 - c + 1);
        let partial = k * (y2 - y1) - (self.prefix[y2 as usize] - self.prefix[y1 as usize]);
        full + partial
    }

    /// `|{(x, y) : x ∈ X, y ∈ Y, x + ⌊a·y⌋ ∈ Z}|` for closed integer
    /// intervals inside `[1, n]`; empty intervals have `lo > hi`.
    #[inline]
    pub fn box_count(&self, x: (usize, usize), y: (usize, usize), z: (usize, usize)) -> u64 {
        let (xa, xb) = (x.0 as i64, x.1 as i64);
        let (yc, yd) = (y.0 as i64, y.1 as i64);
        let (ze, zf) = (z.0 as i64, z.1 as i64);
        if xa > xb || yc > yd || ze > zf {
            return 0;
        }
        let w = xb - xa + 1;
        let upper = self.clamped_sum(yc, yd, zf - xa + 1, w);
        let lower = self.clamped_sum(yc, yd, ze - xa, w);
        (upper - lower) as u64
    }

    /// Monochromatic triples of the block coloring whose consecutive
    /// `intervals` alternate red, blue, red, …
    pub fn count_intervals(&self, intervals: &[(usize, usize)]) -> u64 {
        let mut total = 0;
        for (i, &xi) in intervals.iter().enumerate() {
            for (j, &yj) in intervals.iter().enumerate() {
                if (i + j) % 2 == 1 {
                    continue;
                }
                // z >= x, so z's block never precedes x's
                for (k, &zk) in intervals.iter().enumerate().skip(i) {
                    if (i + k) % 2 == 0 {
                        total += self.box_count(xi, yj, zk);
                    }
                }
            }
        }
        total
    }

    /// Same as [`count_intervals`](Self::count_intervals) for
    /// `R^s B^{t-s} R^{n-t}`, restricted to the seven feasible classes.
    #[inline]
    pub fn count_three(&self, s: usize, t: usize) -> u64 {
        let n = self.n;
        let i1 = (1, s);
        let i2 = (s + 1, t);
        let i3 = (t + 1, n);
        self.box_count(i1, i1, i1)
            + self.box_count(i2, i2, i2)
            + self.box_count(i1, i1, i3)
            + self.box_count(i1, i3, i1)
            + self.box_count(i1, i3, i3)
            + self.box_count(i3, i1, i3)
            + self.box_count(i3, i3, i3)
    }

    /// Count of one triple class under `R^s B^{t-s} R^{n-t}`.
    pub fn class_count(&self, s: usize, t: usize, class: TripleClass) -> u64 {
        let iv = [(1, s), (s + 1, t), (t + 1, self.n)];
        let (i, j, k) = class.blocks();
        self.box_count(iv[i - 1], iv[j - 1], iv[k - 1])
    }

    pub fn count(&self, block: &BlockColoring) -> u64 {
        assert_eq!(block.n(), self.n, "block coloring size does not match");
        self.count_intervals(&block.intervals())
    }
}

/// Monochromatic triples of a block coloring.
///
/// Observably identical to [`count_mono`](crate::count_mono) on the
/// expanded coloring, but runs in O(n) setup plus O(1) per block pair.
pub fn mgst_block_count(block: impl Into<BlockColoring>, rule: TripleRule) -> u64 {
    let block = block.into();
    BlockCounter::new(block.n(), rule).count(&block)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_mono;

    #[test]
    fn published_block_counts() {
        let b = ThreeBlockColoring::new(6, 2, 5).unwrap();
        assert_eq!(b.to_coloring().to_word(), "RRBBBR");
        assert_eq!(mgst_block_count(b, TripleRule::ONE), 1);
        let fig = ThreeBlockColoring::new(33, 12, 30).unwrap();
        assert_eq!(mgst_block_count(fig, TripleRule::ONE), 87);
        let rbbr = ThreeBlockColoring::new(4, 1, 3).unwrap();
        assert_eq!(rbbr.to_coloring().to_word(), "RBBR");
        assert_eq!(mgst_block_count(rbbr, TripleRule::HALF), 4);
    }

    #[test]
    fn three_block_kernel_matches_expansion() {
        for (p, q) in [(1, 1), (2, 1), (3, 1), (4, 1), (1, 2), (3, 2), (2, 7)] {
            let rule = TripleRule::new(p, q).unwrap();
            for n in 1..=28 {
                let counter = BlockCounter::new(n, rule);
                for s in 1..=n {
                    for t in s..=n {
                        let b = ThreeBlockColoring::new(n, s, t).unwrap();
                        let expect = count_mono(&b.to_coloring(), rule);
                        assert_eq!(counter.count_three(s, t), expect, "({n},{s},{t}) a={rule}");
                        assert_eq!(counter.count(&b.into()), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn four_block_kernel_matches_expansion() {
        for rule in [TripleRule::HALF, TripleRule::ONE, TripleRule::new(2, 3).unwrap()] {
            for n in 1..=14 {
                let counter = BlockCounter::new(n, rule);
                for s in 1..=n {
                    for t in s..=n {
                        for u in t..=n {
                            let b = FourBlockColoring::new(n, s, t, u).unwrap();
                            assert_eq!(
                                counter.count(&b.into()),
                                count_mono(&b.to_coloring(), rule),
                                "({n},{s},{t},{u}) a={rule}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn class_counts_partition_the_total() {
        let rule = TripleRule::new(5, 4).unwrap();
        let counter = BlockCounter::new(40, rule);
        for (s, t) in [(3, 30), (12, 20), (1, 40), (20, 20)] {
            let by_class: u64 = TripleClass::ALL
                .iter()
                .map(|&c| counter.class_count(s, t, c))
                .sum();
            assert_eq!(by_class, counter.count_three(s, t));
        }
    }

    #[test]
    fn raw_locations_are_normalised() {
        assert_eq!(
            ThreeBlockColoring::from_raw(5, 0, 3).unwrap(),
            ThreeBlockColoring::new(5, 3, 5).unwrap()
        );
        assert_eq!(
            ThreeBlockColoring::from_raw(5, 0, 0).unwrap(),
            ThreeBlockColoring::new(5, 5, 5).unwrap()
        );
        assert!(ThreeBlockColoring::from_raw(5, 2, 1).is_err());
        assert!(ThreeBlockColoring::from_raw(5, 2, 6).is_err());
        assert!(ThreeBlockColoring::new(5, 0, 2).is_err());
    }

    #[test]
    fn expansion_keeps_red_count() {
        let b = ThreeBlockColoring::new(20, 6, 15).unwrap();
        assert_eq!(b.to_coloring().count(Color::Red), 6 + 5);
    }
}
