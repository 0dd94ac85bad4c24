use super::{Coloring, TripleRule};

/// A generalized Schur triple `(x, y, x + ⌊a·y⌋)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

/// Every generalized Schur triple inside `[n]` for one rule.
///
/// Ordered pairs are distinct: `(x, y)` and `(y, x)` both appear. When
/// `⌊a·y⌋ = 0` the degenerate triple `(x, y, x)` is kept.
#[derive(Clone, Debug)]
pub struct TripleList {
    n: usize,
    rule: TripleRule,
    entries: Vec<Triple>,
}

impl TripleList {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rule(&self) -> TripleRule {
        self.rule
    }

    pub fn entries(&self) -> &[Triple] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Monochromatic triples under `coloring`, by three bit tests per entry.
    pub fn count_mono(&self, coloring: &Coloring) -> u64 {
        assert_eq!(coloring.len(), self.n, "coloring size does not match");
        self.entries
            .iter()
            .filter(|t| {
                let c = coloring.bit(t.x as usize);
                c == coloring.bit(t.y as usize) && c == coloring.bit(t.z as usize)
            })
            .count() as u64
    }

    /// The monochromatic triples themselves.
    pub fn monochromatic<'a>(&'a self, coloring: &'a Coloring) -> impl Iterator<Item = Triple> + 'a {
        self.entries.iter().copied().filter(move |t| {
            let c = coloring.bit(t.x as usize);
            c == coloring.bit(t.y as usize) && c == coloring.bit(t.z as usize)
        })
    }
}

/// Lists `{(x, y, x + ⌊a·y⌋) : x, y ∈ [n], x + ⌊a·y⌋ <= n}` ordered by `y`
/// then `x`.
///
/// # Panics
///
/// If `n == 0`.
pub fn enumerate_triples(n: usize, rule: TripleRule) -> TripleList {
    assert!(n >= 1, "the ground set [n] needs n >= 1");
    let mut entries = Vec::new();
    for y in 1..=n {
        let d = rule.floor_ay(y as u64) as usize;
        if d >= n {
            break;
        }
        for x in 1..=n - d {
            entries.push(Triple {
                x: x as u32,
                y: y as u32,
                z: (x + d) as u32,
            });
        }
    }
    TripleList { n, rule, entries }
}

/// Number of monochromatic triples of `coloring` under `rule`.
///
/// Works for any `n`; it walks the triples on the fly rather than
/// materialising a [`TripleList`].
pub fn count_mono(coloring: &Coloring, rule: TripleRule) -> u64 {
    let n = coloring.len();
    let mut total = 0u64;
    for y in 1..=n {
        let d = rule.floor_ay(y as u64) as usize;
        if d >= n {
            break;
        }
        let cy = coloring.bit(y);
        for x in 1..=n - d {
            if coloring.bit(x) == cy && coloring.bit(x + d) == cy {
                total += 1;
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::Color;

    fn word(s: &str) -> Coloring {
        s.parse().unwrap()
    }

    #[test]
    fn tiny_ground_sets() {
        assert!(enumerate_triples(1, TripleRule::ONE).is_empty());
        assert_eq!(enumerate_triples(6, TripleRule::ONE).len(), 15);
        let half = enumerate_triples(2, TripleRule::HALF);
        let got: Vec<_> = half.entries().iter().map(|t| (t.x, t.y, t.z)).collect();
        assert_eq!(got, vec![(1, 1, 1), (2, 1, 2), (1, 2, 2)]);
    }

    #[test]
    fn brute_force_listing_agrees() {
        for (p, q) in [(1, 1), (1, 2), (2, 1), (3, 2), (2, 5)] {
            let rule = TripleRule::new(p, q).unwrap();
            for n in 1..30usize {
                let mut expect = Vec::new();
                for y in 1..=n {
                    for x in 1..=n {
                        let z = x + (p as usize * y) / q as usize;
                        if z <= n {
                            expect.push((x as u32, y as u32, z as u32));
                        }
                    }
                }
                expect.sort();
                let mut got: Vec<_> = enumerate_triples(n, rule)
                    .entries()
                    .iter()
                    .map(|t| (t.x, t.y, t.z))
                    .collect();
                got.sort();
                assert_eq!(got, expect, "n = {n}, a = {rule}");
            }
        }
    }

    #[test]
    fn schur_triple_count_is_binomial() {
        for n in 1..=500 {
            assert_eq!(enumerate_triples(n, TripleRule::ONE).len(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn published_colorings() {
        assert_eq!(count_mono(&word("BRBRBB"), TripleRule::ONE), 4);
        assert_eq!(count_mono(&word("RRBBBR"), TripleRule::ONE), 1);
        assert_eq!(count_mono(&word("RBRB"), TripleRule::HALF), 3);
        assert_eq!(count_mono(&word("RBBR"), TripleRule::HALF), 4);
        assert_eq!(count_mono(&Coloring::constant(6, Color::Red), TripleRule::ONE), 15);
    }

    #[test]
    fn listed_triples_for_brbrbb() {
        let list = enumerate_triples(6, TripleRule::ONE);
        let c = word("BRBRBB");
        let mono: Vec<_> = list.monochromatic(&c).map(|t| (t.x, t.y, t.z)).collect();
        let mut mono = mono;
        mono.sort();
        assert_eq!(mono, vec![(1, 5, 6), (2, 2, 4), (3, 3, 6), (5, 1, 6)]);
        assert_eq!(list.count_mono(&c), 4);
    }

    #[test]
    fn rbrb_triples() {
        let list = enumerate_triples(4, TripleRule::HALF);
        let mut mono: Vec<_> = list
            .monochromatic(&word("RBRB"))
            .map(|t| (t.x, t.y, t.z))
            .collect();
        mono.sort();
        assert_eq!(mono, vec![(1, 1, 1), (2, 4, 4), (3, 1, 3)]);
    }
}
