use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    fn from_letter(c: char) -> Option<Color> {
        match c {
            'R' | 'r' => Some(Color::Red),
            'B' | 'b' => Some(Color::Blue),
            _ => None,
        }
    }
}

/// A 2-coloring of `[n] = {1, …, n}` packed into machine words.
///
/// Bit `i - 1` holds the color of the integer `i`; a clear bit is red and a
/// set bit is blue.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    n: usize,
    words: Vec<u64>,
}

impl Coloring {
    /// All-red coloring of `[n]`.
    pub fn new(n: usize) -> Self {
        Coloring {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn constant(n: usize, color: Color) -> Self {
        let mut c = Coloring::new(n);
        if color == Color::Blue {
            for i in 1..=n {
                c.set(i, Color::Blue);
            }
        }
        c
    }

    pub fn from_colors<I: IntoIterator<Item = Color>>(colors: I) -> Self {
        let colors: Vec<Color> = colors.into_iter().collect();
        let mut c = Coloring::new(colors.len());
        for (i, &color) in colors.iter().enumerate() {
            c.set(i + 1, color);
        }
        c
    }

    /// Builds a coloring of `[n]` from a mask whose bit `i - 1` is set when
    /// `i` is blue. Requires `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "mask colorings hold at most 64 elements");
        let keep = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut c = Coloring::new(n);
        if n > 0 {
            c.words[0] = mask & keep;
        }
        c
    }

    /// The blue mask when `n <= 64`.
    pub fn to_mask(&self) -> Option<u64> {
        match self.n {
            0 => Some(0),
            1..=64 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Color of the integer `i`, `1 <= i <= n`.
    #[inline]
    pub fn get(&self, i: usize) -> Color {
        debug_assert!((1..=self.n).contains(&i));
        let b = i - 1;
        if (self.words[b / 64] >> (b % 64)) & 1 == 1 {
            Color::Blue
        } else {
            Color::Red
        }
    }

    #[inline]
    pub(crate) fn bit(&self, i: usize) -> u64 {
        let b = i - 1;
        (self.words[b / 64] >> (b % 64)) & 1
    }

    pub fn set(&mut self, i: usize, color: Color) {
        assert!((1..=self.n).contains(&i), "index {i} outside [1, {}]", self.n);
        let b = i - 1;
        match color {
            Color::Red => self.words[b / 64] &= !(1u64 << (b % 64)),
            Color::Blue => self.words[b / 64] |= 1u64 << (b % 64),
        }
    }

    pub fn flip(&mut self, i: usize) {
        let c = self.get(i);
        self.set(i, c.other());
    }

    /// Swaps red and blue everywhere.
    pub fn complement(&self) -> Coloring {
        let mut c = self.clone();
        for i in 1..=self.n {
            c.flip(i);
        }
        c
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        (1..=self.n).map(|i| self.get(i))
    }

    pub fn count(&self, color: Color) -> usize {
        self.iter().filter(|&c| c == color).count()
    }

    /// The word over `{R, B}`, e.g. `RRBBBR`.
    pub fn to_word(&self) -> String {
        self.iter().map(Color::letter).collect()
    }

    /// Run-length form such as `R2B3R1`.
    pub fn to_run_length(&self) -> String {
        let mut out = String::new();
        let mut iter = self.iter().peekable();
        while let Some(c) = iter.next() {
            let mut run = 1;
            while iter.peek() == Some(&c) {
                iter.next();
                run += 1;
            }
            out.push(c.letter());
            out.push_str(&run.to_string());
        }
        out
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word())
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({})", self.to_word())
    }
}

impl FromStr for Coloring {
    type Err = Error;

    /// Parses a word over `{R, B}`. Each letter may be followed by a repeat
    /// count, so `R4B6R1` and `RRRRBBBBBBR` describe the same coloring.
    fn from_str(s: &str) -> Result<Self> {
        let mut colors = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(ch) = chars.next() {
            let color = Color::from_letter(ch)
                .ok_or_else(|| Error::Parse(format!("unexpected {ch:?} in coloring {s:?}")))?;
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let run = if digits.is_empty() {
                1
            } else {
                digits
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad run length in {s:?}")))?
            };
            colors.extend(std::iter::repeat_n(color, run));
        }
        if colors.is_empty() {
            return Err(Error::Parse("empty coloring".into()));
        }
        Ok(Coloring::from_colors(colors))
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_word())
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
