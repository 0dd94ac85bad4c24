use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The coefficient `a = p/q` of the triple rule `z = x + ⌊a·y⌋`, kept in
/// lowest terms so that `⌊a·y⌋` is computed exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleRule {
    p: u64,
    q: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl TripleRule {
    /// Classic Schur triples `x + y = z`.
    pub const ONE: TripleRule = TripleRule { p: 1, q: 1 };
    pub const TWO: TripleRule = TripleRule { p: 2, q: 1 };
    pub const THREE: TripleRule = TripleRule { p: 3, q: 1 };
    pub const FOUR: TripleRule = TripleRule { p: 4, q: 1 };
    pub const HALF: TripleRule = TripleRule { p: 1, q: 2 };

    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Parse(format!(
                "coefficient {p}/{q} must be a positive rational"
            )));
        }
        let g = gcd(p, q);
        Ok(TripleRule { p: p / g, q: q / g })
    }

    pub fn integer(a: u64) -> Result<Self> {
        Self::new(a, 1)
    }

    pub fn numer(self) -> u64 {
        self.p
    }

    pub fn denom(self) -> u64 {
        self.q
    }

    /// `⌊a·y⌋` in exact integer arithmetic.
    #[inline]
    pub fn floor_ay(self, y: u64) -> u64 {
        ((self.p as u128 * y as u128) / self.q as u128) as u64
    }

    pub fn as_f64(self) -> f64 {
        self.p as f64 / self.q as f64
    }

    /// `a >= 1`.
    pub fn at_least_one(self) -> bool {
        self.p >= self.q
    }
}

impl fmt::Display for TripleRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for TripleRule {
    type Err = Error;

    /// Accepts `p/q` or a bare positive integer.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |part: &str| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("invalid coefficient {s:?}")))
        };
        match s.split_once('/') {
            Some((p, q)) => TripleRule::new(parse(p)?, parse(q)?),
            None => TripleRule::new(parse(s)?, 1),
        }
    }
}

impl Serialize for TripleRule {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TripleRule {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
