//! Closed forms and double sums for three-block colorings inside the
//! regions where their class structure is fixed.

use crate::counting::TripleRule;
use crate::error::{Error, Result};

fn check_order(n: usize, s: usize, t: usize) -> Result<()> {
    if 1 <= s && s <= t && t <= n {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(format!(
            "need 1 <= s <= t <= n, got (n, s, t) = ({n}, {s}, {t})"
        )))
    }
}

/// Schur-triple count of `R^s B^{t-s} R^{n-t}` when `t >= 2s` and
/// `s >= n - t`:
/// `s(s-1)/2 + (t-2s)(t-2s-1)/2 + (n-t)(n-t-1)`.
pub fn lemma1_count(n: usize, s: usize, t: usize) -> Result<u64> {
    check_order(n, s, t)?;
    if t < 2 * s || s < n - t {
        return Err(Error::PreconditionViolated(format!(
            "needs t >= 2s and s >= n - t, got (n, s, t) = ({n}, {s}, {t})"
        )));
    }
    let (s, m, r) = (s as u64, (t - 2 * s) as u64, (n - t) as u64);
    Ok(s * s.saturating_sub(1) / 2 + m * m.saturating_sub(1) / 2 + r * r.saturating_sub(1))
}

/// `a·s + t >= n`, `t >= a·s` and `s + a·s <= t`, in exact arithmetic.
pub fn in_lemma5_region(n: usize, s: usize, t: usize, rule: TripleRule) -> bool {
    let (p, q) = (rule.numer() as u128, rule.denom() as u128);
    let (n, s, t) = (n as u128, s as u128, t as u128);
    p * s + q * t >= q * n && q * t >= p * s && q * s + p * s <= q * t
}

fn run(lo: i64, hi: i64) -> u64 {
    if hi >= lo {
        (hi - lo + 1) as u64
    } else {
        0
    }
}

/// The four double sums for classes `111`, `222`, `313` and `133`, valid for
/// `a >= 1` inside [`in_lemma5_region`]. Each inner sum is a run length.
pub fn lemma5_sum_count(n: usize, s: usize, t: usize, rule: TripleRule) -> Result<u64> {
    check_order(n, s, t)?;
    if !rule.at_least_one() {
        return Err(Error::PreconditionViolated(format!(
            "the four-sum form needs a >= 1, got a = {rule}"
        )));
    }
    if !in_lemma5_region(n, s, t, rule) {
        return Err(Error::PreconditionViolated(format!(
            "(n, s, t) = ({n}, {s}, {t}) violates as + t >= n, t >= as, s + as <= t for a = {rule}"
        )));
    }
    let (p, q) = (rule.numer() as usize, rule.denom() as usize);
    let floor_over_a = |v: usize| v * q / p;
    let shift = |y: usize| rule.floor_ay(y as u64) as i64;
    let (ni, si, ti) = (n as i64, s as i64, t as i64);

    let mut total = 0;
    for y in 1..=floor_over_a(s) {
        total += run(1, si - shift(y));
    }
    for y in s + 1..=floor_over_a(t - s) {
        total += run(si + 1, ti - shift(y));
    }
    for y in 1..=floor_over_a(n - t) {
        total += run(ti + 1, ni - shift(y));
    }
    for y in t + 1..=floor_over_a(n) {
        total += run(1, ni - shift(y));
    }
    Ok(total)
}

/// Floor-product closed form of the `a = 2` sums inside the same region.
pub fn thm2_closed_count(n: usize, s: usize, t: usize) -> Result<u64> {
    check_order(n, s, t)?;
    if !in_lemma5_region(n, s, t, TripleRule::TWO) {
        return Err(Error::PreconditionViolated(format!(
            "(n, s, t) = ({n}, {s}, {t}) violates 2s + t >= n, t >= 2s, 3s <= t"
        )));
    }
    Ok(thm2_unchecked(n as i64, s as i64, t as i64) as u64)
}

#[inline]
pub(crate) fn thm2_unchecked(n: i64, s: i64, t: i64) -> i64 {
    let fl = |v: i64| v.div_euclid(2);
    fl(s) * fl(s - 1) + fl(n - t) * fl(n - t - 1) + fl(t - s) * fl(t - s - 1) + 2 * s * s - s * t + s
}

/// `n/2 <= t <= 2n/3`, `t - s <= n/2` and `2s <= t`.
pub fn in_thm5_region(n: usize, s: usize, t: usize) -> bool {
    2 * t >= n && 3 * t <= 2 * n && 2 * (t - s.min(t)) <= n && 2 * s <= t
}

/// The five double sums for classes `111`, `222`, `313`, `133`, `333` at
/// `a = 1/2`.
pub fn thm5_sum_count(n: usize, s: usize, t: usize) -> Result<u64> {
    check_order(n, s, t)?;
    if !in_thm5_region(n, s, t) {
        return Err(Error::PreconditionViolated(format!(
            "(n, s, t) = ({n}, {s}, {t}) violates n/2 <= t <= 2n/3, t - s <= n/2, 2s <= t"
        )));
    }
    let half = |y: usize| (y / 2) as i64;
    let (ni, si, ti) = (n as i64, s as i64, t as i64);

    let mut total = 0;
    for y in 1..=s {
        total += run(1, si - half(y));
    }
    for y in s + 1..=t {
        total += run(si + 1, ti - half(y));
    }
    for y in 1..=s {
        total += run(ti + 1, ni - half(y));
    }
    for y in 2 * t - 2 * s + 1..=n {
        total += run(ti + 1 - half(y), si);
    }
    for y in t + 1..(2 * n).saturating_sub(2 * t) {
        total += run(ti + 1, ni - half(y));
    }
    Ok(total)
}
