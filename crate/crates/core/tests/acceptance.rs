//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schur_triples::algebraic::{alpha, branches, location_of_min, m_of_a, stationary_threshold};
use schur_triples::blocks::{
    block_search_min, exact_min_formula, lemma1_count, lemma2_p, mgst_block_count,
    minimizer_location, Blocks, SearchMode, ThreeBlockColoring,
};
use schur_triples::geometry::{
    area_closed_form, area_geometric, classify_region, gradient_area, minimize_area, AreaRegion,
    GradientMethod,
};
use schur_triples::{brute_force_min, TripleRule};

const AREA_TOL: f64 = 1e-9;
const M_TOL: f64 = 1e-6;
const LOCATION_TOL: f64 = 1e-4;
const ALPHA4_EXCLUSION: f64 = 1e-3;
const CONTINUITY_TOL: f64 = 1e-9;
const JUMP_MIN: f64 = 0.05;
const GRADIENT_TOL: f64 = 1e-5;
const THRESHOLD_PRINTED: f64 = 1.8892;
const THRESHOLD_TOL: f64 = 1e-4;
const LIMIT_CONST: f64 = 5.0;

const A321195: [u64; 25] = [
    0, 0, 0, 0, 1, 1, 2, 3, 4, 6, 7, 9, 11, 13, 15, 18, 20, 23, 26, 29, 33, 36, 40, 44, 48,
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn c1() -> Outcome {
    let bad: Vec<usize> = (1..=22usize)
        .filter(|&n| {
            let want = ((n * n + 6 - 4 * n) / 11) as u64;
            brute_force_min(n, TripleRule::ONE).unwrap().minimum != want
        })
        .collect();
    outcome(bad.is_empty(), format!("exhaustive a = 1, n <= 22, mismatches {bad:?}"))
}

fn c2() -> Outcome {
    let bad: Vec<usize> = (1..=25)
        .filter(|&n| exact_min_formula(n, TripleRule::ONE).unwrap() != A321195[n - 1])
        .collect();
    outcome(bad.is_empty(), format!("25 reference terms, mismatches {bad:?}"))
}

fn c3() -> Outcome {
    let l = lemma1_count(33, 12, 30).unwrap();
    let b = mgst_block_count(ThreeBlockColoring::new(33, 12, 30).unwrap(), TripleRule::ONE);
    outcome(l == 87 && b == 87, format!("closed form {l}, block count {b}"))
}

fn full3(n: usize, rule: TripleRule) -> u64 {
    block_search_min(n, rule, Blocks::Three, &SearchMode::Full).unwrap().minimum
}

fn c4() -> Outcome {
    let bad: Vec<usize> = (1..=600)
        .filter(|&n| exact_min_formula(n, TripleRule::TWO).unwrap() != full3(n, TripleRule::TWO))
        .collect();
    outcome(bad.is_empty(), format!("a = 2, n <= 600, mismatches {bad:?}"))
}

fn c5() -> Outcome {
    let mut bad = Vec::new();
    for rule in [TripleRule::THREE, TripleRule::FOUR] {
        for n in 1..=500 {
            let (s, t) = minimizer_location(n, rule).unwrap();
            let w = block_search_min(n, rule, Blocks::Three, &SearchMode::windowed([s, t]))
                .unwrap()
                .minimum;
            let formula = exact_min_formula(n, rule).unwrap();
            if w != formula || (n <= 300 && full3(n, rule) != w) {
                bad.push((rule.to_string(), n));
            }
        }
    }
    outcome(bad.is_empty(), format!("a = 3, 4, n <= 500 windowed, full for n <= 300, mismatches {bad:?}"))
}

fn c6() -> Outcome {
    let bad: Vec<usize> = (1..=400)
        .filter(|&n| exact_min_formula(n, TripleRule::HALF).unwrap() != full3(n, TripleRule::HALF))
        .collect();
    let global = brute_force_min(4, TripleRule::HALF).unwrap().minimum;
    let blocks = full3(4, TripleRule::HALF);
    outcome(
        bad.is_empty() && global == 3 && blocks == 4,
        format!("a = 1/2, n <= 400, mismatches {bad:?}; n = 4 global {global} vs blocks {blocks}"),
    )
}

/// Returns the outcome and the `n` where the formula fails.
fn c7() -> (Outcome, Vec<usize>) {
    let eleven = brute_force_min(11, TripleRule::HALF).unwrap();
    let anomaly = eleven.minimum == 20 && eleven.witnesses.iter().any(|w| w.to_word() == "RBRBBRRBRBB");
    let mut bad = Vec::new();
    let mut detail = String::new();
    for n in 12..=20usize {
        let r = brute_force_min(n, TripleRule::HALF).unwrap();
        let want = (n * n).div_ceil(6) as u64;
        if r.minimum != want {
            bad.push(n);
            detail += &format!(
                "; n = {n}: minimum {} at {} but formula {want}",
                r.minimum,
                r.witnesses[0].to_run_length()
            );
        }
    }
    let o = outcome(
        anomaly && bad.is_empty(),
        format!("n = 11 anomaly reproduced: {anomaly}{detail}"),
    );
    (o, bad)
}

fn sample_st(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let (s, t): (f64, f64) = (rng.gen(), rng.gen());
    if s <= t {
        (s, t)
    } else {
        (t, s)
    }
}

fn c8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut classified, mut worst_area) = (0, 0.0f64);
    while classified < 10_000 {
        let a = rng.gen_range(0.0..3.0);
        if a == 0.0 {
            continue;
        }
        let (s, t) = sample_st(&mut rng);
        if classify_region(s, t, a).unwrap().is_some() {
            classified += 1;
            let d = (area_closed_form(s, t, a).unwrap() - area_geometric(s, t, a).unwrap()).abs();
            worst_area = worst_area.max(d);
        }
    }
    let a4 = alpha(4).value();
    let (mut worst_m, mut worst_loc) = (0.0f64, 0.0f64);
    for _ in 0..200 {
        let a = rng.gen_range(0.02..=3.0);
        let num = minimize_area(a).unwrap();
        worst_m = worst_m.max((num.area - m_of_a(a).unwrap()).abs());
        if (a - a4).abs() > ALPHA4_EXCLUSION {
            let p = location_of_min(a).unwrap().primary;
            worst_loc = worst_loc.max((num.s - p.s0).abs().max((num.t - p.t0).abs()));
        }
    }
    outcome(
        worst_area <= AREA_TOL && worst_m <= M_TOL && worst_loc <= LOCATION_TOL,
        format!("area diff {worst_area:.1e}, m diff {worst_m:.1e}, location diff {worst_loc:.1e}"),
    )
}

fn c9() -> Outcome {
    let printed = ["0.295597", "0.395065", "0.405669", "0.553409", "0.622179", "0.647363", "0.931478", "1.174559"];
    let mut digits_ok = true;
    for (k, want) in (1..=8).zip(printed) {
        // printed digits are truncated
        let got = format!("{:.6}", (alpha(k).value() * 1e6).floor() / 1e6);
        digits_ok &= got == want;
    }
    let b = branches();
    let mut worst = 0.0f64;
    for i in 0..b.len() - 1 {
        let e = b[i].hi.value();
        worst = worst.max((b[i].m.eval(e) - b[i + 1].m.eval(e)).abs());
    }
    let a4 = alpha(4).value();
    let jump = (b[3].s0.eval(a4) - b[4].s0.eval(a4)).abs();
    outcome(
        digits_ok && worst <= CONTINUITY_TOL && jump > JUMP_MIN,
        format!("digits match {digits_ok}, continuity gap {worst:.1e}, s0 jump {jump:.3}"),
    )
}

fn admissible(a: f64) -> bool {
    let d = 4.0 * a * a + 2.0 * a - 1.0;
    let (s, t) = (a / d, a * (2.0 * a + 1.0) / d);
    matches!(classify_region(s, t, a), Ok(Some(r)) if r == AreaRegion::new(2).unwrap())
}

fn c10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst = 0.0f64;
    for id in [1, 2, 7, 17] {
        let target = AreaRegion::new(id).unwrap();
        let mut done = 0;
        while done < 100 {
            let a = rng.gen_range(0.01..3.0);
            let (s, t) = sample_st(&mut rng);
            if classify_region(s, t, a).unwrap() != Some(target) {
                continue;
            }
            let (Ok(c), Ok(n)) = (
                gradient_area(s, t, a, GradientMethod::Closed),
                gradient_area(s, t, a, GradientMethod::Numeric),
            ) else {
                continue;
            };
            worst = worst.max((c.0 - n.0).abs().max((c.1 - n.1).abs()));
            done += 1;
        }
    }
    let (mut lo, mut hi) = (1.5, 2.5);
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if admissible(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let root = stationary_threshold().value();
    let samples = [(1.5, false), (1.88, false), (1.90, true), (2.5, true)]
        .iter()
        .all(|&(a, want)| admissible(a) == want);
    let ok = worst <= GRADIENT_TOL
        && (hi - THRESHOLD_PRINTED).abs() <= THRESHOLD_TOL
        && (hi - root).abs() <= THRESHOLD_TOL
        && samples;
    outcome(ok, format!("gradient diff {worst:.1e}, admissibility threshold {hi:.7} (root {root:.9})"))
}

fn c11() -> (Outcome, BTreeSet<(i64, i64)>) {
    let mut negative = 0;
    let mut zeros = BTreeSet::new();
    for i in -100..=100 {
        for j in -100..=100 {
            match lemma2_p(i, j) {
                v if v < 0 => negative += 1,
                0 => {
                    zeros.insert((i, j));
                }
                _ => {}
            }
        }
    }
    let listed: BTreeSet<(i64, i64)> = [(0, 0), (-1, 0), (-1, -1)].into();
    let o = outcome(
        negative == 0 && zeros == listed,
        format!(
            "negative values {negative}, zeros {zeros:?}, listed {listed:?}, p(-1,-1) = {}",
            lemma2_p(-1, -1)
        ),
    );
    (o, zeros)
}

fn c12() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst = 0.0f64;
    let mut ok = true;
    for rule in [TripleRule::ONE, TripleRule::TWO, TripleRule::HALF] {
        for n in [200usize, 400, 800] {
            for _ in 0..50 {
                let (sigma, tau) = sample_st(&mut rng);
                let s = ((sigma * n as f64).ceil() as usize).max(1);
                let t = ((tau * n as f64).ceil() as usize).clamp(s, n);
                let count = mgst_block_count(ThreeBlockColoring::new(n, s, t).unwrap(), rule);
                let d = (count as f64 / (n * n) as f64 - area_geometric(sigma, tau, rule.as_f64()).unwrap()).abs();
                worst = worst.max(d * n as f64);
                ok &= d <= LIMIT_CONST / n as f64;
            }
        }
    }
    outcome(ok, format!("max n·|count/n² - A| = {worst:.3} (bound {LIMIT_CONST})"))
}

fn main() {
    let mut failed = Vec::new();
    let mut report = |k: usize, name: &str, run: &dyn Fn() -> Outcome| -> bool {
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {k:>2} {status}  {name}: {} [{:.1}s]",
            o.detail,
            start.elapsed().as_secs_f64()
        );
        if !o.pass {
            failed.push(k);
        }
        o.pass
    };

    report(1, "exhaustive minimum equals the a = 1 formula", &c1);
    report(2, "reference sequence prefix", &c2);
    report(3, "golden count 87", &c3);
    report(4, "a = 2 formula against full block search", &c4);
    report(5, "a = 3 and a = 4 formulas against windowed search", &c5);
    report(6, "a = 1/2 formula and the RBRB counterexample", &c6);
    let conjecture_bad = std::cell::RefCell::new(Vec::new());
    report(7, "four-block formula for a = 1/2, 12 <= n <= 20", &|| {
        let (o, bad) = c7();
        *conjecture_bad.borrow_mut() = bad;
        o
    });
    report(8, "closed forms, m(a) and minimizer against numerics", &c8);
    report(9, "breakpoint digits, continuity and the jump", &c9);
    report(10, "gradients and stationary point admissibility", &c10);
    let zero_set = std::cell::RefCell::new(BTreeSet::new());
    report(11, "lattice nonnegativity and zero set", &|| {
        let (o, z) = c11();
        *zero_set.borrow_mut() = z;
        o
    });
    report(12, "discrete to continuous limit", &c12);

    // Criteria 7 and 11 are false as stated. They must fail in exactly the
    // known way: the formula misses only at n = 19 (60 < 61), and the zeros
    // of p are (-1, 0), (0, 0), (0, 1).
    let known_zeros: BTreeSet<(i64, i64)> = [(-1, 0), (0, 0), (0, 1)].into();
    let known = |k: &usize| match k {
        7 => *conjecture_bad.borrow() == vec![19],
        11 => *zero_set.borrow() == known_zeros,
        _ => false,
    };
    let unexpected: Vec<usize> = failed.iter().copied().filter(|k| !known(k)).collect();
    println!(
        "acceptance: {} of 12 pass; failing {failed:?}; unexpected failures {unexpected:?}",
        12 - failed.len()
    );
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
