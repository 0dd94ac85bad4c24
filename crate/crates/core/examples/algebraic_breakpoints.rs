//! The breakpoints of m(a) and the value of each branch on both sides.

use schur_triples::algebraic::{alpha, branches, location_of_min, m_of_a, refine_root};

fn main() -> schur_triples::Result<()> {
    for k in 1..=8 {
        let x = alpha(k);
        let (lo, hi) = refine_root(&x, 1e-12);
        println!("alpha_{k} = {:.12}  {x}  width {:.1e}", 0.5 * (lo + hi), hi - lo);
    }

    for (i, b) in branches().iter().enumerate() {
        let (lo, hi) = (b.lo.value(), b.hi.value());
        let mid = if hi.is_finite() { 0.5 * (lo + hi) } else { lo + 1.0 };
        println!("branch {:>2} on [{lo:.6}, {hi:.6}]  m({mid:.4}) = {:.9}", i + 1, b.m.eval(mid));
    }

    let a4 = alpha(4).value();
    let loc = location_of_min(a4)?;
    for p in loc.points() {
        println!("at alpha_4 branch {}: (s0, t0) = ({:.6}, {:.6})", p.branch + 1, p.s0, p.t0);
    }
    println!("m(alpha_4) = {:.12}", m_of_a(a4)?);
    Ok(())
}
