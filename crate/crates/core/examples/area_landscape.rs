//! The limiting area function: class polygons at one point, region
//! classification, and a coarse text plot of A over the triangle.
//!
//! cargo run --release --example area_landscape -- 0.56

use schur_triples::geometry::{area_geometric, classify_region, minimize_area, region_polygons};

fn main() -> schur_triples::Result<()> {
    let a: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1.0);
    let best = minimize_area(a)?;
    println!("a = {a}: min A = {:.9} at (s, t) = ({:.6}, {:.6})", best.area, best.s, best.t);

    for (class, poly) in region_polygons(best.s, best.t, a)? {
        if !poly.is_empty() {
            println!("  {class}: area {:.6}, {} vertices", poly.area(), poly.vertices.len());
        }
    }
    match classify_region(best.s, best.t, a)? {
        Some(r) => println!("  closed form region {r}"),
        None => println!("  not in a tabulated region"),
    }

    let shades = [' ', '.', ':', '-', '=', '+', '*', '#', '%', '@'];
    let rows = 24;
    for j in (0..=rows).rev() {
        let t = j as f64 / rows as f64;
        let line: String = (0..=rows)
            .map(|i| {
                let s = i as f64 / rows as f64;
                if s > t {
                    return ' ';
                }
                let v = area_geometric(s, t, a).unwrap_or(0.0);
                let k = ((v - best.area) / (0.5 - best.area).max(1e-12) * 9.0).clamp(0.0, 9.0);
                shades[k as usize]
            })
            .collect();
        println!("{line}");
    }
    Ok(())
}
