use serde::{Deserialize, Serialize};

const MERGE_EPS: f64 = 1e-12;

/// Convex polygon with counterclockwise vertices. Fewer than three vertices
/// means empty.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ConvexPolygon {
    pub vertices: Vec<[f64; 2]>,
}

impl ConvexPolygon {
    pub fn empty() -> Self {
        ConvexPolygon::default()
    }

    /// `[x0, x1] × [y0, y1]`, empty when either side is degenerate.
    pub fn rect(x0: f64, x1: f64, y0: f64, y1: f64) -> Self {
        if x1 <= x0 || y1 <= y0 {
            return ConvexPolygon::empty();
        }
        ConvexPolygon {
            vertices: vec![[x0, y0], [x1, y0], [x1, y1], [x0, y1]],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 3
    }

    /// Shoelace area.
    pub fn area(&self) -> f64 {
        if self.is_empty() {
            return 0.0;
        }
        let v = &self.vertices;
        let twice: f64 = (0..v.len())
            .map(|i| {
                let (p, q) = (v[i], v[(i + 1) % v.len()]);
                p[0] * q[1] - q[0] * p[1]
            })
            .sum();
        (0.5 * twice).max(0.0)
    }

    /// Intersection with the half-plane `a·x + b·y <= c`.
    pub fn clip(&self, a: f64, b: f64, c: f64) -> Self {
        if self.is_empty() {
            return ConvexPolygon::empty();
        }
        let v = &self.vertices;
        let mut out: Vec<[f64; 2]> = Vec::with_capacity(v.len() + 1);
        for i in 0..v.len() {
            let (p, q) = (v[i], v[(i + 1) % v.len()]);
            let fp = a * p[0] + b * p[1] - c;
            let fq = a * q[0] + b * q[1] - c;
            if fp <= 0.0 {
                push_merged(&mut out, p);
            }
            if (fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0) {
                let r = fp / (fp - fq);
                push_merged(&mut out, [p[0] + r * (q[0] - p[0]), p[1] + r * (q[1] - p[1])]);
            }
        }
        if out.len() > 1 && close(out[0], out[out.len() - 1]) {
            out.pop();
        }
        if out.len() < 3 {
            out.clear();
        }
        ConvexPolygon { vertices: out }
    }

    pub fn intersection(&self, other: &ConvexPolygon) -> Self {
        if other.is_empty() {
            return ConvexPolygon::empty();
        }
        let w = &other.vertices;
        let mut acc = self.clone();
        for i in 0..w.len() {
            let (p, q) = (w[i], w[(i + 1) % w.len()]);
            let (dx, dy) = (q[0] - p[0], q[1] - p[1]);
            // left of p -> q
            acc = acc.clip(dy, -dx, dy * p[0] - dx * p[1]);
            if acc.is_empty() {
                break;
            }
        }
        acc
    }
}

fn close(p: [f64; 2], q: [f64; 2]) -> bool {
    (p[0] - q[0]).abs() <= MERGE_EPS && (p[1] - q[1]).abs() <= MERGE_EPS
}

fn push_merged(out: &mut Vec<[f64; 2]>, p: [f64; 2]) {
    if out.last().is_none_or(|&l| !close(l, p)) {
        out.push(p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_halves() {
        let sq = ConvexPolygon::rect(0.0, 1.0, 0.0, 1.0);
        assert_eq!(sq.area(), 1.0);
        let tri = sq.clip(1.0, 1.0, 1.0);
        assert_eq!(tri.vertices.len(), 3);
        assert!((tri.area() - 0.5).abs() < 1e-15);
        assert!(sq.clip(1.0, 1.0, -0.5).is_empty());
        assert_eq!(sq.clip(1.0, 1.0, 3.0), sq);
    }

    #[test]
    fn touching_clip_is_empty() {
        let sq = ConvexPolygon::rect(0.0, 1.0, 0.0, 1.0);
        assert!(sq.clip(1.0, 1.0, 0.0).is_empty());
        assert!(ConvexPolygon::rect(0.5, 0.5, 0.0, 1.0).is_empty());
    }

    #[test]
    fn intersection_of_squares() {
        let a = ConvexPolygon::rect(0.0, 2.0, 0.0, 2.0);
        let b = ConvexPolygon::rect(1.0, 3.0, 1.0, 3.0);
        assert!((a.intersection(&b).area() - 1.0).abs() < 1e-15);
        let c = ConvexPolygon::rect(2.0, 3.0, 0.0, 1.0);
        assert!(a.intersection(&c).area() < 1e-15);
    }
}
