//! Seeded generators for randomized checks.

use rand::Rng;

use crate::geometry::{LatticePoint, PLPath, Polygon};

pub fn lattice_point<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> LatticePoint {
    LatticePoint::new(rng.gen_range(lo..=hi), rng.gen_range(lo..=hi))
}

/// A PL path from `start` to `end` through up to `max_detour` random lattice
/// vertices in `[lo, hi]^2`.
pub fn detour<R: Rng>(
    rng: &mut R,
    start: LatticePoint,
    end: LatticePoint,
    max_detour: usize,
    lo: i64,
    hi: i64,
) -> PLPath {
    let k = rng.gen_range(0..=max_detour);
    let mut pts = Vec::with_capacity(k + 2);
    pts.push(start);
    pts.extend((0..k).map(|_| lattice_point(rng, lo, hi)));
    pts.push(end);
    PLPath::from_lattice(&pts).expect("lattice end points")
}

/// A pair of straight classes in `[lo, hi]^2` with nonzero determinant.
pub fn independent_pair<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> (LatticePoint, LatticePoint) {
    loop {
        let u = lattice_point(rng, lo, hi);
        let w = lattice_point(rng, lo, hi);
        if u.cross(w) != 0 {
            return (u, w);
        }
    }
}

/// A random simple lattice polygon: a triangle, a parallelogram, or an
/// axis-aligned staircase.
pub fn simple_polygon<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Polygon {
    loop {
        let candidate = match rng.gen_range(0..3) {
            0 => vec![
                lattice_point(rng, lo, hi),
                lattice_point(rng, lo, hi),
                lattice_point(rng, lo, hi),
            ],
            1 => {
                let o = lattice_point(rng, lo, hi);
                let (u, w) = independent_pair(rng, -3, 3);
                vec![o, o + u, o + u + w, o + w]
            }
            _ => {
                // A monotone staircase under a random step function.
                let x0 = rng.gen_range(lo..hi);
                let steps = rng.gen_range(1..=4);
                let mut v = vec![LatticePoint::new(x0, 0)];
                let mut x = x0;
                let mut tops = vec![];
                for _ in 0..steps {
                    let h = rng.gen_range(1..=4);
                    let w = rng.gen_range(1..=3);
                    tops.push((x, x + w, h));
                    x += w;
                }
                v.push(LatticePoint::new(x, 0));
                for &(a, b, h) in tops.iter().rev() {
                    v.push(LatticePoint::new(b, h));
                    v.push(LatticePoint::new(a, h));
                }
                // Drop collinear repeats where neighbouring heights agree.
                let mut cleaned: Vec<LatticePoint> = vec![];
                for p in v {
                    if cleaned.last() != Some(&p) {
                        cleaned.push(p);
                    }
                }
                cleaned
            }
        };
        if let Ok(p) = Polygon::new(candidate) {
            return p;
        }
    }
}
