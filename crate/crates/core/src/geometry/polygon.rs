use serde::Serialize;

use super::{segment_intersection, LatticePoint, Segment};
use crate::error::{GoldmanError, Result};
use crate::rat::{frac, rat, Rat};

/// A simple polygon with lattice vertices, listed without repeating the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<LatticePoint>,
}

/// Lattice points of a polygon, split into strict interior and boundary.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LatticePointSet {
    pub interior: Vec<LatticePoint>,
    pub boundary: Vec<LatticePoint>,
}

impl Polygon {
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(GoldmanError::NonSimplePolygon("fewer than 3 vertices".into()));
        }
        let poly = Polygon { vertices };
        if poly.twice_signed_area() == 0 {
            return Err(GoldmanError::NonSimplePolygon("zero area".into()));
        }
        let edges: Vec<Segment> = (0..n)
            .map(|i| poly.edge(i))
            .collect::<Result<_>>()?;
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // Consecutive edges may only share their common vertex.
                    let (a, b) = if j == i + 1 { (i, j) } else { (j, i) };
                    let da = edges[a].direction();
                    let db = edges[b].direction();
                    if da.cross(db) == rat(0) && da.dot(db) < rat(0) {
                        return Err(GoldmanError::NonSimplePolygon(format!(
                            "edges {a} and {b} fold back"
                        )));
                    }
                    continue;
                }
                match segment_intersection(&edges[i], &edges[j]) {
                    Ok(None) => {}
                    _ => {
                        return Err(GoldmanError::NonSimplePolygon(format!(
                            "edges {i} and {j} meet"
                        )))
                    }
                }
            }
        }
        Ok(poly)
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    fn edge(&self, i: usize) -> Result<Segment> {
        let a = self.vertices[i];
        let b = self.vertices[(i + 1) % self.vertices.len()];
        Segment::new(a.to_rat(), b.to_rat())
            .map_err(|_| GoldmanError::NonSimplePolygon(format!("repeated vertex {a}")))
    }

    fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    fn twice_signed_area(&self) -> i64 {
        self.edges().map(|(a, b)| a.cross(b)).sum()
    }

    /// Shoelace area, positive for anticlockwise vertex order.
    pub fn signed_area(&self) -> Rat {
        frac(self.twice_signed_area(), 2)
    }

    fn on_boundary(&self, p: LatticePoint) -> bool {
        self.edges().any(|(a, b)| {
            (b - a).cross(p - a) == 0
                && p.x >= a.x.min(b.x)
                && p.x <= a.x.max(b.x)
                && p.y >= a.y.min(b.y)
                && p.y <= a.y.max(b.y)
        })
    }

    /// Winding number of the boundary around a point not on it.
    fn winding_number(&self, p: LatticePoint) -> i64 {
        let mut w = 0;
        for (a, b) in self.edges() {
            let side = (b - a).cross(p - a);
            if a.y <= p.y {
                if b.y > p.y && side > 0 {
                    w += 1;
                }
            } else if b.y <= p.y && side < 0 {
                w -= 1;
            }
        }
        w
    }

    /// Enumerates every lattice point in the closed polygon by scanning its
    /// bounding box.
    pub fn lattice_points(&self) -> LatticePointSet {
        let xs = self.vertices.iter().map(|v| v.x);
        let ys = self.vertices.iter().map(|v| v.y);
        let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
        let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
        let mut out = LatticePointSet::default();
        for y in y0..=y1 {
            for x in x0..=x1 {
                let p = LatticePoint::new(x, y);
                if self.on_boundary(p) {
                    out.boundary.push(p);
                } else if self.winding_number(p) != 0 {
                    out.interior.push(p);
                }
            }
        }
        out
    }

    /// Area from the lattice point count: `I + B/2 - 1`.
    pub fn pick_area(&self) -> Rat {
        let pts = self.lattice_points();
        rat(pts.interior.len() as i64) + frac(pts.boundary.len() as i64, 2) - rat(1)
    }
}
