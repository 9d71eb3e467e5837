use serde::Serialize;

use crate::error::{GoldmanError, Result};
use crate::geometry::{LatticePoint, PLPath, Polygon};
use crate::rat::{frac, Rat};

/// Admissible lattice points of one of the two parallelograms spanned by a
/// pair of straight loops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParallelogramReport {
    pub vertices: [LatticePoint; 4],
    /// Admissible points, sorted.
    pub included_points: Vec<LatticePoint>,
    /// The two edges whose lattice points are left out, as vertex pairs.
    pub excluded_edges: [(LatticePoint, LatticePoint); 2],
    /// `I + B/2 - 1` for the closed parallelogram.
    #[serde(serialize_with = "crate::serialize_display")]
    pub pick_area: Rat,
}

/// Start points `alpha` (pre-parallelogram) and end points `beta`
/// (parallelogram) of the shifted copies of `p2` that cross `p1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParallelogramPair {
    /// Vertices `0, p1, p1 + p2, p2`; admissible `beta`.
    pub parallelogram: ParallelogramReport,
    /// Vertices `-p2, p1 - p2, p1, 0`; admissible `alpha`.
    pub pre_parallelogram: ParallelogramReport,
}

fn straight_displacement(p: &PLPath) -> Result<LatticePoint> {
    if !p.is_straight() {
        return Err(GoldmanError::NotStraight(p.to_string()));
    }
    Ok(p.displacement())
}

/// Coordinates of `x` in the basis `(u, w)`.
fn basis_coords(u: LatticePoint, w: LatticePoint, x: LatticePoint) -> (Rat, Rat) {
    let det = u.cross(w);
    (frac(x.cross(w), det), frac(u.cross(x), det))
}

fn report(
    vertices: [LatticePoint; 4],
    excluded_edges: [(LatticePoint, LatticePoint); 2],
    admissible: impl Fn(LatticePoint) -> bool,
) -> Result<ParallelogramReport> {
    let poly = Polygon::new(vertices.to_vec())?;
    let pts = poly.lattice_points();
    let mut included: Vec<LatticePoint> = pts
        .interior
        .iter()
        .chain(pts.boundary.iter())
        .copied()
        .filter(|&x| admissible(x))
        .collect();
    included.sort();
    Ok(ParallelogramReport {
        vertices,
        included_points: included,
        excluded_edges,
        pick_area: poly.pick_area(),
    })
}

/// Lists the admissible `alpha` and `beta` points for two straight loops.
///
/// With `x = a p1 + b p2`, the admissible end points are `0 <= a < 1`,
/// `0 < b <= 1` (the edges `p1 -> p1 + p2` and `0 -> p1` are excluded), and
/// the admissible start points are `0 <= a < 1`, `-1 < b <= 0`. The map
/// `beta = alpha + p2` is a bijection between them.
pub fn pre_parallelogram_points(p1: &PLPath, p2: &PLPath) -> Result<ParallelogramPair> {
    let u = straight_displacement(p1)?;
    let w = straight_displacement(p2)?;
    if u.cross(w) == 0 {
        return Err(GoldmanError::DegenerateParallelogram);
    }
    let o = LatticePoint::ORIGIN;
    let zero = Rat::from_integer(0);
    let one = Rat::from_integer(1);
    let parallelogram = report([o, u, u + w, w], [(u, u + w), (o, u)], |x| {
        let (a, b) = basis_coords(u, w, x);
        a >= zero && a < one && b > zero && b <= one
    })?;
    let pre_parallelogram = report([-w, u - w, u, o], [(u - w, u), (-w, u - w)], |x| {
        let (a, b) = basis_coords(u, w, x);
        a >= zero && a < one && b > -one && b <= zero
    })?;
    Ok(ParallelogramPair {
        parallelogram,
        pre_parallelogram,
    })
}
