//! Exact rational planar geometry for lattice paths.

mod area;
mod path;
mod polygon;

pub use area::{shoelace_area, signed_area_between};
pub use path::{PLPath, PathPos};
pub use polygon::{LatticePointSet, Polygon};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{GoldmanError, Result};
use crate::rat::{is_integer, rat, Rat};

/// An integer point of the covering plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// `self.x * other.y - self.y * other.x`
    pub fn cross(self, other: LatticePoint) -> i64 {
        self.x * other.y - self.y * other.x
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// The largest `c` with `self = c * v` for an integer vector `v`; 0 for the origin.
    pub fn content(self) -> i64 {
        crate::rat::gcd(self.x, self.y)
    }

    pub fn to_rat(self) -> RatPoint {
        RatPoint::new(rat(self.x), rat(self.y))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.x, -self.y)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint::new(x, y)
    }
}

/// A point with exact rational coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoint {
    pub x: Rat,
    pub y: Rat,
}

impl RatPoint {
    pub const fn new(x: Rat, y: Rat) -> Self {
        RatPoint { x, y }
    }

    pub fn cross(self, o: RatPoint) -> Rat {
        self.x * o.y - self.y * o.x
    }

    pub fn dot(self, o: RatPoint) -> Rat {
        self.x * o.x + self.y * o.y
    }

    pub fn is_zero(self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Returns the lattice point if both coordinates are integers.
    pub fn to_lattice(self) -> Option<LatticePoint> {
        if is_integer(&self.x) && is_integer(&self.y) {
            Some(LatticePoint::new(
                *self.x.numer() as i64,
                *self.y.numer() as i64,
            ))
        } else {
            None
        }
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<LatticePoint> for RatPoint {
    fn from(p: LatticePoint) -> Self {
        p.to_rat()
    }
}

impl Add for RatPoint {
    type Output = RatPoint;
    fn add(self, o: RatPoint) -> RatPoint {
        RatPoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for RatPoint {
    type Output = RatPoint;
    fn sub(self, o: RatPoint) -> RatPoint {
        RatPoint::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for RatPoint {
    type Output = RatPoint;
    fn neg(self) -> RatPoint {
        RatPoint::new(-self.x, -self.y)
    }
}

impl Mul<Rat> for RatPoint {
    type Output = RatPoint;
    fn mul(self, k: Rat) -> RatPoint {
        RatPoint::new(self.x * k, self.y * k)
    }
}

/// A closed straight segment of nonzero length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub start: RatPoint,
    pub end: RatPoint,
}

impl Segment {
    pub fn new(start: RatPoint, end: RatPoint) -> Result<Self> {
        if start == end {
            return Err(GoldmanError::InvalidPath("zero-length segment".into()));
        }
        Ok(Segment { start, end })
    }

    pub fn direction(&self) -> RatPoint {
        self.end - self.start
    }

    pub fn point_at(&self, t: Rat) -> RatPoint {
        self.start + self.direction() * t
    }

    /// Whether `p` lies on the closed segment.
    pub fn contains(&self, p: RatPoint) -> bool {
        let d = self.direction();
        let w = p - self.start;
        if !d.cross(w).is_zero() {
            return false;
        }
        let t = w.dot(d);
        !t.is_negative() && t <= d.dot(d)
    }
}

/// Where two segments meet, with the parameter along each one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SegmentCrossing {
    pub point: RatPoint,
    /// Position along the first segment, in `[0, 1]`.
    pub t_a: Rat,
    /// Position along the second segment, in `[0, 1]`.
    pub t_b: Rat,
    /// The directions have nonzero cross product.
    pub transversal: bool,
}

/// Intersects two closed segments exactly.
///
/// Returns `Ok(None)` when they are disjoint, and an error when they are
/// collinear and share more than one point.
pub fn segment_intersection(a: &Segment, b: &Segment) -> Result<Option<SegmentCrossing>> {
    let da = a.direction();
    let db = b.direction();
    let w = b.start - a.start;
    let denom = da.cross(db);
    let zero = Rat::zero();
    let one = rat(1);
    if !denom.is_zero() {
        let t_a = w.cross(db) / denom;
        let t_b = w.cross(da) / denom;
        if t_a < zero || t_a > one || t_b < zero || t_b > one {
            return Ok(None);
        }
        return Ok(Some(SegmentCrossing {
            point: a.point_at(t_a),
            t_a,
            t_b,
            transversal: true,
        }));
    }
    if !w.cross(da).is_zero() {
        // parallel, on distinct lines
        return Ok(None);
    }
    // Collinear: project b's endpoints onto a's parameter line.
    let len2 = da.dot(da);
    let s0 = w.dot(da) / len2;
    let s1 = (b.end - a.start).dot(da) / len2;
    let (lo, hi) = if s0 <= s1 { (s0, s1) } else { (s1, s0) };
    let lo = if lo > zero { lo } else { zero };
    let hi = if hi < one { hi } else { one };
    if lo > hi {
        return Ok(None);
    }
    if lo < hi {
        return Err(GoldmanError::NonTransversalOverlap);
    }
    let point = a.point_at(lo);
    let t_b = (point - b.start).dot(db) / db.dot(db);
    Ok(Some(SegmentCrossing {
        point,
        t_a: lo,
        t_b,
        transversal: false,
    }))
}
