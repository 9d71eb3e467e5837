use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{GoldmanError, Result};
use crate::geometry::{segment_intersection, LatticePoint, PLPath, PathPos, RatPoint, Segment};
use crate::rat::{sign, Rat};

/// A transversal crossing of two loops on the torus, seen in the plane as
/// `p1(param1) = p2(param2) + translate`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Intersection {
    /// Location on the lift of the first path.
    #[serde(serialize_with = "crate::serialize_display")]
    pub point: RatPoint,
    /// Position on the first path; never its end point.
    #[serde(serialize_with = "crate::serialize_display")]
    pub param1: PathPos,
    /// Position on the second path; never its end point.
    #[serde(serialize_with = "crate::serialize_display")]
    pub param2: PathPos,
    /// The integer shift that moves the second path onto the crossing.
    pub translate: LatticePoint,
    /// Local intersection number, +1 when the second path crosses the first
    /// from right to left.
    pub sign: i32,
}

impl fmt::Display for Intersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "point={} s={} t={} translate={} sign={:+}",
            self.point, self.param1, self.param2, self.translate, self.sign
        )
    }
}

/// Incoming and outgoing directions of a loop at a position. At the start of
/// the path the incoming direction wraps around to the last segment, since
/// the path closes up on the torus.
fn local_directions(p: &PLPath, pos: PathPos) -> (RatPoint, RatPoint) {
    let out = p.segment(pos.segment).direction();
    if !pos.frac.is_zero() {
        return (out, out);
    }
    let prev = if pos.segment == 0 {
        p.segment_count() - 1
    } else {
        pos.segment - 1
    };
    (p.segment(prev).direction(), out)
}

/// Half-plane index for sorting directions by angle measured anticlockwise
/// from `base`.
fn angle_key(base: RatPoint, d: RatPoint) -> u8 {
    let c = base.cross(d);
    if c > Rat::zero() || (c.is_zero() && base.dot(d) > Rat::zero()) {
        0
    } else {
        1
    }
}

/// Whether rotating `a` anticlockwise reaches `b` strictly before `c`
/// (angles measured from `a`).
fn ccw_before(a: RatPoint, b: RatPoint, c: RatPoint) -> bool {
    let (kb, kc) = (angle_key(a, b), angle_key(a, c));
    if kb != kc {
        return kb < kc;
    }
    b.cross(c) > Rat::zero()
}

fn same_ray(a: RatPoint, b: RatPoint) -> bool {
    a.cross(b).is_zero() && a.dot(b) > Rat::zero()
}

/// Sign of the crossing of two local branches through a common point, or
/// `None` if the branches touch or share a direction.
fn corner_sign(in1: RatPoint, out1: RatPoint, in2: RatPoint, out2: RatPoint) -> Option<i32> {
    let (back1, fwd1) = (-in1, out1);
    let (back2, fwd2) = (-in2, out2);
    for r2 in [back2, fwd2] {
        if same_ray(r2, back1) || same_ray(r2, fwd1) {
            return None;
        }
    }
    // Left side of the first branch: anticlockwise from fwd1 to back1.
    let left = |d: RatPoint| ccw_before(fwd1, d, back1);
    match (left(back2), left(fwd2)) {
        (false, true) => Some(1),
        (true, false) => Some(-1),
        _ => None,
    }
}

fn integer_range(lo: Rat, hi: Rat) -> std::ops::RangeInclusive<i64> {
    (lo.floor().to_integer() as i64)..=(hi.ceil().to_integer() as i64)
}

fn translate_range(a: &Segment, b: &Segment) -> (std::ops::RangeInclusive<i64>, std::ops::RangeInclusive<i64>) {
    let min = |u: Rat, v: Rat| if u < v { u } else { v };
    let max = |u: Rat, v: Rat| if u > v { u } else { v };
    let (ax0, ax1) = (min(a.start.x, a.end.x), max(a.start.x, a.end.x));
    let (ay0, ay1) = (min(a.start.y, a.end.y), max(a.start.y, a.end.y));
    let (bx0, bx1) = (min(b.start.x, b.end.x), max(b.start.x, b.end.x));
    let (by0, by1) = (min(b.start.y, b.end.y), max(b.start.y, b.end.y));
    (
        integer_range(ax0 - bx1, ax1 - bx0),
        integer_range(ay0 - by1, ay1 - by0),
    )
}

/// Enumerates the transversal crossings of two loops on the torus by
/// intersecting every segment of `p1` with every integer translate of every
/// segment of `p2`.
///
/// Parameters on both paths are taken in `[0, 1)`, so a crossing at the
/// shared basepoint is counted once, and each of the `c` passes of a
/// reducible path through a point is a separate crossing. Two parallel
/// straight loops have no transversal crossings.
pub fn torus_intersections(p1: &PLPath, p2: &PLPath) -> Result<Vec<Intersection>> {
    if p1.segment_count() == 0 || p2.segment_count() == 0 {
        return Ok(vec![]);
    }
    if p1.is_straight() && p2.is_straight() && p1.displacement().cross(p2.displacement()) == 0 {
        return Ok(vec![]);
    }
    let mut found = vec![];
    for i in 0..p1.segment_count() {
        let s1 = p1.segment(i);
        for j in 0..p2.segment_count() {
            let s2 = p2.segment(j);
            let (xs, ys) = translate_range(&s1, &s2);
            for vx in xs {
                for vy in ys.clone() {
                    let v = LatticePoint::new(vx, vy);
                    let vr = v.to_rat();
                    let shifted = Segment {
                        start: s2.start + vr,
                        end: s2.end + vr,
                    };
                    let non_transversal = GoldmanError::NonTransversal {
                        seg1: i,
                        seg2: j,
                        translate: v,
                    };
                    let c = match segment_intersection(&s1, &shifted) {
                        Ok(Some(c)) => c,
                        Ok(None) => continue,
                        Err(_) => return Err(non_transversal),
                    };
                    if c.t_a.is_one() || c.t_b.is_one() {
                        continue;
                    }
                    let param1 = PathPos::new(i, c.t_a);
                    let param2 = PathPos::new(j, c.t_b);
                    let (in1, out1) = local_directions(p1, param1);
                    let (in2, out2) = local_directions(p2, param2);
                    let sign = if c.t_a.is_zero() || c.t_b.is_zero() {
                        corner_sign(in1, out1, in2, out2)
                    } else {
                        Some(sign(&out1.cross(out2)))
                    };
                    let Some(sign) = sign.filter(|s| *s != 0) else {
                        return Err(non_transversal);
                    };
                    found.push(Intersection {
                        point: c.point,
                        param1,
                        param2,
                        translate: v,
                        sign,
                    });
                }
            }
        }
    }
    found.sort_by(|a, b| {
        (a.param1, a.param2, a.translate).cmp(&(b.param1, b.param2, b.translate))
    });
    Ok(found)
}
