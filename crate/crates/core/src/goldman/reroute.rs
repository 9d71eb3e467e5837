use std::fmt;

use serde::Serialize;

use super::Intersection;
use crate::error::{GoldmanError, Result};
use crate::geometry::{LatticePoint, PLPath, RatPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Orientation {
    /// Follow the second loop forwards.
    Positive,
    /// Follow the second loop backwards.
    Negative,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Positive => "+",
            Orientation::Negative => "-",
        })
    }
}

/// A rerouted loop lifted to the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rerouting {
    pub path: PLPath,
    pub orientation: Orientation,
    /// Where the detour along the second loop passes an integer point: the
    /// end point `beta` of the shifted copy for `+`, its start `alpha` for `-`.
    pub through_point: LatticePoint,
}

fn shifted(points: Vec<RatPoint>, v: LatticePoint) -> impl Iterator<Item = RatPoint> {
    let v = v.to_rat();
    points.into_iter().map(move |p| p + v)
}

/// Builds `p1 S p2` (or `p1 S p2^-1`): follow `p1` to the crossing, go once
/// around the shifted copy of `p2` starting at the crossing, then finish the
/// shifted remainder of `p1`.
///
/// For `+` the result runs from the start of `p1` to `end(p1) + disp(p2)`
/// and passes through `beta = end(p2) + translate`; for `-` it ends at
/// `end(p1) - disp(p2)` and passes through `alpha = start(p2) + translate`.
pub fn reroute(
    p1: &PLPath,
    s: &Intersection,
    p2: &PLPath,
    orientation: Orientation,
) -> Result<Rerouting> {
    let valid_pos = |p: &PLPath, pos: crate::geometry::PathPos| {
        pos.segment < p.segment_count()
            && pos.frac >= num_traits::Zero::zero()
            && pos.frac < num_traits::One::one()
    };
    if !valid_pos(p1, s.param1)
        || !valid_pos(p2, s.param2)
        || p1.point_at(s.param1) != s.point
        || p2.point_at(s.param2) + s.translate.to_rat() != s.point
    {
        return Err(GoldmanError::InconsistentIntersection(s.to_string()));
    }
    let v = s.translate;
    let d2 = p2.displacement();
    let mut vertices = p1.sub_path(crate::geometry::PathPos::start(), s.param1);
    let through_point = match orientation {
        Orientation::Positive => {
            vertices.extend(shifted(p2.sub_path(s.param2, p2.end_pos()), v));
            vertices.extend(shifted(
                p2.sub_path(crate::geometry::PathPos::start(), s.param2),
                v + d2,
            ));
            vertices.extend(shifted(p1.sub_path(s.param1, p1.end_pos()), d2));
            p2.endpoint() + v
        }
        Orientation::Negative => {
            let mut back = p2.sub_path(crate::geometry::PathPos::start(), s.param2);
            back.reverse();
            vertices.extend(shifted(back, v));
            let mut back = p2.sub_path(s.param2, p2.end_pos());
            back.reverse();
            vertices.extend(shifted(back, v - d2));
            vertices.extend(shifted(p1.sub_path(s.param1, p1.end_pos()), -d2));
            p2.start_point() + v
        }
    };
    Ok(Rerouting {
        path: PLPath::new(vertices)?,
        orientation,
        through_point,
    })
}
