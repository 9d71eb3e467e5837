use num_traits::Zero;

use super::PLPath;
use crate::calibration::AREA_ORIENTATION;
use crate::error::{GoldmanError, Result};
use crate::rat::{frac, rat, Rat};

/// Winding-weighted area of a closed path: half the sum of cross products of
/// consecutive vertices. Anticlockwise simple loops are positive.
pub fn shoelace_area(closed: &PLPath) -> Result<Rat> {
    if !closed.is_closed() {
        return Err(GoldmanError::NotClosed);
    }
    let twice: Rat = closed
        .vertices()
        .windows(2)
        .map(|w| w[0].cross(w[1]))
        .fold(Rat::zero(), |acc, c| acc + c);
    Ok(twice * frac(1, 2))
}

/// The signed area enclosed between two paths with common end points: the
/// shoelace area of `p1` followed by `p2` reversed, times the orientation
/// constant.
pub fn signed_area_between(p1: &PLPath, p2: &PLPath) -> Result<Rat> {
    if p1.start() != p2.start() || p1.end() != p2.end() {
        return Err(GoldmanError::EndpointMismatch(format!(
            "{} -> {} versus {} -> {}",
            p1.start(),
            p1.end(),
            p2.start(),
            p2.end()
        )));
    }
    let twice: Rat = p1
        .vertices()
        .iter()
        .chain(p2.vertices().iter().rev().skip(1))
        .collect::<Vec<_>>()
        .windows(2)
        .map(|w| w[0].cross(*w[1]))
        .fold(Rat::zero(), |acc, c| acc + c);
    Ok(twice * frac(1, 2) * rat(AREA_ORIENTATION))
}
