//! Orientation constants.
//!
//! The signed area and the central phase of the quantum plane each carry a
//! sign convention. They are tied together: the phase picked up by two
//! consecutive segments must equal the signed area of the triangle they span,
//! so fixing the area orientation by the three-crossing example for the
//! classes (1,2) and (2,1) (phases 3/2, 1/2, -1/2 relative to the straight
//! (3,3)) also fixes the phase sign.

use crate::algebra::holonomy;
use crate::geometry::{signed_area_between, PLPath};
use crate::goldman::{refined_report, quantum_bracket_straightforward};
use crate::rat::{frac, Rat};

/// Sign relating the shoelace area of `p1` followed by `p2` reversed to the
/// signed area between `p1` and `p2`.
pub const AREA_ORIENTATION: i64 = 1;

/// Sign in `E(a,b) E(c,d) = q^(sign (ad - bc)/2) E(a+c, b+d)`.
pub const PHASE_SIGN: i64 = AREA_ORIENTATION;

/// Checks both constants against the reference configurations.
pub fn self_check() -> Result<(), String> {
    let bent = PLPath::from_lattice(&[(0, 0), (1, 0), (1, 1)]).map_err(|e| e.to_string())?;
    let area = signed_area_between(&bent, &PLPath::straight(1, 1)).map_err(|e| e.to_string())?;
    let phase = holonomy(&bent).phase;
    if phase != area {
        return Err(format!("holonomy phase {phase} differs from signed area {area}"));
    }

    let report = refined_report(&PLPath::straight(1, 2), &PLPath::straight(2, 1))
        .map_err(|e| e.to_string())?;
    let mut plus: Vec<Rat> = report.terms.iter().map(|t| t.positive.phase).collect();
    plus.sort();
    let expected = vec![frac(-1, 2), frac(1, 2), frac(3, 2)];
    if plus != expected {
        return Err(format!("reference phases {plus:?}, expected {expected:?}"));
    }
    if report.expression != quantum_bracket_straightforward(1, 2, 2, 1) {
        return Err("reference refined bracket does not collapse".into());
    }
    Ok(())
}
