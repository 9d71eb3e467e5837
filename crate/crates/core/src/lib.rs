//! Exact computations for lattice paths representing loops on the torus:
//! signed areas, quantum holonomies, Wilson-loop symbols, torus
//! intersections, reroutings, and the classical and quantum Goldman brackets.
//!
//! Everything is exact rational arithmetic; there is no floating point in
//! the computations.
//!
//! ```
//! use goldman_core::geometry::PLPath;
//! use goldman_core::goldman::{quantum_bracket_refined, quantum_bracket_straightforward};
//!
//! let refined = quantum_bracket_refined(&PLPath::straight(1, 2), &PLPath::straight(2, 1)).unwrap();
//! assert_eq!(refined, quantum_bracket_straightforward(1, 2, 2, 1));
//! assert_eq!(
//!     refined.to_string(),
//!     "(-q^-3/2 + q^3/2)*T(1,-1) + (q^-3/2 - q^3/2)*T(3,3)"
//! );
//! ```

pub mod algebra;
pub mod calibration;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod goldman;
pub mod invariants;
pub mod random;
pub mod rat;

pub use error::{GoldmanError, Result};
pub use exec::Execution;

pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}
