//! Intersection theory of lattice paths on the torus and the Goldman brackets.

mod bracket;
mod intersect;
mod parallelogram;
mod reroute;
mod sweep;

pub use bracket::{
    bracket_with_expression, classical_bracket, direct_commutator, quantum_bracket_refined,
    quantum_bracket_straightforward, refined_report, RefinedReport, RefinedTerm, ReroutedTerm,
};
pub use intersect::{torus_intersections, Intersection};
pub use parallelogram::{pre_parallelogram_points, ParallelogramPair, ParallelogramReport};
pub use reroute::{reroute, Orientation, Rerouting};
pub use sweep::{
    antisymmetry_failures, direct_commutator_mismatches, equivalence_sweep, jacobi_failures, PairComparison, Sector,
    SweepReport, SweepSummary,
};
