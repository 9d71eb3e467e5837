use thiserror::Error;

use crate::geometry::LatticePoint;

pub type Result<T> = std::result::Result<T, GoldmanError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoldmanError {
    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a closed loop")]
    NotClosed,

    #[error("paths do not share endpoints: {0}")]
    EndpointMismatch(String),

    #[error("cannot concatenate: first path ends at {end}, second starts at {start}")]
    ConcatMismatch { end: String, start: String },

    #[error("non-transversal overlap")]
    NonTransversalOverlap,

    #[error("non-transversal configuration between segment {seg1} of the first path and segment {seg2} of the second path (translate {translate})")]
    NonTransversal {
        seg1: usize,
        seg2: usize,
        translate: LatticePoint,
    },

    #[error("polygon is not simple: {0}")]
    NonSimplePolygon(String),

    #[error("degenerate parallelogram")]
    DegenerateParallelogram,

    #[error("path is not straight: {0}")]
    NotStraight(String),

    #[error("intersection is inconsistent with the given paths: {0}")]
    InconsistentIntersection(String),

    #[error("element is not a sum of trace pairs: {0}")]
    NotTraceSymmetric(String),
}
