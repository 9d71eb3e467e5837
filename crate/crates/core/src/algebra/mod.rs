//! The symbolic q-phase algebra.
//!
//! Coefficients are Laurent polynomials in `q` with rational exponents
//! ([`QPhasePoly`]). Holonomies live in the quantum plane spanned by the
//! normal-ordered monomials `q^e E(a,b)` ([`QuantumPlaneElement`]), and
//! Wilson loops are collected into [`BracketExpression`]s over trace symbols.

mod plane;
mod qpoly;
mod wilson;

pub use plane::{holonomy, qp_mul, PlaneSum, QuantumPlaneElement};
pub use qpoly::QPhasePoly;
pub use wilson::{wilson_normal_form, BracketExpression, WilsonSymbol};
