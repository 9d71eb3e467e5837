use serde::Serialize;

use super::{reroute, torus_intersections, Intersection, Orientation, Rerouting};
use crate::algebra::{wilson_normal_form, BracketExpression, PlaneSum, QPhasePoly, WilsonSymbol};
use crate::error::Result;
use crate::geometry::{LatticePoint, PLPath};
use crate::rat::{frac, rat, Rat};

/// One rerouted loop reduced to `q^phase T(symbol)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReroutedTerm {
    pub rerouting: Rerouting,
    pub phase: Rat,
    pub symbol: WilsonSymbol,
}

impl ReroutedTerm {
    fn new(rerouting: Rerouting) -> Self {
        let (phase, symbol) = wilson_normal_form(&rerouting.path);
        ReroutedTerm {
            rerouting,
            phase,
            symbol,
        }
    }
}

/// The two reroutings at a single crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedTerm {
    pub intersection: Intersection,
    pub positive: ReroutedTerm,
    pub negative: ReroutedTerm,
}

impl RefinedTerm {
    /// `(q^eps - 1) q^e+ T+ + (q^-eps - 1) q^e- T-`
    pub fn contribution(&self) -> BracketExpression {
        let eps = rat(self.intersection.sign as i64);
        let mut out = BracketExpression::term(
            self.positive.symbol,
            QPhasePoly::q_diff(eps, Rat::default()).shift(self.positive.phase),
        );
        out.add_term(
            self.negative.symbol,
            &QPhasePoly::q_diff(-eps, Rat::default()).shift(self.negative.phase),
        );
        out
    }
}

fn rerouted_terms(p1: &PLPath, p2: &PLPath) -> Result<Vec<RefinedTerm>> {
    torus_intersections(p1, p2)?
        .into_iter()
        .map(|x| {
            let positive = ReroutedTerm::new(reroute(p1, &x, p2, Orientation::Positive)?);
            let negative = ReroutedTerm::new(reroute(p1, &x, p2, Orientation::Negative)?);
            Ok(RefinedTerm {
                intersection: x,
                positive,
                negative,
            })
        })
        .collect()
}

/// Classical Goldman bracket: the sum over crossings of
/// `eps (T(p1 S p2) - T(p1 S p2^-1))`, with all phases dropped.
pub fn classical_bracket(p1: &PLPath, p2: &PLPath) -> Result<BracketExpression> {
    let mut out = BracketExpression::zero();
    for t in rerouted_terms(p1, p2)? {
        let eps = QPhasePoly::monomial(Rat::default(), t.intersection.sign as i64);
        out.add_term(t.positive.symbol, &eps);
        out.add_term(t.negative.symbol, &-&eps);
    }
    Ok(out)
}

/// `(q^(d/2) - q^(-d/2)) (T(m+s, n+t) - T(m-s, n-t))` with `d = mt - ns`.
pub fn quantum_bracket_straightforward(m: i64, n: i64, s: i64, t: i64) -> BracketExpression {
    let det = m * t - n * s;
    let coeff = QPhasePoly::q_diff(frac(det, 2), frac(-det, 2));
    let mut out = BracketExpression::term(WilsonSymbol::new(m + s, n + t), coeff.clone());
    out.add_term(WilsonSymbol::new(m - s, n - t), &-&coeff);
    out
}

/// Refined quantum bracket: every crossing contributes its two reroutings,
/// each weighted by a quantum intersection number and its own area phase.
pub fn quantum_bracket_refined(p1: &PLPath, p2: &PLPath) -> Result<BracketExpression> {
    Ok(refined_report(p1, p2)?.expression)
}

/// The commutator `[T(m,n), T(s,t)]` computed in the quantum plane with
/// `T(a,b) = E(a,b) + E(-a,-b)`.
pub fn direct_commutator(m: i64, n: i64, s: i64, t: i64) -> Result<BracketExpression> {
    PlaneSum::trace(m, n)
        .commutator(&PlaneSum::trace(s, t))
        .to_traces()
}

/// Extends the straightforward bracket `[T(a), -]` linearly over an
/// expression.
pub fn bracket_with_expression(a: LatticePoint, expr: &BracketExpression) -> BracketExpression {
    let mut out = BracketExpression::zero();
    for (sym, coeff) in expr.terms() {
        let b = sym.class();
        out = out.add(&quantum_bracket_straightforward(a.x, a.y, b.x, b.y).scale(coeff));
    }
    out
}

/// The refined bracket with its per-crossing breakdown.
///
/// When either path is not straight the result is exploratory: it is
/// compared against the straightforward bracket of the end point classes and
/// any difference is kept in `discrepancy`.
#[derive(Clone, Debug)]
pub struct RefinedReport {
    pub terms: Vec<RefinedTerm>,
    pub expression: BracketExpression,
    pub experimental: bool,
    /// Straightforward bracket of the two displacement classes.
    pub reference: BracketExpression,
    /// `expression - reference`, when nonzero.
    pub discrepancy: Option<BracketExpression>,
}

#[derive(Serialize)]
struct TermRow {
    point: String,
    sign: i32,
    positive_path: String,
    positive_phase: String,
    positive_symbol: String,
    negative_path: String,
    negative_phase: String,
    negative_symbol: String,
}

#[derive(Serialize)]
struct ReportJson {
    expression: String,
    experimental: bool,
    reference: String,
    discrepancy: Option<String>,
    terms: Vec<TermRow>,
}

impl Serialize for RefinedReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ReportJson {
            expression: self.expression.to_string(),
            experimental: self.experimental,
            reference: self.reference.to_string(),
            discrepancy: self.discrepancy.as_ref().map(|d| d.to_string()),
            terms: self
                .terms
                .iter()
                .map(|t| TermRow {
                    point: t.intersection.point.to_string(),
                    sign: t.intersection.sign,
                    positive_path: t.positive.rerouting.path.to_string(),
                    positive_phase: t.positive.phase.to_string(),
                    positive_symbol: t.positive.symbol.to_string(),
                    negative_path: t.negative.rerouting.path.to_string(),
                    negative_phase: t.negative.phase.to_string(),
                    negative_symbol: t.negative.symbol.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

pub fn refined_report(p1: &PLPath, p2: &PLPath) -> Result<RefinedReport> {
    let terms = rerouted_terms(p1, p2)?;
    let expression = terms
        .iter()
        .fold(BracketExpression::zero(), |acc, t| acc.add(&t.contribution()));
    let (u, w) = (p1.displacement(), p2.displacement());
    let reference = quantum_bracket_straightforward(u.x, u.y, w.x, w.y);
    let diff = expression.sub(&reference);
    Ok(RefinedReport {
        experimental: !(p1.is_straight() && p2.is_straight()),
        discrepancy: (!diff.is_zero()).then_some(diff),
        terms,
        expression,
        reference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn straight(m: i64, n: i64) -> PLPath {
        PLPath::straight(m, n)
    }

    fn q(n: i64, d: i64) -> QPhasePoly {
        QPhasePoly::q_pow(frac(n, d))
    }

    #[test]
    fn straightforward_examples() {
        let e = quantum_bracket_straightforward(1, 2, 2, 1);
        let c = &q(-3, 2) - &q(3, 2);
        assert_eq!(e.coefficient(WilsonSymbol::new(3, 3)), c);
        assert_eq!(e.coefficient(WilsonSymbol::new(-1, 1)), -&c);
        assert!(quantum_bracket_straightforward(1, 0, 1, 0).is_zero());
        let e = quantum_bracket_straightforward(1, 0, 0, 1);
        assert_eq!(e.coefficient(WilsonSymbol::new(1, 1)), &q(1, 2) - &q(-1, 2));
        assert_eq!(e.coefficient(WilsonSymbol::new(1, -1)), &q(-1, 2) - &q(1, 2));
    }

    #[test]
    fn classical_examples() {
        let e = classical_bracket(&straight(1, 2), &straight(2, 1)).unwrap();
        assert_eq!(e.to_string(), "(3)*T(1,-1) + (-3)*T(3,3)");
        assert!(classical_bracket(&straight(1, 0), &straight(2, 0)).unwrap().is_zero());
        let e = classical_bracket(&straight(1, 0), &straight(0, 1)).unwrap();
        assert_eq!(e.to_string(), "(-1)*T(1,-1) + (1)*T(1,1)");
    }

    #[test]
    fn refined_worked_example() {
        let r = refined_report(&straight(1, 2), &straight(2, 1)).unwrap();
        let mut plus: Vec<Rat> = r.terms.iter().map(|t| t.positive.phase).collect();
        let mut minus: Vec<Rat> = r.terms.iter().map(|t| t.negative.phase).collect();
        plus.sort();
        minus.sort();
        assert_eq!(plus, vec![frac(-1, 2), frac(1, 2), frac(3, 2)]);
        assert_eq!(minus, vec![frac(-3, 2), frac(-1, 2), frac(1, 2)]);
        assert_eq!(r.expression, quantum_bracket_straightforward(1, 2, 2, 1));
        assert!(!r.experimental);
        assert!(r.discrepancy.is_none());
    }

    #[test]
    fn refined_trivial_cases() {
        assert!(quantum_bracket_refined(&straight(1, 0), &straight(1, 0)).unwrap().is_zero());
        assert_eq!(
            quantum_bracket_refined(&straight(1, 0), &straight(0, 1)).unwrap(),
            quantum_bracket_straightforward(1, 0, 0, 1)
        );
    }

    #[test]
    fn direct_commutator_examples() {
        assert_eq!(
            direct_commutator(1, 2, 2, 1).unwrap(),
            quantum_bracket_straightforward(1, 2, 2, 1)
        );
        assert!(direct_commutator(2, -1, 2, -1).unwrap().is_zero());
        // Four-term expansion by hand, sigma = +1:
        // E(1,0)E(0,1) = q^1/2 E(1,1), E(0,1)E(1,0) = q^-1/2 E(1,1), etc.
        let e = direct_commutator(1, 0, 0, 1).unwrap();
        assert_eq!(e.coefficient(WilsonSymbol::new(1, 1)), &q(1, 2) - &q(-1, 2));
        assert_eq!(e.coefficient(WilsonSymbol::new(1, -1)), &q(-1, 2) - &q(1, 2));
    }

    #[test]
    fn non_straight_second_path_is_flagged() {
        let p2 = PLPath::from_lattice(&[(0, 0), (1, 0), (1, 1)]).unwrap();
        let r = refined_report(&straight(1, -1), &p2).unwrap();
        assert!(r.experimental);
        assert_eq!(r.terms.len(), 2);
    }
}
