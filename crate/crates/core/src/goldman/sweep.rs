use std::fmt::Write;

use serde::Serialize;

use super::{
    bracket_with_expression, direct_commutator, quantum_bracket_refined,
    quantum_bracket_straightforward,
};
use crate::algebra::BracketExpression;
use crate::error::Result;
use crate::exec::Execution;
use crate::geometry::{LatticePoint, PLPath};

/// How a pair of straight classes sits with respect to reducibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sector {
    /// Zero determinant: parallel classes or a trivial loop.
    Degenerate,
    /// Both classes primitive.
    Coprime,
    /// At least one class is a multiple `c >= 2` of a primitive class.
    Reducible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairComparison {
    pub p1: LatticePoint,
    pub p2: LatticePoint,
    pub determinant: i64,
    pub sector: Sector,
    pub p1_reducible: bool,
    pub p2_reducible: bool,
    pub crossings: usize,
    #[serde(serialize_with = "crate::serialize_display")]
    pub straightforward: BracketExpression,
    #[serde(serialize_with = "crate::serialize_display")]
    pub refined: BracketExpression,
    #[serde(serialize_with = "crate::serialize_display")]
    pub direct: BracketExpression,
    pub refined_matches: bool,
    pub direct_matches: bool,
    /// `refined - straightforward`.
    #[serde(serialize_with = "crate::serialize_display")]
    pub refined_diff: BracketExpression,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub pairs: usize,
    pub degenerate: usize,
    pub degenerate_mismatches: usize,
    pub coprime: usize,
    pub coprime_mismatches: usize,
    pub reducible: usize,
    pub reducible_mismatches: usize,
    /// Reducible-sector mismatches whose second class is reducible.
    pub reducible_second_mismatches: usize,
    pub direct_mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub bound: i64,
    pub summary: SweepSummary,
    pub pairs: Vec<PairComparison>,
}

fn classify(u: LatticePoint, w: LatticePoint) -> Sector {
    if u.cross(w) == 0 {
        Sector::Degenerate
    } else if u.content() == 1 && w.content() == 1 {
        Sector::Coprime
    } else {
        Sector::Reducible
    }
}

fn lattice_box(bound: i64) -> Vec<LatticePoint> {
    (-bound..=bound)
        .flat_map(|x| (-bound..=bound).map(move |y| LatticePoint::new(x, y)))
        .collect()
}

fn all_pairs(bound: i64) -> Vec<(LatticePoint, LatticePoint)> {
    let pts = lattice_box(bound);
    pts.iter()
        .flat_map(|&u| pts.iter().map(move |&w| (u, w)))
        .collect()
}

fn compare(u: LatticePoint, w: LatticePoint) -> Result<PairComparison> {
    let (p1, p2) = (PLPath::straight(u.x, u.y), PLPath::straight(w.x, w.y));
    let straightforward = quantum_bracket_straightforward(u.x, u.y, w.x, w.y);
    let refined = quantum_bracket_refined(&p1, &p2)?;
    let direct = direct_commutator(u.x, u.y, w.x, w.y)?;
    let crossings = super::torus_intersections(&p1, &p2)?.len();
    let refined_diff = refined.sub(&straightforward);
    Ok(PairComparison {
        p1: u,
        p2: w,
        determinant: u.cross(w),
        sector: classify(u, w),
        p1_reducible: u.content() > 1,
        p2_reducible: w.content() > 1,
        crossings,
        refined_matches: refined_diff.is_zero(),
        direct_matches: direct == straightforward,
        straightforward,
        refined,
        direct,
        refined_diff,
    })
}

/// Compares the refined bracket, the straightforward formula and the direct
/// commutator on every pair of straight classes in `[-bound, bound]^2`.
///
/// Mismatches are part of the report, not errors.
pub fn equivalence_sweep(bound: i64, exec: Execution) -> Result<SweepReport> {
    let pairs = all_pairs(bound);
    let results = exec.map(&pairs, |&(u, w)| compare(u, w));
    let pairs: Vec<PairComparison> = results.into_iter().collect::<Result<_>>()?;
    let mut summary = SweepSummary {
        pairs: pairs.len(),
        ..Default::default()
    };
    for p in &pairs {
        match p.sector {
            Sector::Degenerate => summary.degenerate += 1,
            Sector::Coprime => summary.coprime += 1,
            Sector::Reducible => summary.reducible += 1,
        }
        if !p.refined_matches {
            match p.sector {
                Sector::Degenerate => summary.degenerate_mismatches += 1,
                Sector::Coprime => summary.coprime_mismatches += 1,
                Sector::Reducible => {
                    summary.reducible_mismatches += 1;
                    if p.p2_reducible {
                        summary.reducible_second_mismatches += 1;
                    }
                }
            }
        }
        if !p.direct_matches {
            summary.direct_mismatches += 1;
        }
    }
    Ok(SweepReport {
        bound,
        summary,
        pairs,
    })
}

impl SweepReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &PairComparison> {
        self.pairs
            .iter()
            .filter(|p| !p.refined_matches || !p.direct_matches)
    }

    /// Line-oriented rendering: a summary, then one line per pair (all pairs
    /// or only mismatches) with the term-by-term difference for mismatches.
    pub fn render_text(&self, all: bool) -> String {
        let s = &self.summary;
        let mut out = String::new();
        let _ = writeln!(out, "equivalence sweep, bound {}", self.bound);
        let _ = writeln!(
            out,
            "pairs {} degenerate {} (mismatches {}) coprime {} (mismatches {}) reducible {} (mismatches {}, {} with reducible second class) direct-commutator mismatches {}",
            s.pairs,
            s.degenerate,
            s.degenerate_mismatches,
            s.coprime,
            s.coprime_mismatches,
            s.reducible,
            s.reducible_mismatches,
            s.reducible_second_mismatches,
            s.direct_mismatches
        );
        for p in &self.pairs {
            let bad = !p.refined_matches || !p.direct_matches;
            if !all && !bad {
                continue;
            }
            let _ = writeln!(
                out,
                "{} x {} det {} {:?} crossings {} refined {} direct {}",
                p.p1,
                p.p2,
                p.determinant,
                p.sector,
                p.crossings,
                if p.refined_matches { "match" } else { "MISMATCH" },
                if p.direct_matches { "match" } else { "MISMATCH" },
            );
            if bad {
                let _ = writeln!(out, "  straightforward: {}", p.straightforward);
                let _ = writeln!(out, "  refined:         {}", p.refined);
                let _ = writeln!(out, "  direct:          {}", p.direct);
                let _ = writeln!(out, "  refined - straightforward: {}", p.refined_diff);
            }
        }
        out
    }
}

/// Pairs in `[-bound, bound]^2` where the direct commutator disagrees with
/// the straightforward formula.
pub fn direct_commutator_mismatches(
    bound: i64,
    exec: Execution,
) -> Result<Vec<(LatticePoint, LatticePoint)>> {
    let pairs = all_pairs(bound);
    let checked = exec.map(&pairs, |&(u, w)| {
        direct_commutator(u.x, u.y, w.x, w.y)
            .map(|d| d == quantum_bracket_straightforward(u.x, u.y, w.x, w.y))
    });
    let mut bad = vec![];
    for (pair, ok) in pairs.into_iter().zip(checked) {
        if !ok? {
            bad.push(pair);
        }
    }
    Ok(bad)
}

/// Pairs where the straightforward bracket is not antisymmetric.
pub fn antisymmetry_failures(bound: i64, exec: Execution) -> Vec<(LatticePoint, LatticePoint)> {
    let pairs = all_pairs(bound);
    let ok = exec.map(&pairs, |&(u, w)| {
        quantum_bracket_straightforward(u.x, u.y, w.x, w.y)
            == quantum_bracket_straightforward(w.x, w.y, u.x, u.y).neg()
    });
    pairs
        .into_iter()
        .zip(ok)
        .filter_map(|(p, ok)| (!ok).then_some(p))
        .collect()
}

fn jacobiator(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> BracketExpression {
    let inner = |x: LatticePoint, y: LatticePoint| quantum_bracket_straightforward(x.x, x.y, y.x, y.y);
    bracket_with_expression(a, &inner(b, c))
        .add(&bracket_with_expression(b, &inner(c, a)))
        .add(&bracket_with_expression(c, &inner(a, b)))
}

/// Triples in `[-bound, bound]^2` where the cyclic sum
/// `[T(a),[T(b),T(c)]] + [T(b),[T(c),T(a)]] + [T(c),[T(a),T(b)]]` is nonzero.
pub fn jacobi_failures(bound: i64, exec: Execution) -> Vec<[LatticePoint; 3]> {
    let pts = lattice_box(bound);
    let pairs = all_pairs(bound);
    let per_pair = exec.map(&pairs, |&(a, b)| {
        pts.iter()
            .filter(|&&c| !jacobiator(a, b, c).is_zero())
            .map(|&c| [a, b, c])
            .collect::<Vec<_>>()
    });
    per_pair.into_iter().flatten().collect()
}
