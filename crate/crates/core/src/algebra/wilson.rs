use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::QPhasePoly;
use crate::geometry::{signed_area_between, LatticePoint, PLPath};
use crate::rat::Rat;

/// The trace symbol `T(m,n)` of a free homotopy class on the torus.
///
/// Stored as the representative of `{(m,n), (-m,-n)}` with `m > 0`, or
/// `m = 0` and `n >= 0`, since the trace of `diag(X, X^-1)` is symmetric
/// under inversion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WilsonSymbol(LatticePoint);

impl WilsonSymbol {
    pub fn new(m: i64, n: i64) -> Self {
        if m > 0 || (m == 0 && n >= 0) {
            WilsonSymbol(LatticePoint::new(m, n))
        } else {
            WilsonSymbol(LatticePoint::new(-m, -n))
        }
    }

    pub fn class(&self) -> LatticePoint {
        self.0
    }
}

impl From<LatticePoint> for WilsonSymbol {
    fn from(p: LatticePoint) -> Self {
        WilsonSymbol::new(p.x, p.y)
    }
}

impl fmt::Display for WilsonSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.0.x, self.0.y)
    }
}

/// Reduces the Wilson loop of `p` to `q^e T(m,n)`, where `e` is the signed
/// area between `p` and the straight path with the same end points.
pub fn wilson_normal_form(p: &PLPath) -> (Rat, WilsonSymbol) {
    let straight = PLPath::segment_between(p.start_point(), p.endpoint());
    let e = signed_area_between(p, &straight).expect("same end points by construction");
    (e, p.displacement().into())
}

/// A formal sum of trace symbols with [`QPhasePoly`] coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BracketExpression {
    terms: BTreeMap<WilsonSymbol, QPhasePoly>,
}

impl BracketExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(sym: WilsonSymbol, coeff: QPhasePoly) -> Self {
        let mut e = Self::zero();
        e.add_term(sym, &coeff);
        e
    }

    pub fn add_term(&mut self, sym: WilsonSymbol, coeff: &QPhasePoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(sym).or_default();
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&sym);
        }
    }

    pub fn add(&self, o: &BracketExpression) -> BracketExpression {
        let mut out = self.clone();
        for (s, c) in &o.terms {
            out.add_term(*s, c);
        }
        out
    }

    pub fn sub(&self, o: &BracketExpression) -> BracketExpression {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> BracketExpression {
        self.scale(&QPhasePoly::monomial(Rat::default(), -1))
    }

    pub fn scale(&self, k: &QPhasePoly) -> BracketExpression {
        let mut out = Self::zero();
        for (s, c) in &self.terms {
            out.add_term(*s, &(c * k));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, sym: WilsonSymbol) -> QPhasePoly {
        self.terms.get(&sym).cloned().unwrap_or_default()
    }

    /// Terms ordered by symbol.
    pub fn terms(&self) -> impl Iterator<Item = (&WilsonSymbol, &QPhasePoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sets `q = 1` in every coefficient.
    pub fn classical_limit(&self) -> BracketExpression {
        let mut out = Self::zero();
        for (s, c) in &self.terms {
            out.add_term(*s, &QPhasePoly::monomial(Rat::default(), c.classical_limit()));
        }
        out
    }
}

/// Canonical rendering: `(coeff)*T(m,n)` terms in symbol order joined by
/// `" + "`, or `0` for the empty sum.
impl fmt::Display for BracketExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{s}")?;
        }
        Ok(())
    }
}
