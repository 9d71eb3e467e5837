use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::qpoly::write_power;
use super::{BracketExpression, QPhasePoly, WilsonSymbol};
use crate::calibration::PHASE_SIGN;
use crate::error::{GoldmanError, Result};
use crate::geometry::{LatticePoint, PLPath};
use crate::rat::{frac, rat, Rat};

/// The normal-ordered monomial `q^phase * E(a,b)`, where `E(a,b)` stands for
/// `exp(a r1 + b r2)`, the upper entry of a diagonal quantum holonomy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumPlaneElement {
    pub phase: Rat,
    pub a: Rat,
    pub b: Rat,
}

impl QuantumPlaneElement {
    pub fn new(phase: Rat, a: Rat, b: Rat) -> Self {
        QuantumPlaneElement { phase, a, b }
    }

    pub fn identity() -> Self {
        Self::generator(Rat::zero(), Rat::zero())
    }

    /// `E(a,b)` with no phase.
    pub fn generator(a: Rat, b: Rat) -> Self {
        Self::new(Rat::zero(), a, b)
    }

    pub fn lattice(m: i64, n: i64) -> Self {
        Self::generator(rat(m), rat(n))
    }

    /// Multiplies by the central scalar `q^e`.
    pub fn with_phase(self, e: Rat) -> Self {
        Self::new(self.phase + e, self.a, self.b)
    }

    pub fn inverse(self) -> Self {
        Self::new(-self.phase, -self.a, -self.b)
    }


    /// The lattice exponent, if `a` and `b` are integers.
    pub fn exponent(&self) -> Option<LatticePoint> {
        crate::geometry::RatPoint::new(self.a, self.b).to_lattice()
    }
}

impl fmt::Display for QuantumPlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.phase.is_zero() {
            write_power(f, &self.phase)?;
            f.write_str("*")?;
        }
        write!(f, "E({},{})", self.a, self.b)
    }
}

/// `q^e E(a,b) * q^f E(c,d) = q^(e + f + sigma (ad - bc)/2) E(a+c, b+d)`
pub fn qp_mul(u: QuantumPlaneElement, v: QuantumPlaneElement) -> QuantumPlaneElement {
    let cross = u.a * v.b - u.b * v.a;
    QuantumPlaneElement::new(
        u.phase + v.phase + cross * frac(PHASE_SIGN, 2),
        u.a + v.a,
        u.b + v.b,
    )
}

/// Path-ordered product of the segment generators of `p`.
pub fn holonomy(p: &PLPath) -> QuantumPlaneElement {
    p.segments()
        .map(|s| {
            let d = s.direction();
            QuantumPlaneElement::generator(d.x, d.y)
        })
        .fold(QuantumPlaneElement::identity(), qp_mul)
}

/// A linear combination of generators `E(a,b)` with [`QPhasePoly`]
/// coefficients; the phases of monomials are absorbed into the coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaneSum {
    terms: BTreeMap<(Rat, Rat), QPhasePoly>,
}

impl PlaneSum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `E(m,n) + E(-m,-n)`, the trace of the diagonal holonomy.
    pub fn trace(m: i64, n: i64) -> Self {
        let mut s = Self::from(QuantumPlaneElement::lattice(m, n));
        s.add_assign(&Self::from(QuantumPlaneElement::lattice(-m, -n)));
        s
    }

    fn add_poly(&mut self, key: (Rat, Rat), p: &QPhasePoly) {
        let entry = self.terms.entry(key).or_default();
        *entry = &*entry + p;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign(&mut self, o: &PlaneSum) {
        for (k, p) in &o.terms {
            self.add_poly(*k, p);
        }
    }

    pub fn sub(&self, o: &PlaneSum) -> PlaneSum {
        let mut out = self.clone();
        for (k, p) in &o.terms {
            out.add_poly(*k, &-p);
        }
        out
    }

    pub fn mul(&self, o: &PlaneSum) -> PlaneSum {
        let mut out = PlaneSum::zero();
        for ((a, b), p1) in &self.terms {
            for ((c, d), p2) in &o.terms {
                let m = qp_mul(
                    QuantumPlaneElement::generator(*a, *b),
                    QuantumPlaneElement::generator(*c, *d),
                );
                out.add_poly((m.a, m.b), &(p1 * p2).shift(m.phase));
            }
        }
        out
    }

    /// `self * o - o * self`
    pub fn commutator(&self, o: &PlaneSum) -> PlaneSum {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Regroups `c (E(a,b) + E(-a,-b))` pairs into trace symbols `c T(a,b)`.
    ///
    /// Fails if some generator is not matched by its inverse with the same
    /// coefficient, or if a lattice exponent is not integral.
    pub fn to_traces(&self) -> Result<BracketExpression> {
        let mut out = BracketExpression::zero();
        for ((a, b), p) in &self.terms {
            let key = crate::geometry::RatPoint::new(*a, *b);
            let Some(lp) = key.to_lattice() else {
                return Err(GoldmanError::NotTraceSymmetric(format!(
                    "non-integral exponent E({a},{b})"
                )));
            };
            let sym = WilsonSymbol::new(lp.x, lp.y);
            if lp.is_zero() {
                // T(0,0) = 2 E(0,0)
                let mut half = QPhasePoly::zero();
                for (e, c) in p.terms() {
                    if c % 2 != 0 {
                        return Err(GoldmanError::NotTraceSymmetric(
                            "odd coefficient on E(0,0)".into(),
                        ));
                    }
                    half.add_term(*e, c / 2);
                }
                out.add_term(sym, &half);
                continue;
            }
            if sym.class() != lp {
                continue;
            }
            let partner = self.terms.get(&(-*a, -*b)).cloned().unwrap_or_default();
            if partner != *p {
                return Err(GoldmanError::NotTraceSymmetric(format!(
                    "E({a},{b}) has coefficient {p} but E({},{}) has {partner}",
                    -*a,
                    -*b
                )));
            }
            out.add_term(sym, p);
        }
        // Every non-canonical key must have been matched by a canonical one.
        for (a, b) in self.terms.keys() {
            if let Some(lp) = crate::geometry::RatPoint::new(*a, *b).to_lattice() {
                if !lp.is_zero()
                    && WilsonSymbol::new(lp.x, lp.y).class() != lp
                    && !self.terms.contains_key(&(-*a, -*b))
                {
                    return Err(GoldmanError::NotTraceSymmetric(format!(
                        "E({a},{b}) has no partner"
                    )));
                }
            }
        }
        Ok(out)
    }
}

impl std::ops::Mul for QuantumPlaneElement {
    type Output = Self;

    fn mul(self, other: Self) -> Self {
        qp_mul(self, other)
    }
}

impl From<QuantumPlaneElement> for PlaneSum {
    fn from(u: QuantumPlaneElement) -> Self {
        let mut s = PlaneSum::zero();
        s.add_poly((u.a, u.b), &QPhasePoly::q_pow(u.phase));
        s
    }
}
