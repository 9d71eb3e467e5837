use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rat::{rat, Rat};

/// A finite integer combination of rational powers of `q`.
///
/// Zero coefficients are never stored, so the derived equality is exact
/// equality of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPhasePoly {
    terms: BTreeMap<Rat, i64>,
}

impl QPhasePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rat::zero(), 1)
    }

    /// `coeff * q^exp`
    pub fn monomial(exp: Rat, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `q^exp`
    pub fn q_pow(exp: Rat) -> Self {
        Self::monomial(exp, 1)
    }

    /// `q^a - q^b`
    pub fn q_diff(a: Rat, b: Rat) -> Self {
        let mut p = Self::q_pow(a);
        p.add_term(b, -1);
        p
    }

    pub fn add_term(&mut self, exp: Rat, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &Rat) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        QPhasePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: Rat) -> Self {
        QPhasePoly {
            terms: self.terms.iter().map(|(x, c)| (*x + e, *c)).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn classical_limit(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        QPhasePoly {
            terms: self.terms.iter().map(|(e, c)| (-*e, *c)).collect(),
        }
    }
}

impl Add<&QPhasePoly> for &QPhasePoly {
    type Output = QPhasePoly;
    fn add(self, o: &QPhasePoly) -> QPhasePoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, *c);
        }
        out
    }
}

impl Sub<&QPhasePoly> for &QPhasePoly {
    type Output = QPhasePoly;
    fn sub(self, o: &QPhasePoly) -> QPhasePoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -*c);
        }
        out
    }
}

impl Mul<&QPhasePoly> for &QPhasePoly {
    type Output = QPhasePoly;
    fn mul(self, o: &QPhasePoly) -> QPhasePoly {
        let mut out = QPhasePoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(*e1 + *e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &QPhasePoly {
    type Output = QPhasePoly;
    fn neg(self) -> QPhasePoly {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QPhasePoly {
            type Output = QPhasePoly;
            fn $m(self, o: QPhasePoly) -> QPhasePoly {
                (&self).$m(&o)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for QPhasePoly {
    type Output = QPhasePoly;
    fn neg(self) -> QPhasePoly {
        -&self
    }
}

pub(super) fn write_power(f: &mut fmt::Formatter<'_>, e: &Rat) -> fmt::Result {
    if *e == rat(1) {
        f.write_str("q")
    } else {
        write!(f, "q^{e}")
    }
}

/// Renders as e.g. `q^-3/2 - q^3/2`, `2*q^1/2 + 1`, or `0`.
impl fmt::Display for QPhasePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, *c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write_power(f, e)?;
            }
        }
        Ok(())
    }
}
