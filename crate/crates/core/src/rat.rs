//! Exact rational scalars.
//!
//! Every coordinate, area and q-exponent in the crate is a [`Rat`]. The
//! backing type keeps fractions reduced with a positive denominator, so
//! structural equality is numeric equality.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{GoldmanError, Result};

pub type Rat = Ratio<i128>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n as i128)
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(n as i128, d as i128)
}

/// Parses `"a"` or `"a/b"`. Surrounding whitespace is ignored.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: i128 = num
        .parse()
        .map_err(|_| GoldmanError::Parse(format!("bad numerator in {s:?}")))?;
    let den: i128 = den
        .parse()
        .map_err(|_| GoldmanError::Parse(format!("bad denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(GoldmanError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn to_f64(r: &Rat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}
