//! Self-verification suite behind the `verify` command.
//!
//! Each check runs a family of identities on deterministic random or
//! exhaustive inputs and counts failures.

use std::collections::BTreeSet;

use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{holonomy, qp_mul, QuantumPlaneElement};
use crate::exec::Execution;
use crate::geometry::{shoelace_area, signed_area_between, LatticePoint, PLPath};
use crate::goldman::{
    antisymmetry_failures, classical_bracket, direct_commutator_mismatches, jacobi_failures,
    pre_parallelogram_points, reroute, torus_intersections, Orientation,
};
use crate::rat::{frac, Rat};
use crate::{calibration, random};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// First failing case, if any.
    pub detail: Option<String>,
}

impl InvariantCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    name: String,
    cases: usize,
    failures: usize,
    detail: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            failures: 0,
            detail: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_none() {
                self.detail = Some(detail());
            }
        }
    }

    fn finish(self) -> InvariantCheck {
        InvariantCheck {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            detail: self.detail,
        }
    }
}

fn from_failures<T: std::fmt::Debug>(name: &str, cases: usize, fails: Vec<T>) -> InvariantCheck {
    InvariantCheck {
        name: name.into(),
        cases,
        failures: fails.len(),
        detail: fails.first().map(|f| format!("{f:?}")),
    }
}

pub fn signed_area_laws(rng: &mut ChaCha8Rng, cases: usize) -> Vec<InvariantCheck> {
    let mut vertical = Tally::new("signed area: S(p1,p3) = S(p1,p2) + S(p2,p3)");
    let mut horizontal = Tally::new("signed area: S(p1 p2, p3 p4) = S(p1,p3) + S(p2,p4)");
    let mut anti = Tally::new("signed area: S(p1,p2) = -S(p2,p1)");
    let mut shift = Tally::new("signed area: translation invariance");
    let mut closed = Tally::new("shoelace: p p^-1 encloses nothing");
    for _ in 0..cases {
        let a = random::lattice_point(rng, -5, 5);
        let b = random::lattice_point(rng, -5, 5);
        let c = random::lattice_point(rng, -5, 5);
        let p: Vec<PLPath> = (0..3).map(|_| random::detour(rng, a, b, 4, -5, 5)).collect();
        let s = |x: &PLPath, y: &PLPath| signed_area_between(x, y).unwrap();
        vertical.check(s(&p[0], &p[2]) == s(&p[0], &p[1]) + s(&p[1], &p[2]), || {
            format!("{} | {} | {}", p[0], p[1], p[2])
        });
        anti.check(s(&p[0], &p[1]) == -s(&p[1], &p[0]), || format!("{} | {}", p[0], p[1]));
        let v = random::lattice_point(rng, -6, 6);
        shift.check(
            s(&p[0].translate(v), &p[1].translate(v)) == s(&p[0], &p[1]),
            || format!("{} | {} by {v}", p[0], p[1]),
        );
        let lp = p[0].concat(&p[0].reverse()).unwrap();
        closed.check(shoelace_area(&lp).unwrap() == Rat::default(), || p[0].to_string());

        let q2 = random::detour(rng, b, c, 4, -5, 5);
        let q4 = random::detour(rng, b, c, 4, -5, 5);
        let left = s(&p[0].concat(&q2).unwrap(), &p[1].concat(&q4).unwrap());
        horizontal.check(left == s(&p[0], &p[1]) + s(&q2, &q4), || {
            format!("{} | {} | {} | {}", p[0], q2, p[1], q4)
        });
    }
    vec![
        vertical.finish(),
        horizontal.finish(),
        anti.finish(),
        shift.finish(),
        closed.finish(),
    ]
}

pub fn pick_agreement(rng: &mut ChaCha8Rng, cases: usize) -> InvariantCheck {
    let mut t = Tally::new("pick area equals |shoelace| on simple lattice polygons");
    for _ in 0..cases {
        let poly = random::simple_polygon(rng, -6, 6);
        t.check(poly.pick_area() == poly.signed_area().abs(), || {
            format!("{:?}", poly.vertices())
        });
    }
    t.finish()
}

pub fn quantum_plane_laws(rng: &mut ChaCha8Rng, cases: usize) -> Vec<InvariantCheck> {
    use rand::Rng;
    let mut assoc = Tally::new("quantum plane: associativity");
    let mut unit = Tally::new("quantum plane: E(0,0) is the identity");
    let mut comm = Tally::new("quantum plane: uv = q^(sigma cross) vu");
    let mut r = || frac(rng.gen_range(-12..=12), rng.gen_range(1..=4));
    for _ in 0..cases {
        let [u, v, w] = [(); 3].map(|_| QuantumPlaneElement::new(r(), r(), r()));
        assoc.check(qp_mul(qp_mul(u, v), w) == qp_mul(u, qp_mul(v, w)), || {
            format!("{u} {v} {w}")
        });
        let id = QuantumPlaneElement::identity();
        unit.check(qp_mul(id, u) == u && qp_mul(u, id) == u, || u.to_string());
        let cross = u.a * v.b - u.b * v.a;
        let sigma = Rat::from_integer(calibration::PHASE_SIGN as i128);
        comm.check(qp_mul(u, v) == qp_mul(v, u).with_phase(sigma * cross), || {
            format!("{u} {v}")
        });
    }
    vec![assoc.finish(), unit.finish(), comm.finish()]
}

pub fn area_phase_theorem(rng: &mut ChaCha8Rng, cases: usize) -> Vec<InvariantCheck> {
    let mut t = Tally::new("holonomy(p1) = q^S(p1,p2) holonomy(p2) for homotopic paths");
    let mut concat = Tally::new("holonomy of a concatenation is the ordered product");
    for _ in 0..cases {
        let a = random::lattice_point(rng, -6, 6);
        let b = random::lattice_point(rng, -6, 6);
        let p1 = random::detour(rng, a, b, 5, -6, 6);
        let p2 = random::detour(rng, a, b, 5, -6, 6);
        let s = signed_area_between(&p1, &p2).unwrap();
        t.check(holonomy(&p1) == holonomy(&p2).with_phase(s), || {
            format!("{p1} | {p2}")
        });
        let c = random::lattice_point(rng, -6, 6);
        let p3 = random::detour(rng, b, c, 3, -6, 6);
        concat.check(
            holonomy(&p1.concat(&p3).unwrap()) == qp_mul(holonomy(&p1), holonomy(&p3)),
            || format!("{p1} | {p3}"),
        );
    }
    vec![t.finish(), concat.finish()]
}

/// Crossing count, determinant, admissible points and Pick area agree, and
/// each positive rerouting passes through its own admissible end point.
pub fn counting_and_bijection(pairs: &[(LatticePoint, LatticePoint)]) -> Vec<InvariantCheck> {
    let mut count = Tally::new("|crossings| = |det| = admissible points = pick area");
    let mut total = Tally::new("sum of crossing signs = det");
    let mut bij = Tally::new("positive reroutings biject onto admissible end points");
    for &(u, w) in pairs {
        let (p1, p2) = (PLPath::straight(u.x, u.y), PLPath::straight(w.x, w.y));
        let det = u.cross(w);
        let xs = torus_intersections(&p1, &p2).unwrap();
        let par = pre_parallelogram_points(&p1, &p2).unwrap();
        let n = det.unsigned_abs() as usize;
        count.check(
            xs.len() == n
                && par.parallelogram.included_points.len() == n
                && par.pre_parallelogram.included_points.len() == n
                && par.parallelogram.pick_area == Rat::from_integer(n as i128),
            || format!("{u} {w}"),
        );
        total.check(
            xs.iter().map(|x| x.sign as i64).sum::<i64>() == det,
            || format!("{u} {w}"),
        );
        let admissible: BTreeSet<_> = par.parallelogram.included_points.iter().copied().collect();
        let mut hit = BTreeSet::new();
        let mut ok = true;
        for x in &xs {
            let r = reroute(&p1, x, &p2, Orientation::Positive).unwrap();
            ok &= r.path.passes_through(r.through_point.to_rat());
            ok &= admissible.contains(&r.through_point);
            ok &= hit.insert(r.through_point);
        }
        ok &= hit == admissible;
        bij.check(ok, || format!("{u} {w}"));
    }
    vec![count.finish(), total.finish(), bij.finish()]
}

pub fn classical_formula(bound: i64) -> InvariantCheck {
    let mut t = Tally::new("classical bracket of straight loops is det (T(u+w) - T(u-w))");
    for m in -bound..=bound {
        for n in -bound..=bound {
            for s in -bound..=bound {
                for k in -bound..=bound {
                    let got = classical_bracket(&PLPath::straight(m, n), &PLPath::straight(s, k))
                        .unwrap();
                    let det = m * k - n * s;
                    let mut expected = crate::algebra::BracketExpression::zero();
                    let c = crate::algebra::QPhasePoly::monomial(Rat::default(), det);
                    expected.add_term(crate::algebra::WilsonSymbol::new(m + s, n + k), &c);
                    expected.add_term(crate::algebra::WilsonSymbol::new(m - s, n - k), &-&c);
                    t.check(got == expected, || format!("({m},{n}) ({s},{k})"));
                }
            }
        }
    }
    t.finish()
}

/// Runs every check. Exhaustive checks use `[-bound, bound]^2`; Jacobi is
/// capped at bound 3.
pub fn run_invariant_suite(bound: i64, seed: u64, exec: Execution) -> Vec<InvariantCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![];
    let calib = calibration::self_check();
    out.push(InvariantCheck {
        name: "calibration self-check".into(),
        cases: 1,
        failures: usize::from(calib.is_err()),
        detail: calib.err(),
    });
    out.extend(signed_area_laws(&mut rng, 200));
    out.push(pick_agreement(&mut rng, 200));
    out.extend(quantum_plane_laws(&mut rng, 200));
    out.extend(area_phase_theorem(&mut rng, 200));
    let mut pairs = vec![];
    for m in -bound..=bound {
        for n in -bound..=bound {
            for s in -bound..=bound {
                for t in -bound..=bound {
                    let (u, w) = (LatticePoint::new(m, n), LatticePoint::new(s, t));
                    if u.cross(w) != 0 {
                        pairs.push((u, w));
                    }
                }
            }
        }
    }
    out.extend(counting_and_bijection(&pairs));
    out.push(classical_formula(bound));
    let side = (2 * bound + 1) as usize;
    let name = "direct commutator equals straightforward bracket";
    out.push(match direct_commutator_mismatches(bound, exec) {
        Ok(fails) => from_failures(name, side.pow(4), fails),
        Err(e) => InvariantCheck {
            name: name.into(),
            cases: 1,
            failures: 1,
            detail: Some(e.to_string()),
        },
    });
    out.push(from_failures(
        "straightforward bracket is antisymmetric",
        side.pow(4),
        antisymmetry_failures(bound, exec),
    ));
    let jb = bound.min(3);
    out.push(from_failures(
        &format!("Jacobi identity for the straightforward bracket (bound {jb})"),
        ((2 * jb + 1) as usize).pow(6),
        jacobi_failures(jb, exec),
    ));
    out
}
