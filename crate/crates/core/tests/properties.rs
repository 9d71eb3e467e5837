use num_integer::Integer;
use proptest::prelude::*;

use goldman_core::algebra::{holonomy, qp_mul, wilson_normal_form, QuantumPlaneElement, WilsonSymbol};
use goldman_core::geometry::{signed_area_between, LatticePoint, PLPath, RatPoint};
use goldman_core::goldman::{
    direct_commutator, quantum_bracket_refined, quantum_bracket_straightforward, torus_intersections,
};
use goldman_core::rat::{frac, Rat};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn lattice(lo: i64, hi: i64) -> impl Strategy<Value = LatticePoint> {
    (lo..=hi, lo..=hi).prop_map(|(x, y)| LatticePoint::new(x, y))
}

fn interior_vertices() -> impl Strategy<Value = Vec<RatPoint>> {
    prop::collection::vec((small_rat(), small_rat()).prop_map(|(x, y)| RatPoint::new(x, y)), 0..5)
}

/// A path from `a` to `b` through a few rational vertices.
fn path_between(a: LatticePoint, b: LatticePoint) -> impl Strategy<Value = PLPath> {
    interior_vertices().prop_map(move |mid| {
        let mut v = vec![a.to_rat()];
        v.extend(mid);
        v.push(b.to_rat());
        PLPath::new(v).unwrap()
    })
}

fn path() -> impl Strategy<Value = PLPath> {
    (lattice(-4, 4), lattice(-4, 4)).prop_flat_map(|(a, b)| path_between(a, b))
}

/// Two or three paths sharing their end points.
fn homotopic<const K: usize>() -> impl Strategy<Value = [PLPath; K]> {
    (lattice(-4, 4), lattice(-4, 4))
        .prop_flat_map(|(a, b)| prop::collection::vec(path_between(a, b), K))
        .prop_map(|v| v.try_into().unwrap())
}

/// Trapezoid rule for the enclosed area, summed over `p1` then `p2` reversed.
fn trapezoid_area(p1: &PLPath, p2: &PLPath) -> Rat {
    let mut pts: Vec<RatPoint> = p1.vertices().to_vec();
    pts.extend(p2.vertices().iter().rev().skip(1));
    let half = frac(1, 2);
    pts.windows(2)
        .map(|w| -(w[1].x - w[0].x) * (w[1].y + w[0].y) * half)
        .sum()
}

fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_round_trip(p in path()) {
        let text = p.to_string();
        let back: PLPath = text.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn signed_area_matches_trapezoid_rule([p1, p2] in homotopic::<2>()) {
        prop_assert_eq!(signed_area_between(&p1, &p2).unwrap(), trapezoid_area(&p1, &p2));
    }

    #[test]
    fn signed_area_is_additive_and_antisymmetric([p1, p2, p3] in homotopic::<3>()) {
        let s = |a: &PLPath, b: &PLPath| signed_area_between(a, b).unwrap();
        prop_assert_eq!(s(&p1, &p3), s(&p1, &p2) + s(&p2, &p3));
        prop_assert_eq!(s(&p1, &p2), -s(&p2, &p1));
        prop_assert_eq!(s(&p1, &p1), Rat::from_integer(0));
    }

    #[test]
    fn signed_area_is_translation_invariant([p1, p2] in homotopic::<2>(), v in lattice(-5, 5)) {
        prop_assert_eq!(
            signed_area_between(&p1.translate(v), &p2.translate(v)).unwrap(),
            signed_area_between(&p1, &p2).unwrap()
        );
    }

    #[test]
    fn quantum_plane_is_associative(
        e in prop::array::uniform3(small_rat()),
        a in prop::array::uniform3(small_rat()),
        b in prop::array::uniform3(small_rat()),
    ) {
        let [u, v, w] = [0, 1, 2].map(|i| QuantumPlaneElement::new(e[i], a[i], b[i]));
        prop_assert_eq!(qp_mul(qp_mul(u, v), w), qp_mul(u, qp_mul(v, w)));
    }

    #[test]
    fn quantum_plane_product_formula(e in small_rat(), f in small_rat(), x in prop::array::uniform4(small_rat())) {
        let [a, b, c, d] = x;
        let got = qp_mul(QuantumPlaneElement::new(e, a, b), QuantumPlaneElement::new(f, c, d));
        prop_assert_eq!(got, QuantumPlaneElement::new(e + f + (a * d - b * c) * frac(1, 2), a + c, b + d));
    }

    #[test]
    fn holonomy_phase_is_the_signed_area([p1, p2] in homotopic::<2>()) {
        let s = signed_area_between(&p1, &p2).unwrap();
        prop_assert_eq!(holonomy(&p1), holonomy(&p2).with_phase(s));
    }

    #[test]
    fn wilson_normal_form_uses_the_straight_representative(p in path()) {
        let straight = PLPath::segment_between(p.start_point(), p.endpoint());
        let (e, sym) = wilson_normal_form(&p);
        prop_assert_eq!(e, signed_area_between(&p, &straight).unwrap());
        let d = p.displacement();
        prop_assert_eq!(sym, WilsonSymbol::new(d.x, d.y));
        prop_assert_eq!(sym, WilsonSymbol::new(-d.x, -d.y));
    }

    #[test]
    fn straight_crossings_are_evenly_spaced(u in lattice(-4, 4), w in lattice(-4, 4)) {
        let det = u.cross(w);
        prop_assume!(det != 0);
        let p1 = PLPath::straight(u.x, u.y);
        let p2 = PLPath::straight(w.x, w.y);
        let xs = torus_intersections(&p1, &p2).unwrap();
        prop_assert_eq!(xs.len() as i64, det.abs());
        prop_assert!(xs.iter().all(|x| x.sign as i64 == det.signum()));
        // the crossing parameters on p1 form the subgroup of order |det|/c,
        // each met c times, where c is the content of the second class
        let c = gcd(w.x, w.y).abs();
        let mut got: Vec<Rat> = xs.iter().map(|x| x.param1.frac).collect();
        got.sort();
        let mut want: Vec<Rat> = (0..det.abs() / c)
            .flat_map(|j| std::iter::repeat_n(frac(j * c, det.abs()), c as usize))
            .collect();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn direct_commutator_agrees(u in lattice(-3, 3), w in lattice(-3, 3)) {
        prop_assert_eq!(
            direct_commutator(u.x, u.y, w.x, w.y).unwrap(),
            quantum_bracket_straightforward(u.x, u.y, w.x, w.y)
        );
    }

    #[test]
    fn refined_agrees_when_second_class_is_primitive(u in lattice(-3, 3), w in lattice(-3, 3)) {
        prop_assume!(u.cross(w) != 0 && gcd(w.x, w.y).abs() == 1);
        let refined = quantum_bracket_refined(&PLPath::straight(u.x, u.y), &PLPath::straight(w.x, w.y)).unwrap();
        prop_assert_eq!(refined, quantum_bracket_straightforward(u.x, u.y, w.x, w.y));
    }
}
