use num_rational::BigRational;
use proptest::prelude::*;
use skein_core::linalg::Mat;
use skein_core::scalar::{Cyclo, Ring};
use skein_core::torus::*;
use skein_core::RootData;
use std::sync::Arc;

fn ctx(n: u32, extra: usize) -> Arc<TorusContext> {
    TorusContext::new(RootData::new(n, 1).unwrap(), extra)
}

fn element(c: &Arc<TorusContext>, terms: &[(i64, i64, i64)]) -> TorusElement {
    terms.iter().fold(TorusElement::zero(c), |acc, &(a, b, k)| acc + TorusElement::monomial(c, a, b, c.int(k)))
}

fn terms() -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -4i64..=4), 1..5)
}

fn word() -> impl Strategy<Value = CurveWord> {
    let curve = prop_oneof![Just(TorusCurve::Longitude), Just(TorusCurve::Meridian)];
    prop::collection::vec((-3i64..=3, prop::collection::vec(curve, 0..5)), 1..4).prop_map(|terms| CurveWord { terms })
}

#[test]
fn normal_order_examples() {
    let c = ctx(3, 1);
    let x = TorusElement::x(&c);
    let y = TorusElement::y(&c);
    assert!((x.clone() * y.clone()).equals(&TorusElement::monomial(&c, 1, 1, c.int(1))));
    assert!((y.clone() * x.clone()).equals(&TorusElement::monomial(&c, 1, 1, c.q_pow(-1))));
    let l = fgs(&c, &CurveWord::curve(TorusCurve::Longitude));
    let m = fgs(&c, &CurveWord::curve(TorusCurve::Meridian));
    assert!(!(l.clone() * m.clone()).equals(&(m * l.clone())));
    assert!(l.theta_plus_part().equals(&l));
    let anti = element(&c, &[(1, 0, 1), (-1, 0, -1)]);
    assert!(anti.theta_plus_part().is_zero());
}

#[test]
fn chebyshev_images() {
    for n in [3u32, 5, 7] {
        let c = ctx(n, 1);
        let t = fgs(&c, &CurveWord::chebyshev(TorusCurve::Longitude, n as usize));
        assert!(t.equals(&element(&c, &[(n as i64, 0, 1), (-(n as i64), 0, 1)])));
    }
}

#[test]
fn rep_generators_and_relations() {
    let c = ctx(5, 1);
    let rep = ToroidalRep::new(&c, c.q_pow(2), c.int(-1)).unwrap();
    let (u, w) = (rep.clock(), rep.shift());
    assert!(u.mul(&w).unwrap().equals(&w.mul(&u).unwrap().scale(&c.q_pow(1))));
    let id = Mat::identity(5, &c.int(1));
    let pow5 = |m: &Mat<Cyclo>| (0..4).fold(m.clone(), |acc, _| acc.mul(m).unwrap());
    assert!(pow5(&u).equals(&id) && pow5(&w).equals(&id));
    // X e_i = x q^i e_i
    let x = rep.apply(&TorusElement::x(&c)).unwrap();
    for i in 0..5 {
        assert!(x.get(i, i).equals(&(c.q_pow(2) * c.q_pow(i as i64))));
    }
    assert!(ToroidalRep::new(&c, c.int(0), c.int(1)).is_err());
}

#[test]
fn central_pieces_at_n3() {
    let c = ctx(3, 1);
    let class = classify(&c, c.int(1), c.int(1)).unwrap();
    let GenusOneClass::Central { signs, even, odd, image_dimension, expected_image_dimension } = &class else {
        panic!("(1, 1) is central")
    };
    assert_eq!(*signs, (1, 1));
    assert_eq!((even.dimension, odd.dimension), (2, 1));
    assert_eq!((*image_dimension, *expected_image_dimension), (5, 5));
    assert!(class.passed());
}

#[test]
fn classification_of_central_points() {
    for n in [3u32, 5, 7] {
        let c = ctx(n, 1);
        for (e1, e2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let class = classify(&c, c.int(e1), c.int(e2)).unwrap();
            let GenusOneClass::Central { even, odd, image_dimension, .. } = &class else { panic!("central") };
            let h = (n as usize - 1) / 2;
            assert_eq!((even.dimension, odd.dimension), (h + 1, h));
            assert!(even.irreducible() && odd.irreducible());
            assert!(even.matches_restriction && odd.matches_restriction);
            let np = n as usize;
            assert_eq!(*image_dimension, ((np + 1).pow(2) + (np - 1).pow(2)) / 4);
        }
    }
}

#[test]
fn central_shadow_reached_off_the_signs() {
    // x = q has x^N = 1, so the point is central even though x != 1.
    let c = ctx(5, 1);
    let class = classify(&c, c.q_pow(1), c.int(-1)).unwrap();
    assert!(matches!(class, GenusOneClass::Central { signs: (1, -1), .. }));
}

#[test]
fn generic_points_are_irreducible_with_shadow() {
    let angles = [(1, 7), (2, 9), (3, 11), (1, 4), (5, 12), (1, 8), (3, 10), (2, 15), (4, 9), (1, 6)];
    for n in [3u32, 5] {
        for (k, &(p, d)) in angles.iter().enumerate() {
            let (pp, dd) = angles[(k + 3) % angles.len()];
            let c = ctx(n, (d * dd) as usize);
            let x = c.unit_root(&BigRational::new(p.into(), d.into())).unwrap();
            let y = c.unit_root(&BigRational::new(pp.into(), dd.into())).unwrap();
            let class = classify(&c, x, y).unwrap();
            match &class {
                GenusOneClass::Generic { dimension, shadow_verified, algebra_dimension, .. } => {
                    assert!(*shadow_verified, "shadow at angles {p}/{d}, {pp}/{dd}");
                    assert_eq!(*algebra_dimension, dimension * dimension);
                }
                GenusOneClass::Central { .. } => {
                    let np = i64::from(n);
                    assert!(d as i64 % np == 0 || dd as i64 % np == 0 || (p * np) % d == 0);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative(a in terms(), b in terms(), d in terms()) {
        let c = ctx(5, 1);
        let (u, v, w) = (element(&c, &a), element(&c, &b), element(&c, &d));
        prop_assert!(((u.clone() * v.clone()) * w.clone()).equals(&(u * (v * w))));
    }

    #[test]
    fn theta_is_an_involutive_automorphism(a in terms(), b in terms()) {
        let c = ctx(5, 1);
        let (u, v) = (element(&c, &a), element(&c, &b));
        prop_assert!(u.theta().theta().equals(&u));
        prop_assert!((u.clone() * v.clone()).theta().equals(&(u.theta() * v.theta())));
        prop_assert!((u.theta_plus_part() + u.theta_minus_part()).equals(&u));
    }

    #[test]
    fn fgs_lands_in_the_invariant_part(w in word()) {
        let c = ctx(3, 1);
        let image = fgs(&c, &w);
        prop_assert!(image.is_theta_invariant());
        prop_assert!(image.theta_plus_part().equals(&image));
    }

    #[test]
    fn rep_is_a_homomorphism(a in terms(), b in terms(), px in 1i64..12, py in 1i64..12) {
        let c = ctx(3, 12);
        let x = c.unit_root(&BigRational::new(px.into(), 12.into())).unwrap();
        let y = c.unit_root(&BigRational::new(py.into(), 12.into())).unwrap();
        let rep = ToroidalRep::new(&c, x, y).unwrap();
        let (u, v) = (element(&c, &a), element(&c, &b));
        let lhs = rep.apply(&(u.clone() * v.clone())).unwrap();
        let rhs = rep.apply(&u).unwrap().mul(&rep.apply(&v).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs));
    }

    #[test]
    fn reflection_intertwines_theta(a in terms(), e1 in prop_oneof![Just(1i64), Just(-1)], e2 in prop_oneof![Just(1i64), Just(-1)]) {
        let c = ctx(5, 1);
        let rep = ToroidalRep::new(&c, c.int(e1), c.int(e2)).unwrap();
        let u = element(&c, &a);
        let t = reflection(&c);
        let lhs = rep.apply(&u.theta()).unwrap();
        let rhs = t.mul(&rep.apply(&u).unwrap()).unwrap().mul(&t).unwrap();
        prop_assert!(lhs.equals(&rhs));
    }

    #[test]
    fn invariant_words_preserve_eigenspaces(w in word()) {
        let c = ctx(5, 1);
        let rep = ToroidalRep::new(&c, c.int(1), c.int(-1)).unwrap();
        let m = rep.curve(&w).unwrap();
        prop_assert!(restrict(&m, Parity::Even).is_ok());
        prop_assert!(restrict(&m, Parity::Odd).is_ok());
    }
}
