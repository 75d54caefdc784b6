use num_complex::Complex64;
use num_rational::BigRational;
use skein_core::category::*;
use skein_core::linalg::Mat;
use skein_core::qarith::qint;
use skein_core::scalar::Ring;
use skein_core::{ApproxBackend, Backend, ExactBackend, RootData, SymbolicBackend, Weight};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn symbolic_modules_satisfy_relations() {
    for n in [3u32, 5] {
        let root = RootData::new(n, 1).unwrap();
        let b = SymbolicBackend::new(root, 1);
        let v = build_v(&b, &Weight::param(0)).unwrap();
        assert!(check_relations(&b, &v).unwrap().is_ok(), "V at N={n}");
        let s1 = build_s(&b, 1).unwrap();
        let t = tensor(&s1, &v);
        assert!(check_relations(&b, &t).unwrap().is_ok());
    }
}

#[test]
fn projective_modules_satisfy_relations() {
    for n in [3u32, 5] {
        let root = RootData::new(n, 1).unwrap();
        let b = ExactBackend::with_denominator(root, vec![], 2).unwrap();
        for p in 0..n - 1 {
            let m = build_p(&b, p).unwrap();
            let r = check_relations(&b, &m).unwrap();
            assert!(r.is_ok(), "P_{p} at N={n}: {:?}", r.failures);
        }
        for s in 0..n {
            assert!(check_relations(&b, &build_s(&b, s).unwrap()).unwrap().is_ok());
        }
        for m in [-1, 1] {
            assert!(check_relations(&b, &build_sigma(&b, m).unwrap()).unwrap().is_ok());
        }
    }
}

#[test]
fn skein_relation_and_loop_value() {
    for (n, kp) in [(3, 1), (5, 2), (7, 3)] {
        let root = RootData::new(n, kp).unwrap();
        let b = ExactBackend::new(root, vec![]).unwrap();
        let s1 = build_s(&b, 1).unwrap();
        let c = braiding(&b, &s1, &s1).unwrap();
        let cinv = c.inverse().unwrap();
        let a = b.a_pow_int(1);
        let lhs = c.scale(&a).sub(&cinv.scale(&b.a_pow_int(-1))).unwrap();
        let rhs = Mat::identity(4, &b.one()).scale(&(b.a_pow_int(2) - b.a_pow_int(-2)));
        assert!(lhs.equals(&rhs));
        let qd = qdim(&b, &s1).unwrap();
        assert!(qd.equals(&(b.a_pow_int(2) + b.a_pow_int(-2))));
    }
}

#[test]
fn twist_is_scalar_and_ribbon_with_inverse_double_braiding() {
    let root = RootData::new(3, 1).unwrap();
    let b = ExactBackend::new(root, vec![]).unwrap();
    let s1 = build_s(&b, 1).unwrap();
    let th = twist(&b, &s1).unwrap();
    assert!(th.scalar_value().is_some());
    let t = tensor(&s1, &s1);
    let lhs = twist(&b, &t).unwrap();
    let dbl = braiding(&b, &s1, &s1).unwrap().mul(&braiding(&b, &s1, &s1).unwrap()).unwrap();
    let rhs = th.kron(&th).mul(&dbl.inverse().unwrap()).unwrap();
    assert!(lhs.equals(&rhs));
}

#[test]
fn sprime_values() {
    let root = RootData::new(5, 1).unwrap();
    let b = ExactBackend::new(root, vec![]).unwrap();
    let s1 = build_s(&b, 1).unwrap();
    for i in 0..4u32 {
        let si = build_s(&b, i).unwrap();
        let val = sprime(&b, &s1, &si).unwrap();
        let e = Weight::int(i as i64 + 1);
        assert!(val.equals(&(b.q_pow(&e).unwrap() + b.q_pow(&-e).unwrap())));
    }
    let ab = ApproxBackend::real(RootData::new(3, 1).unwrap(), &[0.8 / 2.0]);
    let v = build_v(&ab, &Weight::param(0)).unwrap();
    let s1 = build_s(&ab, 1).unwrap();
    let val = sprime(&ab, &s1, &v).unwrap().value();
    let t = 2.0 * std::f64::consts::PI * 0.8 / 3.0;
    assert!((val - Complex64::new(2.0 * t.cos(), 0.0)).norm() < 1e-9);
}

#[test]
fn decomposition_and_exact_sequences() {
    let root = RootData::new(3, 1).unwrap();
    let b = ExactBackend::new(root, vec![rat(2, 10), rat(9, 20)]).unwrap();
    let hw = decompose_vv(&b, &Weight::param(0), &Weight::param(1)).unwrap();
    assert_eq!(hw.len(), 3);
    let es = exact_sequence_maps(&b, 0).unwrap();
    assert!(is_equivariant(&es.incl, &es.simple, &es.typical).unwrap());
    assert!(is_equivariant(&es.proj, &es.typical, &es.quotient).unwrap());
    assert!(is_equivariant(&es.incl_p, &es.typical, &es.projective).unwrap());
    assert!(is_equivariant(&es.proj_p, &es.projective, &es.typical_dual).unwrap());
    assert!(es.proj.mul(&es.incl).unwrap().is_zero());
    let _ = qint(&b, 2);
}
