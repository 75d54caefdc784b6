use num_complex::Complex64;
use num_rational::BigRational;
use skein_core::calculus::*;
use skein_core::scalar::Ring;
use skein_core::calculus::identities::{check_binomial_sign, check_triple};
use skein_core::{ApproxBackend, ExactBackend, RootData, SymbolicBackend, Weight};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn closed_sixj_matches_reference_values_at_n3() {
    let root = RootData::new(3, 1).unwrap();
    let b = ApproxBackend::real(root, &[0.35, 0.8]);
    let (xa, xb) = (Weight::param(0), Weight::param(1));
    let expected = [
        (0, 1, 1, 0.8581097300725026),
        (0, 1, -1, -1.2611287055842713),
        (0, -1, 1, -0.20601132958329768),
        (0, -1, -1, 0.0),
        (1, -1, 1, -0.736352308845102),
        (2, 1, -1, 0.7453559924999308),
        (2, -1, -1, -1.2611287055842715),
    ];
    for (m, e1, e2, want) in expected {
        let g = (&xa + &xb).add_int(-(2 * m - 2));
        let args = SixjArgs::new(xa.clone(), xb.clone(), g, Sign::from_i64(e1).unwrap(), Sign::from_i64(e2).unwrap());
        let got = sixj_closed(&b, &args).unwrap().value();
        assert!((got - Complex64::new(want, 0.0)).norm() < 1e-9, "m={m} e=({e1},{e2}): {got}");
    }
}

#[test]
fn oracle_closed_symbolic_agree_exactly() {
    let root = RootData::new(3, 1).unwrap();
    let b = ExactBackend::new(root, vec![rat(7, 20), rat(4, 5)]).unwrap();
    let (xa, xb) = (Weight::param(0), Weight::param(1));
    for m in 0..3 {
        for (e1, e2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let g = (&xa + &xb).add_int(-(2 * m - 2));
            let (s1, s2) = (Sign::from_i64(e1).unwrap(), Sign::from_i64(e2).unwrap());
            let args = SixjArgs::new(xa.clone(), xb.clone(), g.clone(), s1, s2);
            let closed = sixj_closed(&b, &args).unwrap();
            let oracle = sixj_oracle(&b, &args).unwrap();
            assert!(closed.equals(&oracle.value), "m={m} e=({e1},{e2})");
            let sym = sixj_symbolic(root, m, s1, s2).unwrap();
            assert!(sym.evaluate(&b, &xa, &xb, &g).unwrap().equals(&closed));
        }
    }
}

#[test]
fn vertex_identities_hold_exactly() {
    for n in [3u32, 5] {
        let root = RootData::new(n, 1).unwrap();
        let b = ExactBackend::new(root, vec![rat(2, 5), rat(-7, 10)]).unwrap();
        let (xa, xb) = (Weight::param(0), Weight::param(1));
        for m in 0..n as i64 {
            let g = (&xa + &xb).add_int(-(2 * m - (n as i64 - 1)));
            let report = check_triple(&b, &xa, &xb, &g).unwrap();
            assert!(report.all_hold(), "N={n} m={m}: {:?}", report.failures().collect::<Vec<_>>());
        }
        assert!(check_binomial_sign(&b, &xa).unwrap());
    }
}

#[test]
fn vertex_identities_hold_symbolically() {
    let root = RootData::new(3, 1).unwrap();
    let b = SymbolicBackend::with_denominator(root, 1, 5);
    let xa = Weight::param(0);
    let xb = Weight::rational(rat(2, 5));
    for m in 0..3 {
        let g = (&xa + &xb).add_int(-(2 * m - 2));
        let report = check_triple(&b, &xa, &xb, &g).unwrap();
        assert!(report.all_hold(), "m={m}: {:?}", report.failures().collect::<Vec<_>>());
    }
    assert!(check_binomial_sign(&b, &xa).unwrap());
}
