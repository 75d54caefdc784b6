use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;
use skein_core::calculus::*;
use skein_core::category::*;
use skein_core::linalg::Mat;
use skein_core::qarith::brace;
use skein_core::scalar::{Cyclo, CycloField, LaurentPoly, RatFun, Ring, Valuation};
use skein_core::{ApproxBackend, Backend, ExactBackend, RootData, Weight};
use std::sync::Arc;

const DENOM: i64 = 20;

fn field() -> Arc<CycloField> {
    CycloField::new(15)
}

fn cyclo() -> impl Strategy<Value = Cyclo> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..6).prop_map(|cs| {
        let f = field();
        cs.iter().enumerate().fold(Cyclo::zero(&f), |acc, (e, &(n, d))| {
            acc + Cyclo::zeta_pow(&f, 2 * e as i64) * Cyclo::from_rational(&f, &BigRational::new(n.into(), d.into()))
        })
    })
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-2i32..=2, -2i32..=2, -5i64..=5), 1..4).prop_map(|terms| {
        let f = CycloField::new(3);
        terms.iter().fold(LaurentPoly::zero(&f, 2), |acc, &(a, b, c)| {
            acc + LaurentPoly::monomial(Cyclo::from_i64(&f, c), vec![a, b])
        })
    })
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| RatFun::new(n, d).ok())
}

/// Colors `p / 20` that avoid quarter integers, where brackets vanish.
fn color() -> impl Strategy<Value = i64> {
    (-39i64..=39).prop_filter("generic", |p| p % 5 != 0)
}

fn pair() -> impl Strategy<Value = (i64, i64)> {
    (color(), color()).prop_filter("generic sum", |(a, b)| (a + b) % 5 != 0 && (a - b) % 5 != 0)
}

fn w(p: i64) -> Weight {
    Weight::rational(BigRational::new(p.into(), DENOM.into()))
}

fn exact(n: u32) -> ExactBackend {
    ExactBackend::with_denominator(RootData::new(n, 1).unwrap(), Vec::new(), 2 * DENOM).unwrap()
}

fn unit_point() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((0.5f64..1.5, 0.0f64..6.2), 2).prop_map(|v| v.iter().map(|&(r, t)| Complex64::from_polar(r, t)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert!(((a.clone() * b.clone()) * c.clone()).equals(&(a.clone() * (b.clone() * c.clone()))));
        prop_assert!((a.clone() * (b.clone() + c.clone())).equals(&(a.clone() * b.clone() + a.clone() * c.clone())));
        prop_assert!((a.clone() * b.clone()).equals(&(b.clone() * a.clone())));
        if !a.is_zero() {
            prop_assert!((a.clone() * a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn brace_is_periodic_under_integer_n_shifts(p in -79i64..=79, shift in -3i64..=3) {
        for n in [3u32, 5] {
            let b = exact(n);
            let z = w(p);
            let shifted = brace(&b, &z.add_int(shift * i64::from(n))).unwrap();
            prop_assert!(shifted.equals(&brace(&b, &z).unwrap()));
        }
    }

    #[test]
    fn random_tensors_satisfy_the_relations(p in color(), s in 0u32..3, m in -2i64..=2, order in any::<bool>()) {
        let b = exact(3);
        let v = build_v(&b, &w(p)).unwrap();
        let other = if m == 0 { build_s(&b, s).unwrap() } else { build_sigma(&b, m).unwrap() };
        let t = if order { tensor(&v, &other) } else { tensor(&other, &v) };
        prop_assert!(check_relations(&b, &t).unwrap().is_ok());
        // weights add on basis vectors
        let (first, second) = if order { (&v, &other) } else { (&other, &v) };
        for (i, wi) in first.weights().iter().enumerate() {
            for (j, wj) in second.weights().iter().enumerate() {
                prop_assert_eq!(&t.weights()[i * second.dim() + j], &(wi + wj));
            }
        }
    }

    #[test]
    fn quantum_dimensions(p in color(), m in -3i64..=3) {
        let b = exact(5);
        prop_assert!(qdim(&b, &build_v(&b, &w(p)).unwrap()).unwrap().is_zero());
        prop_assert!(qdim(&b, &build_sigma(&b, m).unwrap()).unwrap().is_one());
    }

    #[test]
    fn coefficients_vanish_off_their_support((a, bb) in pair(), m in 0i64..3, i in 0i64..3, j in 0i64..3, n in 0i64..3) {
        let b = exact(3);
        let g = (&w(a) + &w(bb)).add_int(-(2 * m - 2));
        let t = Triple::new(3, &w(a), &w(bb), &g).unwrap();
        if i + j - n != t.m() {
            prop_assert!(coef_c(&b, &t, i, j, n).unwrap().is_zero());
            prop_assert!(coef_d(&b, &t, i, j, n).unwrap().is_zero());
            prop_assert!(coef_e(&b, &t, i, j, n).unwrap().is_zero());
        }
    }

    #[test]
    fn theta_is_independent_of_the_cut((a, bb) in pair(), m in 0i64..5) {
        let b = exact(5);
        let g = (&w(a) + &w(bb)).add_int(-(2 * m - 4));
        let cuts = theta_cuts(&b, &w(a), &w(bb), &g).unwrap();
        prop_assert!(cuts.value().is_ok());
    }

    #[test]
    fn approx_sixj_tracks_the_exact_value((a, bb) in pair(), m in 0i64..3, e1 in prop::bool::ANY, e2 in prop::bool::ANY) {
        let root = RootData::new(3, 1).unwrap();
        let sign = |s: bool| Sign::from_i64(if s { 1 } else { -1 }).unwrap();
        let g = (&w(a) + &w(bb)).add_int(-(2 * m - 2));
        let args = SixjArgs::new(w(a), w(bb), g, sign(e1), sign(e2));
        let exact = sixj_closed(&exact(3), &args).unwrap().complex_value();
        let approx = sixj_closed(&ApproxBackend::new(root, Vec::new()), &args).unwrap().value();
        prop_assert!((exact - approx).norm() <= 1e-9 * (1.0 + exact.norm()));
    }
}

#[test]
fn braiding_is_natural_along_the_exact_sequence() {
    let b = ExactBackend::with_denominator(RootData::new(3, 1).unwrap(), Vec::new(), 2).unwrap();
    let s1 = build_s(&b, 1).unwrap();
    for n in 0..2 {
        let es = exact_sequence_maps(&b, n).unwrap();
        let id = Mat::identity(s1.dim(), &b.one());
        for (f, src, tgt) in [(&es.incl, &es.simple, &es.typical), (&es.proj, &es.typical, &es.quotient)] {
            let lhs = id.kron(f).mul(&braiding(&b, src, &s1).unwrap()).unwrap();
            let rhs = braiding(&b, tgt, &s1).unwrap().mul(&f.kron(&id)).unwrap();
            assert!(lhs.equals(&rhs), "n = {n}");
        }
    }
}

#[test]
fn modules_in_the_trivial_grading_braid_trivially_with_sigma() {
    let b = ExactBackend::with_denominator(RootData::new(5, 1).unwrap(), Vec::new(), 2).unwrap();
    for v in [build_s(&b, 1).unwrap(), build_p(&b, 0).unwrap()] {
        for m in [-2, -1, 1, 2] {
            let sigma = build_sigma(&b, m).unwrap();
            let double = braiding(&b, &v, &sigma).unwrap().mul(&braiding(&b, &sigma, &v).unwrap()).unwrap();
            assert!(double.equals(&Mat::identity(v.dim(), &b.one())));
        }
    }
}

#[test]
fn sigma_braids_with_typical_modules_by_a_character() {
    let b = exact(3);
    for p in [3, 7, -11] {
        let v = build_v(&b, &w(p)).unwrap();
        for m in [-1, 1, 2] {
            let sigma = build_sigma(&b, m).unwrap();
            let double = braiding(&b, &v, &sigma).unwrap().mul(&braiding(&b, &sigma, &v).unwrap()).unwrap();
            let character = b.a_pow(&w(p).scale_int(3 * m)).unwrap();
            assert!(double.equals(&Mat::identity(3, &b.one()).scale(&character)));
            assert!(!character.is_one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rational_function_axioms(f in ratfun(), g in ratfun(), h in ratfun()) {
        prop_assert!(((f.clone() * g.clone()) * h.clone()).equals(&(f.clone() * (g.clone() * h.clone()))));
        prop_assert!((f.clone() * (g.clone() + h.clone())).equals(&(f.clone() * g.clone() + f.clone() * h.clone())));
        if !f.is_zero() {
            prop_assert!((f.clone() * f.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn valuation_is_additive_and_ultrametric(f in ratfun(), g in ratfun()) {
        let (vf, vg) = (f.valuation(0), g.valuation(0));
        let add = |a: Valuation, b: Valuation| match (a, b) {
            (Valuation::Finite(x), Valuation::Finite(y)) => Valuation::Finite(x + y),
            _ => Valuation::Infinite,
        };
        prop_assert_eq!((f.clone() * g.clone()).valuation(0), add(vf, vg));
        let sum = (f + g).valuation(0);
        prop_assert!(sum >= vf.min(vg));
        if vf != vg {
            prop_assert_eq!(sum, vf.min(vg));
        }
    }

    #[test]
    fn complex_evaluation_is_a_homomorphism(f in ratfun(), g in ratfun(), x in unit_point()) {
        let (Ok(a), Ok(b)) = (f.eval_complex(&x), g.eval_complex(&x)) else { return Ok(()) };
        let scale = 1.0 + a.norm() * b.norm() + a.norm() + b.norm();
        if let Ok(p) = (f.clone() * g.clone()).eval_complex(&x) {
            prop_assert!((p - a * b).norm() <= 1e-8 * scale);
        }
        if let Ok(s) = (f + g).eval_complex(&x) {
            prop_assert!((s - (a + b)).norm() <= 1e-8 * scale);
        }
    }
}
