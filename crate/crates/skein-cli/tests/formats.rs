use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;
use skein_cli::cache::key_digest;
use skein_cli::fixture::{FixtureFile, OmegaFile};
use skein_cli::serial::MatrixDoc;
use skein_core::linalg::SparseMat;
use skein_core::scalar::{Approx, Cyclo, CycloField, Ring};
use skein_core::skein::*;
use skein_core::calculus::{Sign, SixjArgs};
use skein_core::{RootData, Weight};

fn build_g2() -> (ExactBackendRep, OmegaData) {
    let p = preset(2).unwrap();
    let om = OmegaFile::parse(skein_cli::acceptance::OMEGA_G2).unwrap().to_omega(&p).unwrap();
    let b = exact_backend_for(RootData::new(3, 1).unwrap(), &om).unwrap();
    let rep = build_representation(&b, &p, &om, &mut SixjCache::new(SixjMethod::Closed)).unwrap();
    (rep, om)
}

type ExactBackendRep = Representation<Cyclo>;

#[test]
fn exact_matrices_round_trip_through_json() {
    let (rep, _) = build_g2();
    for op in rep.operators() {
        let doc = MatrixDoc::from_matrix(&op.curve.to_string(), &op.matrix);
        let text = serde_json::to_string(&doc).unwrap();
        let back: MatrixDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        let m = back.to_matrix(op.matrix.template()).unwrap();
        assert!(m.equals(&op.matrix), "{}", op.curve);
    }
}

#[test]
fn matrices_from_another_conductor_are_embedded() {
    let small = CycloField::new(3);
    let big = CycloField::new(60);
    let m = SparseMat::from_triplets(2, 2, &Cyclo::zero(&small), [(0, 1, Cyclo::zeta_pow(&small, 1))]);
    let doc = MatrixDoc::from_matrix("t", &m);
    let back = doc.to_matrix(&Cyclo::zero(&big)).unwrap();
    assert!(back.get(0, 1).equals(&Cyclo::zeta_pow(&big, 20)));
}

#[test]
fn malformed_documents_are_rejected() {
    let (rep, _) = build_g2();
    let op = rep.find("beta_1").unwrap();
    let mut doc = MatrixDoc::from_matrix("beta_1", &op.matrix);
    doc.rows = 3;
    assert!(doc.to_matrix(op.matrix.template()).is_err());
    doc = MatrixDoc::from_matrix("beta_1", &op.matrix);
    doc.schema = "other/2".into();
    assert!(doc.to_matrix(op.matrix.template()).is_err());
}

#[test]
fn fixtures_round_trip_and_match_the_presets() {
    for g in [2, 3] {
        let p = preset(g).unwrap();
        let file = FixtureFile::from_preset(&p);
        let text = serde_json::to_string(&file).unwrap();
        let back: FixtureFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        let q = back.to_preset().unwrap();
        assert_eq!(q.genus, g);
        assert_eq!(q.graph.edge_count(), p.graph.edge_count());
        assert_eq!(q.betas.len(), p.betas.len());
        let shipped = FixtureFile::load(&std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("fixtures/genus{g}.json"))).unwrap();
        assert_eq!(shipped, file);
    }
}

#[test]
fn broken_fixtures_are_rejected() {
    let p = preset(2).unwrap();
    let mut file = FixtureFile::from_preset(&p);
    file.edges[0].dst = 99;
    assert!(file.to_preset().is_err());
    let mut file = FixtureFile::from_preset(&p);
    file.rotation.insert("0".into(), vec![0, 0, 0]);
    assert!(file.to_preset().is_err());
    let mut file = FixtureFile::from_preset(&p);
    file.beta[0].crossings[0].edge = 7;
    assert!(file.to_preset().is_err());
}

#[test]
fn omega_files_need_exactly_one_form() {
    let p = preset(2).unwrap();
    assert!(OmegaFile::parse(r#"{"omega": ["1/3"], "cycles": ["1/3"]}"#).unwrap().to_omega(&p).is_err());
    assert!(OmegaFile::parse("{}").unwrap().to_omega(&p).is_err());
    assert!(OmegaFile::parse(r#"{"omega": ["x"]}"#).unwrap().to_omega(&p).is_err());
}

fn key(n: i64, a: i64, e2: i64) -> SixjKey {
    let w = |p: i64| Weight::rational(BigRational::new(p.into(), 20.into()));
    let args = SixjArgs::new(w(a), w(9), w(a + 9 - 20), Sign::from_i64(1).unwrap(), Sign::from_i64(e2).unwrap());
    SixjKey::new(n, &args).unwrap()
}

#[test]
fn cache_keys_separate_their_inputs() {
    let base = key_digest(3, 1, SixjMethod::Closed, &key(3, 3, -1));
    assert_eq!(base, key_digest(3, 1, SixjMethod::Closed, &key(3, 3, -1)));
    assert_ne!(base, key_digest(3, 1, SixjMethod::Closed, &key(3, 7, -1)));
    assert_ne!(base, key_digest(3, 1, SixjMethod::Closed, &key(3, 3, 1)));
    assert_ne!(base, key_digest(3, 1, SixjMethod::Oracle, &key(3, 3, -1)));
    assert_ne!(base, key_digest(3, 2, SixjMethod::Closed, &key(3, 3, -1)));
}

proptest! {
    #[test]
    fn approx_matrices_round_trip_bit_for_bit(
        entries in prop::collection::vec((0usize..6, 0usize..6, -1e6f64..1e6, -1e6f64..1e6), 0..20)
    ) {
        let template = Approx::real(0.0, 1e-10);
        let triplets: Vec<_> = entries
            .iter()
            .filter(|e| e.2 != 0.0 || e.3 != 0.0)
            .map(|&(i, j, re, im)| (i, j, Approx::new(Complex64::new(re, im), 1e-10)))
            .collect();
        let m = SparseMat::from_triplets(6, 6, &template, triplets);
        let text = serde_json::to_string(&MatrixDoc::from_matrix("p", &m)).unwrap();
        let back = serde_json::from_str::<MatrixDoc>(&text).unwrap().to_matrix(&template).unwrap();
        for ((i, j, v), (k, l, w)) in m.entries().zip(back.entries()) {
            prop_assert_eq!((i, j), (k, l));
            prop_assert_eq!(v.value(), w.value());
        }
        prop_assert_eq!(m.nnz(), back.nnz());
    }

    #[test]
    fn exact_scalars_round_trip(coeffs in prop::collection::vec((-50i64..50, 1i64..12), 1..8), conductor in prop::sample::select(vec![3usize, 5, 12, 20, 60])) {
        let f = CycloField::new(conductor);
        let z = coeffs.iter().enumerate().fold(Cyclo::zero(&f), |acc, (e, &(n, d))| {
            acc + Cyclo::zeta_pow(&f, e as i64) * Cyclo::from_rational(&f, &BigRational::new(n.into(), d.into()))
        });
        let m = SparseMat::from_triplets(1, 1, &Cyclo::zero(&f), [(0, 0, z.clone())]);
        let text = serde_json::to_string(&MatrixDoc::from_matrix("c", &m)).unwrap();
        let back = serde_json::from_str::<MatrixDoc>(&text).unwrap().to_matrix(&Cyclo::zero(&f)).unwrap();
        prop_assert!(back.get(0, 0).equals(&z));
    }
}
