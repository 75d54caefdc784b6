use num_complex::Complex64;
use num_rational::BigRational;
use skein_core::scalar::{Approx, Ring};
use skein_core::skein::certify::pants_algebra_dimension;
use skein_core::skein::*;
use skein_core::{ApproxBackend, Backend, RootData};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn genus2_omega(p: &SurfacePreset) -> OmegaData {
    OmegaData::new(&p.graph, vec![q(3, 10), q(9, 20), q(5, 4)]).unwrap()
}

fn genus3_omega(p: &SurfacePreset) -> OmegaData {
    OmegaData::new(&p.graph, vec![q(3, 10), q(9, 20), q(3, 20), q(-9, 10), q(-3, 4), q(3, 4)]).unwrap()
}

fn approx_backend(n: u32, tol: f64) -> ApproxBackend {
    ApproxBackend::new(RootData::new(n, 1).unwrap(), Vec::<Complex64>::new()).with_tolerance(tol)
}

#[test]
fn basis_sizes() {
    for (g, n, size) in [(2, 3, 27), (2, 5, 125), (3, 3, 729)] {
        let p = preset(g).unwrap();
        let om = if g == 2 { genus2_omega(&p) } else { genus3_omega(&p) };
        assert_eq!(ColoringBasis::new(n, &om).len(), size);
    }
}

#[test]
fn genus2_operators_at_n3() {
    let p = preset(2).unwrap();
    let om = genus2_omega(&p);
    let b = exact_backend_for(RootData::new(3, 1).unwrap(), &om).unwrap();
    let mut cache = SixjCache::new(SixjMethod::Closed);
    let rep = build_representation(&b, &p, &om, &mut cache).unwrap();
    assert_eq!(rep.dimension(), 27);

    // Pants operators are diagonal and pairwise commute.
    for g in &rep.gammas {
        assert!(g.matrix.entries().all(|(i, j, _)| i == j));
        for h in &rep.gammas {
            assert!(g.matrix.commutes_with(&h.matrix).unwrap());
        }
    }
    // A transverse curve only moves the lifts of the edges it crosses.
    for beta in &p.betas {
        let op = rep.find(&beta.name).unwrap();
        for (i, j, _) in op.matrix.entries() {
            let (di, dj) = (rep.basis.digits(i), rep.basis.digits(j));
            for e in 0..3 {
                let step = (di[e] as i64 - dj[e] as i64).rem_euclid(3);
                if beta.crosses(e) {
                    assert!(step == 1 || step == 2, "edge {e} must move by one lift");
                } else {
                    assert_eq!(step, 0);
                }
            }
        }
        for e in (0..3).filter(|&e| !beta.crosses(e)) {
            assert!(op.matrix.commutes_with(&rep.gammas[e].matrix).unwrap());
        }
    }

    let shadow = shadow_certificate(&b, &rep, &om).unwrap();
    assert!(shadow.passed());
    assert_eq!(shadow.worst_deviation(), 0.0);
    let minus_two = b.int(-2);
    for entry in shadow.entries.iter().filter(|e| e.curve.starts_with("beta")) {
        assert!(entry.scalar.as_ref().unwrap().equals(&minus_two));
    }

    let support = burnside_support(&rep);
    assert!(support.simple_spectrum);
    assert_eq!(support.dimension, 729);
    assert_eq!(support.components, vec![27]);
    let words = burnside_words_modp(&rep).unwrap();
    assert_eq!(words.dimension, 729);
    assert_eq!(pants_algebra_dimension(&rep).unwrap(), 27);
    assert!(generation_certificate(&p, 3).passed());

    let yset = yset_certificate(&b, &p, &rep.basis, &mut cache).unwrap();
    assert_eq!(yset.distinct, 1296);
    assert!(yset.degenerate.is_empty());
    assert_eq!(yset.nonstructural_zeros().count(), 0);
    assert!(!yset.zeros.is_empty(), "the two structural classes always vanish");
}

#[test]
fn oracle_and_closed_operators_agree() {
    let p = preset(2).unwrap();
    let om = genus2_omega(&p);
    let b = exact_backend_for(RootData::new(3, 1).unwrap(), &om).unwrap();
    let closed = build_representation(&b, &p, &om, &mut SixjCache::new(SixjMethod::Closed)).unwrap();
    let oracle = build_representation(&b, &p, &om, &mut SixjCache::new(SixjMethod::Oracle)).unwrap();
    for (x, y) in closed.operators().zip(oracle.operators()) {
        assert!(x.matrix.equals(&y.matrix), "{} differs", x.curve);
    }
}

#[test]
fn perturbed_operator_breaks_the_shadow() {
    let p = preset(2).unwrap();
    let om = genus2_omega(&p);
    let b = approx_backend(3, 1e-10);
    let mut rep = build_representation(&b, &p, &om, &mut SixjCache::new(SixjMethod::Closed)).unwrap();
    let clean = shadow_certificate(&b, &rep, &om).unwrap();
    assert!(clean.passed());
    assert!(clean.worst_deviation() < 1e-8);

    let op = &mut rep.betas[0];
    let (i, j, v) = op.matrix.entries().next().map(|(i, j, v)| (i, j, v.clone())).unwrap();
    let bumped = v + Approx::real(1e-3, 1e-10);
    op.matrix = op.matrix.with_entry(i, j, bumped);
    let broken = shadow_certificate(&b, &rep, &om).unwrap();
    assert!(!broken.passed());
    assert!(broken.worst_deviation() > 1e-6);
}

#[test]
fn genus2_n5_approx_is_stable_under_tolerance() {
    let p = preset(2).unwrap();
    let om = genus2_omega(&p);
    for tol in [1e-8, 1e-10] {
        let b = approx_backend(5, tol);
        let rep = build_representation(&b, &p, &om, &mut SixjCache::new(SixjMethod::Closed)).unwrap();
        let cert = burnside_support(&rep);
        assert!(cert.simple_spectrum);
        assert_eq!(cert.dimension, 125 * 125, "tolerance {tol}");
        let shadow = shadow_certificate(&b, &rep, &om).unwrap();
        assert!(shadow.passed() && shadow.worst_deviation() < 1e-8);
    }
}

#[test]
fn genus3_shadow_commutation_and_blocks() {
    let p = preset(3).unwrap();
    let om = genus3_omega(&p);
    let b = exact_backend_for(RootData::new(3, 1).unwrap(), &om).unwrap();
    let rep = build_representation(&b, &p, &om, &mut SixjCache::new(SixjMethod::Closed)).unwrap();
    assert_eq!(rep.dimension(), 729);
    assert!(shadow_certificate(&b, &rep, &om).unwrap().passed());
    // beta_1 and beta_2 are disjoint curves.
    let (b1, b2) = (rep.find("beta_1").unwrap(), rep.find("beta_2").unwrap());
    assert!(b1.matrix.commutes_with(&b2.matrix).unwrap());
    assert!(generation_certificate(&p, 3).passed());
    // The identically vanishing 6j classes split the representation.
    let cert = burnside_support(&rep);
    assert!(cert.simple_spectrum);
    assert_eq!(cert.components, vec![513, 108, 108]);
    assert!(!cert.passed());
}

#[test]
fn generation_fails_when_curves_miss_an_edge() {
    let p = preset(2).unwrap();
    let b1 = p.beta("beta_1").unwrap().clone();
    let mut twin = b1.clone();
    twin.name = "beta_1b".into();
    let degenerate = SurfacePreset::new(2, p.graph.clone(), vec![b1, twin]).unwrap();
    let cert = generation_certificate(&degenerate, 3);
    assert!(!cert.passed());
    assert_eq!(cert.ranks, vec![(3, 2)]);
}

#[test]
fn omega_from_cycles_is_admissible() {
    let p = preset(3).unwrap();
    let t = [q(3, 10), q(3, 20), q(3, 4), q(-9, 20)];
    let om = OmegaData::from_cycles(&p, &t).unwrap();
    assert_eq!(om.values().len(), 6);
    assert!(OmegaData::from_cycles(&p, &t[..2]).is_err());
}
