//! Executable checks of the identities satisfied by the elementary
//! morphisms: equivariance, snakes, vertex bending, bubbles, rotation
//! symmetry of the multiplicity vectors and theta cut independence.

use super::coeffs::Triple;
use super::morphisms::{cap, cup, multiplicity_down, multiplicity_up, rotate, wiso, y_down, y_up};
use super::theta::theta_cuts;
use crate::backend::Backend;
use crate::category::{build_sigma, build_unit, build_v, dual_module, is_equivariant, tensor};
use crate::error::Result;
use crate::linalg::Mat;
use crate::qarith::qbinom;
use crate::scalar::Ring;
use crate::weight::Weight;
use alloc::string::String;
use alloc::vec::Vec;

/// Outcome of one named identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

/// All checks run for one triple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    fn push(&mut self, name: &str, holds: bool) {
        self.checks.push(IdentityCheck { name: name.into(), holds });
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.checks.iter().filter(|c| !c.holds).map(|c| c.name.as_str())
    }
}

fn eq_opt<S: Ring>(m: Option<Mat<S>>, other: &Mat<S>) -> bool {
    m.is_some_and(|m| m.equals(other))
}

/// Checks the cap, cup and `w` identities for one color.
pub fn check_color<B: Backend>(b: &B, x: &Weight, report: &mut IdentityReport) -> Result<()> {
    let n = b.root().n() as usize;
    let id = Mat::identity(n, &b.one());
    let vx = build_v(b, x)?;
    let vmx = build_v(b, &-x)?;
    let unit = build_unit(b)?;
    let cap_x = cap(b, x)?;
    let cup_x = cup(b, x)?;
    report.push("cap equivariant", is_equivariant(&cap_x, &tensor(&vx, &vmx), &unit)?);
    report.push("cup equivariant", is_equivariant(&cup_x, &unit, &tensor(&vx, &vmx))?);
    report.push("w equivariant", is_equivariant(&wiso(b, x)?, &vx, &dual_module(&vmx))?);
    let left = id.kron(&cap(b, &-x)?).mul(&cup_x.kron(&id))?;
    let right = cap_x.kron(&id).mul(&id.kron(&cup(b, &-x)?))?;
    report.push("snake through cup_x", left.equals(&id));
    report.push("snake through cup_-x", right.equals(&id));
    Ok(())
}

/// Checks every vertex identity for the triple `V_g -> V_a (x) V_b`.
pub fn check_triple<B: Backend>(b: &B, a: &Weight, bb: &Weight, g: &Weight) -> Result<IdentityReport> {
    let n = b.root().n();
    let nu = n as usize;
    let mut report = IdentityReport::default();
    let t = Triple::new(n, a, bb, g)?;
    let id = Mat::identity(nu, &b.one());
    let (va, vb, vg) = (build_v(b, a)?, build_v(b, bb)?, build_v(b, &t.g)?);
    let vab = tensor(&va, &vb);
    let up = y_up(b, &t)?;
    let down = y_down(b, &t)?;
    report.push("Y up equivariant", is_equivariant(&up, &vg, &vab)?);
    report.push("Y down equivariant", is_equivariant(&down, &vab, &vg)?);
    for x in [a, bb, &t.g] {
        check_color(b, x, &mut report)?;
    }

    // Bending a leg of the upward vertex reproduces the downward vertex.
    let via_a = cap(b, a)?.kron(&id).mul(&id.kron(&y_up(b, &Triple::new(n, &-a, &t.g, bb)?)?))?;
    let via_b = id.kron(&cap(b, &-bb)?).mul(&y_up(b, &Triple::new(n, &t.g, &-bb, a)?)?.kron(&id))?;
    report.push("Y bent through a", via_a.equals(&down));
    report.push("Y bent through b", via_b.equals(&down));

    report.push("bubble is scalar", down.mul(&up)?.scalar_value().is_some());

    // Multiplicity vectors: equivariance with their defect and rotation.
    let c = -&t.g;
    let h_up = multiplicity_up(b, a, bb, &c)?;
    let h_down = multiplicity_down(b, a, bb, &c)?;
    let vabc = tensor(&vab, &build_v(b, &c)?);
    report.push("H up equivariant", is_equivariant(&h_up.map, &build_sigma(b, h_up.defect)?, &vabc)?);
    report.push("H down equivariant", is_equivariant(&h_down.map, &vabc, &build_sigma(b, h_down.defect)?)?);
    let rotated = rotate(b, a, &h_up.map)?;
    let h_bca = multiplicity_up(b, bb, &c, a)?;
    report.push("H rotation symmetric", eq_opt(Some(rotated), &h_bca.map));

    let cuts = theta_cuts(b, a, bb, g)?;
    report.push("theta independent of the cut edge", cuts.value().is_ok());
    Ok(report)
}

/// `qbinom(N-1-2a+m, N-1-2a) = (-1)^m qbinom(2a, 2a-m)` for `m` in `0..N`.
pub fn check_binomial_sign<B: Backend>(b: &B, a: &Weight) -> Result<bool> {
    let n = b.root().n();
    for m in 0..n {
        let base = a.scale_int(-2).add_int(n - 1);
        let lhs = qbinom(b, &base.add_int(m), &base)?;
        let two_a = a.scale_int(2);
        let rhs = qbinom(b, &two_a, &two_a.add_int(-m))?;
        let rhs = if m % 2 == 0 { rhs } else { -rhs };
        if !lhs.equals(&rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}
