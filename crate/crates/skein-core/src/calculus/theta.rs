//! Modified dimensions and the renormalized theta graph.

use super::coeffs::Triple;
use super::morphisms::{y_down, y_up};
use crate::backend::Backend;
use crate::error::{KernelError, Result};
use crate::qarith::brace;
use crate::scalar::Ring;
use crate::weight::Weight;

/// Modified dimension `d(V_x) = {x} / {N x}`. Fails on atypical colors,
/// where the denominator vanishes.
pub fn modified_dim<B: Backend>(b: &B, x: &Weight) -> Result<B::S> {
    let n = b.root().n();
    let den = brace(b, &x.scale_int(n))?;
    if den.is_zero() {
        return Err(KernelError::Degenerate(alloc::format!("color {x} is not typical")));
    }
    Ok(brace(b, x)?.div(&den)?)
}

/// The closed form `{x + 1 - N} / {N (x + 1 - N)}` as it is usually quoted.
/// It differs from [`modified_dim`] and does not make the theta graph
/// independent of the cut edge; it is kept for comparison.
pub fn modified_dim_as_printed<B: Backend>(b: &B, x: &Weight) -> Result<B::S> {
    let n = b.root().n();
    let y = x.add_int(1 - n);
    let den = brace(b, &y.scale_int(n))?;
    if den.is_zero() {
        return Err(KernelError::Degenerate(alloc::format!("color {x} is not typical")));
    }
    Ok(brace(b, &y)?.div(&den)?)
}

/// The theta graph evaluated by cutting each of its three edges.
#[derive(Clone, Debug)]
pub struct ThetaCuts<S> {
    /// Cut along the `a` edge, `None` when that color is atypical.
    pub via_a: Option<S>,
    pub via_b: Option<S>,
    pub via_g: Option<S>,
}

impl<S: Ring> ThetaCuts<S> {
    /// The common value, provided at least one cut exists and all agree.
    pub fn value(&self) -> Result<S> {
        let cuts: alloc::vec::Vec<&S> = [&self.via_a, &self.via_b, &self.via_g].into_iter().flatten().collect();
        let first = cuts.first().ok_or_else(|| KernelError::Degenerate("no typical edge to cut".into()))?;
        if cuts.iter().all(|c| c.equals(first)) {
            Ok((*first).clone())
        } else {
            Err(KernelError::Degenerate("theta depends on the cut edge".into()))
        }
    }
}

fn optional<S>(r: Result<S>) -> Result<Option<S>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(KernelError::Degenerate(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Evaluates the theta graph with vertices `Y^(a,b)_g` and `Y^g_(a,b)`.
pub fn theta_cuts<B: Backend>(b: &B, a: &Weight, bb: &Weight, g: &Weight) -> Result<ThetaCuts<B::S>> {
    let n = b.root().n();
    let nu = n as usize;
    let t = Triple::new(n, a, bb, g)?;
    let up = y_up(b, &t)?;
    let down = y_down(b, &t)?;
    let bubble = down.mul(&up)?;
    let s_g = bubble.scalar_value().ok_or_else(|| KernelError::Degenerate("bubble is not scalar".into()))?;
    let via_g = optional(modified_dim(b, &t.g)).map(|d| d.map(|d| d * s_g))?;

    // Partial traces of up o down with pivotal weights q^((1-N) wt) on the
    // right strand and q^((N-1) wt) on the left strand.
    let f = up.mul(&down)?;
    let weight = |x: &Weight, l: usize| x.add_int(n - 1 - 2 * l as i64);
    let mut right = b.zero();
    let mut left = b.zero();
    for l in 0..nu {
        right = right + f.get(l, l).clone() * b.q_pow(&weight(&t.b, l).scale_int(1 - n))?;
        left = left + f.get(l * nu, l * nu).clone() * b.q_pow(&weight(&t.a, l).scale_int(n - 1))?;
    }
    let via_a = optional(modified_dim(b, &t.a)).map(|d| d.map(|d| d * right))?;
    let via_b = optional(modified_dim(b, &t.b)).map(|d| d.map(|d| d * left))?;
    Ok(ThetaCuts { via_a, via_b, via_g })
}

/// The renormalized theta invariant.
pub fn theta<B: Backend>(b: &B, a: &Weight, bb: &Weight, g: &Weight) -> Result<B::S> {
    theta_cuts(b, a, bb, g)?.value()
}
