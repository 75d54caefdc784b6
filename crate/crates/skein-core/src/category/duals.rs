use super::braiding::braiding;
use super::module::{dual_module, Module};
use crate::backend::Backend;
use crate::error::{KernelError, Result};
use crate::linalg::Mat;
use alloc::vec::Vec;

/// Left and right (co)evaluations of a module and its dual.
///
/// Basis of `V*` is the dual basis `e_i^*`; tensor bases are ordered as in
/// [`tensor`](super::tensor).
#[derive(Debug, Clone)]
pub struct DualData<S> {
    pub dual: Module<S>,
    /// `V* (x) V -> 1`, `f (x) v -> f(v)`.
    pub ev: Mat<S>,
    /// `1 -> V (x) V*`, `1 -> sum e_i (x) e_i^*`.
    pub coev: Mat<S>,
    /// `V (x) V* -> 1`, `v (x) f -> f(K^(1-N) v)`.
    pub ev_right: Mat<S>,
    /// `1 -> V* (x) V`, `1 -> sum e_i^* (x) K^(N-1) e_i`.
    pub coev_right: Mat<S>,
}

pub fn dual_data<B: Backend>(b: &B, v: &Module<B::S>) -> Result<DualData<B::S>> {
    let d = v.dim();
    let n = b.root().n();
    let zero = b.zero();
    let mut ev = Mat::zeros(1, d * d, &zero);
    let mut coev = Mat::zeros(d * d, 1, &zero);
    let mut ev_right = Mat::zeros(1, d * d, &zero);
    let mut coev_right = Mat::zeros(d * d, 1, &zero);
    for (i, w) in v.weights().iter().enumerate() {
        let diag = i * d + i;
        ev.set(0, diag, b.one());
        coev.set(diag, 0, b.one());
        ev_right.set(0, diag, b.q_pow(&w.scale_int(1 - n))?);
        coev_right.set(diag, 0, b.q_pow(&w.scale_int(n - 1))?);
    }
    Ok(DualData { dual: dual_module(v), ev, coev, ev_right, coev_right })
}

/// Quantum dimension `ev_right o coev = sum_i q^((1-N) wt_i)`.
pub fn qdim<B: Backend>(b: &B, v: &Module<B::S>) -> Result<B::S> {
    let dd = dual_data(b, v)?;
    Ok(dd.ev_right.mul(&dd.coev)?.get(0, 0).clone())
}

/// `S'(W, V)`: close the `W` strand of the double braiding
/// `c_(V,W) c_(W,V)` on `W (x) V` with the pivotal weights `q^((N-1) wt)`,
/// leaving a scalar endomorphism of the simple module `V`.
pub fn sprime<B: Backend>(b: &B, w: &Module<B::S>, v: &Module<B::S>) -> Result<B::S> {
    let n = b.root().n();
    let double = braiding(b, v, w)?.mul(&braiding(b, w, v)?)?;
    let dv = v.dim();
    let pivots: Vec<B::S> = w.weights().iter().map(|x| b.q_pow(&x.scale_int(n - 1))).collect::<Result<_>>()?;
    let mut closed = Mat::zeros(dv, dv, &b.zero());
    for (a, p) in pivots.iter().enumerate() {
        let blk = double.block(a * dv..(a + 1) * dv, a * dv..(a + 1) * dv).scale(p);
        closed = closed.add(&blk)?;
    }
    closed
        .scalar_value()
        .ok_or_else(|| KernelError::Degenerate("closure of the double braiding is not scalar; is V simple?".into()))
}
