use super::module::Module;
use crate::backend::Backend;
use crate::error::Result;
use crate::linalg::Mat;
use crate::qarith::{brace_int, qfac};
use crate::scalar::Ring;
use crate::weight::Weight;
use alloc::vec::Vec;

/// The swap `V (x) W -> W (x) V` on basis vectors.
pub fn flip<S: Ring>(dv: usize, dw: usize, template: &S) -> Mat<S> {
    let mut p = Mat::zeros(dv * dw, dv * dw, template);
    for i in 0..dv {
        for j in 0..dw {
            p.set(j * dv + i, i * dw + j, template.one_like());
        }
    }
    p
}

fn power<S: Ring>(m: &Mat<S>, n: usize, id: &Mat<S>) -> Result<Mat<S>> {
    let mut acc = id.clone();
    for _ in 0..n {
        acc = acc.mul(m)?;
    }
    Ok(acc)
}

/// Coefficient `q^(n(n-1)/2) (q - q^-1)^n / [n]!` of the truncated
/// q-exponential.
fn qexp_coefficient<B: Backend>(b: &B, n: usize) -> Result<B::S> {
    let n = n as i64;
    let mut c = b.a_pow_int(n * (n - 1));
    for _ in 0..n {
        c = c * brace_int(b, 1);
    }
    Ok(c.div(&qfac(b, n))?)
}

/// The R-matrix action `q^(H (x) H / 2) exp_q^(<N)((q - q^-1) E (x) F)` on `V (x) W`.
pub fn r_matrix<B: Backend>(b: &B, v: &Module<B::S>, w: &Module<B::S>) -> Result<Mat<B::S>> {
    let n = b.root().n() as usize;
    let (iv, iw) = (v.identity(), w.identity());
    let mut sum = Mat::zeros(v.dim() * w.dim(), v.dim() * w.dim(), &b.zero());
    for t in 0..n {
        let term = power(v.e(), t, &iv)?.kron(&power(w.f(), t, &iw)?);
        if term.is_zero() {
            continue;
        }
        sum = sum.add(&term.scale(&qexp_coefficient(b, t)?))?;
    }
    let mut diag = Vec::with_capacity(v.dim() * w.dim());
    for a in v.weights() {
        for c in w.weights() {
            diag.push(b.a_pow_product(a, c)?);
        }
    }
    Mat::diagonal(diag).mul(&sum)
}

/// The braiding `c_(V,W): V (x) W -> W (x) V`.
pub fn braiding<B: Backend>(b: &B, v: &Module<B::S>, w: &Module<B::S>) -> Result<Mat<B::S>> {
    flip(v.dim(), w.dim(), &b.zero()).mul(&r_matrix(b, v, w)?)
}

/// The twist `K^(N-1) sum_n q^(n(n-1)/2)(q - q^-1)^n/[n]! S(F)^n q^(-H^2/2) E^n`
/// with `S(F) = -KF`.
pub fn twist<B: Backend>(b: &B, v: &Module<B::S>) -> Result<Mat<B::S>> {
    let n = b.root().n() as usize;
    let id = v.identity();
    let sf = v.k().mul(v.f())?.neg();
    let gauss = Mat::diagonal(
        v.weights().iter().map(|w: &Weight| b.a_pow_product(w, &-w)).collect::<Result<Vec<_>>>()?,
    );
    let mut sum = Mat::zeros(v.dim(), v.dim(), &b.zero());
    for t in 0..n {
        let term = Mat::chain(&[&power(&sf, t, &id)?, &gauss, &power(v.e(), t, &id)?])?;
        if term.is_zero() {
            continue;
        }
        sum = sum.add(&term.scale(&qexp_coefficient(b, t)?))?;
    }
    power(v.k(), n - 1, &id)?.mul(&sum)
}
