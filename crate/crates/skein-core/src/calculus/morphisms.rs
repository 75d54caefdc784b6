//! The elementary morphisms of the graph calculus as matrices in the bases
//! `v_i` of the typical modules.

use super::coeffs::{coef_d_with, coef_e_with, wcoef, KappaTables, Legs, Triple};
use crate::backend::Backend;
use crate::error::{KernelError, Result};
use crate::linalg::Mat;
use crate::scalar::Ring;
use crate::weight::Weight;
use alloc::format;

fn n_of<B: Backend>(b: &B) -> usize {
    b.root().n() as usize
}

/// `Y^(a,b)_g : V_g -> V_a (x) V_b`, an `N^2 x N` matrix with row `i N + j`.
pub fn y_up<B: Backend>(b: &B, t: &Triple) -> Result<Mat<B::S>> {
    y_up_with(b, t, Legs::ALL)
}

/// [`y_up`] with some legs left in the unnormalized basis.
pub fn y_up_with<B: Backend>(b: &B, t: &Triple, legs: Legs) -> Result<Mat<B::S>> {
    let n = n_of(b);
    let tables = KappaTables::new(b, t, legs)?;
    let mut out = Mat::zeros(n * n, n, &b.zero());
    for i in 0..n {
        for j in 0..n {
            let k = i as i64 + j as i64 - t.m();
            if (0..n as i64).contains(&k) {
                out.set(i * n + j, k as usize, coef_d_with(b, t, &tables, i as i64, j as i64, k)?);
            }
        }
    }
    Ok(out)
}

/// `Y^g_(a,b) : V_a (x) V_b -> V_g`, an `N x N^2` matrix.
pub fn y_down<B: Backend>(b: &B, t: &Triple) -> Result<Mat<B::S>> {
    y_down_with(b, t, Legs::ALL)
}

/// [`y_down`] with some legs left in the unnormalized basis.
pub fn y_down_with<B: Backend>(b: &B, t: &Triple, legs: Legs) -> Result<Mat<B::S>> {
    let n = n_of(b);
    let tables = KappaTables::new(b, t, legs)?;
    let mut out = Mat::zeros(n, n * n, &b.zero());
    for i in 0..n {
        for j in 0..n {
            let k = i as i64 + j as i64 - t.m();
            if (0..n as i64).contains(&k) {
                out.set(k as usize, i * n + j, coef_e_with(b, t, &tables, i as i64, j as i64, k)?);
            }
        }
    }
    Ok(out)
}

/// `cap_x : V_x (x) V_(-x) -> 1`, sending `v_i (x) v_(N-1-i)` to `w^i_x`.
pub fn cap<B: Backend>(b: &B, x: &Weight) -> Result<Mat<B::S>> {
    let n = n_of(b);
    let mut out = Mat::zeros(1, n * n, &b.zero());
    for i in 0..n {
        out.set(0, i * n + (n - 1 - i), wcoef(b, i as i64, x)?);
    }
    Ok(out)
}

/// `cup_x : 1 -> V_x (x) V_(-x)`, the vector `sum_i (w^(N-1-i)_(-x))^(-1) v_i (x) v_(N-1-i)`.
pub fn cup<B: Backend>(b: &B, x: &Weight) -> Result<Mat<B::S>> {
    let n = n_of(b);
    let mut out = Mat::zeros(n * n, 1, &b.zero());
    for i in 0..n {
        out.set(i * n + (n - 1 - i), 0, wcoef(b, (n - 1 - i) as i64, &-x)?.inv()?);
    }
    Ok(out)
}

/// `w_x : V_x -> (V_(-x))^*`, sending `v_i` to `w^i_x (v_(N-1-i))^*`.
pub fn wiso<B: Backend>(b: &B, x: &Weight) -> Result<Mat<B::S>> {
    let n = n_of(b);
    let mut out = Mat::zeros(n, n, &b.zero());
    for i in 0..n {
        out.set(n - 1 - i, i, wcoef(b, i as i64, x)?);
    }
    Ok(out)
}

/// A multiplicity morphism together with its transparent defect.
#[derive(Clone, Debug)]
pub struct Multiplicity<S> {
    pub map: Mat<S>,
    /// The `n` of `sigma^n` on the one-dimensional side.
    pub defect: i64,
}

/// `H^(a,b,c) : sigma^n -> V_a (x) V_b (x) V_c`, namely
/// `(Y^(a,b)_(-c) (x) id) o cup_(-c)`.
pub fn multiplicity_up<B: Backend>(b: &B, a: &Weight, bb: &Weight, c: &Weight) -> Result<Multiplicity<B::S>> {
    let n = n_of(b);
    let t = Triple::new(n as i64, a, bb, &-c)?;
    let y = y_up(b, &t)?.kron(&Mat::identity(n, &b.one()));
    Ok(Multiplicity { map: y.mul(&cup(b, &-c)?)?, defect: 2 * t.shift() })
}

/// `H_(a,b,c) : V_a (x) V_b (x) V_c -> sigma^n`, namely
/// `cap_(-c) o (Y^(-c)_(a,b) (x) id)`.
pub fn multiplicity_down<B: Backend>(b: &B, a: &Weight, bb: &Weight, c: &Weight) -> Result<Multiplicity<B::S>> {
    let n = n_of(b);
    let t = Triple::new(n as i64, a, bb, &-c)?;
    let y = y_down(b, &t)?.kron(&Mat::identity(n, &b.one()));
    Ok(Multiplicity { map: cap(b, &-c)?.mul(&y)?, defect: 2 * t.shift() })
}

/// Planar rotation of a vector of `V_a (x) V_b (x) V_c` to one of
/// `V_b (x) V_c (x) V_a`: the first strand is carried around the right.
pub fn rotate<B: Backend>(b: &B, a: &Weight, h: &Mat<B::S>) -> Result<Mat<B::S>> {
    let n = n_of(b);
    if h.rows() != n * n * n || h.cols() != 1 {
        return Err(KernelError::Shape(format!("expected an {}x1 vector, got {}x{}", n * n * n, h.rows(), h.cols())));
    }
    let id = |d: usize| Mat::identity(d, &b.one());
    let open = id(n).kron(h).kron(&id(n)).mul(&cup(b, &-a)?)?;
    cap(b, &-a)?.kron(&id(n * n * n)).mul(&open)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::ExactBackend;
    use crate::root::RootData;
    use alloc::vec;
    use num_rational::BigRational;

    #[test]
    fn cap_has_antidiagonal_support() {
        let root = RootData::new(3, 1).unwrap();
        let b = ExactBackend::new(root, vec![BigRational::new(2.into(), 5.into())]).unwrap();
        let c = cap(&b, &Weight::param(0)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(c.get(0, i * 3 + j).is_zero(), i + j != 2);
            }
        }
    }
}
