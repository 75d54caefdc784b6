use super::module::{build_p, build_s, build_sigma, build_v, tensor, Module};
use crate::backend::Backend;
use crate::error::{KernelError, Result};
use crate::linalg::Mat;
use crate::scalar::Ring;
use crate::weight::Weight;
use alloc::format;
use alloc::vec::Vec;

/// A highest-weight vector of `V_x (x) V_y` generating the summand
/// `V_(x + y + N - 1 - 2n)`.
#[derive(Debug, Clone)]
pub struct HighestWeightVector<S> {
    /// Color of the summand in units of `k`.
    pub summand: Weight,
    /// Coordinates in the tensor basis `v_i (x) v_j -> i N + j`.
    pub vector: Vec<S>,
}

/// Finds, for every `n` in `0..N`, the kernel of `E` on the weight space of
/// `V_x (x) V_y` spanned by `v_i (x) v_(n-i)`.
pub fn decompose_vv<B: Backend>(b: &B, x: &Weight, y: &Weight) -> Result<Vec<HighestWeightVector<B::S>>> {
    let n = b.root().n() as usize;
    let vv = tensor(&build_v(b, x)?, &build_v(b, y)?);
    let mut out = Vec::with_capacity(n);
    for level in 0..n {
        let span: Vec<usize> = (0..=level).map(|i| i * n + (level - i)).collect();
        // E maps weight level into level - 1
        let targets: Vec<usize> = if level == 0 {
            Vec::new()
        } else {
            (0..level).map(|i| i * n + (level - 1 - i)).collect()
        };
        let vector = if targets.is_empty() {
            let mut v = alloc::vec![b.zero(); n * n];
            v[span[0]] = b.one();
            v
        } else {
            let restricted = Mat::from_fn(targets.len(), span.len(), |r, c| vv.e().get(targets[r], span[c]).clone());
            let kernel = restricted.kernel();
            if kernel.len() != 1 {
                return Err(KernelError::Degenerate(format!(
                    "highest-weight space at level {level} has dimension {}",
                    kernel.len()
                )));
            }
            let mut v = alloc::vec![b.zero(); n * n];
            for (c, val) in span.iter().zip(&kernel[0]) {
                v[*c] = val.clone();
            }
            v
        };
        // the vector must generate an N-dimensional summand
        let mut cur = vector.clone();
        for _ in 0..n - 1 {
            cur = vv.f().apply(&cur);
        }
        if cur.iter().all(|c| c.is_zero()) {
            return Err(KernelError::Degenerate(format!("summand at level {level} is not typical")));
        }
        out.push(HighestWeightVector { summand: (x + y).add_int(n as i64 - 1 - 2 * level as i64), vector });
    }
    Ok(out)
}

/// The maps of the two short exact sequences
/// `0 -> S_n -> V_(N-1-n) -> S_(N-n-2) (x) sigma^2 -> 0` and
/// `0 -> V_(N-1-n) -> P_n -> V_(-(N-1-n)) -> 0`.
#[derive(Debug, Clone)]
pub struct ExactSequenceMaps<S> {
    pub simple: Module<S>,
    pub typical: Module<S>,
    pub quotient: Module<S>,
    pub projective: Module<S>,
    pub typical_dual: Module<S>,
    /// `e_i -> v_(i + N - 1 - n)`.
    pub incl: Mat<S>,
    /// `v_m -> e_m` for `m <= N - 2 - n`, zero above.
    pub proj: Mat<S>,
    /// `v_i -> x_i`.
    pub incl_p: Mat<S>,
    /// `x_i -> 0`, `y_i -> v_i`.
    pub proj_p: Mat<S>,
}

pub fn exact_sequence_maps<B: Backend>(b: &B, n: u32) -> Result<ExactSequenceMaps<B::S>> {
    let big_n = b.root().n();
    if n as i64 > big_n - 2 {
        return Err(KernelError::OutOfRange(format!("n = {n} exceeds N - 2")));
    }
    let nn = big_n as usize;
    let top = big_n - 1 - n as i64;
    let simple = build_s(b, n)?;
    let typical = build_v(b, &Weight::int(top))?;
    let quotient = tensor(&build_s(b, (big_n - 2) as u32 - n)?, &build_sigma(b, 2)?);
    let projective = build_p(b, n)?;
    let typical_dual = build_v(b, &Weight::int(-top))?;
    let zero = b.zero();
    let mut incl = Mat::zeros(nn, n as usize + 1, &zero);
    for i in 0..=n as usize {
        incl.set(i + top as usize, i, b.one());
    }
    let qd = quotient.dim();
    let mut proj = Mat::zeros(qd, nn, &zero);
    for m in 0..qd {
        proj.set(m, m, b.one());
    }
    let mut incl_p = Mat::zeros(2 * nn, nn, &zero);
    let mut proj_p = Mat::zeros(nn, 2 * nn, &zero);
    for i in 0..nn {
        incl_p.set(i, i, b.one());
        proj_p.set(i, nn + i, b.one());
    }
    Ok(ExactSequenceMaps { simple, typical, quotient, projective, typical_dual, incl, proj, incl_p, proj_p })
}
