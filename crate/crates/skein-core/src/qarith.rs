//! Quantum integers and brackets: `{z} = q^z - q^-z` and `[z] = {z}/{1}`.

use crate::backend::Backend;
use crate::error::{KernelError, Result};
use crate::scalar::Ring;
use crate::weight::Weight;
use alloc::format;

/// `{z} = q^z - q^(-z)`.
pub fn brace<B: Backend>(b: &B, z: &Weight) -> Result<B::S> {
    Ok(b.q_pow(z)? - b.q_pow(&-z)?)
}

/// `{n}` for an integer.
pub fn brace_int<B: Backend>(b: &B, n: i64) -> B::S {
    b.a_pow_int(2 * n) - b.a_pow_int(-2 * n)
}

/// `[z] = {z} / {1}`.
pub fn qnum<B: Backend>(b: &B, z: &Weight) -> Result<B::S> {
    Ok(brace(b, z)?.div(&brace_int(b, 1))?)
}

/// `[n]` for an integer.
pub fn qint<B: Backend>(b: &B, n: i64) -> B::S {
    brace_int(b, n).div(&brace_int(b, 1)).expect("{1} is a unit")
}

/// `{n}! = {n}{n-1}..{1}`.
pub fn brace_fac<B: Backend>(b: &B, n: i64) -> B::S {
    let mut acc = b.one();
    for t in 1..=n {
        acc = acc * brace_int(b, t);
    }
    acc
}

/// `[n]!`.
pub fn qfac<B: Backend>(b: &B, n: i64) -> B::S {
    let mut acc = b.one();
    for t in 1..=n {
        acc = acc * qint(b, t);
    }
    acc
}

/// `{top}{top-1}..{top-len+1}`, a product of `len` factors.
pub fn brace_desc<B: Backend>(b: &B, top: &Weight, len: i64) -> Result<B::S> {
    let mut acc = b.one();
    for t in 0..len {
        acc = acc * brace(b, &top.add_int(-t))?;
    }
    Ok(acc)
}

fn range_length<B: Backend>(b: &B, top: &Weight, bottom: &Weight) -> Result<i64> {
    let n = b.root().n();
    let len = (top - bottom).as_integer().ok_or_else(|| {
        KernelError::OutOfRange(format!("{top} - ({bottom}) is not an integer"))
    })?;
    if !(0..n).contains(&len) {
        return Err(KernelError::OutOfRange(format!("range length {len} outside 0..{}", n - 1)));
    }
    Ok(len)
}

/// `{top, bottom} = {top}{top-1}..{bottom+1}`; requires `top - bottom` in `0..N-1`.
pub fn brace_range<B: Backend>(b: &B, top: &Weight, bottom: &Weight) -> Result<B::S> {
    let len = range_length(b, top, bottom)?;
    brace_desc(b, top, len)
}

/// `qbinom(top, bottom) = {top, bottom} / {top - bottom}!`.
pub fn qbinom<B: Backend>(b: &B, top: &Weight, bottom: &Weight) -> Result<B::S> {
    let len = range_length(b, top, bottom)?;
    Ok(brace_desc(b, top, len)?.div(&brace_fac(b, len))?)
}

/// Integer q-binomial `{m}! / ({j}! {m-j}!)`, zero outside `0..=m`; needs `m < N`.
pub fn qbinom_int<B: Backend>(b: &B, m: i64, j: i64) -> B::S {
    if j < 0 || j > m {
        return b.zero();
    }
    let mut acc = b.one();
    for t in 0..j {
        acc = acc * brace_int(b, m - t);
    }
    acc.div(&brace_fac(b, j)).expect("{j}! is a unit for j < N")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::ExactBackend;
    use crate::root::RootData;
    use alloc::vec;

    #[test]
    fn brackets_vanish_at_multiples_of_n() {
        let root = RootData::new(5, 2).unwrap();
        let b = ExactBackend::new(root, vec![]).unwrap();
        assert!(qnum(&b, &Weight::int(0)).unwrap().is_zero());
        assert!(qnum(&b, &Weight::int(5)).unwrap().is_zero());
        assert!(!qint(&b, 4).is_zero());
        assert!(qbinom_int(&b, 4, 2).equals(&(qfac(&b, 4).div(&(qfac(&b, 2) * qfac(&b, 2))).unwrap())));
    }
}
