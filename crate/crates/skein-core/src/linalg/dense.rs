use crate::error::{KernelError, Result};
use crate::scalar::Ring;
use alloc::format;
use alloc::vec::Vec;

/// A dense row-major matrix.
#[derive(Clone, Debug)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Ring> Mat<S> {
    pub fn zeros(rows: usize, cols: usize, zero: &S) -> Self {
        Self { rows, cols, data: alloc::vec![zero.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, one: &S) -> Self {
        let mut m = Self::zeros(n, n, &one.zero_like());
        for i in 0..n {
            m.set(i, i, one.one_like());
        }
        m
    }

    pub fn diagonal(entries: Vec<S>) -> Self {
        let n = entries.len();
        assert!(n > 0, "empty diagonal");
        let mut m = Self::zeros(n, n, &entries[0]);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    /// Builds a matrix from a row-major vector.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match the shape");
        Self { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    /// Any element, used as a template for constants.
    pub fn template(&self) -> S {
        self.data.first().map(|s| s.zero_like()).expect("matrix has no entries")
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<T: Ring, E>(&self, f: impl Fn(&S) -> core::result::Result<T, E>) -> core::result::Result<Mat<T>, E> {
        let data = self.data.iter().map(f).collect::<core::result::Result<Vec<_>, E>>()?;
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(KernelError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.template();
        let mut out = Self::zeros(self.rows, other.cols, &zero);
        let nz_other: Vec<Vec<usize>> =
            (0..other.rows).map(|k| (0..other.cols).filter(|&j| !other.get(k, j).is_zero()).collect()).collect();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in &nz_other[k] {
                    let idx = i * out.cols + j;
                    let prod = a.clone() * other.get(k, j).clone();
                    let cur = core::mem::replace(&mut out.data[idx], zero.clone());
                    out.data[idx] = cur + prod;
                }
            }
        }
        Ok(out)
    }

    /// Matrix product of a chain, left to right: `ms[0] * ms[1] * ..`.
    pub fn chain(ms: &[&Self]) -> Result<Self> {
        let mut it = ms.iter();
        let first = it.next().ok_or_else(|| KernelError::Shape("empty product".into()))?;
        let mut acc = (*first).clone();
        for m in it {
            acc = acc.mul(m)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.clone() - b.clone())
    }

    fn zip(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(KernelError::Shape(format!(
                "{}x{} against {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|a| a.clone() * s.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product; basis index of `a (x) b` is `ia * dim_b + ib`.
    pub fn kron(&self, other: &Self) -> Self {
        let zero = self.template();
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols, &zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.equals(b))
    }

    /// `Some(c)` when the matrix is `c * identity`.
    pub fn scalar_value(&self) -> Option<S> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let ok = if i == j { self.get(i, j).equals(&c) } else { self.get(i, j).is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Largest `|entry - c delta_ij|` in complex absolute value, for
    /// reporting how far a matrix is from `c * identity`.
    pub fn scalar_deviation(&self, c: &S) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = if i == j { self.get(i, j).clone() - c.clone() } else { self.get(i, j).clone() };
                if let Some(z) = d.to_complex() {
                    worst = worst.max(z.norm());
                } else if !d.is_zero() {
                    worst = f64::INFINITY;
                }
            }
        }
        worst
    }

    /// `Some(r)` with `self = r * other`, `None` if not proportional. When
    /// `other` vanishes, `self` must vanish too and `r = 0`.
    pub fn ratio_to(&self, other: &Self) -> Result<Option<S>> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(KernelError::Shape("ratio of differently shaped matrices".into()));
        }
        let pivot = (0..self.data.len()).max_by(|&a, &b| {
            other.data[a].magnitude().partial_cmp(&other.data[b].magnitude()).unwrap_or(core::cmp::Ordering::Equal)
        });
        let Some(p) = pivot.filter(|&p| !other.data[p].is_zero()) else {
            return Ok(if self.is_zero() { Some(self.template()) } else { None });
        };
        let r = self.data[p].div(&other.data[p])?;
        let ok = self.data.iter().zip(&other.data).all(|(a, b)| (a.clone() - r.clone() * b.clone()).is_zero());
        Ok(ok.then_some(r))
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows)
                .filter(|&i| !self.get(i, c).is_zero())
                .max_by(|&a, &b| {
                    self.get(a, c).magnitude().partial_cmp(&self.get(b, c).magnitude()).unwrap_or(core::cmp::Ordering::Equal)
                });
            let Some(p) = best else { continue };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = self.get(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in 0..self.cols {
                    if self.get(r, j).is_zero() {
                        continue;
                    }
                    let v = self.get(i, j).clone() - f.clone() * self.get(r, j).clone();
                    self.set(i, j, v);
                }
                // clear exactly; in floating mode the residue is noise
                let z = self.template();
                self.set(i, c, z);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of the right kernel, as column vectors.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let zero = self.template();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = alloc::vec![zero.clone(); self.cols];
            v[free] = zero.one_like();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(KernelError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let one = self.template().one_like();
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                one.clone()
            } else {
                one.zero_like()
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(KernelError::Degenerate("singular matrix".into()));
        }
        Ok(Self::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
    }

    /// Applies to a column vector.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        let zero = self.template();
        (0..self.rows)
            .map(|i| {
                let mut acc = zero.clone();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Sub-matrix of the given row and column ranges.
    pub fn block(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// `T_n` of the matrix through `T_(m+2) = X T_(m+1) - T_m`.
    pub fn chebyshev(&self, n: usize) -> Result<Self> {
        let one = self.template().one_like();
        let id = Self::identity(self.rows, &one);
        if n == 0 {
            return Ok(id.scale(&one.from_i64_like(2)));
        }
        let mut prev = id.scale(&one.from_i64_like(2));
        let mut cur = self.clone();
        for _ in 1..n {
            let next = self.mul(&cur)?.sub(&prev)?;
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }
}
