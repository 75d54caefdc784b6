use super::Mat;
use crate::error::{KernelError, Result};
use crate::scalar::Ring;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Square or rectangular matrix stored by columns, each column a sorted
/// list of `(row, value)` with no stored zeros.
#[derive(Clone, Debug)]
pub struct SparseMat<S> {
    rows: usize,
    cols: Vec<Vec<(usize, S)>>,
    template: S,
}

impl<S: Ring> SparseMat<S> {
    pub fn zeros(rows: usize, cols: usize, template: &S) -> Self {
        Self { rows, cols: alloc::vec![Vec::new(); cols], template: template.zero_like() }
    }

    pub fn identity(n: usize, template: &S) -> Self {
        Self::diagonal((0..n).map(|_| template.one_like()).collect(), template)
    }

    pub fn diagonal(entries: Vec<S>, template: &S) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n, template);
        for (i, e) in entries.into_iter().enumerate() {
            if !e.is_zero() {
                m.cols[i].push((i, e));
            }
        }
        m
    }

    /// Builds from `(row, col, value)` triplets, summing repeats.
    pub fn from_triplets(rows: usize, ncols: usize, template: &S, entries: impl IntoIterator<Item = (usize, usize, S)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, S>> = alloc::vec![BTreeMap::new(); ncols];
        for (i, j, v) in entries {
            assert!(i < rows && j < ncols, "triplet out of range");
            match acc[j].remove(&i) {
                Some(old) => {
                    acc[j].insert(i, old + v);
                }
                None => {
                    acc[j].insert(i, v);
                }
            }
        }
        let cols = acc.into_iter().map(|c| c.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect();
        Self { rows, cols, template: template.zero_like() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, S)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn template(&self) -> &S {
        &self.template
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        match self.cols[j].binary_search_by_key(&i, |(r, _)| *r) {
            Ok(p) => self.cols[j][p].1.clone(),
            Err(_) => self.template.clone(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ncols() != other.rows {
            return Err(KernelError::Shape("sparse product shape mismatch".into()));
        }
        let mut cols = Vec::with_capacity(other.ncols());
        for col in &other.cols {
            let mut acc: BTreeMap<usize, S> = BTreeMap::new();
            for (k, b) in col {
                for (i, a) in &self.cols[*k] {
                    let p = a.clone() * b.clone();
                    match acc.remove(i) {
                        Some(old) => {
                            acc.insert(*i, old + p);
                        }
                        None => {
                            acc.insert(*i, p);
                        }
                    }
                }
            }
            cols.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(Self { rows: self.rows, cols, template: self.template.clone() })
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        if self.rows != other.rows || self.ncols() != other.ncols() {
            return Err(KernelError::Shape("sparse sum shape mismatch".into()));
        }
        let mut cols = Vec::with_capacity(self.ncols());
        for (a, b) in self.cols.iter().zip(&other.cols) {
            let mut acc: BTreeMap<usize, S> = a.iter().cloned().collect();
            for (i, v) in b {
                let v = if negate { -v.clone() } else { v.clone() };
                match acc.remove(i) {
                    Some(old) => {
                        acc.insert(*i, old + v);
                    }
                    None => {
                        acc.insert(*i, v);
                    }
                }
            }
            cols.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(Self { rows: self.rows, cols, template: self.template.clone() })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    pub fn scale(&self, s: &S) -> Self {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(i, v)| (*i, v.clone() * s.clone())).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Self { rows: self.rows, cols, template: self.template.clone() }
    }

    pub fn map<T: Ring>(&self, template: &T, f: impl Fn(&S) -> T) -> SparseMat<T> {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(i, v)| (*i, f(v))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMat { rows: self.rows, cols, template: template.zero_like() }
    }

    pub fn to_dense(&self) -> Mat<S> {
        let mut m = Mat::zeros(self.rows, self.ncols(), &self.template);
        for (i, j, v) in self.entries() {
            m.set(i, j, v.clone());
        }
        m
    }

    pub fn from_dense(m: &Mat<S>) -> Self {
        let t = m.template();
        Self::from_triplets(
            m.rows(),
            m.cols(),
            &t,
            (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).filter_map(|(i, j)| {
                let v = m.get(i, j);
                (!v.is_zero()).then(|| (i, j, v.clone()))
            }),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.mul(other)?.equals(&other.mul(self)?))
    }

    /// `Some(c)` when the matrix is `c * identity`.
    pub fn scalar_value(&self) -> Option<S> {
        if self.rows != self.ncols() || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0);
        for (j, col) in self.cols.iter().enumerate() {
            match col.as_slice() {
                [(i, v)] if *i == j && v.equals(&c) => {}
                [] if c.is_zero() => {}
                _ => return None,
            }
        }
        Some(c)
    }

    /// Largest complex deviation from `c * identity`.
    pub fn scalar_deviation(&self, c: &S) -> f64 {
        let mut worst = 0.0f64;
        for (j, col) in self.cols.iter().enumerate() {
            let mut diag_seen = false;
            for (i, v) in col {
                let d = if *i == j {
                    diag_seen = true;
                    v.clone() - c.clone()
                } else {
                    v.clone()
                };
                worst = worst.max(d.to_complex().map(|z| z.norm()).unwrap_or(if d.is_zero() { 0.0 } else { f64::INFINITY }));
            }
            if !diag_seen {
                worst = worst.max(c.to_complex().map(|z| z.norm()).unwrap_or(f64::INFINITY));
            }
        }
        worst
    }

    /// `T_n` through the Chebyshev recursion.
    pub fn chebyshev(&self, n: usize) -> Result<Self> {
        let id = Self::identity(self.rows, &self.template);
        let two = id.scale(&self.template.from_i64_like(2));
        if n == 0 {
            return Ok(two);
        }
        let (mut prev, mut cur) = (two, self.clone());
        for _ in 1..n {
            let next = self.mul(&cur)?.sub(&prev)?;
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    /// Replaces one entry, for perturbation experiments.
    pub fn with_entry(&self, i: usize, j: usize, v: S) -> Self {
        let mut out = self.clone();
        let col = &mut out.cols[j];
        match col.binary_search_by_key(&i, |(r, _)| *r) {
            Ok(p) => {
                if v.is_zero() {
                    col.remove(p);
                } else {
                    col[p].1 = v;
                }
            }
            Err(p) => {
                if !v.is_zero() {
                    col.insert(p, (i, v));
                }
            }
        }
        out
    }
}
