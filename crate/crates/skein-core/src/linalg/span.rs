//! Exact spans of matrices and the dimension of the algebra they generate.

use super::Mat;
use crate::scalar::Ring;
use alloc::collections::VecDeque;
use alloc::vec::Vec;

/// Incrementally reduced set of vectors, one pivot per stored row.
#[derive(Clone, Debug)]
pub struct VectorSpan<S> {
    dim: usize,
    rows: Vec<(usize, Vec<S>)>,
}

impl<S: Ring> VectorSpan<S> {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Adds `v`; returns whether it was independent of the span.
    pub fn insert(&mut self, mut v: Vec<S>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[p].inv().expect("pivot is nonzero");
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                *x = x.clone() - f.clone() * r.clone();
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Dimension of the unital algebra generated by square matrices `gens`,
/// found by multiplying independent words on the left by generators until
/// the span closes.
pub fn algebra_dimension<S: Ring>(gens: &[Mat<S>]) -> usize {
    let Some(first) = gens.first() else { return 0 };
    let n = first.rows();
    let mut span = VectorSpan::new(n * n);
    let id = Mat::identity(n, &first.template());
    let mut queue = VecDeque::new();
    span.insert(id.data().to_vec());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        if span.is_full() {
            break;
        }
        for g in gens {
            let prod = g.mul(&w).expect("square generators of one size");
            if span.insert(prod.data().to_vec()) {
                queue.push_back(prod);
            }
        }
    }
    span.rank()
}
