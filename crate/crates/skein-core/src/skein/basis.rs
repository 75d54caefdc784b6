//! Boundary data `omega` and the coloring basis it determines.

use super::graph::{SurfacePreset, TriGraph};
use crate::error::{KernelError, Result};
use crate::weight::Weight;
use alloc::format;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `r` reduced into `(-m, m]` modulo `2m`.
fn wrap(r: &BigRational, m: i64) -> BigRational {
    let period = rat(2 * m);
    let mut x = r - (r / &period).floor() * &period;
    if x > rat(m) {
        x -= period;
    }
    x
}

/// Per-edge boundary values `omega(gamma_e)` in `Q / 2Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaData {
    values: Vec<BigRational>,
}

impl OmegaData {
    /// Validates `values` against `graph`: no value in `Z/2`, and the signed
    /// sum at every vertex is an even integer so that all colorings are
    /// admissible.
    pub fn new(graph: &TriGraph, values: Vec<BigRational>) -> Result<Self> {
        if values.len() != graph.edge_count() {
            return Err(KernelError::Inadmissible(format!(
                "{} boundary values for {} edges",
                values.len(),
                graph.edge_count()
            )));
        }
        for (e, w) in values.iter().enumerate() {
            if (w * rat(2)).is_integer() {
                return Err(KernelError::Inadmissible(format!("omega on edge {e} is {w}, a half-integer")));
            }
        }
        for v in 0..graph.vertex_count() {
            let s: BigRational = graph.half_edges(v).into_iter().map(|(e, sign)| &values[e] * rat(sign)).sum();
            if !s.is_integer() || s.to_integer().is_odd() {
                return Err(KernelError::Inadmissible(format!("signed sum {s} of omega at vertex {v} is not an even integer")));
            }
        }
        Ok(Self { values: values.iter().map(|w| wrap(w, 1)).collect() })
    }

    /// `sum_i t_i c_i` over the cycles of the transverse curves: such a
    /// combination always satisfies the vertex condition.
    pub fn from_cycles(preset: &SurfacePreset, t: &[BigRational]) -> Result<Self> {
        if t.len() != preset.betas.len() {
            return Err(KernelError::OutOfRange(format!("{} coefficients for {} curves", t.len(), preset.betas.len())));
        }
        let e = preset.graph.edge_count();
        let mut values = alloc::vec![BigRational::zero(); e];
        for (ti, b) in t.iter().zip(&preset.betas) {
            for (v, c) in values.iter_mut().zip(b.cycle(e)) {
                *v += ti * rat(c);
            }
        }
        Self::new(&preset.graph, values)
    }

    /// Representatives in `(-1, 1]`.
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Least common denominator of the colors `x = c / 2`, the exponent
    /// denominator an exact backend needs.
    pub fn color_denominator(&self) -> i64 {
        self.values
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm((w / rat(2)).denom()))
            .to_i64()
            .unwrap_or(i64::MAX)
    }
}

/// The basis `col(G)`: per edge the `N` lifts `c` of `omega(gamma_e)` with
/// `-N < c <= N`, ordered lexicographically by lift index with the first
/// edge most significant. Lift index `j` is `c = omega + 2j` reduced into
/// `(-N, N]`, so shifting a color by `2` moves `j` by one modulo `N`.
#[derive(Clone, Debug)]
pub struct ColoringBasis {
    n: usize,
    lifts: Vec<Vec<BigRational>>,
}

impl ColoringBasis {
    pub fn new(n: i64, omega: &OmegaData) -> Self {
        let lifts = omega.values.iter().map(|w| (0..n).map(|j| wrap(&(w + rat(2 * j)), n)).collect()).collect();
        Self { n: n as usize, lifts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.lifts.len()
    }

    /// `N^E`.
    pub fn len(&self) -> usize {
        self.n.pow(self.lifts.len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Lift indices of basis vector `i`.
    pub fn digits(&self, mut i: usize) -> Vec<usize> {
        let mut d = alloc::vec![0; self.lifts.len()];
        for slot in d.iter_mut().rev() {
            *slot = i % self.n;
            i /= self.n;
        }
        d
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &j| acc * self.n + j)
    }

    /// The lift `c` on edge `e` with index `j`.
    pub fn lift(&self, e: usize, j: usize) -> &BigRational {
        &self.lifts[e][j]
    }

    /// The coloring `c` of basis vector `i`.
    pub fn coloring(&self, i: usize) -> Vec<BigRational> {
        self.digits(i).into_iter().enumerate().map(|(e, j)| self.lifts[e][j].clone()).collect()
    }

    /// The module color `x = c / 2` carried by edge `e` at lift `j`.
    pub fn color(&self, e: usize, j: usize) -> Weight {
        Weight::rational(&self.lifts[e][j] / rat(2))
    }

    /// Basis index after moving the lift on each listed edge by `delta`
    /// (a color shift of `2 delta`), wrapping into `(-N, N]`.
    pub fn shifted(&self, i: usize, moves: &[(usize, i64)]) -> usize {
        let mut d = self.digits(i);
        for &(e, delta) in moves {
            d[e] = (d[e] as i64 + delta).rem_euclid(self.n as i64) as usize;
        }
        self.index(&d)
    }

    /// Whether the lift index moved out of `(-N, N]` and was wrapped.
    pub fn wraps(&self, e: usize, j: usize, delta: i64) -> bool {
        let c = &self.lifts[e][j] + rat(2 * delta);
        c.abs() > rat(self.n as i64) || c == rat(-(self.n as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::graph::preset;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn lifts_cover_the_window() {
        let p = preset(2).unwrap();
        let om = OmegaData::new(&p.graph, alloc::vec![q(3, 10), q(9, 20), q(5, 4)]).unwrap();
        let b = ColoringBasis::new(3, &om);
        assert_eq!(b.len(), 27);
        let lifts: Vec<_> = (0..3).map(|j| b.lift(0, j).clone()).collect();
        assert_eq!(lifts, alloc::vec![q(3, 10), q(23, 10), q(-17, 10)]);
        assert_eq!(b.shifted(b.index(&[2, 0, 1]), &[(0, 1), (2, -1)]), b.index(&[0, 0, 0]));
        assert_eq!(om.color_denominator(), 40);
    }

    #[test]
    fn half_integers_and_odd_vertex_sums_are_rejected() {
        let p = preset(2).unwrap();
        assert!(OmegaData::new(&p.graph, alloc::vec![q(1, 2), q(1, 3), q(7, 6)]).is_err());
        assert!(OmegaData::new(&p.graph, alloc::vec![q(3, 10), q(9, 20), q(1, 4)]).is_err());
    }
}
