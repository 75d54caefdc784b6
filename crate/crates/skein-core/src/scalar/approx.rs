//! Floating complex scalars with a scale-aware zero test.

use super::Ring;
use crate::error::ScalarError;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_complex::Complex64;

/// Relative tolerance used when none is configured.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A complex double that remembers the magnitude of the operands it came
/// from, so cancellation can be told apart from a genuinely small value.
#[derive(Clone, Copy)]
pub struct Approx {
    value: Complex64,
    scale: f64,
    tol: f64,
}

impl fmt::Debug for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.value.re, self.value.im)
    }
}

impl Approx {
    pub fn new(value: Complex64, tol: f64) -> Self {
        Self { value, scale: value.norm(), tol }
    }

    pub fn real(x: f64, tol: f64) -> Self {
        Self::new(Complex64::new(x, 0.0), tol)
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Same value with a new tolerance.
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    fn combine(&self, other: &Self, value: Complex64, scale: f64) -> Self {
        Self { value, scale: scale.max(value.norm()), tol: self.tol.max(other.tol) }
    }
}

impl Add for Approx {
    type Output = Approx;
    fn add(self, rhs: Approx) -> Approx {
        let s = self.scale.max(rhs.scale).max(self.value.norm()).max(rhs.value.norm());
        self.combine(&rhs, self.value + rhs.value, s)
    }
}

impl Sub for Approx {
    type Output = Approx;
    fn sub(self, rhs: Approx) -> Approx {
        let s = self.scale.max(rhs.scale).max(self.value.norm()).max(rhs.value.norm());
        self.combine(&rhs, self.value - rhs.value, s)
    }
}

impl Mul for Approx {
    type Output = Approx;
    fn mul(self, rhs: Approx) -> Approx {
        let (a, b) = (self.value.norm(), rhs.value.norm());
        let s = (self.scale * b).max(rhs.scale * a);
        self.combine(&rhs, self.value * rhs.value, s)
    }
}

impl Neg for Approx {
    type Output = Approx;
    fn neg(mut self) -> Approx {
        self.value = -self.value;
        self
    }
}

impl Ring for Approx {
    fn zero_like(&self) -> Self {
        Self { value: Complex64::new(0.0, 0.0), scale: 0.0, tol: self.tol }
    }

    fn one_like(&self) -> Self {
        Self::real(1.0, self.tol)
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Self::real(n as f64, self.tol)
    }

    fn is_zero(&self) -> bool {
        self.value.norm() <= self.tol * (1.0 + self.scale)
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        if self.value.norm() == 0.0 || self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let v = self.value.inv();
        // relative error carries over to the reciprocal
        let rel = self.scale / self.value.norm();
        Ok(Self { value: v, scale: v.norm() * rel.max(1.0), tol: self.tol })
    }

    fn magnitude(&self) -> f64 {
        self.value.norm()
    }

    fn to_complex(&self) -> Option<Complex64> {
        Some(self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_is_zero() {
        let a = Approx::real(1e6, 1e-9);
        let b = Approx::real(1e6 + 1e-5, 1e-9);
        assert!((a - b).is_zero());
        assert!(!Approx::real(1e-5, 1e-9).is_zero());
    }
}
