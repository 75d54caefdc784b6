//! Scalar rings behind one arithmetic contract.
//!
//! [`Cyclo`] is the exact cyclotomic field, [`LaurentPoly`] and [`RatFun`]
//! carry formal color variables over it, [`Approx`] is a floating complex
//! number with a scale-aware zero test, and [`Scalar`] is the tagged union
//! used at API boundaries.

mod approx;
mod cyclo;
mod laurent;
mod ratfun;
mod value;

pub use approx::{Approx, DEFAULT_TOLERANCE};
pub use cyclo::{Cyclo, CycloField};
pub use laurent::LaurentPoly;
pub use ratfun::{RatFun, Valuation};
pub use value::Scalar;

use crate::error::ScalarError;
use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};
use num_complex::Complex64;

/// The arithmetic contract every scalar type satisfies.
///
/// Elements carry their own context (field, variable count, tolerance), so
/// constants are produced from an existing element with the `*_like`
/// constructors.
pub trait Ring:
    Clone + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self, ScalarError>;
    /// Size estimate used for pivot selection. Exact types report 1 for any
    /// nonzero element.
    fn magnitude(&self) -> f64;
    /// Complex value when the element is a constant.
    fn to_complex(&self) -> Option<Complex64>;

    fn is_one(&self) -> bool {
        (self.clone() - self.one_like()).is_zero()
    }

    fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.clone() * other.inv()?)
    }

    fn pow_i64(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * sq.clone();
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.clone() * sq;
            }
        }
        Ok(acc)
    }

    fn equals(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
}
