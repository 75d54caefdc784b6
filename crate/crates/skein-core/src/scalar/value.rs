//! The tagged scalar used at API boundaries.

use super::{Approx, Cyclo, RatFun, Ring};
use crate::error::ScalarError;
use num_complex::Complex64;

/// Either an exact rational function (possibly constant) or a floating
/// approximation. Arithmetic never mixes the two.
#[derive(Debug, Clone)]
pub enum Scalar {
    Exact(RatFun),
    Approx(Approx),
}

impl From<RatFun> for Scalar {
    fn from(r: RatFun) -> Self {
        Scalar::Exact(r)
    }
}

impl From<Cyclo> for Scalar {
    fn from(c: Cyclo) -> Self {
        Scalar::Exact(RatFun::constant(c, 0))
    }
}

impl From<Approx> for Scalar {
    fn from(a: Approx) -> Self {
        Scalar::Approx(a)
    }
}

macro_rules! checked {
    ($name:ident, $op:tt) => {
        pub fn $name(&self, other: &Self) -> Result<Self, ScalarError> {
            match (self, other) {
                (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a.clone() $op b.clone())),
                (Scalar::Approx(a), Scalar::Approx(b)) => Ok(Scalar::Approx(*a $op *b)),
                _ => Err(ScalarError::ModeMismatch),
            }
        }
    };
}

impl Scalar {
    checked!(checked_add, +);
    checked!(checked_sub, -);
    checked!(checked_mul, *);

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a.div(b)?)),
            (Scalar::Approx(a), Scalar::Approx(b)) => Ok(Scalar::Approx(a.div(b)?)),
            _ => Err(ScalarError::ModeMismatch),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(a) => a.is_zero(),
            Scalar::Approx(a) => a.is_zero(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// Complex value of a constant; `None` for a non-constant function.
    pub fn to_complex(&self) -> Option<Complex64> {
        match self {
            Scalar::Exact(a) => a.to_complex(),
            Scalar::Approx(a) => Some(a.value()),
        }
    }

    /// Evaluation with complex values for the formal variables.
    pub fn eval_complex(&self, values: &[Complex64]) -> Result<Complex64, ScalarError> {
        match self {
            Scalar::Exact(a) => a.eval_complex(values),
            Scalar::Approx(a) => Ok(a.value()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycloField;

    #[test]
    fn modes_do_not_mix() {
        let f = CycloField::new(3);
        let e = Scalar::from(Cyclo::one(&f));
        let a = Scalar::from(Approx::real(1.0, 1e-9));
        assert_eq!(e.checked_add(&a).unwrap_err(), ScalarError::ModeMismatch);
        assert!(e.checked_sub(&e).unwrap().is_zero());
    }
}
