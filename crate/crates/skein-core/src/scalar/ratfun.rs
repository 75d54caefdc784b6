//! Rational functions in Laurent variables, with discrete valuations.

use super::{Cyclo, CycloField, LaurentPoly, Ring};
use crate::error::ScalarError;
use alloc::sync::Arc;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_complex::Complex64;

/// A valuation value: an integer or `+infinity` for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// `num / den` with a nonzero denominator.
///
/// The denominator is kept with trailing term `1` (lexicographic order of
/// exponents), and monomial denominators are absorbed into the numerator.
/// No polynomial gcd is taken, so equality is decided by cross
/// multiplication.
#[derive(Clone)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?}) / ({:?})", self.num, self.den)
        }
    }
}

impl RatFun {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_empty() {
            return Err(ScalarError::DivisionByZero);
        }
        let mut r = Self { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::constant(Cyclo::one(p.field()), p.nvars());
        Self { num: p, den }
    }

    pub fn constant(c: Cyclo, nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::constant(c, nvars))
    }

    pub fn var(field: &Arc<CycloField>, nvars: usize, i: usize) -> Self {
        Self::from_poly(LaurentPoly::var(field, nvars, i))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn field(&self) -> &Arc<CycloField> {
        self.num.field()
    }

    fn normalize(&mut self) {
        if self.num.is_empty() {
            self.den = LaurentPoly::constant(Cyclo::one(self.num.field()), self.num.nvars());
            return;
        }
        let (e, c) = match self.den.trailing_term() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return,
        };
        let cinv = c.inv().expect("nonzero coefficient");
        let neg: alloc::vec::Vec<i32> = e.iter().map(|x| -x).collect();
        if self.den.len() == 1 {
            self.num = self.num.mul_monomial(&cinv, &neg);
            self.den = LaurentPoly::constant(Cyclo::one(self.num.field()), self.num.nvars());
            return;
        }
        if c.is_one() && e.iter().all(|&x| x == 0) {
            return;
        }
        self.num = self.num.mul_monomial(&cinv, &neg);
        self.den = self.den.mul_monomial(&cinv, &neg);
    }

    /// The constant value when no variable occurs.
    pub fn as_constant(&self) -> Option<Cyclo> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n * d.inv().ok()?)
    }

    /// Discrete valuation in `u_i`: lowest exponent of the numerator minus
    /// that of the denominator.
    pub fn valuation(&self, i: usize) -> Valuation {
        match (self.num.min_degree(i), self.den.min_degree(i)) {
            (Some(a), Some(b)) => Valuation::Finite(a as i64 - b as i64),
            _ => Valuation::Infinite,
        }
    }

    /// Exact evaluation at cyclotomic values of the variables.
    pub fn substitute(&self, values: &[Cyclo]) -> Result<Cyclo, ScalarError> {
        let d = self.den.substitute(values)?;
        if Ring::is_zero(&d) {
            return Err(ScalarError::Pole);
        }
        Ok(self.num.substitute(values)? * d.inv()?)
    }

    /// Complex evaluation; fails at (numerical) poles.
    pub fn eval_complex(&self, values: &[Complex64]) -> Result<Complex64, ScalarError> {
        let d = self.den.eval_complex(values);
        let n = self.num.eval_complex(values);
        if d.norm() <= 1e-12 * (1.0 + n.norm()) {
            return Err(ScalarError::Pole);
        }
        Ok(n / d)
    }

    pub fn embed(&self, target: &Arc<CycloField>) -> Result<Self, ScalarError> {
        Ok(Self { num: self.num.embed(target)?, den: self.den.embed(target)? })
    }

    fn mul_impl(&self, other: &Self) -> Self {
        // cheap cancellation of a denominator against the other numerator
        let one = |p: &LaurentPoly| LaurentPoly::constant(Cyclo::one(p.field()), p.nvars());
        let (mut n1, mut d1) = (self.num.clone(), self.den.clone());
        let (mut n2, mut d2) = (other.num.clone(), other.den.clone());
        if d2.len() > 1 {
            if let Some(q) = n1.try_div(&d2) {
                n1 = q;
                d2 = one(&d2);
            }
        }
        if d1.len() > 1 {
            if let Some(q) = n2.try_div(&d1) {
                n2 = q;
                d1 = one(&d1);
            }
        }
        let mut r = Self { num: &n1 * &n2, den: &d1 * &d2 };
        r.normalize();
        r
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let (num, den) = if self.den == other.den {
            let n = if negate { self.num.clone() - other.num.clone() } else { self.num.clone() + other.num.clone() };
            (n, self.den.clone())
        } else if let Some(q) = other.den.try_div(&self.den) {
            // self.den divides other.den
            let a = &self.num * &q;
            let n = if negate { a - other.num.clone() } else { a + other.num.clone() };
            (n, other.den.clone())
        } else if let Some(q) = self.den.try_div(&other.den) {
            let b = &other.num * &q;
            let n = if negate { self.num.clone() - b } else { self.num.clone() + b };
            (n, self.den.clone())
        } else {
            let a = &self.num * &other.den;
            let b = &other.num * &self.den;
            (if negate { a - b } else { a + b }, &self.den * &other.den)
        };
        let mut r = Self { num, den };
        r.normalize();
        r
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        (&self.num * &other.den) == (&other.num * &self.den)
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        self.add_impl(&rhs, false)
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        self.add_impl(&rhs, true)
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        self.mul_impl(&rhs)
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        Self { num: -self.num, den: self.den }
    }
}

impl Ring for RatFun {
    fn zero_like(&self) -> Self {
        Self::constant(Cyclo::zero(self.field()), self.nvars())
    }

    fn one_like(&self) -> Self {
        Self::constant(Cyclo::one(self.field()), self.nvars())
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Self::constant(Cyclo::from_i64(self.field(), n), self.nvars())
    }

    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        if self.num.is_empty() {
            return Err(ScalarError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    fn magnitude(&self) -> f64 {
        if self.num.is_empty() {
            0.0
        } else {
            1.0
        }
    }

    fn to_complex(&self) -> Option<Complex64> {
        self.as_constant().map(|c| c.complex_value())
    }

    fn equals(&self, other: &Self) -> bool {
        self == other
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_is_additive() {
        let f = CycloField::new(5);
        let u = RatFun::var(&f, 1, 0);
        let one = u.one_like();
        let a = (u.clone() * u.clone() - one.clone()).div(&(u.clone() * u.clone() * u.clone())).unwrap();
        let b = (one.clone() + u.clone()).inv().unwrap();
        assert_eq!(a.valuation(0), Valuation::Finite(-3));
        assert_eq!(b.valuation(0), Valuation::Finite(0));
        assert_eq!((a.clone() * b.clone()).valuation(0), Valuation::Finite(-3));
        assert_eq!(u.zero_like().valuation(0), Valuation::Infinite);
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let f = CycloField::new(3);
        let u = RatFun::var(&f, 1, 0);
        let one = u.one_like();
        let x = (u.clone() * u.clone() - one.clone()).div(&(u.clone() - one.clone())).unwrap();
        assert!(x.equals(&(u + one)));
    }
}
