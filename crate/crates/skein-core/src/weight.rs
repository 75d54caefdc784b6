//! Affine weight expressions `sum a_i x_i + b` in the color parameters.
//!
//! A color parameter `x_i` is a color measured in units of `k`, so an
//! H-eigenvalue of `V_alpha` reads `x + N - 1 - 2n` with `x = alpha / k`.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight {
    coeffs: BTreeMap<usize, BigRational>,
    constant: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Weight {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn int(n: i64) -> Self {
        Self { coeffs: BTreeMap::new(), constant: rat(n) }
    }

    pub fn rational(r: BigRational) -> Self {
        Self { coeffs: BTreeMap::new(), constant: r }
    }

    /// The parameter `x_i` itself.
    pub fn param(i: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, BigRational::one());
        Self { coeffs, constant: BigRational::zero() }
    }

    pub fn constant(&self) -> &BigRational {
        &self.constant
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(&i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_constant(&self) -> Option<&BigRational> {
        self.is_constant().then_some(&self.constant)
    }

    /// The constant as an integer when the weight is an integer constant.
    pub fn as_integer(&self) -> Option<i64> {
        let c = self.as_constant()?;
        if c.is_integer() {
            i64::try_from(c.to_integer()).ok()
        } else {
            None
        }
    }

    /// Whether every parameter coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(i, c)| (*i, c * r)).collect(),
            constant: &self.constant * r,
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&rat(n))
    }

    pub fn add_int(&self, n: i64) -> Self {
        let mut w = self.clone();
        w.constant += rat(n);
        w
    }

    /// Value after substituting rationals for the parameters.
    pub fn eval_rational(&self, values: &[BigRational]) -> BigRational {
        let mut acc = self.constant.clone();
        for (i, c) in &self.coeffs {
            acc += c * &values[*i];
        }
        acc
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (i, c) in &other.coeffs {
            let e = coeffs.entry(*i).or_insert_with(BigRational::zero);
            if sign > 0 {
                *e += c;
            } else {
                *e -= c;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        let constant = if sign > 0 { &self.constant + &other.constant } else { &self.constant - &other.constant };
        Self { coeffs, constant }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in &self.coeffs {
            if wrote {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "x{i}")?;
            } else {
                write!(f, "{a}*x{i}")?;
            }
            wrote = true;
        }
        if !wrote {
            return write!(f, "{}", self.constant);
        }
        if !self.constant.is_zero() {
            let s = if self.constant.is_negative() { "-" } else { "+" };
            write!(f, " {s} {}", self.constant.abs())?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, rhs: &'a Weight) -> Weight {
        self.combine(rhs, 1)
    }
}

impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn sub(self, rhs: &'a Weight) -> Weight {
        self.combine(rhs, -1)
    }
}

impl Add<&Weight> for Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.combine(rhs, 1)
    }
}

impl Sub<&Weight> for Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.combine(rhs, -1)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        self.combine(&rhs, 1)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self.combine(&rhs, -1)
    }
}

impl Add<i64> for Weight {
    type Output = Weight;
    fn add(self, rhs: i64) -> Weight {
        self.add_int(rhs)
    }
}

impl Sub<i64> for Weight {
    type Output = Weight;
    fn sub(self, rhs: i64) -> Weight {
        self.add_int(-rhs)
    }
}

impl Mul<i64> for Weight {
    type Output = Weight;
    fn mul(self, rhs: i64) -> Weight {
        self.scale_int(rhs)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale_int(-1)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale_int(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_cancel() {
        let w = Weight::param(0) + 3 - (Weight::param(0) - 1);
        assert_eq!(w.as_integer(), Some(4));
        assert_eq!(alloc::format!("{}", Weight::param(1) * 2 - 1), "2*x1 - 1");
    }
}
