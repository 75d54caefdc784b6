//! Exact arithmetic in the cyclotomic field `Q(zeta_M)`.
//!
//! Elements are stored densely in the power basis `1, z, .., z^(phi-1)` as a
//! vector of integers over one positive common denominator, reduced modulo
//! the `M`-th cyclotomic polynomial.

use super::Ring;
use crate::error::ScalarError;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The field `Q(zeta_M)` together with its reduction tables.
#[derive(Debug)]
pub struct CycloField {
    conductor: usize,
    degree: usize,
    modulus: Vec<BigInt>,
    /// `z^e mod Phi_M` for `0 <= e < M`.
    powers: Vec<Vec<BigInt>>,
    units: Vec<usize>,
}

fn poly_exact_div(p: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    // `d` is monic; the division is known to be exact.
    let mut rem: Vec<BigInt> = p.to_vec();
    let dd = d.len() - 1;
    let qd = p.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in d.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

fn cyclotomic_poly(m: usize, memo: &mut BTreeMap<usize, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&m) {
        return p.clone();
    }
    let mut p = vec![BigInt::zero(); m + 1];
    p[0] = BigInt::from(-1);
    p[m] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            let f = cyclotomic_poly(d, memo);
            p = poly_exact_div(&p, &f);
        }
    }
    memo.insert(m, p.clone());
    p
}

impl CycloField {
    /// Builds `Q(zeta_M)`. `M = 1` gives the rationals.
    pub fn new(conductor: usize) -> Arc<Self> {
        assert!(conductor >= 1, "conductor must be positive");
        let mut memo = BTreeMap::new();
        let modulus = cyclotomic_poly(conductor, &mut memo);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(conductor);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..conductor {
            powers.push(cur.clone());
            // multiply by z
            let top = cur[degree - 1].clone();
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for j in 0..degree {
                    cur[j] -= &top * &modulus[j];
                }
            }
        }
        let units = (1..=conductor).filter(|a| a.gcd(&conductor) == 1).map(|a| a % conductor).collect();
        Arc::new(Self { conductor, degree, modulus, powers, units })
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// `phi(M)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of the monic cyclotomic polynomial, lowest degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Residues coprime to `M`, indexing the Galois group.
    pub fn units(&self) -> &[usize] {
        &self.units
    }

    fn power_row(&self, e: i64) -> &[BigInt] {
        let m = self.conductor as i64;
        &self.powers[e.rem_euclid(m) as usize]
    }
}

/// An element of `Q(zeta_M)`.
#[derive(Clone)]
pub struct Cyclo {
    field: Arc<CycloField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            parts.push(match j {
                0 => alloc::format!("{r}"),
                1 => alloc::format!("({r})*z{}", self.field.conductor),
                _ => alloc::format!("({r})*z{}^{j}", self.field.conductor),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Cyclo {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        Self { field: field.clone(), num: vec![BigInt::zero(); field.degree], den: BigInt::one() }
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: &Arc<CycloField>, n: i64) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = BigInt::from(n);
        z
    }

    pub fn from_rational(field: &Arc<CycloField>, r: &BigRational) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    /// Builds an element from power-basis coefficients; the vector may be
    /// longer than the degree, higher powers are reduced.
    pub fn from_coeffs(field: &Arc<CycloField>, coeffs: &[BigRational]) -> Self {
        let mut acc = Self::zero(field);
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc + Self::zeta_pow(field, j as i64) * Self::from_rational(field, c);
        }
        acc
    }

    /// `zeta_M^e`.
    pub fn zeta_pow(field: &Arc<CycloField>, e: i64) -> Self {
        Self { field: field.clone(), num: field.power_row(e).to_vec(), den: BigInt::one() }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn conductor(&self) -> usize {
        self.field.conductor
    }

    /// Power-basis coefficients as rationals.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.conductor == other.field.conductor
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in self.num.iter_mut() {
                *c = -c.clone();
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    fn add_impl(&self, other: &Self, sign: i8) -> Self {
        assert!(self.same_field(other), "cyclotomic elements from different fields");
        let mut out = Self::zero(&self.field);
        if self.den == other.den {
            for j in 0..self.num.len() {
                out.num[j] = if sign > 0 { &self.num[j] + &other.num[j] } else { &self.num[j] - &other.num[j] };
            }
            out.den = self.den.clone();
        } else {
            for j in 0..self.num.len() {
                let a = &self.num[j] * &other.den;
                let b = &other.num[j] * &self.den;
                out.num[j] = if sign > 0 { a + b } else { a - b };
            }
            out.den = &self.den * &other.den;
        }
        out.normalize();
        out
    }

    fn mul_impl(&self, other: &Self) -> Self {
        assert!(self.same_field(other), "cyclotomic elements from different fields");
        let d = self.field.degree;
        let mut wide = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                wide[i + j] += a * b;
            }
        }
        let mut num: Vec<BigInt> = wide[..d].to_vec();
        for (e, c) in wide.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (j, r) in self.field.power_row(e as i64).iter().enumerate() {
                if !r.is_zero() {
                    num[j] += c * r;
                }
            }
        }
        let mut out = Self { field: self.field.clone(), num, den: &self.den * &other.den };
        out.normalize();
        out
    }

    /// Multiplies by an integer.
    pub fn scale_i64(&self, n: i64) -> Self {
        let mut out = self.clone();
        let b = BigInt::from(n);
        for c in out.num.iter_mut() {
            *c = &*c * &b;
        }
        out.normalize();
        out
    }

    /// Galois conjugate `zeta -> zeta^a`.
    pub fn galois(&self, a: usize) -> Self {
        let mut num = vec![BigInt::zero(); self.field.degree];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, r) in self.field.power_row((a * j) as i64).iter().enumerate() {
                if !r.is_zero() {
                    num[t] += c * r;
                }
            }
        }
        Self { field: self.field.clone(), num, den: self.den.clone() }
    }

    /// Complex conjugate, the Galois element `a = -1`.
    pub fn conj(&self) -> Self {
        self.galois(self.field.conductor - 1)
    }

    /// Field norm down to `Q`.
    pub fn norm(&self) -> BigRational {
        let mut prod = Self::one(&self.field);
        for &a in self.field.units.iter() {
            prod = prod * self.galois(a);
        }
        prod.as_rational().expect("norm is rational")
    }

    /// Maps into `Q(zeta_T)` for a multiple `T` of the conductor.
    pub fn embed(&self, target: &Arc<CycloField>) -> Result<Self, ScalarError> {
        let m = self.field.conductor;
        let t = target.conductor;
        if t % m != 0 {
            return Err(ScalarError::NotRepresentable(alloc::format!(
                "conductor {m} does not divide {t}"
            )));
        }
        let step = (t / m) as i64;
        let mut num = vec![BigInt::zero(); target.degree];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (s, r) in target.power_row(step * j as i64).iter().enumerate() {
                if !r.is_zero() {
                    num[s] += c * r;
                }
            }
        }
        let mut out = Self { field: target.clone(), num, den: self.den.clone() };
        out.normalize();
        Ok(out)
    }

    /// Numeric value under `zeta_M = exp(2 i pi / M)`.
    pub fn complex_value(&self) -> Complex64 {
        let m = self.field.conductor as f64;
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = Complex64::cis(2.0 * core::f64::consts::PI * j as f64 / m);
            acc += w * (c.to_f64().unwrap_or(f64::NAN) / den);
        }
        acc
    }

    /// Common denominator and integer numerators, for reduction modulo primes.
    pub fn integer_parts(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.den == other.den && self.num == other.num
    }
}

impl Eq for Cyclo {}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        self.add_impl(&rhs, 1)
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        self.add_impl(&rhs, -1)
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        self.mul_impl(&rhs)
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &'a Cyclo) -> Cyclo {
        self.add_impl(rhs, 1)
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &'a Cyclo) -> Cyclo {
        self.add_impl(rhs, -1)
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &'a Cyclo) -> Cyclo {
        self.mul_impl(rhs)
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(mut self) -> Cyclo {
        for c in self.num.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Ring for Cyclo {
    fn zero_like(&self) -> Self {
        Self::zero(&self.field)
    }

    fn one_like(&self) -> Self {
        Self::one(&self.field)
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Self::from_i64(&self.field, n)
    }

    fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        if Ring::is_zero(self) {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_rational() {
            let r = BigRational::new(self.num[0].clone(), self.den.clone());
            return Ok(Self::from_rational(&self.field, &r.recip()));
        }
        // x^{-1} = (product of the other conjugates) / norm(x)
        let mut rest = Self::one(&self.field);
        for &a in self.field.units.iter() {
            if a == 1 {
                continue;
            }
            rest = rest * self.galois(a);
        }
        let n = (self * &rest).as_rational().ok_or(ScalarError::DivisionByZero)?;
        Ok(rest * Self::from_rational(&self.field, &n.recip()))
    }

    fn magnitude(&self) -> f64 {
        if Ring::is_zero(self) {
            0.0
        } else {
            1.0
        }
    }

    fn to_complex(&self) -> Option<Complex64> {
        Some(self.complex_value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let f = CycloField::new(12);
        let expect: Vec<BigInt> = [1, 0, -1, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(f.modulus(), &expect[..]);
        assert_eq!(CycloField::new(15).degree(), 8);
        assert_eq!(CycloField::new(1).degree(), 1);
    }

    #[test]
    fn third_roots_sum_to_zero() {
        let f = CycloField::new(3);
        let s = Cyclo::one(&f) + Cyclo::zeta_pow(&f, 1) + Cyclo::zeta_pow(&f, 2);
        assert!(Ring::is_zero(&s));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = CycloField::new(20);
        let x = Cyclo::zeta_pow(&f, 3) + Cyclo::from_i64(&f, 2) - Cyclo::zeta_pow(&f, 7).scale_i64(5);
        let y = x.inv().unwrap();
        assert!((x * y).is_one());
    }

    #[test]
    fn embedding_is_multiplicative() {
        let small = CycloField::new(5);
        let big = CycloField::new(30);
        let a = Cyclo::zeta_pow(&small, 2) + Cyclo::from_i64(&small, 3);
        let b = Cyclo::zeta_pow(&small, 4) - Cyclo::from_i64(&small, 1);
        let lhs = (a.clone() * b.clone()).embed(&big).unwrap();
        let rhs = a.embed(&big).unwrap() * b.embed(&big).unwrap();
        assert_eq!(lhs, rhs);
    }
}
