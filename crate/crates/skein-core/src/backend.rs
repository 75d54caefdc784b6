//! Scalar backends: where the color parameters live and how `A^w` is formed.

use crate::error::{KernelError, ScalarError};
use crate::root::RootData;
use crate::scalar::{Approx, Cyclo, CycloField, LaurentPoly, RatFun, Ring, DEFAULT_TOLERANCE};
use crate::weight::Weight;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// A scalar ring together with values (or formal variables) for the color
/// parameters `x_0, x_1, ..`.
pub trait Backend: Clone + Debug {
    type S: Ring;

    fn root(&self) -> RootData;

    /// Number of color parameters.
    fn nparams(&self) -> usize;

    fn int(&self, n: i64) -> Self::S;

    fn rational(&self, r: &BigRational) -> Self::S;

    /// `A^w`.
    fn a_pow(&self, w: &Weight) -> Result<Self::S, KernelError>;

    /// `A^(w1 * w2)`. Backends without numeric parameter values need one
    /// factor constant.
    fn a_pow_product(&self, w1: &Weight, w2: &Weight) -> Result<Self::S, KernelError> {
        if let Some(c) = w1.as_constant() {
            return self.a_pow(&w2.scale(c));
        }
        if let Some(c) = w2.as_constant() {
            return self.a_pow(&w1.scale(c));
        }
        Err(KernelError::Unsupported(format!("A^(({w1})*({w2})) is not a monomial in this backend")))
    }

    /// Complex value of the parameter `x_i`, when it has one.
    fn param_complex(&self, i: usize) -> Option<Complex64>;

    fn is_exact(&self) -> bool;

    fn zero(&self) -> Self::S {
        self.int(0)
    }

    fn one(&self) -> Self::S {
        self.int(1)
    }

    /// `q^w = A^(2w)`.
    fn q_pow(&self, w: &Weight) -> Result<Self::S, KernelError> {
        self.a_pow(&w.scale_int(2))
    }

    fn a_pow_int(&self, n: i64) -> Self::S {
        self.a_pow(&Weight::int(n)).expect("integer powers of A always exist")
    }
}

fn lcm_of_denominators<'a>(values: impl Iterator<Item = &'a BigRational>) -> BigInt {
    values.fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()))
}

/// Exact field `Q(zeta_M)` with rational parameter values.
///
/// `M = N * D` where `D` is a multiple of every parameter denominator, so
/// `A^x = zeta_N^(k' x)` is a power of `zeta_M`.
#[derive(Clone, Debug)]
pub struct ExactBackend {
    root: RootData,
    values: Vec<BigRational>,
    field: Arc<CycloField>,
    denom: i64,
}

impl ExactBackend {
    pub fn new(root: RootData, values: Vec<BigRational>) -> Result<Self, KernelError> {
        let d = lcm_of_denominators(values.iter());
        let d = d.to_i64().ok_or_else(|| KernelError::Unsupported("denominator too large".into()))?;
        Self::with_denominator(root, values, d)
    }

    /// Like [`ExactBackend::new`] with an explicit exponent denominator `D`.
    pub fn with_denominator(root: RootData, values: Vec<BigRational>, denom: i64) -> Result<Self, KernelError> {
        let need = lcm_of_denominators(values.iter());
        if denom <= 0 || !(BigInt::from(denom) % &need).is_zero() {
            return Err(KernelError::Unsupported(format!(
                "denominator {denom} is not a multiple of the parameter denominators {need}"
            )));
        }
        let m = root.n() * denom;
        if m > 1 << 16 {
            return Err(KernelError::Unsupported(format!("conductor {m} too large")));
        }
        let field = CycloField::new(m as usize);
        Ok(Self { root, values, field, denom })
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// `zeta_M^e`.
    pub fn zeta(&self, e: i64) -> Cyclo {
        Cyclo::zeta_pow(&self.field, e)
    }

    fn a_pow_rational(&self, r: &BigRational) -> Result<Cyclo, KernelError> {
        // A^r = zeta_M^(k' r D)
        let e = r * BigRational::from_integer(BigInt::from(self.root.kprime() * self.denom));
        if !e.is_integer() {
            return Err(ScalarError::NotRepresentable(format!(
                "A^({r}) needs a conductor beyond {}",
                self.field.conductor()
            ))
            .into());
        }
        let m = BigInt::from(self.field.conductor());
        let e = e.to_integer().mod_floor(&m).to_i64().unwrap_or(0);
        Ok(self.zeta(e))
    }
}

impl Backend for ExactBackend {
    type S = Cyclo;

    fn root(&self) -> RootData {
        self.root
    }

    fn nparams(&self) -> usize {
        self.values.len()
    }

    fn int(&self, n: i64) -> Cyclo {
        Cyclo::from_i64(&self.field, n)
    }

    fn rational(&self, r: &BigRational) -> Cyclo {
        Cyclo::from_rational(&self.field, r)
    }

    fn a_pow(&self, w: &Weight) -> Result<Cyclo, KernelError> {
        self.a_pow_rational(&w.eval_rational(&self.values))
    }

    fn a_pow_product(&self, w1: &Weight, w2: &Weight) -> Result<Cyclo, KernelError> {
        let r = w1.eval_rational(&self.values) * w2.eval_rational(&self.values);
        self.a_pow_rational(&r)
    }

    fn param_complex(&self, i: usize) -> Option<Complex64> {
        self.values.get(i).map(|v| Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0))
    }

    fn is_exact(&self) -> bool {
        true
    }
}

/// Rational functions in the variables `u_i = A^(x_i)` over `Q(zeta_(N D))`.
#[derive(Clone, Debug)]
pub struct SymbolicBackend {
    root: RootData,
    nvars: usize,
    field: Arc<CycloField>,
    denom: i64,
}

impl SymbolicBackend {
    pub fn new(root: RootData, nvars: usize) -> Self {
        Self::with_denominator(root, nvars, 1)
    }

    pub fn with_denominator(root: RootData, nvars: usize, denom: i64) -> Self {
        let field = CycloField::new((root.n() * denom) as usize);
        Self { root, nvars, field, denom }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// The formal variable `u_i`.
    pub fn var(&self, i: usize) -> RatFun {
        RatFun::var(&self.field, self.nvars, i)
    }

    /// The value of `u_i` at the parameter `x_i`, namely `exp(2 i pi k' x_i / N)`.
    pub fn u_point(&self, x: Complex64) -> Complex64 {
        let t = 2.0 * core::f64::consts::PI * self.root.kprime() as f64 / self.root.n() as f64;
        (Complex64::new(0.0, t) * x).exp()
    }
}

impl Backend for SymbolicBackend {
    type S = RatFun;

    fn root(&self) -> RootData {
        self.root
    }

    fn nparams(&self) -> usize {
        self.nvars
    }

    fn int(&self, n: i64) -> RatFun {
        RatFun::constant(Cyclo::from_i64(&self.field, n), self.nvars)
    }

    fn rational(&self, r: &BigRational) -> RatFun {
        RatFun::constant(Cyclo::from_rational(&self.field, r), self.nvars)
    }

    fn a_pow(&self, w: &Weight) -> Result<RatFun, KernelError> {
        let mut exps = vec![0i32; self.nvars];
        for (i, c) in w.coeffs() {
            if i >= self.nvars {
                return Err(KernelError::OutOfRange(format!("parameter x{i} has no variable")));
            }
            if !c.is_integer() {
                return Err(ScalarError::NotRepresentable(format!(
                    "A^({w}) has a fractional coefficient on x{i}"
                ))
                .into());
            }
            exps[i] = c.to_integer().to_i32().ok_or(KernelError::OutOfRange("exponent".into()))?;
        }
        let e = w.constant() * BigRational::from_integer(BigInt::from(self.root.kprime() * self.denom));
        if !e.is_integer() {
            return Err(ScalarError::NotRepresentable(format!("A^({})", w.constant())).into());
        }
        let m = BigInt::from(self.field.conductor());
        let e = e.to_integer().mod_floor(&m).to_i64().unwrap_or(0);
        let c = Cyclo::zeta_pow(&self.field, e);
        Ok(RatFun::from_poly(LaurentPoly::monomial(c, exps)))
    }

    fn param_complex(&self, _i: usize) -> Option<Complex64> {
        None
    }

    fn is_exact(&self) -> bool {
        true
    }
}

/// Complex floating parameters with a tolerance for zero tests.
#[derive(Clone, Debug)]
pub struct ApproxBackend {
    root: RootData,
    values: Vec<Complex64>,
    tol: f64,
}

impl ApproxBackend {
    pub fn new(root: RootData, values: Vec<Complex64>) -> Self {
        Self { root, values, tol: DEFAULT_TOLERANCE }
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn real(root: RootData, values: &[f64]) -> Self {
        Self::new(root, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    fn eval(&self, w: &Weight) -> Complex64 {
        let mut acc = Complex64::new(w.constant().to_f64().unwrap_or(f64::NAN), 0.0);
        for (i, c) in w.coeffs() {
            acc += self.values[i] * c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    fn a_pow_complex(&self, z: Complex64) -> Approx {
        let t = 2.0 * core::f64::consts::PI * self.root.kprime() as f64 / self.root.n() as f64;
        Approx::new((Complex64::new(0.0, t) * z).exp(), self.tol)
    }
}

impl Backend for ApproxBackend {
    type S = Approx;

    fn root(&self) -> RootData {
        self.root
    }

    fn nparams(&self) -> usize {
        self.values.len()
    }

    fn int(&self, n: i64) -> Approx {
        Approx::real(n as f64, self.tol)
    }

    fn rational(&self, r: &BigRational) -> Approx {
        Approx::real(r.to_f64().unwrap_or(f64::NAN), self.tol)
    }

    fn a_pow(&self, w: &Weight) -> Result<Approx, KernelError> {
        if let Some((i, _)) = w.coeffs().find(|(i, _)| *i >= self.values.len()) {
            return Err(KernelError::OutOfRange(format!("parameter x{i} has no value")));
        }
        Ok(self.a_pow_complex(self.eval(w)))
    }

    fn a_pow_product(&self, w1: &Weight, w2: &Weight) -> Result<Approx, KernelError> {
        Ok(self.a_pow_complex(self.eval(w1) * self.eval(w2)))
    }

    fn param_complex(&self, i: usize) -> Option<Complex64> {
        self.values.get(i).copied()
    }

    fn is_exact(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_plus_q_inverse_is_minus_one_at_n3() {
        let root = RootData::new(3, 1).unwrap();
        let b = ExactBackend::new(root, vec![]).unwrap();
        let s = b.q_pow(&Weight::int(1)).unwrap() + b.q_pow(&Weight::int(-1)).unwrap();
        assert!(s.equals(&b.int(-1)));
    }

    #[test]
    fn rational_parameters_extend_the_field() {
        let root = RootData::new(3, 1).unwrap();
        let x = BigRational::new(7.into(), 10.into());
        let b = ExactBackend::new(root, vec![x]).unwrap();
        assert_eq!(b.field().conductor(), 30);
        let u = b.a_pow(&Weight::param(0)).unwrap();
        let expect = Complex64::new(0.0, 2.0 * core::f64::consts::PI * 0.7 / 3.0).exp();
        assert!((u.complex_value() - expect).norm() < 1e-12);
    }
}
