//! The quantum torus `XY = qYX` in normal order, its involution and the
//! embedding of the genus-one skein algebra.

use crate::error::{KernelError, Result};
use crate::root::RootData;
use crate::scalar::{Cyclo, CycloField, Ring};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Scalars for one quantum torus: the field `Q(zeta_M)` with `N | M` and
/// the exponent of `q = A^2` in it.
#[derive(Debug)]
pub struct TorusContext {
    root: RootData,
    field: Arc<CycloField>,
    q_exp: i64,
}

impl TorusContext {
    /// Context whose field also contains the `extra`-th roots of unity.
    pub fn new(root: RootData, extra: usize) -> Arc<Self> {
        let n = root.n() as usize;
        let m = n.lcm(&extra.max(1));
        let q_exp = 2 * root.kprime() * (m / n) as i64;
        Arc::new(Self { root, field: CycloField::new(m), q_exp })
    }

    pub fn root(&self) -> RootData {
        self.root
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.root.n() as usize
    }

    /// `q^k`.
    pub fn q_pow(&self, k: i64) -> Cyclo {
        Cyclo::zeta_pow(&self.field, self.q_exp * k)
    }

    pub fn int(&self, k: i64) -> Cyclo {
        Cyclo::from_i64(&self.field, k)
    }

    /// `e^(2 pi i t)` for a rational angle `t`, if the field contains it.
    pub fn unit_root(&self, t: &BigRational) -> Result<Cyclo> {
        let e = t * BigRational::from_integer(BigInt::from(self.field.conductor()));
        if !e.is_integer() {
            return Err(KernelError::OutOfRange(format!("angle {t} needs a larger cyclotomic field")));
        }
        let e = e.to_integer().to_i64().ok_or_else(|| KernelError::OutOfRange(format!("angle {t}")))?;
        Ok(Cyclo::zeta_pow(&self.field, e))
    }
}

/// `sum c_(a,b) X^a Y^b` with every `X` to the left of every `Y`.
#[derive(Clone, Debug)]
pub struct TorusElement {
    ctx: Arc<TorusContext>,
    terms: BTreeMap<(i64, i64), Cyclo>,
}

impl TorusElement {
    pub fn zero(ctx: &Arc<TorusContext>) -> Self {
        Self { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Arc<TorusContext>) -> Self {
        Self::monomial(ctx, 0, 0, ctx.int(1))
    }

    /// `c X^a Y^b`.
    pub fn monomial(ctx: &Arc<TorusContext>, a: i64, b: i64, c: Cyclo) -> Self {
        let mut u = Self::zero(ctx);
        u.add_term((a, b), c);
        u
    }

    pub fn x(ctx: &Arc<TorusContext>) -> Self {
        Self::monomial(ctx, 1, 0, ctx.int(1))
    }

    pub fn y(ctx: &Arc<TorusContext>) -> Self {
        Self::monomial(ctx, 0, 1, ctx.int(1))
    }

    pub fn context(&self) -> &Arc<TorusContext> {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Cyclo)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, a: i64, b: i64) -> Cyclo {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(|| self.ctx.int(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn equals(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }

    fn add_term(&mut self, key: (i64, i64), c: Cyclo) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(|| c.zero_like());
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (k, v) in &self.terms {
            out.add_term(*k, v.clone() * c.clone());
        }
        out
    }

    /// The involution `X -> X^-1`, `Y -> Y^-1`. It is an algebra
    /// automorphism, so the normal-ordered monomial `X^a Y^b` goes to the
    /// normal-ordered `X^-a Y^-b` with no correction factor.
    pub fn theta(&self) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (&(a, b), v) in &self.terms {
            out.add_term((-a, -b), v.clone());
        }
        out
    }

    /// Projection `(u + theta(u)) / 2` onto the invariant part.
    pub fn theta_plus_part(&self) -> Self {
        let half = Cyclo::from_rational(self.ctx.field(), &BigRational::new(1.into(), 2.into()));
        (self.clone() + self.theta()).scale(&half)
    }

    pub fn theta_minus_part(&self) -> Self {
        let half = Cyclo::from_rational(self.ctx.field(), &BigRational::new(1.into(), 2.into()));
        (self.clone() - self.theta()).scale(&half)
    }

    pub fn is_theta_invariant(&self) -> bool {
        self.theta().equals(self)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.ctx), |acc, _| acc * self.clone())
    }
}

impl Add for TorusElement {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, v) in rhs.terms {
            self.add_term(k, v);
        }
        self
    }
}

impl Sub for TorusElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for TorusElement {
    type Output = Self;
    fn neg(self) -> Self {
        let terms = self.terms.into_iter().map(|(k, v)| (k, -v)).collect();
        Self { ctx: self.ctx, terms }
    }
}

impl Mul for TorusElement {
    type Output = Self;
    /// `X^a Y^b X^c Y^d = q^(-bc) X^(a+c) Y^(b+d)`.
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (&(a, b), u) in &self.terms {
            for (&(c, d), v) in &rhs.terms {
                out.add_term((a + c, b + d), u.clone() * v.clone() * self.ctx.q_pow(-b * c));
            }
        }
        out
    }
}

/// The two generating curves of the torus skein algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TorusCurve {
    /// Longitude, sent to `X + X^-1`.
    Longitude,
    /// Meridian, sent to `Y + Y^-1`.
    Meridian,
}

/// A noncommutative polynomial in the two curves with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurveWord {
    pub terms: Vec<(i64, Vec<TorusCurve>)>,
}

impl CurveWord {
    pub fn curve(c: TorusCurve) -> Self {
        Self { terms: alloc::vec![(1, alloc::vec![c])] }
    }

    /// A single product of curves.
    pub fn product(cs: &[TorusCurve]) -> Self {
        Self { terms: alloc::vec![(1, cs.to_vec())] }
    }

    /// `T_n(c)`, with `T_0 = 2`, `T_1 = z` and `T_(k+1) = z T_k - T_(k-1)`.
    pub fn chebyshev(c: TorusCurve, n: usize) -> Self {
        let mut prev: Vec<i64> = alloc::vec![2];
        let mut cur: Vec<i64> = alloc::vec![0, 1];
        if n == 0 {
            cur = prev.clone();
        }
        for _ in 1..n {
            let mut next = alloc::vec![0; cur.len() + 1];
            for (i, &k) in cur.iter().enumerate() {
                next[i + 1] += k;
            }
            for (i, &k) in prev.iter().enumerate() {
                next[i] -= k;
            }
            prev = core::mem::replace(&mut cur, next);
        }
        let terms = cur.iter().enumerate().filter(|(_, &k)| k != 0).map(|(d, &k)| (k, alloc::vec![c; d])).collect();
        Self { terms }
    }
}

/// Image of a curve polynomial in the quantum torus.
pub fn fgs(ctx: &Arc<TorusContext>, w: &CurveWord) -> TorusElement {
    let one = ctx.int(1);
    let lambda = TorusElement::monomial(ctx, 1, 0, one.clone()) + TorusElement::monomial(ctx, -1, 0, one.clone());
    let mu = TorusElement::monomial(ctx, 0, 1, one.clone()) + TorusElement::monomial(ctx, 0, -1, one);
    let mut out = TorusElement::zero(ctx);
    for (k, word) in &w.terms {
        let mut prod = TorusElement::one(ctx);
        for c in word {
            prod = prod
                * match c {
                    TorusCurve::Longitude => lambda.clone(),
                    TorusCurve::Meridian => mu.clone(),
                };
        }
        out = out + prod.scale(&ctx.int(*k));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Arc<TorusContext> {
        TorusContext::new(RootData::new(5, 1).unwrap(), 1)
    }

    #[test]
    fn yx_reorders_with_q_inverse() {
        let c = ctx();
        let yx = TorusElement::y(&c) * TorusElement::x(&c);
        assert!(yx.equals(&TorusElement::monomial(&c, 1, 1, c.q_pow(-1))));
    }

    #[test]
    fn chebyshev_of_longitude_is_x_power() {
        let c = ctx();
        let t = fgs(&c, &CurveWord::chebyshev(TorusCurve::Longitude, 5));
        let one = c.int(1);
        let expected = TorusElement::monomial(&c, 5, 0, one.clone()) + TorusElement::monomial(&c, -5, 0, one);
        assert!(t.equals(&expected));
    }
}
