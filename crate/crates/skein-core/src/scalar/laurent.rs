//! Multivariate Laurent polynomials over a cyclotomic field.

use super::{Cyclo, CycloField, Ring};
use crate::error::ScalarError;
use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_complex::Complex64;

/// `sum c_e u^e` with `e` ranging over integer exponent vectors.
///
/// Zero coefficients are never stored, so structural equality of the term
/// maps is equality of polynomials.
#[derive(Clone)]
pub struct LaurentPoly {
    field: Arc<CycloField>,
    nvars: usize,
    terms: BTreeMap<Vec<i32>, Cyclo>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, p) in e.iter().enumerate() {
                if *p != 0 {
                    write!(f, "*u{i}^{p}")?;
                }
            }
        }
        Ok(())
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl LaurentPoly {
    pub fn zero(field: &Arc<CycloField>, nvars: usize) -> Self {
        Self { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: Cyclo, nvars: usize) -> Self {
        let mut p = Self::zero(c.field(), nvars);
        if !Ring::is_zero(&c) {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn monomial(c: Cyclo, exps: Vec<i32>) -> Self {
        let nvars = exps.len();
        let mut p = Self::zero(c.field(), nvars);
        if !Ring::is_zero(&c) {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `u_i`.
    pub fn var(field: &Arc<CycloField>, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(Cyclo::one(field), e)
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Cyclo)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(&Vec<i32>, &Cyclo)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Constant value when no variable occurs.
    pub fn as_constant(&self) -> Option<Cyclo> {
        if self.terms.is_empty() {
            return Some(Cyclo::zero(&self.field));
        }
        match self.as_monomial() {
            Some((e, c)) if e.iter().all(|&x| x == 0) => Some(c.clone()),
            _ => None,
        }
    }

    /// Lowest exponent of `u_i`, or `None` for the zero polynomial.
    pub fn min_degree(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).min()
    }

    pub fn max_degree(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Smallest term in the lexicographic order of exponent vectors.
    pub fn trailing_term(&self) -> Option<(&Vec<i32>, &Cyclo)> {
        self.terms.iter().next()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "Laurent polynomials in different variable sets");
    }

    fn accumulate(terms: &mut BTreeMap<Vec<i32>, Cyclo>, e: Vec<i32>, c: Cyclo) {
        use alloc::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(v) => {
                if !Ring::is_zero(&c) {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if Ring::is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        self.check(other);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let c = if negate { -c.clone() } else { c.clone() };
            Self::accumulate(&mut terms, e.clone(), c);
        }
        Self { field: self.field.clone(), nvars: self.nvars, terms }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.check(other);
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                Self::accumulate(&mut terms, e, c1 * c2);
            }
        }
        Self { field: self.field.clone(), nvars: self.nvars, terms }
    }

    /// Multiplies by `c * u^e`.
    pub fn mul_monomial(&self, c: &Cyclo, e: &[i32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.iter().zip(e).map(|(a, b)| a + b).collect(), v * c))
            .filter(|(_, v): &(Vec<i32>, Cyclo)| !Ring::is_zero(v))
            .collect();
        Self { field: self.field.clone(), nvars: self.nvars, terms }
    }

    /// Exact quotient `self / divisor` when it exists as a Laurent
    /// polynomial; `None` otherwise.
    pub fn try_div(&self, divisor: &Self) -> Option<Self> {
        self.check(divisor);
        if divisor.terms.is_empty() {
            return None;
        }
        if self.terms.is_empty() {
            return Some(self.clone());
        }
        let (dl_e, dl_c) = divisor.terms.iter().next_back()?;
        let dl_inv = dl_c.inv().ok()?;
        let (dt_e, _) = divisor.terms.iter().next()?;
        let (st_e, _) = self.terms.iter().next()?;
        // every quotient term is lexicographically at least this
        let floor: Vec<i32> = st_e.iter().zip(dt_e).map(|(a, b)| a - b).collect();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.field, self.nvars);
        let budget = 64 * (self.terms.len() + 4) * (divisor.terms.len() + 4);
        for _ in 0..budget {
            let Some((re, rc)) = rem.terms.iter().next_back() else {
                return Some(quot);
            };
            let qe: Vec<i32> = re.iter().zip(dl_e).map(|(a, b)| a - b).collect();
            if qe < floor {
                return None;
            }
            let qc = rc * &dl_inv;
            rem = rem.add_signed(&divisor.mul_monomial(&qc, &qe), true);
            Self::accumulate(&mut quot.terms, qe, qc);
        }
        None
    }

    /// Re-expresses the coefficients in a field whose conductor is a multiple.
    pub fn embed(&self, target: &Arc<CycloField>) -> Result<Self, ScalarError> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(e.clone(), c.embed(target)?);
        }
        Ok(Self { field: target.clone(), nvars: self.nvars, terms })
    }

    /// Exact substitution `u_i -> values[i]`; the values must live in a field
    /// whose conductor is a multiple of this one.
    pub fn substitute(&self, values: &[Cyclo]) -> Result<Cyclo, ScalarError> {
        assert_eq!(values.len(), self.nvars, "one value per variable");
        let target = match values.first() {
            Some(v) => v.field().clone(),
            None => self.field.clone(),
        };
        let mut powers: Vec<BTreeMap<i32, Cyclo>> = vec![BTreeMap::new(); self.nvars];
        let mut inverses: Vec<Option<Cyclo>> = vec![None; self.nvars];
        let mut acc = Cyclo::zero(&target);
        for (e, c) in &self.terms {
            let mut t = c.embed(&target)?;
            for (i, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if !powers[i].contains_key(&p) {
                    let base = if p < 0 {
                        if inverses[i].is_none() {
                            inverses[i] = Some(values[i].inv().map_err(|_| ScalarError::Pole)?);
                        }
                        inverses[i].clone().unwrap_or_else(|| Cyclo::one(&target))
                    } else {
                        values[i].clone()
                    };
                    let v = base.pow_i64(p.unsigned_abs() as i64)?;
                    powers[i].insert(p, v);
                }
                t = &t * &powers[i][&p];
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Numeric evaluation; coefficients use `zeta_M = exp(2 i pi/M)`.
    pub fn eval_complex(&self, values: &[Complex64]) -> Complex64 {
        assert_eq!(values.len(), self.nvars, "one value per variable");
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = c.complex_value();
            for (i, &p) in e.iter().enumerate() {
                if p != 0 {
                    t *= values[i].powi(p);
                }
            }
            acc += t;
        }
        acc
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_signed(&rhs, false)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_signed(&rhs, true)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self.mul_impl(&rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        let f = CycloField::new(3);
        let u = LaurentPoly::var(&f, 2, 0);
        let v = LaurentPoly::var(&f, 2, 1);
        let one = LaurentPoly::constant(Cyclo::one(&f), 2);
        let a = u.clone() * u.clone() - v.clone();
        let b = u.clone() + one.clone() + v.clone() * v.clone();
        let p = a.clone() * b.clone();
        assert_eq!(p.try_div(&a).unwrap(), b);
        assert!(b.try_div(&a).is_none());
    }
}
