//! The cyclic representations `r_(x,y)` of the quantum torus, their
//! restrictions to the invariant subalgebra, and the genus-one
//! classification.

use super::algebra::{fgs, CurveWord, TorusContext, TorusCurve, TorusElement};
use crate::error::{KernelError, Result};
use crate::linalg::span::algebra_dimension;
use crate::linalg::Mat;
use crate::scalar::{Cyclo, Ring};
use alloc::sync::Arc;
use alloc::vec::Vec;

/// `r_(x,y)` on `C^N`: `X -> xU`, `Y -> yW` with `U e_i = q^i e_i` and
/// `W e_i = e_(i+1)`.
#[derive(Clone, Debug)]
pub struct ToroidalRep {
    ctx: Arc<TorusContext>,
    x: Cyclo,
    y: Cyclo,
}

impl ToroidalRep {
    pub fn new(ctx: &Arc<TorusContext>, x: Cyclo, y: Cyclo) -> Result<Self> {
        if x.is_zero() || y.is_zero() {
            return Err(KernelError::Degenerate("x and y must be nonzero".into()));
        }
        Ok(Self { ctx: ctx.clone(), x, y })
    }

    pub fn dimension(&self) -> usize {
        self.ctx.n()
    }

    pub fn context(&self) -> &Arc<TorusContext> {
        &self.ctx
    }

    /// `U`, the clock matrix.
    pub fn clock(&self) -> Mat<Cyclo> {
        Mat::diagonal((0..self.dimension() as i64).map(|i| self.ctx.q_pow(i)).collect())
    }

    /// `W`, the cyclic shift.
    pub fn shift(&self) -> Mat<Cyclo> {
        let n = self.dimension();
        Mat::from_fn(n, n, |r, c| self.ctx.int(i64::from(r == (c + 1) % n)))
    }

    /// Image of `X^a Y^b`: `e_i -> x^a y^b q^(a (i + b)) e_(i+b)`.
    fn monomial(&self, a: i64, b: i64) -> Result<Mat<Cyclo>> {
        let n = self.dimension() as i64;
        let coeff = self.x.pow_i64(a)? * self.y.pow_i64(b)?;
        let mut m = Mat::zeros(n as usize, n as usize, &self.ctx.int(0));
        for i in 0..n {
            let target = (i + b).rem_euclid(n) as usize;
            m.set(target, i as usize, coeff.clone() * self.ctx.q_pow(a * (i + b)));
        }
        Ok(m)
    }

    pub fn apply(&self, u: &TorusElement) -> Result<Mat<Cyclo>> {
        let n = self.dimension();
        let mut out = Mat::zeros(n, n, &self.ctx.int(0));
        for (&(a, b), c) in u.terms() {
            out = out.add(&self.monomial(a, b)?.scale(c))?;
        }
        Ok(out)
    }

    /// `pi_(x,y)` of a curve polynomial, through the embedding.
    pub fn curve(&self, w: &CurveWord) -> Result<Mat<Cyclo>> {
        self.apply(&fgs(&self.ctx, w))
    }
}

/// The reflection `theta(e_i) = e_(-i)`.
pub fn reflection(ctx: &TorusContext) -> Mat<Cyclo> {
    let n = ctx.n();
    Mat::from_fn(n, n, |r, c| ctx.int(i64::from(r == (n - c) % n)))
}

/// Which eigenspace of the reflection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// Spanned by `e_i + e_(-i)`, dimension `(N + 1) / 2`.
    Even,
    /// Spanned by `e_i - e_(-i)`, dimension `(N - 1) / 2`.
    Odd,
}

impl Parity {
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    /// Indices `i` of the basis `v_i = e_i +- e_(-i)`.
    pub fn indices(self, n: usize) -> Vec<usize> {
        let half = (n - 1) / 2;
        match self {
            Parity::Even => (0..=half).collect(),
            Parity::Odd => (1..=half).collect(),
        }
    }

    pub fn dimension(self, n: usize) -> usize {
        self.indices(n).len()
    }
}

/// Matrix of `m` on the reflection eigenspace, in the basis `v_i`. Fails
/// if the eigenspace is not invariant.
pub fn restrict(m: &Mat<Cyclo>, parity: Parity) -> Result<Mat<Cyclo>> {
    let n = m.rows();
    let idx = parity.indices(n);
    let s = parity.sign();
    let zero = m.template();
    let mut out = Mat::zeros(idx.len(), idx.len(), &zero);
    for (c, &i) in idx.iter().enumerate() {
        // image of v_i = e_i + s e_(-i)
        let neg = (n - i) % n;
        let image: Vec<Cyclo> = (0..n)
            .map(|r| {
                let mut v = m.get(r, i).clone();
                if neg != i {
                    v = v + m.get(r, neg).scale_i64(s);
                } else {
                    v = v.scale_i64(1 + s);
                }
                v
            })
            .collect();
        for r in 0..n {
            let mirror = (n - r) % n;
            if !image[mirror].equals(&image[r].scale_i64(s)) {
                return Err(KernelError::Degenerate("subspace is not invariant".into()));
            }
        }
        for (row, &j) in idx.iter().enumerate() {
            let coeff = if j == 0 { image[0].div(&zero.from_i64_like(2))? } else { image[j].clone() };
            out.set(row, c, coeff);
        }
    }
    Ok(out)
}

/// `pi^(+-)` of the longitude and the meridian on `V^(+-)`, written
/// directly from `lambda v_i = e1 (q^i + q^-i) v_i` and
/// `mu v_i = e2 (v_(i-1) + v_(i+1))`.
#[derive(Clone, Debug)]
pub struct CentralPiece {
    pub parity: Parity,
    pub longitude: Mat<Cyclo>,
    pub meridian: Mat<Cyclo>,
}

impl CentralPiece {
    pub fn new(ctx: &TorusContext, e1: i64, e2: i64, parity: Parity) -> Self {
        let n = ctx.n();
        let idx = parity.indices(n);
        let d = idx.len();
        let zero = ctx.int(0);
        let mut longitude = Mat::zeros(d, d, &zero);
        let mut meridian = Mat::zeros(d, d, &zero);
        let position = |j: i64| -> Option<(usize, i64)> {
            // v_j with j reduced to -h..=h, then folded with v_(-j) = s v_j
            let h = ((n - 1) / 2) as i64;
            let mut r = j.rem_euclid(n as i64);
            if r > h {
                r -= n as i64;
            }
            let sign = if r < 0 { parity.sign() } else { 1 };
            idx.iter().position(|&i| i as i64 == r.abs()).map(|p| (p, sign))
        };
        for (c, &i) in idx.iter().enumerate() {
            let i = i as i64;
            longitude.set(c, c, (ctx.q_pow(i) + ctx.q_pow(-i)).scale_i64(e1));
            for j in [i - 1, i + 1] {
                if let Some((row, sign)) = position(j) {
                    let v = meridian.get(row, c).clone() + ctx.int(e2 * sign);
                    meridian.set(row, c, v);
                }
            }
        }
        Self { parity, longitude, meridian }
    }

    pub fn dimension(&self) -> usize {
        self.longitude.rows()
    }

    /// Dimension of the algebra generated by the two curves.
    pub fn algebra_dimension(&self) -> usize {
        algebra_dimension(&[self.longitude.clone(), self.meridian.clone()])
    }

    pub fn irreducible(&self) -> bool {
        self.algebra_dimension() == self.dimension() * self.dimension()
    }
}

/// Outcome of the genus-one classification at a point `(x, y)`.
#[derive(Clone, Debug)]
pub enum GenusOneClass {
    /// `(x^N, y^N)` is not central: `pi_(x,y)` is irreducible of dimension
    /// `N` with the recorded shadow.
    Generic {
        dimension: usize,
        longitude_shadow: Cyclo,
        meridian_shadow: Cyclo,
        /// `T_N` of both curve images equal the shadow times the identity.
        shadow_verified: bool,
        algebra_dimension: usize,
    },
    /// `(x^N, y^N) = (e1, e2)` with signs: the representation splits into
    /// the reflection eigenspaces.
    Central {
        signs: (i64, i64),
        even: CentralSummary,
        odd: CentralSummary,
        /// Span of the images of curve words in `r_(e1,e2)`.
        image_dimension: usize,
        /// `dim End(V+) + dim End(V-)`.
        expected_image_dimension: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSummary {
    pub dimension: usize,
    pub algebra_dimension: usize,
    /// The closed formulas agree with the restriction of `r_(e1,e2)`.
    pub matches_restriction: bool,
}

impl CentralSummary {
    pub fn irreducible(&self) -> bool {
        self.algebra_dimension == self.dimension * self.dimension
    }
}

impl GenusOneClass {
    pub fn passed(&self) -> bool {
        match self {
            GenusOneClass::Generic { dimension, shadow_verified, algebra_dimension, .. } => {
                *shadow_verified && *algebra_dimension == dimension * dimension
            }
            GenusOneClass::Central { even, odd, image_dimension, expected_image_dimension, .. } => {
                even.irreducible()
                    && odd.irreducible()
                    && even.matches_restriction
                    && odd.matches_restriction
                    && image_dimension == expected_image_dimension
            }
        }
    }
}

fn sign_of(c: &Cyclo) -> Option<i64> {
    if c.is_one() {
        Some(1)
    } else if (c.clone() + c.one_like()).is_zero() {
        Some(-1)
    } else {
        None
    }
}

/// Classifies the representation attached to `(x, y)`.
pub fn classify(ctx: &Arc<TorusContext>, x: Cyclo, y: Cyclo) -> Result<GenusOneClass> {
    let n = ctx.n();
    let xn = x.pow_i64(n as i64)?;
    let yn = y.pow_i64(n as i64)?;
    let lambda = CurveWord::curve(TorusCurve::Longitude);
    let mu = CurveWord::curve(TorusCurve::Meridian);
    if let (Some(e1), Some(e2)) = (sign_of(&xn), sign_of(&yn)) {
        // Up to isomorphism only (x^N, y^N) matters, and e^N = e.
        let rep = ToroidalRep::new(ctx, ctx.int(e1), ctx.int(e2))?;
        let (l, m) = (rep.curve(&lambda)?, rep.curve(&mu)?);
        let summary = |parity| -> Result<CentralSummary> {
            let piece = CentralPiece::new(ctx, e1, e2, parity);
            let matches = restrict(&l, parity)?.equals(&piece.longitude) && restrict(&m, parity)?.equals(&piece.meridian);
            Ok(CentralSummary {
                dimension: piece.dimension(),
                algebra_dimension: piece.algebra_dimension(),
                matches_restriction: matches,
            })
        };
        let even = summary(Parity::Even)?;
        let odd = summary(Parity::Odd)?;
        let expected = even.dimension.pow(2) + odd.dimension.pow(2);
        return Ok(GenusOneClass::Central {
            signs: (e1, e2),
            even,
            odd,
            image_dimension: algebra_dimension(&[l, m]),
            expected_image_dimension: expected,
        });
    }
    let rep = ToroidalRep::new(ctx, x, y)?;
    let (l, m) = (rep.curve(&lambda)?, rep.curve(&mu)?);
    let longitude_shadow = xn.clone() + xn.inv()?;
    let meridian_shadow = yn.clone() + yn.inv()?;
    let scalar_is = |mat: &Mat<Cyclo>, s: &Cyclo| -> Result<bool> {
        Ok(mat.chebyshev(n)?.scalar_value().is_some_and(|v| v.equals(s)))
    };
    let shadow_verified = scalar_is(&l, &longitude_shadow)? && scalar_is(&m, &meridian_shadow)?;
    Ok(GenusOneClass::Generic {
        dimension: n,
        longitude_shadow,
        meridian_shadow,
        shadow_verified,
        algebra_dimension: algebra_dimension(&[l, m]),
    })
}
