//! Matrix coefficients of the trivalent morphisms.
//!
//! Colors are affine weights `x = alpha / k`. Every coefficient is a
//! product of powers of `A^x` and brackets `{x + c}`, so all of them depend
//! on colors only modulo `N`.

use crate::backend::Backend;
use crate::error::{KernelError, Result};
use crate::qarith::{brace_desc, brace_fac, brace_int, qbinom_int};
use crate::scalar::Ring;
use crate::weight::Weight;
use alloc::format;
use alloc::vec::Vec;

/// An admissible color triple `V_g -> V_a (x) V_b`, with `g` shifted by a
/// multiple of `N` so that `m = (a + b - g + N - 1) / 2` lies in `0..N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub a: Weight,
    pub b: Weight,
    pub g: Weight,
    m: i64,
    shift: i64,
}

impl Triple {
    /// Normalizes `(a, b, g)`. The difference `a + b - g` must be an
    /// integer; half-integers correspond to odd transparent defects, which
    /// are not representable in the `A^x` variables.
    pub fn new(n: i64, a: &Weight, b: &Weight, g: &Weight) -> Result<Self> {
        let s = a + b - g;
        let c = s.as_constant().ok_or_else(|| {
            KernelError::Inadmissible(format!("{a} + {b} - ({g}) depends on the parameters"))
        })?;
        if !c.is_integer() {
            let doubled = c * num_rational::BigRational::from_integer(2.into());
            return Err(if doubled.is_integer() {
                KernelError::Unsupported(format!("odd transparent defect for ({a}, {b}, {g})"))
            } else {
                KernelError::Inadmissible(format!("{a} + {b} - ({g}) = {c} is not an integer"))
            });
        }
        let t = s.as_integer().ok_or_else(|| KernelError::OutOfRange("color difference too large".into()))? + n - 1;
        let r = t.rem_euclid(2 * n);
        let two_m = [r, r - n, r + n].into_iter().find(|v| v % 2 == 0 && (0..2 * n - 1).contains(v)).expect("one candidate is even and in range");
        let shift = (t - two_m) / n;
        Ok(Self { a: a.clone(), b: b.clone(), g: g + &Weight::int(shift * n), m: two_m / 2, shift })
    }

    /// A triple with a prescribed support index, for formal colors whose
    /// difference is not a constant. The caller vouches for admissibility.
    pub fn formal(a: &Weight, b: &Weight, g: &Weight, m: i64) -> Self {
        Self { a: a.clone(), b: b.clone(), g: g.clone(), m, shift: 0 }
    }

    /// The support index `m`: coefficients vanish unless `i + j - n = m`.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// The multiple of `N` added to `g`. Twice this number is the
    /// transparent defect.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// The triple `(-b, -a, -g)` used by the downward vertex.
    pub fn mirrored(&self, n: i64) -> Self {
        Self { a: -&self.b, b: -&self.a, g: -&self.g, m: n - 1 - self.m, shift: -self.shift }
    }
}

/// `{x + c}{x + c - 1}..{x + c - len + 1}`.
fn falling<B: Backend>(b: &B, x: &Weight, c: i64, len: i64) -> Result<B::S> {
    brace_desc(b, &x.add_int(c), len)
}

fn check_index(n: i64, i: i64) -> Result<()> {
    if (0..n).contains(&i) {
        Ok(())
    } else {
        Err(KernelError::OutOfRange(format!("index {i} outside 0..{}", n - 1)))
    }
}

/// `kappa_n(x) = A^(-x) A^(n(n-1)) {x + N - 1, x + N - 1 - n}`.
pub fn kappa<B: Backend>(b: &B, n: i64, x: &Weight) -> Result<B::S> {
    let big_n = b.root().n();
    check_index(big_n, n)?;
    Ok(b.a_pow(&(-x))? * b.a_pow_int(n * (n - 1)) * falling(b, x, big_n - 1, n)?)
}

/// The basis normalization actually used by the vertex maps:
/// `kappa_n(x) * (A^(-x - N + 1) / {1})^n`.
///
/// The extra geometric factor accounts for the `K^(1/2)` twist between the
/// highest weight basis `v_n` and the symmetric basis in which the
/// Clebsch-Gordan sums are written.
pub fn kappa_hat<B: Backend>(b: &B, n: i64, x: &Weight) -> Result<B::S> {
    let big_n = b.root().n();
    let step = b.a_pow(&(-x).add_int(1 - big_n))?.div(&brace_int(b, 1))?;
    Ok(kappa(b, n, x)? * step.pow_i64(n)?)
}

/// `w^n_x = khat_n(x) khat_(N-1-n)(-x) A^(-x(N-1) - 2n - 1)`.
pub fn wcoef<B: Backend>(b: &B, n: i64, x: &Weight) -> Result<B::S> {
    let big_n = b.root().n();
    check_index(big_n, n)?;
    let tail = b.a_pow(&x.scale_int(-(big_n - 1)).add_int(-2 * n - 1))?;
    Ok(kappa_hat(b, n, x)? * kappa_hat(b, big_n - 1 - n, &-x)? * tail)
}

/// The Clebsch-Gordan sum `C_(i,j,n)` including the sign `(-1)^(j-n)`.
/// Zero off the support line `i + j - n = m`.
pub fn coef_c<B: Backend>(b: &B, t: &Triple, i: i64, j: i64, n: i64) -> Result<B::S> {
    let big_n = b.root().n();
    for idx in [i, j, n] {
        check_index(big_n, idx)?;
    }
    let m = t.m;
    if i + j - n != m {
        return Ok(b.zero());
    }
    let pre = b.a_pow(&(t.b.scale_int(j) - t.a.scale_int(i)).add_int(i * i - j * j))?
        * brace_fac(b, n).div(&falling(b, &t.g, big_n - 1, n)?)?
        * falling(b, &t.g, big_n - 1, big_n - 1 - m)?.div(&brace_fac(b, big_n - 1 - m))?;
    let mut sum = b.zero();
    for z in 0..=n {
        let w = n - z;
        if !(0..=m).contains(&(i - z)) {
            continue;
        }
        let mono = b.a_pow(&t.g.scale_int(2 * z - n).add_int(-n * (2 * z - n)))?;
        let term = mono
            * qbinom_int(b, m, i - z)
            * falling(b, &t.a, z - i + big_n - 1, z)?.div(&brace_fac(b, z))?
            * falling(b, &t.b, w - j + big_n - 1, w)?.div(&brace_fac(b, w))?;
        sum = if z % 2 == 0 { sum + term } else { sum - term };
    }
    let out = pre * sum;
    Ok(if (j - n) % 2 == 0 { out } else { -out })
}

/// Which legs of a vertex carry their `khat` normalization. Dropping a leg
/// expresses that leg in the unnormalized basis, which stays finite at the
/// non-typical color `N - 2` where `khat` itself vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Legs {
    pub a: bool,
    pub b: bool,
    pub g: bool,
}

impl Legs {
    pub const ALL: Legs = Legs { a: true, b: true, g: true };
}

impl Default for Legs {
    fn default() -> Self {
        Self::ALL
    }
}

/// Precomputed `khat` tables for the three legs of a triple.
#[derive(Clone, Debug)]
pub struct KappaTables<S> {
    pub a: Vec<S>,
    pub b: Vec<S>,
    pub g: Vec<S>,
}

impl<S: Ring> KappaTables<S> {
    pub fn new<B: Backend<S = S>>(b: &B, t: &Triple, legs: Legs) -> Result<Self> {
        Self::build(b, t, legs, kappa_hat)
    }

    /// Tables of the plain `kappa`, the normalization in which the
    /// rational functions of the 6j non-vanishing argument are written.
    pub fn plain<B: Backend<S = S>>(b: &B, t: &Triple, legs: Legs) -> Result<Self> {
        Self::build(b, t, legs, kappa)
    }

    fn build<B: Backend<S = S>>(b: &B, t: &Triple, legs: Legs, f: fn(&B, i64, &Weight) -> Result<S>) -> Result<Self> {
        let n = b.root().n();
        let table = |x: &Weight, on: bool| -> Result<Vec<S>> {
            (0..n).map(|i| if on { f(b, i, x) } else { Ok(b.one()) }).collect()
        };
        Ok(Self { a: table(&t.a, legs.a)?, b: table(&t.b, legs.b)?, g: table(&t.g, legs.g)? })
    }
}

/// `D_(i,j,n) = khat_n(g) / (khat_i(a) khat_j(b)) C_(i,j,n)`.
pub fn coef_d<B: Backend>(b: &B, t: &Triple, i: i64, j: i64, n: i64) -> Result<B::S> {
    let tables = KappaTables::new(b, t, Legs::ALL)?;
    coef_d_with(b, t, &tables, i, j, n)
}

pub(crate) fn coef_d_with<B: Backend>(b: &B, t: &Triple, k: &KappaTables<B::S>, i: i64, j: i64, n: i64) -> Result<B::S> {
    let c = coef_c(b, t, i, j, n)?;
    if c.is_zero() {
        return Ok(c);
    }
    let den = k.a[i as usize].clone() * k.b[j as usize].clone();
    Ok((k.g[n as usize].clone() * c).div(&den)?)
}

/// `E_(i,j,n) = khat_i(a) khat_j(b) / khat_n(g) C_(N-1-j, N-1-i, N-1-n)(-b, -a, -g)`.
pub fn coef_e<B: Backend>(b: &B, t: &Triple, i: i64, j: i64, n: i64) -> Result<B::S> {
    let tables = KappaTables::new(b, t, Legs::ALL)?;
    coef_e_with(b, t, &tables, i, j, n)
}

pub(crate) fn coef_e_with<B: Backend>(b: &B, t: &Triple, k: &KappaTables<B::S>, i: i64, j: i64, n: i64) -> Result<B::S> {
    let big_n = b.root().n();
    let c = coef_c(b, &t.mirrored(big_n), big_n - 1 - j, big_n - 1 - i, big_n - 1 - n)?;
    if c.is_zero() {
        return Ok(c);
    }
    Ok((k.a[i as usize].clone() * k.b[j as usize].clone() * c).div(&k.g[n as usize])?)
}
