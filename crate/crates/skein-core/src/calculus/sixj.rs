//! 6j-symbols: sliding an `S_1` strand across a trivalent vertex.
//!
//! The strand is realized inside `V_(N-2)` through `S_1 -> V_(N-2)`,
//! `e_t -> v_(N-2+t)`. The coefficient tables of that color vanish at the
//! top two basis vectors, but every composite uses them once upstairs and
//! once downstairs, so the vertex maps touching the strand are written in
//! the unnormalized basis and no division by zero occurs.

use super::coeffs::{coef_c, coef_d_with, coef_e_with, KappaTables, Legs, Triple};
use super::morphisms::{y_down_with, y_up, y_up_with};
use crate::backend::{Backend, SymbolicBackend};
use crate::error::{KernelError, Result};
use crate::linalg::Mat;
use crate::scalar::{Cyclo, RatFun, Ring, Valuation};
use crate::weight::Weight;
use alloc::format;
use alloc::vec::Vec;

/// A sign `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(KernelError::OutOfRange(format!("sign must be +1 or -1, got {v}"))),
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Arguments of a 6j-symbol in color units `x = alpha / k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixjArgs {
    pub a: Weight,
    pub b: Weight,
    pub g: Weight,
    pub e1: Sign,
    pub e2: Sign,
}

impl SixjArgs {
    pub fn new(a: Weight, b: Weight, g: Weight, e1: Sign, e2: Sign) -> Self {
        Self { a, b, g, e1, e2 }
    }
}

/// The color carrying the `S_1` strand.
fn strand(n: i64) -> Weight {
    Weight::int(n - 2)
}

/// Indices `(theta1, theta2)` of the two surviving summands.
pub fn summand_indices(m: i64, e1: Sign, e2: Sign) -> (i64, i64) {
    ((e1.value() - 1) / 2, m + (e2.value() + 1) / 2)
}

const STRAND_B: Legs = Legs { a: true, b: false, g: true };
const STRAND_A: Legs = Legs { a: false, b: true, g: true };

/// The three vertex triples of the two-term formula, for support index `m`.
struct Vertices {
    top: Triple,
    left: Triple,
    right: Triple,
    base: Triple,
}

fn vertices(n: i64, a: &Weight, b: &Weight, g: &Weight, m: i64, e1: Sign, e2: Sign, formal: bool) -> Result<Vertices> {
    let a2 = a.add_int(e1.value());
    let b2 = b.add_int(e2.value());
    let (top, base) = if formal {
        let m2 = (m + (e1.value() + e2.value()) / 2).rem_euclid(n);
        (Triple::formal(&a2, &b2, g, m2), Triple::formal(a, b, g, m))
    } else {
        (Triple::new(n, &a2, &b2, g)?, Triple::new(n, a, b, g)?)
    };
    Ok(Vertices { top, left: Triple::new(n, a, &strand(n), &a2)?, right: Triple::new(n, &strand(n), &b2, b)?, base })
}

/// The two products `F_1`, `F_2` (either may be absent when its indices
/// leave `0..N`) and the normalizer `D_(0,m,0)`.
struct Terms<S> {
    f: [Option<S>; 2],
    normalizer: S,
}

fn terms<B: Backend>(b: &B, v: &Vertices, e1: Sign, e2: Sign, plain: bool) -> Result<Terms<B::S>> {
    let n = b.root().n();
    let m = v.base.m();
    let tables = |t: &Triple, legs: Legs| if plain { KappaTables::plain(b, t, legs) } else { KappaTables::new(b, t, legs) };
    let top = tables(&v.top, Legs::ALL)?;
    let left = tables(&v.left, STRAND_B)?;
    let right = tables(&v.right, STRAND_A)?;
    let base = tables(&v.base, Legs::ALL)?;
    let (t1, t2) = summand_indices(m, e1, e2);
    let mut f = [None, None];
    for (slot, s) in f.iter_mut().zip(0..2) {
        let (i, j) = (t1 + s, t2 - s);
        if !(0..n).contains(&i) || !(0..n).contains(&j) {
            continue;
        }
        let d1 = coef_d_with(b, &v.top, &top, i, j, 0)?;
        let d2 = coef_d_with(b, &v.left, &left, 0, n - 2 + s, i)?;
        let e = coef_e_with(b, &v.right, &right, n - 2 + s, j, m)?;
        *slot = Some(d1 * d2 * e);
    }
    let normalizer = coef_d_with(b, &v.base, &base, 0, m, 0)?;
    Ok(Terms { f, normalizer })
}

fn combine<S: Ring>(t: Terms<S>) -> Result<S> {
    if t.normalizer.is_zero() {
        return Err(KernelError::Degenerate("the normalizer D_(0,m,0) vanishes".into()));
    }
    let sum = t.f.into_iter().flatten().fold(t.normalizer.zero_like(), |acc, x| acc + x);
    Ok(sum.div(&t.normalizer)?)
}

/// 6S from the two-term closed formula.
pub fn sixj_closed<B: Backend>(b: &B, args: &SixjArgs) -> Result<B::S> {
    let n = b.root().n();
    let base = Triple::new(n, &args.a, &args.b, &args.g)?;
    let v = vertices(n, &args.a, &args.b, &base.g, base.m(), args.e1, args.e2, false)?;
    combine(terms(b, &v, args.e1, args.e2, false)?)
}

/// Result of the matrix oracle.
#[derive(Clone, Debug)]
pub struct OracleValue<S> {
    pub value: S,
    /// The composite `V_g -> V_a (x) V_b` whose proportionality to
    /// `Y^(a,b)_g` certifies the value.
    pub composite: Mat<S>,
}

/// 6S by composing explicit matrices: fuse the strand into `V_a` and
/// `V_b`, project the `V_(N-2)` strand onto the image of `S_1`, and read off
/// the ratio to `Y^(a,b)_g`. Every entry of the composite must agree with
/// the single ratio; otherwise the result is reported as degenerate.
pub fn sixj_oracle<B: Backend>(b: &B, args: &SixjArgs) -> Result<OracleValue<B::S>> {
    let n = b.root().n();
    let nu = n as usize;
    let base = Triple::new(n, &args.a, &args.b, &args.g)?;
    let v = vertices(n, &args.a, &args.b, &base.g, base.m(), args.e1, args.e2, false)?;
    let id = Mat::identity(nu, &b.one());
    let mut proj = Mat::zeros(nu, nu, &b.zero());
    proj.set(nu - 2, nu - 2, b.one());
    proj.set(nu - 1, nu - 1, b.one());
    let fuse_left = y_up_with(b, &v.left, STRAND_B)?.kron(&id);
    let strand_proj = id.kron(&proj).kron(&id);
    let fuse_right = id.kron(&y_down_with(b, &v.right, STRAND_A)?);
    let composite = Mat::chain(&[&fuse_right, &strand_proj, &fuse_left, &y_up(b, &v.top)?])?;
    let reference = y_up(b, &base)?;
    let value = composite
        .ratio_to(&reference)?
        .ok_or_else(|| KernelError::Degenerate("composite is not proportional to the vertex".into()))?;
    Ok(OracleValue { value, composite })
}

/// The rational function `R = (F_1 + F_2) / D_(0,m,0)` in the variables
/// `X_i = A^(x_i)` together with the valuation data of its two summands.
#[derive(Clone, Debug)]
pub struct SymbolicSixj {
    pub m: i64,
    pub e1: Sign,
    pub e2: Sign,
    pub r: RatFun,
    pub f1: Option<RatFun>,
    pub f2: Option<RatFun>,
    pub certificate: ValuationCertificate,
}

/// Valuations in the first variable of the two summands of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationCertificate {
    pub theta1: i64,
    pub v_f1: Valuation,
    pub v_f2: Valuation,
    /// The values `7 theta1 - 2N + 5` and `7 theta1 - 2N + 10` that the
    /// non-vanishing argument predicts.
    pub predicted_f1: i64,
    pub predicted_f2: i64,
    /// `R` is nonzero, checked directly on the rational function.
    pub r_nonzero: bool,
}

impl ValuationCertificate {
    pub fn matches_prediction(&self) -> bool {
        self.v_f1 == Valuation::Finite(self.predicted_f1) && self.v_f2 == Valuation::Finite(self.predicted_f2)
    }

    /// Distinct valuations alone force `F_1 + F_2 != 0`.
    pub fn valuations_separate(&self) -> bool {
        self.v_f1 != self.v_f2
    }
}

/// Builds `R` over three formal variables (`x_0, x_1, x_2` for the colors
/// `a, b, g`) using the plain `kappa` normalization for the summands.
pub fn sixj_symbolic(root: crate::root::RootData, m: i64, e1: Sign, e2: Sign) -> Result<SymbolicSixj> {
    let n = root.n();
    if !(0..n).contains(&m) {
        return Err(KernelError::OutOfRange(format!("m = {m} outside 0..{}", n - 1)));
    }
    let b = SymbolicBackend::new(root, 3);
    let (xa, xb, xg) = (Weight::param(0), Weight::param(1), Weight::param(2));
    let v = vertices(n, &xa, &xb, &xg, m, e1, e2, true)?;
    let t = terms(&b, &v, e1, e2, true)?;
    let [f1, f2] = t.f.clone();
    let r = combine(t)?;
    let val = |f: &Option<RatFun>| f.as_ref().map_or(Valuation::Infinite, |f| f.valuation(0));
    let (theta1, _) = summand_indices(m, e1, e2);
    let certificate = ValuationCertificate {
        theta1,
        v_f1: val(&f1),
        v_f2: val(&f2),
        predicted_f1: 7 * theta1 - 2 * n + 5,
        predicted_f2: 7 * theta1 - 2 * n + 10,
        r_nonzero: !r.is_zero(),
    };
    Ok(SymbolicSixj { m, e1, e2, r, f1, f2, certificate })
}

impl SymbolicSixj {
    /// Exact value of `R` at the colors of an exact backend point.
    pub fn evaluate(&self, b: &crate::backend::ExactBackend, a: &Weight, bb: &Weight, g: &Weight) -> Result<Cyclo> {
        let point = [a, bb, g].into_iter().map(|x| b.a_pow(x)).collect::<Result<Vec<_>>>()?;
        Ok(self.r.substitute(&point)?)
    }
}

/// The support index `m` of `(a, b, g)` after normalization.
pub fn support_index(n: i64, a: &Weight, b: &Weight, g: &Weight) -> Result<i64> {
    Ok(Triple::new(n, a, b, g)?.m())
}

/// `C_(0,m,0)`, exposed for diagnostics of vanishing normalizers.
pub fn normalizer_c<B: Backend>(b: &B, a: &Weight, bb: &Weight, g: &Weight) -> Result<B::S> {
    let t = Triple::new(b.root().n(), a, bb, g)?;
    coef_c(b, &t, 0, t.m(), 0)
}
