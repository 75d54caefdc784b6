//! Curve operators on the coloring basis.
//!
//! Pants curves act diagonally. A transverse curve slides an `S_1` strand
//! along its cycle: every crossed edge is fused with the strand, which
//! shifts its color by `+-1` and costs an inverse binomial, and every
//! vertex the curve passes costs one 6j-symbol.

use super::basis::{ColoringBasis, OmegaData};
use super::graph::{BetaCurve, SurfacePreset};
use crate::backend::{Backend, ExactBackend};
use crate::calculus::{sixj_closed, sixj_oracle, Sign, SixjArgs};
use crate::error::{KernelError, Result};
use crate::linalg::SparseMat;
use crate::qarith::{brace_desc, brace_fac};
use crate::root::RootData;
use crate::scalar::Ring;
use crate::weight::Weight;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Which 6j route feeds the operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SixjMethod {
    #[default]
    Closed,
    Oracle,
}

/// Canonical cache key: colors reduced modulo `N`, on which every 6j
/// coefficient is periodic, plus the two signs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SixjKey {
    pub a: BigRational,
    pub b: BigRational,
    pub g: BigRational,
    pub e1: i8,
    pub e2: i8,
}

impl SixjKey {
    /// `None` when a color is not a constant.
    pub fn new(n: i64, args: &SixjArgs) -> Option<Self> {
        let period = BigRational::from_integer(BigInt::from(n));
        let red = |w: &Weight| {
            let c = w.as_constant()?;
            Some(c - (c / &period).floor() * &period)
        };
        Some(Self { a: red(&args.a)?, b: red(&args.b)?, g: red(&args.g)?, e1: args.e1.value() as i8, e2: args.e2.value() as i8 })
    }

    pub fn args(&self) -> SixjArgs {
        let sign = |s: i8| if s > 0 { Sign::Plus } else { Sign::Minus };
        SixjArgs::new(
            Weight::rational(self.a.clone()),
            Weight::rational(self.b.clone()),
            Weight::rational(self.g.clone()),
            sign(self.e1),
            sign(self.e2),
        )
    }
}

/// Anything that can hand out 6j values, typically through a cache.
pub trait SixjProvider<B: Backend> {
    fn sixj(&mut self, b: &B, args: &SixjArgs) -> Result<B::S>;
}

/// In-memory memo table in front of one evaluation route.
#[derive(Clone, Debug)]
pub struct SixjCache<S> {
    method: SixjMethod,
    map: BTreeMap<SixjKey, S>,
    hits: u64,
    misses: u64,
}

impl<S> SixjCache<S> {
    pub fn new(method: SixjMethod) -> Self {
        Self { method, map: BTreeMap::new(), hits: 0, misses: 0 }
    }

    pub fn method(&self) -> SixjMethod {
        self.method
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn misses(&self) -> u64 {
        self.misses
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&SixjKey, &S)> {
        self.map.iter()
    }

    pub fn get(&self, key: &SixjKey) -> Option<&S> {
        self.map.get(key)
    }

    /// Seeds the table, for values restored from persistent storage.
    pub fn insert(&mut self, key: SixjKey, value: S) {
        self.map.insert(key, value);
    }
}

/// Evaluates one 6j-symbol with the chosen route, uncached.
pub fn evaluate_sixj<B: Backend>(b: &B, method: SixjMethod, args: &SixjArgs) -> Result<B::S> {
    match method {
        SixjMethod::Closed => sixj_closed(b, args),
        SixjMethod::Oracle => Ok(sixj_oracle(b, args)?.value),
    }
}

impl<B: Backend> SixjProvider<B> for SixjCache<B::S> {
    fn sixj(&mut self, b: &B, args: &SixjArgs) -> Result<B::S> {
        let n = b.root().n();
        let Some(key) = SixjKey::new(n, args) else {
            self.misses += 1;
            return evaluate_sixj(b, self.method, args);
        };
        if let Some(v) = self.map.get(&key) {
            self.hits += 1;
            return Ok(v.clone());
        }
        self.misses += 1;
        let v = evaluate_sixj(b, self.method, &key.args())?;
        self.map.insert(key, v.clone());
        Ok(v)
    }
}

/// The curve an operator represents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveId {
    /// The pants curve around edge `e`.
    Pants(usize),
    Transverse(String),
}

impl core::fmt::Display for CurveId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CurveId::Pants(e) => write!(f, "gamma_{}", e + 1),
            CurveId::Transverse(name) => f.write_str(name),
        }
    }
}

/// A 6j factor of a transverse operator that evaluated to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingFactor {
    pub column: usize,
    pub target: usize,
    pub key: SixjKey,
}

/// The matrix of a curve in the coloring basis, with its provenance.
#[derive(Clone, Debug)]
pub struct CurveOperator<S> {
    pub curve: CurveId,
    pub omega: Vec<BigRational>,
    pub matrix: SparseMat<S>,
    /// Zero 6j factors met while filling a transverse operator.
    pub vanishing: Vec<VanishingFactor>,
    /// Number of color shifts that left `(-N, N]` and were wrapped.
    pub wraps: usize,
}

/// `-(q^x + q^-x)` for the edge color `x = c / 2`, which is
/// `-2 cos(2 pi k' c / N)`.
pub fn pants_eigenvalue<B: Backend>(b: &B, x: &Weight) -> Result<B::S> {
    Ok(-(b.q_pow(x)? + b.q_pow(&-x)?))
}

/// `r(gamma_e)`: diagonal.
pub fn gamma_operator<B: Backend>(b: &B, basis: &ColoringBasis, omega: &OmegaData, e: usize) -> Result<CurveOperator<B::S>> {
    if e >= basis.edge_count() {
        return Err(KernelError::OutOfRange(format!("edge {e} outside 0..{}", basis.edge_count())));
    }
    let per_lift: Vec<B::S> = (0..basis.n()).map(|j| pants_eigenvalue(b, &basis.color(e, j))).collect::<Result<_>>()?;
    let diag = (0..basis.len()).map(|i| per_lift[basis.digits(i)[e]].clone()).collect();
    Ok(CurveOperator {
        curve: CurveId::Pants(e),
        omega: omega.values().to_vec(),
        matrix: SparseMat::diagonal(diag, &b.zero()),
        vanishing: Vec::new(),
        wraps: 0,
    })
}

/// `qbinom(x + N - 1, x)^(-1)`, the cost of fusing the strand into an edge.
pub fn fusion_weight<B: Backend>(b: &B, x: &Weight) -> Result<B::S> {
    let n = b.root().n();
    let num = brace_desc(b, &x.add_int(n - 1), n - 1)?;
    if num.is_zero() {
        return Err(KernelError::Degenerate(format!("binomial ({x} + {}, {x}) vanishes", n - 1)));
    }
    Ok(brace_fac(b, n - 1).div(&num)?)
}

fn sign_of(v: i64) -> Sign {
    if v > 0 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// The 6j arguments of one passage for the strand signs `eta_out`,
/// `eta_in` on the two crossed edges at that vertex.
fn passage_args(
    p: &super::graph::Passage,
    x_out: &Weight,
    x_in: &Weight,
    x_flank: &Weight,
    eta_out: i64,
    eta_in: i64,
) -> SixjArgs {
    let [so, si, sf] = p.signs;
    SixjArgs::new(
        x_out.add_int(eta_out).scale_int(so),
        x_in.add_int(eta_in).scale_int(si),
        x_flank.scale_int(-sf),
        sign_of(-so * eta_out),
        sign_of(-si * eta_in),
    )
}

/// `r(beta)`: column `c` holds `x_eta` in row `c + eta` for every sign
/// vector `eta` on the crossed edges, with
/// `x_eta = -prod_e qbinom(x_e + eta_e + N - 1, x_e + eta_e)^(-1) prod_v 6S(..)`.
/// The leading sign is the one-component framing-zero sign.
pub fn beta_operator<B: Backend, P: SixjProvider<B>>(
    b: &B,
    basis: &ColoringBasis,
    omega: &OmegaData,
    beta: &BetaCurve,
    sixj: &mut P,
) -> Result<CurveOperator<B::S>> {
    let crossed = beta.crossed_edges();
    let mut pos = alloc::vec![usize::MAX; basis.edge_count()];
    for (k, &e) in crossed.iter().enumerate() {
        pos[e] = k;
    }
    let mut fusion: BTreeMap<(usize, usize, i64), B::S> = BTreeMap::new();
    let mut triplets = Vec::new();
    let mut vanishing = Vec::new();
    let mut wraps = 0;
    for col in 0..basis.len() {
        let d = basis.digits(col);
        let x = |e: usize| basis.color(e, d[e]);
        for mask in 0..(1u32 << crossed.len()) {
            let eta: Vec<i64> = (0..crossed.len()).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect();
            let mut entry = -b.one();
            for (k, &e) in crossed.iter().enumerate() {
                let key = (e, d[e], eta[k]);
                if !fusion.contains_key(&key) {
                    fusion.insert(key, fusion_weight(b, &x(e).add_int(eta[k]))?);
                }
                entry = entry * fusion[&key].clone();
            }
            let moves: Vec<(usize, i64)> = crossed.iter().zip(&eta).map(|(&e, &h)| (e, h)).collect();
            let target = basis.shifted(col, &moves);
            for p in beta.passages() {
                let args = passage_args(p, &x(p.outgoing), &x(p.incoming), &x(p.flank), eta[pos[p.outgoing]], eta[pos[p.incoming]]);
                let v = sixj.sixj(b, &args).map_err(|err| match err {
                    KernelError::Degenerate(msg) => KernelError::Degenerate(format!(
                        "6S({}, {}, {}; {}, {}) at vertex {}: {msg}",
                        args.a,
                        args.b,
                        args.g,
                        args.e1.value(),
                        args.e2.value(),
                        p.vertex
                    )),
                    other => other,
                })?;
                if v.is_zero() {
                    if let Some(key) = SixjKey::new(b.root().n(), &args) {
                        vanishing.push(VanishingFactor { column: col, target, key });
                    }
                }
                entry = entry * v;
            }
            wraps += moves.iter().filter(|&&(e, h)| basis.wraps(e, d[e], h)).count();
            triplets.push((target, col, entry));
        }
    }
    Ok(CurveOperator {
        curve: CurveId::Transverse(beta.name.clone()),
        omega: omega.values().to_vec(),
        matrix: SparseMat::from_triplets(basis.len(), basis.len(), &b.zero(), triplets),
        vanishing,
        wraps,
    })
}

/// Every curve operator of a preset at one `omega`.
#[derive(Clone, Debug)]
pub struct Representation<S> {
    pub basis: ColoringBasis,
    pub gammas: Vec<CurveOperator<S>>,
    pub betas: Vec<CurveOperator<S>>,
}

impl<S: Ring> Representation<S> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn operators(&self) -> impl Iterator<Item = &CurveOperator<S>> {
        self.gammas.iter().chain(&self.betas)
    }

    pub fn find(&self, name: &str) -> Option<&CurveOperator<S>> {
        self.operators().find(|op| op.curve.to_string() == name)
    }
}

/// Builds all pants and transverse operators.
pub fn build_representation<B: Backend, P: SixjProvider<B>>(
    b: &B,
    preset: &SurfacePreset,
    omega: &OmegaData,
    sixj: &mut P,
) -> Result<Representation<B::S>> {
    let basis = ColoringBasis::new(b.root().n(), omega);
    let gammas = (0..basis.edge_count()).map(|e| gamma_operator(b, &basis, omega, e)).collect::<Result<_>>()?;
    let betas = preset.betas.iter().map(|beta| beta_operator(b, &basis, omega, beta, sixj)).collect::<Result<_>>()?;
    Ok(Representation { basis, gammas, betas })
}

/// An exact backend whose field contains every color `c / 2` of `omega`.
pub fn exact_backend_for(root: RootData, omega: &OmegaData) -> Result<ExactBackend> {
    ExactBackend::with_denominator(root, Vec::new(), omega.color_denominator())
}
