//! Certificates: classical shadow, non-vanishing of the 6j set, generation
//! of the coloring group, and irreducibility through Burnside's theorem.

use super::basis::{ColoringBasis, OmegaData};
use super::graph::SurfacePreset;
use super::operators::{CurveOperator, Representation, SixjKey, SixjProvider};
use crate::backend::Backend;
use crate::calculus::{Sign, SixjArgs, Triple};
use crate::error::{KernelError, Result};
use crate::linalg::modp::{CycloReducer, EchelonSpan};
use crate::linalg::SparseMat;
use crate::scalar::{Cyclo, Ring};
use crate::weight::Weight;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    Shadow,
    YsetNonvanishing,
    Generation,
    Burnside,
}

/// `T_N` of one curve operator.
#[derive(Clone, Debug)]
pub struct ShadowEntry<S> {
    pub curve: String,
    /// The scalar when `T_N(r(curve))` is a multiple of the identity.
    pub scalar: Option<S>,
    /// The predicted value, known for pants curves.
    pub expected: Option<S>,
    /// Largest distance from the recorded scalar (complex norm).
    pub deviation: f64,
}

impl<S: Ring> ShadowEntry<S> {
    pub fn passed(&self) -> bool {
        match (&self.scalar, &self.expected) {
            (Some(s), Some(e)) => s.equals(e),
            (Some(_), None) => true,
            (None, _) => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ShadowCertificate<S> {
    pub entries: Vec<ShadowEntry<S>>,
}

impl<S: Ring> ShadowCertificate<S> {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(ShadowEntry::passed)
    }

    pub fn worst_deviation(&self) -> f64 {
        self.entries.iter().map(|e| e.deviation).fold(0.0, f64::max)
    }
}

/// `-(A^(N c) + A^(-N c))`, the predicted `T_N` of the pants curve whose
/// edge carries the class `omega`; independent of the lift `c`.
pub fn pants_shadow<B: Backend>(b: &B, omega: &BigRational) -> Result<B::S> {
    let w = Weight::rational(omega * BigRational::from_integer(BigInt::from(b.root().n())));
    Ok(-(b.a_pow(&w)? + b.a_pow(&-w)?))
}

fn shadow_entry<B: Backend>(b: &B, op: &CurveOperator<B::S>, expected: Option<B::S>) -> Result<ShadowEntry<B::S>> {
    let t = op.matrix.chebyshev(b.root().n() as usize)?;
    let scalar = t.scalar_value();
    let reference = scalar.clone().unwrap_or_else(|| t.get(0, 0));
    let mut deviation = t.scalar_deviation(&reference);
    if let (Some(s), Some(e)) = (&scalar, &expected) {
        let d = s.clone() - e.clone();
        deviation = deviation.max(d.to_complex().map(|z| z.norm()).unwrap_or(if d.is_zero() { 0.0 } else { f64::INFINITY }));
    }
    Ok(ShadowEntry { curve: op.curve.to_string(), scalar, expected, deviation })
}

/// Applies `T_N` to every curve operator and checks scalarity; pants
/// curves are also compared with their predicted value.
pub fn shadow_certificate<B: Backend>(b: &B, rep: &Representation<B::S>, omega: &OmegaData) -> Result<ShadowCertificate<B::S>> {
    let mut entries = Vec::new();
    for (e, op) in rep.gammas.iter().enumerate() {
        entries.push(shadow_entry(b, op, Some(pants_shadow(b, &omega.values()[e])?))?);
    }
    for op in &rep.betas {
        entries.push(shadow_entry(b, op, None)?);
    }
    Ok(ShadowCertificate { entries })
}

/// One zero of the enumerated 6j set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YsetZero {
    pub vertex: usize,
    pub key: SixjKey,
    /// Support index `m` of `(a, b, g)`.
    pub m: i64,
    /// `m = 0` with both signs `-1`, or `m = N - 1` with both `+1`: the
    /// shifted triple leaves the admissible window and the closed formula
    /// has no surviving summand.
    pub structural: bool,
}

#[derive(Clone, Debug)]
pub struct YsetCertificate {
    /// Admissible tuples enumerated.
    pub tuples: usize,
    /// Distinct 6j-symbols after reducing colors modulo `N`.
    pub distinct: usize,
    pub zeros: Vec<YsetZero>,
    /// Symbols whose closed formula has a vanishing normalizer.
    pub degenerate: Vec<SixjKey>,
}

impl YsetCertificate {
    pub fn passed(&self) -> bool {
        self.zeros.is_empty() && self.degenerate.is_empty()
    }

    pub fn nonstructural_zeros(&self) -> impl Iterator<Item = &YsetZero> {
        self.zeros.iter().filter(|z| !z.structural)
    }
}

/// Whether `(m, e1, e2)` is one of the two classes where the closed
/// formula is identically zero.
pub fn is_structural_zero(n: i64, m: i64, e1: Sign, e2: Sign) -> bool {
    (m == 0 && e1 == Sign::Minus && e2 == Sign::Minus) || (m == n - 1 && e1 == Sign::Plus && e2 == Sign::Plus)
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Enumerates the 6j set: at every vertex, the three incident edges
/// oriented towards it in every order, every lift, signs `eta` on the
/// colors and on the strand, and shifts `eps` in `{-1, 0, 1}` with even
/// sum. Tuples whose colors are not admissible are skipped.
pub fn yset_certificate<B: Backend, P: SixjProvider<B>>(
    b: &B,
    preset: &SurfacePreset,
    basis: &ColoringBasis,
    sixj: &mut P,
) -> Result<YsetCertificate> {
    let n = b.root().n();
    let signs = [Sign::Plus, Sign::Minus];
    let mut keys: BTreeMap<SixjKey, usize> = BTreeMap::new();
    let mut tuples = 0;
    let shifts: Vec<[i64; 3]> = (0..27)
        .map(|t| [t % 3 - 1, t / 3 % 3 - 1, t / 9 - 1])
        .filter(|e: &[i64; 3]| (e[0] + e[1] + e[2]) % 2 == 0)
        .collect();
    for v in 0..preset.graph.vertex_count() {
        let half = preset.graph.half_edges(v);
        for lifts in 0..basis.n().pow(3) {
            let j = [lifts % basis.n(), lifts / basis.n() % basis.n(), lifts / basis.n() / basis.n()];
            // Colors oriented towards v; a loop must carry one lift.
            let same_edge_conflict = (0..3).any(|p| (0..3).any(|q| half[p].0 == half[q].0 && j[p] != j[q]));
            if same_edge_conflict {
                continue;
            }
            let toward: Vec<Weight> = (0..3).map(|p| basis.color(half[p].0, j[p]).scale_int(-half[p].1)).collect();
            for perm in PERMUTATIONS {
                for eta in 0..8u32 {
                    let s = |k: u32| if eta >> k & 1 == 1 { -1 } else { 1 };
                    for eps in &shifts {
                        let col = |k: usize| toward[perm[k]].scale_int(s(k as u32)).add_int(eps[k]);
                        let (a, bb, g) = (col(0), col(1), col(2));
                        if !(&a + &bb - g.clone()).as_constant().is_some_and(|c| c.is_integer()) {
                            continue;
                        }
                        for e1 in signs {
                            for e2 in signs {
                                tuples += 1;
                                let args = SixjArgs::new(a.clone(), bb.clone(), g.clone(), e1, e2);
                                if let Some(key) = SixjKey::new(n, &args) {
                                    keys.entry(key).or_insert(v);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut zeros = Vec::new();
    let mut degenerate = Vec::new();
    for (key, vertex) in &keys {
        let args = key.args();
        let value = match sixj.sixj(b, &args) {
            Ok(v) => v,
            Err(KernelError::Degenerate(_)) => {
                degenerate.push(key.clone());
                continue;
            }
            Err(e) => return Err(e),
        };
        if value.is_zero() {
            let m = Triple::new(n, &args.a, &args.b, &args.g)?.m();
            let structural = is_structural_zero(n, m, args.e1, args.e2);
            zeros.push(YsetZero { vertex: *vertex, key: key.clone(), m, structural });
        }
    }
    Ok(YsetCertificate { tuples, distinct: keys.len(), zeros, degenerate })
}

/// Ranks modulo each prime divisor of `N` of the shift vectors of all
/// transverse curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationCertificate {
    pub modulus: u64,
    pub edges: usize,
    pub generators: Vec<Vec<i64>>,
    pub ranks: Vec<(u64, usize)>,
}

impl GenerationCertificate {
    pub fn passed(&self) -> bool {
        self.ranks.iter().all(|&(_, r)| r == self.edges)
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Checks that the sign vectors `eta` of all curves generate
/// `(Z/N)^E`. A subgroup is everything exactly when it surjects onto
/// `(Z/p)^E` for every prime `p | N`, which is a rank test over `F_p`.
pub fn generation_certificate(preset: &SurfacePreset, n: u64) -> GenerationCertificate {
    let edges = preset.graph.edge_count();
    let mut generators = Vec::new();
    for beta in &preset.betas {
        let crossed = beta.crossed_edges();
        for mask in 0..(1u32 << crossed.len()) {
            let mut g = vec![0i64; edges];
            for (k, &e) in crossed.iter().enumerate() {
                g[e] = if mask >> k & 1 == 1 { -1 } else { 1 };
            }
            generators.push(g);
        }
    }
    let ranks = prime_divisors(n)
        .into_iter()
        .map(|p| {
            let mut span = EchelonSpan::new(p, edges);
            for g in &generators {
                span.insert(g.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect());
            }
            (p, span.rank())
        })
        .collect();
    GenerationCertificate { modulus: n, edges, generators, ranks }
}

/// How the span of the generated algebra was measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BurnsideMethod {
    /// Exact support argument: a pants algebra with simple joint spectrum
    /// contains every diagonal matrix unit, so the generated algebra is
    /// spanned by the units `E_(b,a)` with `b` reachable from `a` along
    /// nonzero entries of the transverse operators.
    Support,
    /// Words in the generators reduced modulo a prime `p = 1 mod M`,
    /// grown until the span is closed under left multiplication.
    WordsModP,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideCertificate {
    pub method: BurnsideMethod,
    pub dimension: usize,
    pub target: usize,
    /// Joint pants spectrum is simple (each basis line is a weight space).
    pub simple_spectrum: bool,
    /// Sizes of the strongly connected classes of the support graph.
    pub components: Vec<usize>,
    /// Prime used by [`BurnsideMethod::WordsModP`].
    pub prime: Option<u64>,
    /// Words multiplied out before the span closed.
    pub words: usize,
}

impl BurnsideCertificate {
    pub fn passed(&self) -> bool {
        self.dimension == self.target
    }
}

/// Checks that each pants operator is diagonal, depends only on the lift
/// of its own edge, and takes `N` distinct values.
pub fn simple_joint_spectrum<S: Ring>(basis: &ColoringBasis, gammas: &[CurveOperator<S>]) -> bool {
    if gammas.len() != basis.edge_count() {
        return false;
    }
    for (e, op) in gammas.iter().enumerate() {
        let m = &op.matrix;
        let mut per_lift: Vec<Option<S>> = vec![None; basis.n()];
        for i in 0..basis.len() {
            let col = m.column(i);
            let value = match col {
                [(r, v)] if *r == i => v.clone(),
                [] => m.template().zero_like(),
                _ => return false,
            };
            let slot = &mut per_lift[basis.digits(i)[e]];
            match slot {
                Some(prev) if !prev.equals(&value) => return false,
                Some(_) => {}
                None => *slot = Some(value),
            }
        }
        let vals: Vec<S> = per_lift.into_iter().flatten().collect();
        for p in 0..vals.len() {
            for q in p + 1..vals.len() {
                if vals[p].equals(&vals[q]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Strongly connected components (Tarjan, iterative) of the graph with
/// adjacency lists `adj`; returns the component id of every vertex.
fn strong_components(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut counter = 0;
    let mut ncomp = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            if *next < adj[v].len() {
                let w = adj[v][*next];
                *next += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    comp
}

/// Burnside certificate from the support pattern of the transverse
/// operators. Valid whenever the joint pants spectrum is simple, which is
/// checked and recorded.
pub fn burnside_support<S: Ring>(rep: &Representation<S>) -> BurnsideCertificate {
    let n = rep.dimension();
    let simple = simple_joint_spectrum(&rep.basis, &rep.gammas);
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for op in &rep.betas {
        for (i, j, v) in op.matrix.entries() {
            if !v.is_zero() {
                adj[j].insert(i);
            }
        }
    }
    let adj: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
    let comp = strong_components(&adj);
    let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
    let mut components = vec![0; ncomp];
    for &c in &comp {
        components[c] += 1;
    }
    components.sort_unstable_by(|a, b| b.cmp(a));
    // Reachable pairs, counted per source by a graph search.
    let mut dimension = 0;
    let mut seen = vec![usize::MAX; n];
    for src in 0..n {
        let mut stack = vec![src];
        seen[src] = src;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &w in &adj[v] {
                if seen[w] != src {
                    seen[w] = src;
                    stack.push(w);
                }
            }
        }
        dimension += count;
    }
    if !simple {
        // Without weight spaces of dimension one the argument says nothing.
        dimension = 0;
    }
    BurnsideCertificate {
        method: BurnsideMethod::Support,
        dimension,
        target: n * n,
        simple_spectrum: simple,
        components,
        prime: None,
        words: 0,
    }
}

fn reduce_sparse(m: &SparseMat<Cyclo>, red: &CycloReducer) -> Option<Vec<u64>> {
    let n = m.rows();
    let mut out = vec![0u64; n * n];
    for (i, j, v) in m.entries() {
        out[i * n + j] = red.reduce(v)?;
    }
    Some(out)
}

/// Dimension of the algebra generated by `gens` (square, row-major, over
/// `F_p`): words are multiplied on the left by generators, starting from
/// the identity, until no new independent word appears.
pub fn algebra_dimension_modp(gens: &[Vec<u64>], n: usize, p: u64) -> (usize, usize) {
    let mut span = EchelonSpan::new(p, n * n);
    let mut id = vec![0u64; n * n];
    for i in 0..n {
        id[i * n + i] = 1;
    }
    let mut queue = alloc::collections::VecDeque::new();
    span.insert(id.clone());
    queue.push_back(id);
    let mut words = 1;
    while let Some(w) = queue.pop_front() {
        if span.is_full() {
            break;
        }
        for g in gens {
            let prod = crate::linalg::modp::matmul_mod(g, &w, n, p);
            words += 1;
            if span.insert(prod.clone()) {
                queue.push_back(prod);
            }
        }
    }
    (span.rank(), words)
}

/// Burnside certificate by explicit words modulo a split prime. An upper
/// bound on the characteristic zero dimension that is attained for all
/// but finitely many primes; full dimension mod `p` proves full dimension
/// over the cyclotomic field.
pub fn burnside_words_modp(rep: &Representation<Cyclo>) -> Result<BurnsideCertificate> {
    let n = rep.dimension();
    let conductor = rep
        .operators()
        .flat_map(|op| op.matrix.entries().map(|(_, _, v)| v.conductor()))
        .next()
        .ok_or_else(|| KernelError::Degenerate("no nonzero operator entries".into()))?;
    for skip in 0..8 {
        let red = CycloReducer::new(conductor, skip);
        let gens: Option<Vec<Vec<u64>>> = rep.operators().map(|op| reduce_sparse(&op.matrix, &red)).collect();
        let Some(gens) = gens else { continue };
        let (dimension, words) = algebra_dimension_modp(&gens, n, red.prime());
        return Ok(BurnsideCertificate {
            method: BurnsideMethod::WordsModP,
            dimension,
            target: n * n,
            simple_spectrum: simple_joint_spectrum(&rep.basis, &rep.gammas),
            components: Vec::new(),
            prime: Some(red.prime()),
            words,
        });
    }
    Err(KernelError::Degenerate("no suitable prime among the first candidates".into()))
}

/// Dimension of the diagonal subalgebra generated by the pants operators
/// alone, measured with words modulo `p`.
pub fn pants_algebra_dimension(rep: &Representation<Cyclo>) -> Result<usize> {
    let conductor = rep.gammas.first().and_then(|g| g.matrix.entries().next().map(|(_, _, v)| v.conductor()));
    let conductor = conductor.ok_or_else(|| KernelError::Degenerate("no pants operators".into()))?;
    let red = CycloReducer::new(conductor, 0);
    let gens: Vec<Vec<u64>> = rep
        .gammas
        .iter()
        .map(|op| reduce_sparse(&op.matrix, &red))
        .collect::<Option<_>>()
        .ok_or_else(|| KernelError::Degenerate("pants entry not reducible".into()))?;
    Ok(algebra_dimension_modp(&gens, rep.dimension(), red.prime()).0)
}

/// Human-readable summary line of a certificate.
pub fn summary(kind: CertificateKind, passed: bool, detail: &str) -> String {
    let mut s = match kind {
        CertificateKind::Shadow => "shadow",
        CertificateKind::YsetNonvanishing => "yset",
        CertificateKind::Generation => "generation",
        CertificateKind::Burnside => "burnside",
    }
    .to_string();
    s.push_str(if passed { ": pass (" } else { ": fail (" });
    s.push_str(detail);
    s.push(')');
    s
}
