use crate::backend::Backend;
use crate::error::{KernelError, Result};
use crate::linalg::Mat;
use crate::qarith::{brace, brace_int, qint};
use crate::scalar::Ring;
use crate::weight::Weight;
use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Which constructor produced a module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleKind {
    /// `V_alpha` with color `x = alpha / k`.
    Typical(Weight),
    Simple(u32),
    Projective(u32),
    Sigma(i64),
    Unit,
    Dual(Box<ModuleKind>),
    Tensor(Box<ModuleKind>, Box<ModuleKind>),
}

/// A weight module given by its basis weights and generator matrices.
#[derive(Debug, Clone)]
pub struct Module<S> {
    kind: ModuleKind,
    labels: Vec<String>,
    weights: Vec<Weight>,
    e: Mat<S>,
    f: Mat<S>,
    k: Mat<S>,
    kinv: Mat<S>,
}

impl<S: Ring> Module<S> {
    pub fn kind(&self) -> &ModuleKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// H-eigenvalue of each basis vector.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn e(&self) -> &Mat<S> {
        &self.e
    }

    pub fn f(&self) -> &Mat<S> {
        &self.f
    }

    pub fn k(&self) -> &Mat<S> {
        &self.k
    }

    pub fn kinv(&self) -> &Mat<S> {
        &self.kinv
    }

    /// A scalar from the module's ring, for constants.
    pub fn template(&self) -> S {
        self.e.template()
    }

    pub fn identity(&self) -> Mat<S> {
        Mat::identity(self.dim(), &self.template().one_like())
    }
}

fn from_actions<B: Backend>(
    b: &B,
    kind: ModuleKind,
    labels: Vec<String>,
    weights: Vec<Weight>,
    e: Mat<B::S>,
    f: Mat<B::S>,
) -> Result<Module<B::S>> {
    let k = Mat::diagonal(weights.iter().map(|w| b.q_pow(w)).collect::<Result<Vec<_>>>()?);
    let kinv = Mat::diagonal(weights.iter().map(|w| b.q_pow(&-w)).collect::<Result<Vec<_>>>()?);
    Ok(Module { kind, labels, weights, e, f, k, kinv })
}

/// `V_x`: basis `v_0..v_(N-1)`, `H v_n = (x + N - 1 - 2n) v_n`,
/// `F v_n = v_(n+1)`, `E v_n = [n][x - n] v_(n-1)`.
pub fn build_v<B: Backend>(b: &B, x: &Weight) -> Result<Module<B::S>> {
    let n = b.root().n() as usize;
    let zero = b.zero();
    let mut e = Mat::zeros(n, n, &zero);
    let mut f = Mat::zeros(n, n, &zero);
    for i in 0..n {
        if i + 1 < n {
            f.set(i + 1, i, b.one());
        }
        if i > 0 {
            let c = qint(b, i as i64) * brace(b, &x.add_int(-(i as i64)))?.div(&brace_int(b, 1))?;
            e.set(i - 1, i, c);
        }
    }
    let weights = (0..n).map(|i| x.add_int(n as i64 - 1 - 2 * i as i64)).collect();
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    from_actions(b, ModuleKind::Typical(x.clone()), labels, weights, e, f)
}

/// `S_n`: basis `e_0..e_n`, `H e_i = (n - 2i) e_i`, `E e_i = [i][n-i+1] e_(i-1)`.
pub fn build_s<B: Backend>(b: &B, n: u32) -> Result<Module<B::S>> {
    let big_n = b.root().n();
    if n as i64 >= big_n {
        return Err(KernelError::OutOfRange(format!("S_{n} needs n < N = {big_n}")));
    }
    let d = n as usize + 1;
    let zero = b.zero();
    let mut e = Mat::zeros(d, d, &zero);
    let mut f = Mat::zeros(d, d, &zero);
    for i in 0..d {
        if i + 1 < d {
            f.set(i + 1, i, b.one());
        }
        if i > 0 {
            e.set(i - 1, i, qint(b, i as i64) * qint(b, n as i64 - i as i64 + 1));
        }
    }
    let weights = (0..d).map(|i| Weight::int(n as i64 - 2 * i as i64)).collect();
    let labels = (0..d).map(|i| format!("e{i}")).collect();
    from_actions(b, ModuleKind::Simple(n), labels, weights, e, f)
}

/// `P_n`: basis `x_0..x_(N-1), y_0..y_(N-1)`.
///
/// `E y_i = [i][n+1-i] y_(i-1) + x_(N-2-n+i)` for `i <= n+1` and
/// `E y_i = [i][n+1-i] y_(i-1)` above. The `x` components are the ones
/// that make `[E,F]` act correctly on the whole `y` string.
pub fn build_p<B: Backend>(b: &B, n: u32) -> Result<Module<B::S>> {
    let big_n = b.root().n();
    if n as i64 > big_n - 2 {
        return Err(KernelError::OutOfRange(format!("P_{n} needs n <= N - 2 = {}", big_n - 2)));
    }
    let nn = big_n as usize;
    let n = n as i64;
    let zero = b.zero();
    let mut e = Mat::zeros(2 * nn, 2 * nn, &zero);
    let mut f = Mat::zeros(2 * nn, 2 * nn, &zero);
    let x = |i: usize| i;
    let y = |i: usize| nn + i;
    for i in 0..nn {
        if i + 1 < nn {
            f.set(x(i + 1), x(i), b.one());
            f.set(y(i + 1), y(i), b.one());
        }
        let ii = i as i64;
        if i > 0 {
            e.set(x(i - 1), x(i), -(qint(b, ii) * qint(b, ii + 1 + n)));
        }
        if i > 0 && ii != n + 1 {
            e.set(y(i - 1), y(i), qint(b, ii) * qint(b, n + 1 - ii));
        }
        if ii <= n + 1 {
            e.set(x((big_n - 2 - n + ii) as usize), y(i), b.one());
        }
    }
    let mut weights: Vec<Weight> = (0..nn).map(|i| Weight::int(2 * big_n - 2 - n - 2 * i as i64)).collect();
    weights.extend((0..nn).map(|i| Weight::int(n - 2 * i as i64)));
    let mut labels: Vec<String> = (0..nn).map(|i| format!("x{i}")).collect();
    labels.extend((0..nn).map(|i| format!("y{i}")));
    from_actions(b, ModuleKind::Projective(n as u32), labels, weights, e, f)
}

/// `sigma^m`: one-dimensional, `H v = m N / 2`, `E = F = 0`, `K = 1`.
pub fn build_sigma<B: Backend>(b: &B, m: i64) -> Result<Module<B::S>> {
    let w = Weight::rational(BigRational::new(BigInt::from(m * b.root().n()), BigInt::from(2)));
    let zero = b.zero();
    from_actions(b, ModuleKind::Sigma(m), alloc::vec![String::from("v")], alloc::vec![w], Mat::zeros(1, 1, &zero), Mat::zeros(1, 1, &zero))
}

/// The tensor unit.
pub fn build_unit<B: Backend>(b: &B) -> Result<Module<B::S>> {
    let zero = b.zero();
    from_actions(b, ModuleKind::Unit, alloc::vec![String::from("1")], alloc::vec![Weight::zero()], Mat::zeros(1, 1, &zero), Mat::zeros(1, 1, &zero))
}

/// `M1 (x) M2` with `E -> 1 (x) E + E (x) K` and `F -> K^-1 (x) F + F (x) 1`.
pub fn tensor<S: Ring>(m1: &Module<S>, m2: &Module<S>) -> Module<S> {
    let i1 = m1.identity();
    let i2 = m2.identity();
    let e = i1.kron(&m2.e).add(&m1.e.kron(&m2.k)).expect("shapes agree");
    let f = m1.kinv.kron(&m2.f).add(&m1.f.kron(&i2)).expect("shapes agree");
    let mut weights = Vec::with_capacity(m1.dim() * m2.dim());
    let mut labels = Vec::with_capacity(m1.dim() * m2.dim());
    for (w1, l1) in m1.weights.iter().zip(&m1.labels) {
        for (w2, l2) in m2.weights.iter().zip(&m2.labels) {
            weights.push(w1 + w2);
            labels.push(format!("{l1}*{l2}"));
        }
    }
    Module {
        kind: ModuleKind::Tensor(Box::new(m1.kind.clone()), Box::new(m2.kind.clone())),
        labels,
        weights,
        e,
        f,
        k: m1.k.kron(&m2.k),
        kinv: m1.kinv.kron(&m2.kinv),
    }
}

/// The dual `M*` with `rho*(x) = rho(S(x))^T`, where `S(E) = -E K^-1`,
/// `S(F) = -K F` and `S(K) = K^-1`. The dual basis keeps the labels.
pub fn dual_module<S: Ring>(m: &Module<S>) -> Module<S> {
    let e = m.e.mul(&m.kinv).expect("square").neg().transpose();
    let f = m.k.mul(&m.f).expect("square").neg().transpose();
    Module {
        kind: ModuleKind::Dual(Box::new(m.kind.clone())),
        labels: m.labels.iter().map(|l| format!("{l}^*")).collect(),
        weights: m.weights.iter().map(|w| -w).collect(),
        e,
        f,
        k: m.kinv.clone(),
        kinv: m.k.clone(),
    }
}

/// Names of the defining relations that fail on a module.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub failures: Vec<&'static str>,
}

impl RelationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `KE = q^2 EK`, `KF = q^-2 FK`, `[E,F] = (K - K^-1)/(q - q^-1)`,
/// the H-grading of `E` and `F`, `K = q^H`, and `E^N = F^N = 0`.
pub fn check_relations<B: Backend>(b: &B, m: &Module<B::S>) -> Result<RelationReport> {
    let mut failures = Vec::new();
    let q2 = b.a_pow_int(4);
    let qm2 = b.a_pow_int(-4);
    let ke = m.k.mul(&m.e)?;
    let ek = m.e.mul(&m.k)?.scale(&q2);
    if !ke.equals(&ek) {
        failures.push("KE = q^2 EK");
    }
    let kf = m.k.mul(&m.f)?;
    let fk = m.f.mul(&m.k)?.scale(&qm2);
    if !kf.equals(&fk) {
        failures.push("KF = q^-2 FK");
    }
    let comm = m.e.mul(&m.f)?.sub(&m.f.mul(&m.e)?)?.scale(&brace_int(b, 1));
    if !comm.equals(&m.k.sub(&m.kinv)?) {
        failures.push("[E,F] = (K - K^-1)/(q - q^-1)");
    }
    if !m.k.mul(&m.kinv)?.equals(&m.identity()) {
        failures.push("K K^-1 = 1");
    }
    let d = m.dim();
    let mut grading_e = true;
    let mut grading_f = true;
    for i in 0..d {
        for j in 0..d {
            let dw = &m.weights[i] - &m.weights[j];
            if !m.e.get(i, j).is_zero() && dw != Weight::int(2) {
                grading_e = false;
            }
            if !m.f.get(i, j).is_zero() && dw != Weight::int(-2) {
                grading_f = false;
            }
        }
        if !m.k.get(i, i).equals(&b.q_pow(&m.weights[i])?) {
            failures.push("K = q^H");
            break;
        }
    }
    if !grading_e {
        failures.push("[H,E] = 2E");
    }
    if !grading_f {
        failures.push("[H,F] = -2F");
    }
    let n = b.root().n() as u32;
    let mut en = m.identity();
    let mut fnn = m.identity();
    for _ in 0..n {
        en = en.mul(&m.e)?;
        fnn = fnn.mul(&m.f)?;
    }
    if !en.is_zero() {
        failures.push("E^N = 0");
    }
    if !fnn.is_zero() {
        failures.push("F^N = 0");
    }
    Ok(RelationReport { failures })
}

/// Whether `f: src -> tgt` commutes with `E`, `F`, `K` and preserves weights.
pub fn is_equivariant<S: Ring>(f: &Mat<S>, src: &Module<S>, tgt: &Module<S>) -> Result<bool> {
    if f.rows() != tgt.dim() || f.cols() != src.dim() {
        return Err(KernelError::Shape(format!(
            "{}x{} map between modules of dimension {} and {}",
            f.rows(),
            f.cols(),
            src.dim(),
            tgt.dim()
        )));
    }
    for (a, b) in [(&src.e, &tgt.e), (&src.f, &tgt.f), (&src.k, &tgt.k)] {
        if !f.mul(a)?.equals(&b.mul(f)?) {
            return Ok(false);
        }
    }
    for i in 0..f.rows() {
        for j in 0..f.cols() {
            if !f.get(i, j).is_zero() && tgt.weights[i] != src.weights[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
