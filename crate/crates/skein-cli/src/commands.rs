//! The subcommands, each producing one JSON record and a pass flag.

use crate::cache::DiskSixjCache;
use crate::config::{Mode, RunConfig};
use crate::error::{CliError, CliResult};
use crate::fixture::{FixtureFile, OmegaFile};
use crate::serial::{parse_rational, BasisManifest, CacheStats, JsonScalar, MatrixDoc, ScalarJson, SCHEMA};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};
use skein_core::calculus::{sixj_closed, sixj_oracle, sixj_symbolic, Sign, SixjArgs, Triple, ValuationCertificate};
use skein_core::scalar::{Approx, Ring, Valuation};
use skein_core::skein::certify::{is_structural_zero, BurnsideCertificate, ShadowCertificate, YsetCertificate};
use skein_core::skein::operators::{beta_operator, gamma_operator, CurveOperator};
use skein_core::skein::*;
use skein_core::torus::{classify, GenusOneClass, TorusContext};
use skein_core::{ApproxBackend, Backend, ExactBackend, Weight};
use std::path::{Path, PathBuf};

/// A finished command: its record and whether everything it checked held.
#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub record: Value,
    pub passed: bool,
    /// Alternative text rendering (CSV tables).
    pub text: Option<String>,
}

impl CommandOutput {
    fn new(record: Value, passed: bool) -> Self {
        Self { record, passed, text: None }
    }
}

/// Which route evaluates a single 6j-symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SixjRoute {
    Closed,
    Oracle,
    Symbolic,
}

impl SixjRoute {
    fn name(self) -> &'static str {
        match self {
            SixjRoute::Closed => "closed",
            SixjRoute::Oracle => "oracle",
            SixjRoute::Symbolic => "symbolic",
        }
    }
}

/// Arguments of `sixj`, colors in units of `alpha`.
#[derive(Clone, Debug)]
pub struct SixjRequest {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub gamma: BigRational,
    pub e1: i64,
    pub e2: i64,
    pub route: SixjRoute,
    pub cross_validate: bool,
}

fn lcm_denominators<'a>(it: impl Iterator<Item = &'a BigRational>) -> i64 {
    use num_integer::Integer;
    it.fold(BigInt::one(), |acc, r| acc.lcm(r.denom())).to_i64().unwrap_or(i64::MAX)
}

fn valuation_json(v: Valuation) -> Value {
    match v {
        Valuation::Finite(k) => json!(k),
        Valuation::Infinite => json!("inf"),
    }
}

pub fn certificate_json(c: &ValuationCertificate) -> Value {
    json!({
        "theta1": c.theta1,
        "v_f1": valuation_json(c.v_f1),
        "v_f2": valuation_json(c.v_f2),
        "predicted_f1": c.predicted_f1,
        "predicted_f2": c.predicted_f2,
        "matches_prediction": c.matches_prediction(),
        "r_nonzero": c.r_nonzero,
    })
}

fn sixj_args(cfg: &RunConfig, req: &SixjRequest) -> CliResult<SixjArgs> {
    let k = BigRational::from_integer(BigInt::from(cfg.root().k()));
    let sign = |v| Sign::from_i64(v).map_err(|e| CliError::Usage(e.to_string()));
    Ok(SixjArgs::new(
        Weight::rational(&req.alpha / &k),
        Weight::rational(&req.beta / &k),
        Weight::rational(&req.gamma / &k),
        sign(req.e1)?,
        sign(req.e2)?,
    ))
}

fn routes(req: &SixjRequest) -> Vec<SixjRoute> {
    if req.cross_validate {
        vec![SixjRoute::Closed, SixjRoute::Oracle, SixjRoute::Symbolic]
    } else {
        vec![req.route]
    }
}

pub fn cmd_sixj(cfg: &RunConfig, req: &SixjRequest) -> CliResult<CommandOutput> {
    let root = cfg.root();
    let args = sixj_args(cfg, req)?;
    // an odd defect is a property of the colors, not a missing feature
    let triple = Triple::new(root.n(), &args.a, &args.b, &args.g).map_err(|e| match e {
        skein_core::KernelError::Unsupported(msg) => CliError::Inadmissible(msg),
        other => other.into(),
    })?;
    let m = triple.m();
    let symbolic = sixj_symbolic(root, m, args.e1, args.e2)?;
    let colors: Vec<BigRational> =
        [&args.a, &args.b, &args.g].iter().map(|w| w.as_constant().expect("rational color").clone()).collect();
    let mut values = serde_json::Map::new();
    let agree = match cfg.mode {
        Mode::Exact => {
            let b = ExactBackend::with_denominator(root, Vec::new(), lcm_denominators(colors.iter()))?;
            let mut got = Vec::new();
            for r in routes(req) {
                let v = match r {
                    SixjRoute::Closed => sixj_closed(&b, &args)?,
                    SixjRoute::Oracle => sixj_oracle(&b, &args)?.value,
                    SixjRoute::Symbolic => symbolic.evaluate(&b, &args.a, &args.b, &triple.g)?,
                };
                values.insert(r.name().into(), serde_json::to_value(v.to_json()).expect("json"));
                got.push(v);
            }
            got.windows(2).all(|w| w[0].equals(&w[1]))
        }
        Mode::Approx => {
            let b = ApproxBackend::new(root, Vec::new()).with_tolerance(cfg.tolerance);
            let mut got: Vec<Approx> = Vec::new();
            for r in routes(req) {
                let v = match r {
                    SixjRoute::Closed => sixj_closed(&b, &args)?,
                    SixjRoute::Oracle => sixj_oracle(&b, &args)?.value,
                    SixjRoute::Symbolic => {
                        let point: Vec<_> = [&args.a, &args.b, &triple.g]
                            .iter()
                            .map(|w| b.a_pow(w).map(|z| z.value()))
                            .collect::<Result<_, _>>()?;
                        let z = symbolic.r.eval_complex(&point).map_err(skein_core::KernelError::from)?;
                        Approx::new(z, cfg.tolerance)
                    }
                };
                values.insert(r.name().into(), serde_json::to_value(v.to_json()).expect("json"));
                got.push(v);
            }
            got.windows(2).all(|w| {
                let (x, y) = (w[0].value(), w[1].value());
                (x - y).norm() <= cfg.tolerance * (1.0 + x.norm().max(y.norm()))
            })
        }
    };
    let primary = values.get(req.route.name()).cloned().unwrap_or(Value::Null);
    let mut record = json!({
        "schema": SCHEMA,
        "kind": "sixj",
        "n": root.n(),
        "kprime": root.kprime(),
        "mode": cfg.mode,
        "colors_x": colors.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "e1": req.e1,
        "e2": req.e2,
        "m": m,
        "method": req.route.name(),
        "value": primary,
    });
    if req.route == SixjRoute::Symbolic || req.cross_validate {
        record["certificate"] = certificate_json(&symbolic.certificate);
    }
    if req.cross_validate {
        record["cross_validation"] = json!({ "values": values, "agree": agree });
    }
    Ok(CommandOutput::new(record, agree))
}

/// Where the surface comes from.
#[derive(Clone, Debug, Default)]
pub struct SurfaceSource {
    pub genus: Option<usize>,
    pub fixture: Option<PathBuf>,
}

impl SurfaceSource {
    pub fn load(&self) -> CliResult<SurfacePreset> {
        match (&self.fixture, self.genus) {
            (Some(path), _) => FixtureFile::load(path)?.to_preset(),
            (None, Some(g)) => Ok(preset(g)?),
            (None, None) => Err(CliError::Usage("give --genus or --fixture".into())),
        }
    }
}

pub fn load_omega(path: &Path, p: &SurfacePreset) -> CliResult<OmegaData> {
    OmegaFile::load(path)?.to_omega(p)
}

/// Parses `gamma_3`, `gamma_e3` or a transverse curve name.
fn pants_index(curve: &str, edges: usize) -> CliResult<Option<usize>> {
    let Some(rest) = curve.strip_prefix("gamma_") else { return Ok(None) };
    let digits = rest.strip_prefix('e').unwrap_or(rest);
    let k: usize = digits.parse().map_err(|_| CliError::Usage(format!("bad pants curve name {curve}")))?;
    if k == 0 || k > edges {
        return Err(CliError::Inadmissible(format!("{curve} outside gamma_1..gamma_{edges}")));
    }
    Ok(Some(k - 1))
}

fn one_operator<B: Backend, P: SixjProvider<B>>(
    b: &B,
    p: &SurfacePreset,
    omega: &OmegaData,
    curve: &str,
    sixj: &mut P,
) -> CliResult<(ColoringBasis, CurveOperator<B::S>)> {
    let basis = ColoringBasis::new(b.root().n(), omega);
    let op = match pants_index(curve, p.graph.edge_count())? {
        Some(e) => gamma_operator(b, &basis, omega, e)?,
        None => {
            let beta = p.beta(curve).ok_or_else(|| CliError::Usage(format!("unknown curve {curve}")))?;
            beta_operator(b, &basis, omega, beta, sixj)?
        }
    };
    Ok((basis, op))
}

fn rep_output<S: JsonScalar>(cfg: &RunConfig, basis: &ColoringBasis, op: &CurveOperator<S>, stats: CacheStats) -> CommandOutput {
    let mut doc = MatrixDoc::from_matrix(&op.curve.to_string(), &op.matrix);
    doc.basis = Some(BasisManifest::of(basis));
    doc.cache = Some(stats);
    let max_column = (0..op.matrix.ncols()).map(|j| op.matrix.column(j).len()).max().unwrap_or(0);
    let mut record = serde_json::to_value(&doc).expect("json");
    record["kind"] = json!("matrix");
    record["max_nonzeros_per_column"] = json!(max_column);
    record["vanishing_factors"] = json!(op.vanishing.len());
    let text = (cfg.format == crate::config::OutputFormat::Csv).then(|| doc.to_csv());
    CommandOutput { record, passed: true, text }
}

pub fn cmd_rep(cfg: &RunConfig, surface: &SurfaceSource, omega: &Path, curve: &str) -> CliResult<CommandOutput> {
    let p = surface.load()?;
    let om = load_omega(omega, &p)?;
    match cfg.mode {
        Mode::Exact => {
            let b = exact_backend_for(cfg.root(), &om)?;
            let mut cache = DiskSixjCache::new(cfg.cache_dir.clone(), SixjMethod::Closed)?;
            let (basis, op) = one_operator(&b, &p, &om, curve, &mut cache)?;
            cache.spot_check(&b, 4)?;
            Ok(rep_output(cfg, &basis, &op, cache.stats().clone()))
        }
        Mode::Approx => {
            let b = ApproxBackend::new(cfg.root(), Vec::new()).with_tolerance(cfg.tolerance);
            let mut cache = SixjCache::new(SixjMethod::Closed);
            let (basis, op) = one_operator(&b, &p, &om, curve, &mut cache)?;
            let stats = CacheStats { memory_hits: cache.hits(), computed: cache.misses(), ..CacheStats::default() };
            Ok(rep_output(cfg, &basis, &op, stats))
        }
    }
}

/// Options of `irreducible`.
#[derive(Clone, Copy, Debug, Default)]
pub struct IrreducibleOptions {
    /// Also close words modulo a prime (exact mode).
    pub words: bool,
    /// Count the two identically vanishing 6j classes as failures.
    pub strict_yset: bool,
    pub skip_yset: bool,
}

fn shadow_json<S: JsonScalar>(c: &ShadowCertificate<S>) -> Value {
    let entries: Vec<Value> = c
        .entries
        .iter()
        .map(|e| {
            json!({
                "curve": e.curve,
                "scalar": e.scalar.as_ref().map(|s| s.to_json()),
                "expected": e.expected.as_ref().map(|s| s.to_json()),
                "deviation": e.deviation,
                "passed": e.passed(),
            })
        })
        .collect();
    json!({ "passed": c.passed(), "worst_deviation": c.worst_deviation(), "entries": entries })
}

fn yset_json(y: &YsetCertificate, strict: bool) -> (Value, bool) {
    let structural = y.zeros.iter().filter(|z| z.structural).count();
    let nonstructural = y.nonstructural_zeros().count();
    let passed_literal = y.passed();
    let passed = if strict { passed_literal } else { nonstructural == 0 && y.degenerate.is_empty() };
    let v = json!({
        "tuples": y.tuples,
        "distinct": y.distinct,
        "zeros": y.zeros.len(),
        "structural_zeros": structural,
        "nonstructural_zeros": nonstructural,
        "degenerate": y.degenerate.len(),
        "zero_in_yset": !y.zeros.is_empty(),
        "passed_literal": passed_literal,
        "strict": strict,
        "passed": passed,
    });
    (v, passed)
}

fn burnside_json(c: &BurnsideCertificate) -> Value {
    json!({
        "method": format!("{:?}", c.method),
        "dimension": c.dimension,
        "target": c.target,
        "simple_spectrum": c.simple_spectrum,
        "components": c.components,
        "prime": c.prime,
        "words": c.words,
        "passed": c.passed(),
    })
}

fn generation_json(g: &GenerationCertificate) -> Value {
    json!({ "modulus": g.modulus, "edges": g.edges, "ranks": g.ranks, "passed": g.passed() })
}

pub fn cmd_irreducible(
    cfg: &RunConfig,
    surface: &SurfaceSource,
    omega: &Path,
    opts: IrreducibleOptions,
) -> CliResult<CommandOutput> {
    let p = surface.load()?;
    let om = load_omega(omega, &p)?;
    let root = cfg.root();
    let generation = generation_certificate(&p, root.n() as u64);
    let mut certs = serde_json::Map::new();
    let (dimension, shadow_ok, yset_ok, burnside_ok, stats) = match cfg.mode {
        Mode::Exact => {
            let b = exact_backend_for(root, &om)?;
            let mut cache = DiskSixjCache::new(cfg.cache_dir.clone(), SixjMethod::Closed)?;
            let rep = build_representation(&b, &p, &om, &mut cache)?;
            let shadow = shadow_certificate(&b, &rep, &om)?;
            certs.insert("shadow".into(), shadow_json(&shadow));
            let mut yset_ok = true;
            if !opts.skip_yset {
                let y = yset_certificate(&b, &p, &rep.basis, &mut cache)?;
                let (v, ok) = yset_json(&y, opts.strict_yset);
                certs.insert("yset".into(), v);
                yset_ok = ok;
            }
            let support = burnside_support(&rep);
            certs.insert("burnside".into(), burnside_json(&support));
            let mut burnside_ok = support.passed();
            if opts.words {
                let w = burnside_words_modp(&rep)?;
                certs.insert("burnside_words".into(), burnside_json(&w));
                burnside_ok &= w.passed();
            }
            cache.spot_check(&b, 4)?;
            (rep.dimension(), shadow.passed(), yset_ok, burnside_ok, cache.stats().clone())
        }
        Mode::Approx => {
            let b = ApproxBackend::new(root, Vec::new()).with_tolerance(cfg.tolerance);
            let mut cache = SixjCache::new(SixjMethod::Closed);
            let rep = build_representation(&b, &p, &om, &mut cache)?;
            let shadow = shadow_certificate(&b, &rep, &om)?;
            certs.insert("shadow".into(), shadow_json(&shadow));
            let mut yset_ok = true;
            if !opts.skip_yset {
                let y = yset_certificate(&b, &p, &rep.basis, &mut cache)?;
                let (v, ok) = yset_json(&y, opts.strict_yset);
                certs.insert("yset".into(), v);
                yset_ok = ok;
            }
            let support = burnside_support(&rep);
            certs.insert("burnside".into(), burnside_json(&support));
            let stats = CacheStats { memory_hits: cache.hits(), computed: cache.misses(), ..CacheStats::default() };
            (rep.dimension(), shadow.passed(), yset_ok, support.passed(), stats)
        }
    };
    certs.insert("generation".into(), generation_json(&generation));
    let passed = shadow_ok && yset_ok && burnside_ok && generation.passed();
    let record = json!({
        "schema": SCHEMA,
        "kind": "irreducibility",
        "n": root.n(),
        "kprime": root.kprime(),
        "mode": cfg.mode,
        "genus": p.genus,
        "omega": om.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "dimension": dimension,
        "certificates": certs,
        "cache": stats,
        "passed": passed,
    });
    Ok(CommandOutput::new(record, passed))
}

/// `genus1`: classification at `x = e^(2 pi i s)`, `y = e^(2 pi i t)`.
pub fn cmd_genus1(cfg: &RunConfig, s: &str, t: &str) -> CliResult<CommandOutput> {
    let (s, t) = (parse_rational(s)?, parse_rational(t)?);
    let extra = lcm_denominators([&s, &t].into_iter()) as usize;
    let ctx = TorusContext::new(cfg.root(), extra);
    let x = ctx.unit_root(&s)?;
    let y = ctx.unit_root(&t)?;
    let class = classify(&ctx, x, y)?;
    let detail = match &class {
        GenusOneClass::Generic { dimension, longitude_shadow, meridian_shadow, shadow_verified, algebra_dimension } => {
            json!({
                "class": "generic",
                "dimension": dimension,
                "longitude_shadow": longitude_shadow.to_json(),
                "meridian_shadow": meridian_shadow.to_json(),
                "shadow_verified": shadow_verified,
                "algebra_dimension": algebra_dimension,
            })
        }
        GenusOneClass::Central { signs, even, odd, image_dimension, expected_image_dimension } => {
            let piece = |c: &skein_core::torus::CentralSummary| {
                json!({
                    "dimension": c.dimension,
                    "algebra_dimension": c.algebra_dimension,
                    "irreducible": c.irreducible(),
                    "matches_restriction": c.matches_restriction,
                })
            };
            json!({
                "class": "central",
                "signs": [signs.0, signs.1],
                "plus": piece(even),
                "minus": piece(odd),
                "image_dimension": image_dimension,
                "expected_image_dimension": expected_image_dimension,
            })
        }
    };
    let record = json!({
        "schema": SCHEMA,
        "kind": "genus1",
        "n": cfg.n,
        "kprime": cfg.kprime,
        "angles": [s.to_string(), t.to_string()],
        "classification": detail,
        "passed": class.passed(),
    });
    Ok(CommandOutput::new(record, class.passed()))
}

/// Used by the structural-zero report of `sixj`.
pub fn structural(n: i64, m: i64, e1: i64, e2: i64) -> bool {
    match (Sign::from_i64(e1), Sign::from_i64(e2)) {
        (Ok(a), Ok(b)) => is_structural_zero(n, m, a, b),
        _ => false,
    }
}

/// Keeps the scalar JSON type reachable for callers that post-process records.
pub type ScalarRecord = ScalarJson;
