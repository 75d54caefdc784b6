//! The acceptance suite: ten criteria, each returning a timed report.

use crate::fixture::OmegaFile;
use crate::error::CliResult;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use skein_core::calculus::identities::{check_binomial_sign, check_triple};
use skein_core::calculus::{sixj_closed, sixj_oracle, sixj_symbolic, Sign, SixjArgs, SymbolicSixj};
use skein_core::category::*;
use skein_core::linalg::Mat;
use skein_core::scalar::Ring;
use skein_core::skein::*;
use skein_core::torus::{classify, GenusOneClass, TorusContext};
use skein_core::{ApproxBackend, Backend, ExactBackend, RootData, SymbolicBackend, Weight};
use std::collections::BTreeMap;
use std::time::Instant;

pub const OMEGA_G2: &str = include_str!("../fixtures/omega_g2.json");
pub const OMEGA_G3: &str = include_str!("../fixtures/omega_g3.json");

/// Criteria that fail for documented mathematical reasons rather than bugs.
pub const KNOWN_DEVIATIONS: &[(u8, &str)] = &[
    (5, "the valuations of the two summands differ from the predicted 7t-2N+5 and 7t-2N+10 for some (m, e1, e2)"),
    (8, "every omega has 0 in its Y-set: two sign classes of 6j-symbols vanish identically"),
    (10, "sigma^m braids with a typical V_x by the nontrivial scalar A^(m N x), so it is transparent only up to a grading character"),
];

pub fn is_known_deviation(id: u8) -> bool {
    KNOWN_DEVIATIONS.iter().any(|(k, _)| *k == id)
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub budget: f64,
    pub known_deviation: bool,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let tag = if !self.passed && self.known_deviation { " [known deviation]" } else { "" };
        format!(
            "criterion {:>2} {verdict}{tag} ({:.2}s of {:.0}s) {}: {}",
            self.id, self.seconds, self.budget, self.name, self.detail
        )
    }
}

type Outcome = CliResult<(bool, String)>;

struct Criterion {
    id: u8,
    name: &'static str,
    budget: f64,
    run: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "module relations", budget: 10.0, run: module_relations },
    Criterion { id: 2, name: "tensor decomposition", budget: 30.0, run: tensor_decomposition },
    Criterion { id: 3, name: "vertex identities", budget: 120.0, run: vertex_identities },
    Criterion { id: 4, name: "6j agreement", budget: 300.0, run: sixj_agreement },
    Criterion { id: 5, name: "valuation certificates", budget: 120.0, run: valuations },
    Criterion { id: 6, name: "basis dimension", budget: 1.0, run: basis_dimension },
    Criterion { id: 7, name: "shadow certificates", budget: 300.0, run: shadows },
    Criterion { id: 8, name: "irreducibility", budget: 600.0, run: irreducibility },
    Criterion { id: 9, name: "genus one", budget: 60.0, run: genus_one },
    Criterion { id: 10, name: "skein relation witnesses", budget: 10.0, run: skein_witnesses },
];

/// Criterion ids selected by a suite name.
pub fn suite(name: &str) -> Option<Vec<u8>> {
    let ids = match name {
        "all" => (1..=10).collect(),
        "modules" => vec![1, 2, 10],
        "appendixA" | "identities" => vec![3],
        "sixj" => vec![4],
        "valuations" => vec![5],
        "skein" => vec![6, 7, 8],
        "genus1" => vec![9],
        other => {
            let ids: Option<Vec<u8>> = other.split(',').map(|t| t.trim().parse().ok()).collect();
            ids.filter(|v| !v.is_empty() && v.iter().all(|k| (1..=10).contains(k)))?
        }
    };
    Some(ids)
}

pub fn run_criterion(id: u8) -> CriterionReport {
    let c = CRITERIA.iter().find(|c| c.id == id).expect("criterion id in 1..=10");
    let start = Instant::now();
    let (ok, detail) = match (c.run)() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let seconds = start.elapsed().as_secs_f64();
    let within = seconds <= c.budget;
    let detail = if ok && !within { format!("{detail}; over the time budget") } else { detail };
    CriterionReport {
        id,
        name: c.name,
        passed: ok && within,
        detail,
        seconds,
        budget: c.budget,
        known_deviation: is_known_deviation(id),
    }
}

pub fn run_suite(ids: &[u8]) -> Vec<CriterionReport> {
    ids.iter().map(|&id| run_criterion(id)).collect()
}

fn root(n: u32) -> RootData {
    RootData::new(n, 1).expect("odd N")
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

const DENOM: i64 = 20;

/// Numerators `p` of colors `p / 20` with `4 p / 20` not an integer. A
/// quarter-integer color makes some bracket `{x - n}` vanish.
fn generic(p: i64) -> bool {
    p % (DENOM / 4) != 0
}

fn random_color(rng: &mut StdRng) -> i64 {
    loop {
        let p = rng.gen_range(-39..=39);
        if generic(p) {
            return p;
        }
    }
}

/// Two colors whose sum and difference are generic too.
fn random_pair(rng: &mut StdRng) -> (Weight, Weight) {
    loop {
        let (a, b) = (random_color(rng), random_color(rng));
        if generic(a + b) && generic(a - b) {
            return (Weight::rational(rat(a, DENOM)), Weight::rational(rat(b, DENOM)));
        }
    }
}

fn module_relations() -> Outcome {
    let mut checked = 0;
    for n in [3u32, 5] {
        let b = SymbolicBackend::with_denominator(root(n), 1, 2);
        let v = build_v(&b, &Weight::param(0))?;
        let mut modules = vec![(format!("V at N={n}"), v.clone())];
        modules.extend((0..n).map(|s| Ok((format!("S_{s} at N={n}"), build_s(&b, s)?))).collect::<CliResult<Vec<_>>>()?);
        modules.extend((0..n - 1).map(|p| Ok((format!("P_{p} at N={n}"), build_p(&b, p)?))).collect::<CliResult<Vec<_>>>()?);
        for m in [-1, 1] {
            modules.push((format!("sigma^{m} at N={n}"), build_sigma(&b, m)?));
        }
        modules.push((format!("S_1 (x) V at N={n}"), tensor(&build_s(&b, 1)?, &v)));
        for (name, m) in modules {
            let report = check_relations(&b, &m)?;
            if !report.is_ok() {
                return Ok((false, format!("{name}: {:?}", report.failures)));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} modules satisfy every relation including E^N = F^N = 0")))
}

fn sorted_weights(ws: &[Weight]) -> Vec<BigRational> {
    let mut v: Vec<BigRational> = ws.iter().map(|w| w.eval_rational(&[])).collect();
    v.sort();
    v
}

fn tensor_decomposition() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2);
    let mut samples = 0;
    for n in [3u32, 5] {
        let b = ExactBackend::with_denominator(root(n), Vec::new(), DENOM)?;
        for _ in 0..20 {
            let (x, y) = random_pair(&mut rng);
            let vv = tensor(&build_v(&b, &x)?, &build_v(&b, &y)?);
            let hw = decompose_vv(&b, &x, &y)?;
            if hw.len() != n as usize {
                return Ok((false, format!("{} highest-weight vectors at N={n}", hw.len())));
            }
            let mut summands = Vec::new();
            for h in &hw {
                let expected: Vec<Weight> = (0..n as i64).map(|i| h.summand.add_int(n as i64 - 1 - 2 * i)).collect();
                summands.extend(expected);
                // a highest-weight vector is killed by E
                if !vv.e().apply(&h.vector).iter().all(|c| c.is_zero()) {
                    return Ok((false, format!("E does not kill the vector of {:?}", h.summand)));
                }
            }
            let mut wanted: Vec<BigRational> =
                (0..n as i64).map(|k| (&x + &y).add_int(n as i64 - 1 - 2 * k).eval_rational(&[])).collect();
            let mut got: Vec<BigRational> = hw.iter().map(|h| h.summand.eval_rational(&[])).collect();
            wanted.sort();
            got.sort();
            if wanted != got || sorted_weights(vv.weights()) != sorted_weights(&summands) {
                return Ok((false, format!("weight multisets differ at N={n}, x={x:?}, y={y:?}")));
            }
            samples += 1;
        }
    }
    Ok((true, format!("{samples} random pairs decompose into N typical summands")))
}

fn vertex_identities() -> Outcome {
    let mut rng = StdRng::seed_from_u64(3);
    let mut triples = 0;
    let mut checks = 0;
    for n in [3u32, 5] {
        let b = ExactBackend::with_denominator(root(n), Vec::new(), DENOM)?;
        for _ in 0..10 {
            let (x, y) = random_pair(&mut rng);
            for m in 0..n as i64 {
                let g = (&x + &y).add_int(-(2 * m - (n as i64 - 1)));
                let report = check_triple(&b, &x, &y, &g)?;
                if !report.all_hold() {
                    let failed: Vec<&str> = report.failures().collect();
                    return Ok((false, format!("N={n} m={m}: {failed:?}")));
                }
                triples += 1;
                checks += report.checks.len();
            }
            if !check_binomial_sign(&b, &x)? {
                return Ok((false, format!("binomial sign identity fails at N={n}")));
            }
        }
    }
    Ok((true, format!("{checks} identities over {triples} admissible triples, binomial sign identity holds")))
}

fn signs() -> [(Sign, Sign); 4] {
    let (p, m) = (Sign::from_i64(1).expect("sign"), Sign::from_i64(-1).expect("sign"));
    [(p, p), (p, m), (m, p), (m, m)]
}

fn sixj_agreement() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let mut total = 0;
    for (n, samples) in [(3u32, 100), (5, 25)] {
        let r = root(n);
        let b = ExactBackend::with_denominator(r, Vec::new(), DENOM)?;
        let mut symbolic: BTreeMap<(i64, usize), SymbolicSixj> = BTreeMap::new();
        for _ in 0..samples {
            let (x, y) = random_pair(&mut rng);
            let m = rng.gen_range(0..n as i64);
            let si = rng.gen_range(0..4);
            let (e1, e2) = signs()[si];
            let g = (&x + &y).add_int(-(2 * m - (n as i64 - 1)));
            let args = SixjArgs::new(x.clone(), y.clone(), g.clone(), e1, e2);
            let closed = sixj_closed(&b, &args)?;
            let oracle = sixj_oracle(&b, &args)?.value;
            if !symbolic.contains_key(&(m, si)) {
                symbolic.insert((m, si), sixj_symbolic(r, m, e1, e2)?);
            }
            let sym = symbolic[&(m, si)].evaluate(&b, &x, &y, &g)?;
            if !closed.equals(&oracle) || !closed.equals(&sym) {
                return Ok((false, format!("disagreement at N={n} m={m} e=({e1:?},{e2:?})")));
            }
            total += 1;
        }
    }
    Ok((true, format!("{total} random symbols agree exactly across oracle, closed form and symbolic")))
}

fn valuations() -> Outcome {
    let mut cases = 0;
    let mut mismatched = Vec::new();
    let mut vanishing = 0;
    for n in [3u32, 5] {
        for m in 0..n as i64 {
            for (e1, e2) in signs() {
                let cert = sixj_symbolic(root(n), m, e1, e2)?.certificate;
                cases += 1;
                if !cert.r_nonzero {
                    vanishing += 1;
                }
                if !cert.matches_prediction() {
                    mismatched.push(format!("N={n} m={m} e=({},{})", e1.value(), e2.value()));
                }
            }
        }
    }
    let passed = mismatched.is_empty() && vanishing == 0;
    let detail = format!(
        "{} of {cases} cases match the predicted valuations; R vanishes identically in {vanishing} cases{}",
        cases - mismatched.len(),
        if mismatched.is_empty() { String::new() } else { format!("; first mismatch {}", mismatched[0]) }
    );
    Ok((passed, detail))
}

fn shipped_omega(g: usize) -> CliResult<(SurfacePreset, OmegaData)> {
    let p = preset(g)?;
    let text = if g == 2 { OMEGA_G2 } else { OMEGA_G3 };
    let om = OmegaFile::parse(text)?.to_omega(&p)?;
    Ok((p, om))
}

fn basis_dimension() -> Outcome {
    let mut found = Vec::new();
    for (g, n, want) in [(2usize, 3i64, 27usize), (2, 5, 125), (3, 3, 729)] {
        let (_, om) = shipped_omega(g)?;
        let got = ColoringBasis::new(n, &om).len();
        if got != want {
            return Ok((false, format!("g={g} N={n}: {got} colorings, expected {want}")));
        }
        found.push(format!("g={g},N={n}:{got}"));
    }
    Ok((true, found.join(" ")))
}

fn exact_rep(g: usize, n: u32) -> CliResult<(ExactBackend, Representation<skein_core::scalar::Cyclo>, OmegaData)> {
    let (p, om) = shipped_omega(g)?;
    let b = exact_backend_for(root(n), &om)?;
    let rep = build_representation(&b, &p, &om, &mut SixjCache::new(SixjMethod::Closed))?;
    Ok((b, rep, om))
}

fn shadows() -> Outcome {
    let mut notes = Vec::new();
    for (g, n) in [(2usize, 3u32), (2, 5), (3, 3)] {
        let (b, rep, om) = exact_rep(g, n)?;
        let cert = shadow_certificate(&b, &rep, &om)?;
        if !cert.passed() {
            let bad: Vec<&str> = cert.entries.iter().filter(|e| !e.passed()).map(|e| e.curve.as_str()).collect();
            return Ok((false, format!("g={g} N={n}: {bad:?}")));
        }
        notes.push(format!("g={g},N={n}: {} curves exact", cert.entries.len()));
    }
    Ok((true, notes.join("; ")))
}

fn irreducibility() -> Outcome {
    let (p, om) = shipped_omega(2)?;
    let b = exact_backend_for(root(3), &om)?;
    let mut cache = SixjCache::new(SixjMethod::Closed);
    let rep = build_representation(&b, &p, &om, &mut cache)?;
    let support = burnside_support(&rep);
    let words = burnside_words_modp(&rep)?;
    let generation = generation_certificate(&p, 3);
    let yset = yset_certificate(&b, &p, &rep.basis, &mut cache)?;
    let structural = yset.zeros.iter().filter(|z| z.structural).count();
    let nonstructural = yset.nonstructural_zeros().count();

    let mut approx = Vec::new();
    let mut approx_ok = true;
    for tol in [1e-8, 1e-10] {
        let b = ApproxBackend::new(root(5), Vec::<Complex64>::new()).with_tolerance(tol);
        let rep = build_representation(&b, &p, &om, &mut SixjCache::new(SixjMethod::Closed))?;
        let cert = burnside_support(&rep);
        approx_ok &= cert.passed() && cert.dimension == 125 * 125;
        approx.push(format!("{}@{tol:e}", cert.dimension));
    }
    let span_ok = support.passed() && support.dimension == 729 && words.dimension == 729;
    let passed = span_ok && generation.passed() && approx_ok && yset.passed();
    let detail = format!(
        "N=3 span {} (support) and {} (words mod {}), generation {}; N=5 approx span {}; \
         Y-set has {} distinct symbols with {structural} identically vanishing and {nonstructural} other zeros, \
         so 0 lies in Y(omega)",
        support.dimension,
        words.dimension,
        words.prime.unwrap_or(0),
        if generation.passed() { "passes" } else { "fails" },
        approx.join(" "),
        yset.distinct,
    );
    Ok((passed, detail))
}

fn random_angle(rng: &mut StdRng) -> BigRational {
    let d = rng.gen_range(2..=12i64);
    rat(rng.gen_range(1..d), d)
}

fn genus_one() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let mut generic = 0;
    for n in [3u32, 5, 7] {
        let ctx = TorusContext::new(root(n), 1);
        for (e1, e2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let class = classify(&ctx, ctx.int(e1), ctx.int(e2))?;
            let GenusOneClass::Central { even, odd, image_dimension, expected_image_dimension, .. } = &class else {
                return Ok((false, format!("({e1},{e2}) not central at N={n}")));
            };
            let h = (n as usize - 1) / 2;
            let dims_ok = even.dimension == h + 1 && odd.dimension == h;
            let formula = ((n as usize + 1).pow(2) + (n as usize - 1).pow(2)) / 4;
            if !class.passed() || !dims_ok || *image_dimension != formula || *expected_image_dimension != formula {
                return Ok((false, format!("central piece at N={n} signs ({e1},{e2}): {class:?}")));
            }
        }
        let mut found = 0;
        while found < 10 {
            let (s, t) = (random_angle(&mut rng), random_angle(&mut rng));
            let extra = (s.denom() * t.denom()).to_string().parse::<usize>().expect("small");
            let ctx = TorusContext::new(root(n), extra);
            let class = classify(&ctx, ctx.unit_root(&s)?, ctx.unit_root(&t)?)?;
            if let GenusOneClass::Generic { shadow_verified, .. } = &class {
                if !shadow_verified || !class.passed() {
                    return Ok((false, format!("N={n} angles {s}, {t}: {class:?}")));
                }
                found += 1;
                generic += 1;
            }
        }
    }
    Ok((true, format!("central splittings for N=3,5,7 and {generic} generic points with exact shadows")))
}

fn skein_witnesses() -> Outcome {
    let mut opaque = Vec::new();
    for n in [3u32, 5] {
        let b = ExactBackend::with_denominator(root(n), Vec::new(), 2 * DENOM)?;
        let s1 = build_s(&b, 1)?;
        let c = braiding(&b, &s1, &s1)?;
        let lhs = c.scale(&b.a_pow_int(1)).sub(&c.inverse()?.scale(&b.a_pow_int(-1)))?;
        let rhs = Mat::identity(4, &b.one()).scale(&(b.a_pow_int(2) - b.a_pow_int(-2)));
        if !lhs.equals(&rhs) {
            return Ok((false, format!("skein relation fails at N={n}")));
        }
        if !qdim(&b, &s1)?.equals(&(b.a_pow_int(2) + b.a_pow_int(-2))) {
            return Ok((false, format!("loop value wrong at N={n}")));
        }
        let x = Weight::rational(rat(7, DENOM));
        let graded = [("S_1", build_s(&b, 1)?, Weight::zero()), ("P_0", build_p(&b, 0)?, Weight::zero()), ("V", build_v(&b, &x)?, x)];
        for (name, v, color) in graded {
            for m in [-1, 1] {
                let sigma = build_sigma(&b, m)?;
                let double = braiding(&b, &sigma, &v)?.mul(&braiding(&b, &v, &sigma)?)?;
                // the monodromy is the grading character A^(m N x)
                let character = b.a_pow(&color.scale_int(m * i64::from(n)))?;
                if !double.equals(&Mat::identity(v.dim(), &b.one()).scale(&character)) {
                    return Ok((false, format!("double braiding of sigma^{m} with {name} is not scalar at N={n}")));
                }
                if !character.is_one() {
                    opaque.push(format!("{name} at N={n}, m={m}"));
                }
            }
        }
    }
    if !opaque.is_empty() {
        return Ok((
            false,
            format!(
                "skein relation and loop value hold; sigma is transparent on S_1 and P_0 but its double braiding with \
                 V_x is the scalar A^(m N x) != 1 ({})",
                opaque.join(", ")
            ),
        ));
    }
    Ok((true, "skein relation, loop value q + 1/q and sigma transparency hold at N=3,5".into()))
}
