//! One function per subcommand. Each returns a JSON document, a plain-text
//! rendering and whether every checked claim held.

use std::fmt::Write as _;
use std::sync::Arc;

use flagherm::ahstruct::{AhStructure, Iacs, InvariantMetric};
use flagherm::classify::{classify as classify_table, verify_ask_universal, ClassReport};
use flagherm::flag::FlagManifold;
use flagherm::geometry::ConnectionTable;
use flagherm::rootsys::{self, check_weyl_basis, Family, WeylBasis};
use flagherm::scalar::ExactScalar;
use flagherm::submanifold::{CertifyOptions, SubmanifoldCertificate, SubmanifoldData};
use flagherm::{Error, Result};
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{CertifyLevel, EpsilonSpec, RunConfig};

pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn new(json: Value, text: String, passed: bool) -> Self {
        Self { json, text, passed }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    N,
    R,
    Summands,
}

fn to_json(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn approx(s: &ExactScalar) -> String {
    format!("{:.6}", s.to_f64())
}

fn flag_from(cfg: &RunConfig) -> Result<Arc<FlagManifold>> {
    let wb = rootsys::build(cfg.family, cfg.rank)?;
    Ok(Arc::new(FlagManifold::new(wb, &cfg.theta0()?)?))
}

fn options(level: CertifyLevel) -> CertifyOptions {
    match level {
        CertifyLevel::Core => CertifyOptions::core(),
        CertifyLevel::Full => CertifyOptions::default(),
    }
}

/// Every `(lambda, epsilon)` the config asks for, lambda-major.
pub fn structures(cfg: &RunConfig, flag: &FlagManifold, rng: &mut ChaCha8Rng) -> Result<Vec<(InvariantMetric, Iacs)>> {
    let metrics = match cfg.explicit_lambda(flag)? {
        Some(v) => vec![InvariantMetric::new(flag, v)?],
        None => (0..cfg.samples_or(1)).map(|_| InvariantMetric::random(flag, rng)).collect(),
    };
    let signs: Vec<Iacs> = match &cfg.epsilon {
        EpsilonSpec::Canonical => vec![Iacs::canonical(flag)],
        EpsilonSpec::Explicit(v) => vec![Iacs::new(flag, v.clone())?],
        EpsilonSpec::All => Iacs::all(flag).collect(),
    };
    Ok(metrics
        .iter()
        .flat_map(|m| signs.iter().map(move |e| (m.clone(), e.clone())))
        .collect())
}

fn single_table(cfg: &RunConfig, flag: &Arc<FlagManifold>) -> Result<Arc<ConnectionTable>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut all = structures(cfg, flag, &mut rng)?;
    if all.len() != 1 {
        return Err(Error::Config(
            "this command takes one structure: give explicit epsilon and at most one lambda sample".into(),
        ));
    }
    let (m, e) = all.pop().expect("one structure");
    Ok(Arc::new(ConnectionTable::new(Arc::new(AhStructure::new(flag.clone(), m, e)?))))
}

pub fn build(cfg: &RunConfig) -> Result<Outcome> {
    let flag = flag_from(cfg)?;
    let s = flag.summary();
    let mut t = String::new();
    writeln!(t, "flag manifold {}{} with Theta = {:?}", s.family, s.rank, s.theta).unwrap();
    writeln!(t, "roots: {} ({} positive)", s.num_roots, s.num_positive).unwrap();
    writeln!(t, "R(Theta): {}", list(&s.r_theta)).unwrap();
    writeln!(t, "summand classes: {}", s.summands.len()).unwrap();
    for (k, c) in s.summands.iter().enumerate() {
        writeln!(t, "  [{}] {}", k + 1, list(c)).unwrap();
    }
    writeln!(t, "real dimension: {}", s.real_dim).unwrap();
    writeln!(t, "isotropy dimension: {}", s.isotropy_dim).unwrap();
    Ok(Outcome::new(to_json(&s), t, true))
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "(none)".into()
    } else {
        items.join(", ")
    }
}

fn lambda_lines(t: &mut String, lambda: &[String], approx_on: bool) {
    for (k, l) in lambda.iter().enumerate() {
        if approx_on {
            let q = flagherm::scalar::parse_rational(l).expect("rendered rational");
            let d = q.to_f64().unwrap_or(f64::NAN);
            writeln!(t, "  lambda_{} = {l}    ~{d:.6} (approximate)", k + 1).unwrap();
        } else {
            writeln!(t, "  lambda_{} = {l}", k + 1).unwrap();
        }
    }
}

#[derive(Serialize)]
struct ClassifyDoc<'a> {
    family: String,
    rank: usize,
    theta: Vec<usize>,
    lambda: Vec<String>,
    epsilon: Vec<i8>,
    flags: &'a flagherm::classify::ClassFlags,
    witnesses: &'a std::collections::BTreeMap<&'static str, flagherm::classify::Witness>,
    lattice_consistent: bool,
}

pub fn classify(cfg: &RunConfig) -> Result<Outcome> {
    let flag = flag_from(cfg)?;
    let table = single_table(cfg, &flag)?;
    let report: ClassReport = classify_table(&table);
    let d = table.structure().describe();
    let f = report.flags;
    let consistent = f.lattice_consistent();
    let doc = ClassifyDoc {
        family: cfg.family.to_string(),
        rank: cfg.rank,
        theta: cfg.theta.clone(),
        lambda: d.lambda.clone(),
        epsilon: d.epsilon.clone(),
        flags: &report.flags,
        witnesses: &report.witnesses,
        lattice_consistent: consistent,
    };
    let mut t = String::new();
    writeln!(t, "structure on {}{} with Theta = {:?}", cfg.family, cfg.rank, cfg.theta).unwrap();
    lambda_lines(&mut t, &d.lambda, cfg.approx);
    writeln!(t, "  epsilon = {:?}", d.epsilon).unwrap();
    for (name, v) in [
        ("K", f.k),
        ("AK", f.ak),
        ("NK", f.nk),
        ("QK", f.qk),
        ("ASK", f.ask),
        ("SK", f.sk),
        ("H", f.h),
    ] {
        writeln!(t, "{name:>4}: {v}").unwrap();
    }
    for (name, w) in &report.witnesses {
        writeln!(t, "witness {name}: ({}) -> {}", w.tuple.join(", "), w.value).unwrap();
    }
    // ASK must hold on every flag manifold; the lattice must be consistent.
    Ok(Outcome::new(to_json(&doc), t, f.ask && consistent))
}

fn certificate_text(c: &SubmanifoldCertificate) -> String {
    let mut t = String::new();
    writeln!(t, "sub-flag Theta' = {:?} in Theta = {:?}", c.theta_prime.clone().unwrap_or_default(), c.theta).unwrap();
    writeln!(t, "  R' = {}", list(&c.r_prime)).unwrap();
    writeln!(t, "  tangent roots: {}", list(&c.tangent_roots)).unwrap();
    writeln!(t, "  dimension {}, codimension {}", c.dimension, c.codimension).unwrap();
    writeln!(t, "  lambda = [{}], epsilon = {:?}", c.lambda.join(", "), c.epsilon).unwrap();
    for (name, v) in [
        ("holomorphic", Some(c.holomorphic)),
        ("brackets_agree", Some(c.brackets_agree)),
        ("totally_geodesic", Some(c.totally_geodesic)),
        ("minimal", Some(c.minimal)),
        ("minimal_identity", Some(c.minimal_identity)),
        ("partial_codifferential_zero", Some(c.partial_codifferential_zero)),
        ("intrinsic_codifferential_zero", Some(c.intrinsic_codifferential_zero)),
        ("normal_codifferential_zero", c.normal_codifferential_zero),
        ("split_identity", c.split_identity),
        ("gauss", c.gauss),
    ] {
        if let Some(v) = v {
            writeln!(t, "  {name}: {v}").unwrap();
        }
    }
    if let Some(cl) = &c.classes {
        writeln!(
            t,
            "  classes: ambient ASK {} SK {}; submanifold ASK {} SK {}",
            cl.ambient_ask, cl.ambient_sk, cl.sub_ask, cl.sub_sk
        )
        .unwrap();
    }
    for (name, w) in &c.witnesses {
        writeln!(t, "  witness {name}: ({}) -> {}", w.tuple.join(", "), w.value).unwrap();
    }
    writeln!(t, "  passed: {}", c.passed).unwrap();
    t
}

pub fn subflag(cfg: &RunConfig) -> Result<Outcome> {
    let flag = flag_from(cfg)?;
    let tp = cfg
        .theta_prime0()?
        .ok_or_else(|| Error::Config("subflag needs --theta-prime".into()))?;
    let table = single_table(cfg, &flag)?;
    let d = SubmanifoldData::build_subflag(table, &tp)?;
    let c = d.certify_with(options(cfg.certify.unwrap_or(CertifyLevel::Full)));
    Ok(Outcome::new(to_json(&c), certificate_text(&c), c.passed))
}

/// Aggregate over every structure for one `(Theta, Theta')`.
#[derive(Clone, Debug, Serialize)]
pub struct PairSweep {
    pub theta: Vec<usize>,
    pub theta_prime: Vec<usize>,
    pub dimension: usize,
    pub codimension: usize,
    pub configurations: usize,
    pub totally_geodesic: bool,
    pub minimal: bool,
    pub minimal_identity: bool,
    pub partial_codifferential_zero: bool,
    pub brackets_agree: bool,
    /// ASK and SK pass to the sub-flag; present at the full level.
    pub inherited: Option<bool>,
    /// Configurations where the ambient structure is SK.
    pub ambient_sk: usize,
    pub passed: bool,
    pub first_failure: Option<SubmanifoldCertificate>,
}

fn subsets(rank: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << rank).map(move |m| (0..rank).filter(|i| m >> i & 1 == 1).collect())
}

fn sweep_pair(
    cfg: &RunConfig,
    flag: &Arc<FlagManifold>,
    tp: &[usize],
    opts: CertifyOptions,
    rng: &mut ChaCha8Rng,
) -> Result<PairSweep> {
    let mut out = PairSweep {
        theta: flag.theta().iter().map(|i| i + 1).collect(),
        theta_prime: tp.iter().map(|i| i + 1).collect(),
        dimension: 0,
        codimension: 0,
        configurations: 0,
        totally_geodesic: true,
        minimal: true,
        minimal_identity: true,
        partial_codifferential_zero: true,
        brackets_agree: true,
        inherited: opts.classes.then_some(true),
        ambient_sk: 0,
        passed: true,
        first_failure: None,
    };
    for (m, e) in structures(cfg, flag, rng)? {
        let table = Arc::new(ConnectionTable::new(Arc::new(AhStructure::new(flag.clone(), m, e)?)));
        let d = SubmanifoldData::build_subflag(table, tp)?;
        let c = d.certify_with(opts);
        out.dimension = c.dimension;
        out.codimension = c.codimension;
        out.configurations += 1;
        out.totally_geodesic &= c.totally_geodesic;
        out.minimal &= c.minimal;
        out.minimal_identity &= c.minimal_identity;
        out.partial_codifferential_zero &= c.partial_codifferential_zero;
        out.brackets_agree &= c.brackets_agree;
        if let Some(cl) = &c.classes {
            out.inherited = Some(out.inherited.unwrap_or(true) && cl.inherited);
            out.ambient_sk += usize::from(cl.ambient_sk);
        }
        if !c.passed {
            out.passed = false;
            if out.first_failure.is_none() {
                out.first_failure = Some(c);
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct SweepDoc {
    check: &'static str,
    family: String,
    ranks: Vec<usize>,
    lambda: String,
    epsilon: String,
    seed: u64,
    level: CertifyLevel,
    pairs: Vec<PairSweep>,
    configurations: usize,
    passed: bool,
}

fn sweep_text(doc: &SweepDoc) -> String {
    let mut t = String::new();
    writeln!(
        t,
        "{} sweep on {} ranks {:?}: {} pairs, {} configurations",
        doc.check,
        doc.family,
        doc.ranks,
        doc.pairs.len(),
        doc.configurations
    )
    .unwrap();
    for p in &doc.pairs {
        writeln!(
            t,
            "  Theta {:?} Theta' {:?}: dim {} codim {} x{} tg={} minimal={}{} {}",
            p.theta,
            p.theta_prime,
            p.dimension,
            p.codimension,
            p.configurations,
            p.totally_geodesic,
            p.minimal,
            p.inherited.map(|i| format!(" inherited={i}")).unwrap_or_default(),
            if p.passed { "ok" } else { "FAIL" }
        )
        .unwrap();
    }
    writeln!(t, "passed: {}", doc.passed).unwrap();
    t
}

fn lambda_word(cfg: &RunConfig) -> String {
    match &cfg.lambda {
        crate::config::LambdaSpec::Killing => "killing".into(),
        crate::config::LambdaSpec::Random => format!("random x{} (numerators, denominators in 1..=20)", cfg.samples_or(1)),
        crate::config::LambdaSpec::Explicit(v) => v.join(","),
    }
}

fn epsilon_word(cfg: &RunConfig) -> String {
    match &cfg.epsilon {
        EpsilonSpec::Canonical => "canonical".into(),
        EpsilonSpec::All => "all".into(),
        EpsilonSpec::Explicit(v) => format!("{v:?}"),
    }
}

/// Sub-flag sweep; `check` names the claim the caller reads off the pairs.
fn subflag_sweep(cfg: &RunConfig, check: &'static str, ranks: Vec<usize>, level: CertifyLevel) -> Result<SweepDoc> {
    let opts = match (check, level) {
        ("sk", _) => CertifyOptions {
            classes: true,
            gauss: false,
            normal_terms: false,
        },
        _ => options(level),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pairs = Vec::new();
    for &rank in &ranks {
        let wb = rootsys::build(cfg.family, rank)?;
        let local = RunConfig {
            rank,
            ..cfg.clone()
        };
        let thetas: Vec<Vec<usize>> = if cfg.sweep {
            subsets(rank).filter(|t| t.len() < rank).collect()
        } else {
            vec![local.theta0()?]
        };
        for theta in thetas {
            let flag = Arc::new(FlagManifold::new(wb.clone(), &theta)?);
            let primes: Vec<Vec<usize>> = match local.theta_prime0()? {
                Some(tp) if !cfg.sweep => vec![tp],
                _ => subsets(rank)
                    .filter(|tp| !tp.is_empty() && !tp.iter().all(|i| theta.contains(i)))
                    .collect(),
            };
            for tp in primes {
                pairs.push(sweep_pair(&local, &flag, &tp, opts, &mut rng)?);
            }
        }
    }
    let passed = pairs.iter().all(|p| {
        p.passed
            && match check {
                "sk" => p.inherited == Some(true),
                _ => p.totally_geodesic && p.minimal,
            }
    });
    Ok(SweepDoc {
        check,
        family: cfg.family.to_string(),
        ranks,
        lambda: lambda_word(cfg),
        epsilon: epsilon_word(cfg),
        seed: cfg.seed,
        level: if check == "sk" { CertifyLevel::Full } else { level },
        configurations: pairs.iter().map(|p| p.configurations).sum(),
        pairs,
        passed,
    })
}

pub fn verify_tg(cfg: &RunConfig) -> Result<Outcome> {
    let cfg = &RunConfig {
        samples: Some(cfg.samples_or(3)),
        ..cfg.clone()
    };
    let doc = subflag_sweep(cfg, "tg", vec![cfg.rank], cfg.certify.unwrap_or(CertifyLevel::Core))?;
    Ok(Outcome::new(to_json(&doc), sweep_text(&doc), doc.passed))
}

/// SK passes from the ambient space to every sub-flag, over all ranks up to
/// `max_rank` and every `(Theta, Theta')`. Unless given, every epsilon is tried.
pub fn verify_sk(cfg: &RunConfig) -> Result<Outcome> {
    let epsilon = match &cfg.epsilon {
        EpsilonSpec::Canonical => EpsilonSpec::All,
        other => other.clone(),
    };
    let cfg = RunConfig {
        sweep: true,
        epsilon,
        ..cfg.clone()
    };
    let ranks = (cfg.family.min_rank()..=cfg.max_rank).collect();
    let doc = subflag_sweep(&cfg, "sk", ranks, CertifyLevel::Full)?;
    Ok(Outcome::new(to_json(&doc), sweep_text(&doc), doc.passed))
}

pub fn verify_ask(cfg: &RunConfig) -> Result<Outcome> {
    let c = verify_ask_universal(cfg.family, cfg.max_rank, cfg.samples_or(5), cfg.seed)?;
    let mut t = String::new();
    writeln!(
        t,
        "ASK sweep on {} up to rank {}: {} samples per configuration, seed {}",
        c.family, c.max_rank, c.samples, c.seed
    )
    .unwrap();
    for r in &c.ranks {
        writeln!(
            t,
            "  rank {}: {} Theta ({} skipped), {} configurations, {} evaluations",
            r.rank, r.theta_subsets, r.skipped_full_theta, r.configurations, r.evaluations
        )
        .unwrap();
    }
    writeln!(t, "termwise terms checked: {}", c.termwise_terms).unwrap();
    if let Some(x) = &c.counterexample {
        writeln!(t, "counterexample: {x:?}").unwrap();
    }
    writeln!(t, "passed: {}", c.passed).unwrap();
    Ok(Outcome::new(to_json(&c), t, c.passed))
}

pub fn verify_basis(cfg: &RunConfig) -> Result<Outcome> {
    let wb = rootsys::build(cfg.family, cfg.rank)?;
    let report = check_weyl_basis(&wb);
    let oracle = (cfg.family == Family::A).then(|| wb.matches_matrix_oracle());
    let mut t = String::new();
    writeln!(t, "Weyl basis of {}", report.algebra).unwrap();
    for c in &report.checks {
        writeln!(t, "  {}: {} cases, {} failures", c.name, c.cases, c.failures).unwrap();
        if let Some(w) = &c.witness {
            writeln!(t, "    first failure: {w}").unwrap();
        }
    }
    if let Some(o) = oracle {
        writeln!(t, "  matrix commutator oracle: {o}").unwrap();
    }
    let passed = report.passed() && oracle.unwrap_or(true);
    writeln!(t, "passed: {passed}").unwrap();
    let json = json!({ "report": to_json(&report), "matrix_oracle": oracle, "passed": passed });
    Ok(Outcome::new(json, t, passed))
}

/// Sub-flag of `sl(8)` with `Theta = {a12, a23, a56}` and
/// `Theta' = {a12, a23, a34, a78}`, as printed.
pub const EXAMPLE_THETA: [usize; 3] = [1, 2, 5];
pub const EXAMPLE_THETA_PRIME: [usize; 4] = [1, 2, 3, 7];
pub const EXAMPLE_R_THETA: [&str; 4] = ["α_{1,2}", "α_{2,3}", "α_{1,3}", "α_{5,6}"];
pub const EXAMPLE_R_PRIME: [&str; 7] = ["α_{1,2}", "α_{2,3}", "α_{1,3}", "α_{3,4}", "α_{1,4}", "α_{2,4}", "α_{7,8}"];

fn signed(labels: &[&str]) -> std::collections::BTreeSet<String> {
    labels.iter().flat_map(|l| [l.to_string(), format!("-{l}")]).collect()
}

#[derive(Serialize)]
struct ExampleDoc {
    r_theta: Vec<String>,
    r_theta_matches: bool,
    r_prime: Vec<String>,
    r_prime_matches: bool,
    flag_dimension: usize,
    subflag_dimension: usize,
    subflag_codimension: usize,
    sweep: SweepDoc,
    passed: bool,
}

/// The worked `sl(8)` example: root sets, dimensions, and a sweep over
/// `samples` random metrics and every epsilon.
pub fn verify_example(cfg: &RunConfig) -> Result<Outcome> {
    let cfg = RunConfig {
        family: Family::A,
        rank: 7,
        theta: EXAMPLE_THETA.to_vec(),
        theta_prime: Some(EXAMPLE_THETA_PRIME.to_vec()),
        lambda: crate::config::LambdaSpec::Random,
        epsilon: EpsilonSpec::All,
        samples: Some(cfg.samples_or(5)),
        sweep: false,
        ..cfg.clone()
    };
    let flag = flag_from(&cfg)?;
    let rs = flag.root_system().clone();
    let r_theta: Vec<String> = flag.r_theta().iter().map(|&a| rs.label(a)).collect();
    let r_theta_matches = r_theta.iter().cloned().collect::<std::collections::BTreeSet<_>>() == signed(&EXAMPLE_R_THETA);

    let table = Arc::new(ConnectionTable::new(Arc::new(AhStructure::new(
        flag.clone(),
        InvariantMetric::killing(&flag),
        Iacs::canonical(&flag),
    )?)));
    let d = SubmanifoldData::build_subflag(table, &cfg.theta_prime0()?.expect("set above"))?;
    let r_prime: Vec<String> = d.r_prime().iter().map(|&a| rs.label(a)).collect();
    let r_prime_matches = r_prime.iter().cloned().collect::<std::collections::BTreeSet<_>>() == signed(&EXAMPLE_R_PRIME);

    let sweep = subflag_sweep(&cfg, "tg", vec![7], cfg.certify.unwrap_or(CertifyLevel::Core))?;
    let passed = r_theta_matches
        && r_prime_matches
        && flag.real_dim() == 48
        && d.dim() == 8
        && sweep.passed;
    let doc = ExampleDoc {
        r_theta,
        r_theta_matches,
        r_prime,
        r_prime_matches,
        flag_dimension: flag.real_dim(),
        subflag_dimension: d.dim(),
        subflag_codimension: d.codim(),
        sweep,
        passed,
    };
    let mut t = String::new();
    writeln!(t, "SU(8) example, Theta = {:?}, Theta' = {:?}", EXAMPLE_THETA, EXAMPLE_THETA_PRIME).unwrap();
    writeln!(t, "  R(Theta) = {} (matches: {})", doc.r_theta.join(", "), doc.r_theta_matches).unwrap();
    writeln!(t, "  R' = {} (matches: {})", doc.r_prime.join(", "), doc.r_prime_matches).unwrap();
    writeln!(
        t,
        "  dim F = {}, sub-flag dimension {}, codimension {}",
        doc.flag_dimension, doc.subflag_dimension, doc.subflag_codimension
    )
    .unwrap();
    t.push_str(&sweep_text(&doc.sweep));
    Ok(Outcome::new(to_json(&doc), t, passed))
}

pub fn emit_table(cfg: &RunConfig, which: Table) -> Result<Outcome> {
    match which {
        Table::N => {
            let wb: Arc<WeylBasis> = rootsys::build(cfg.family, cfg.rank)?;
            let rs = wb.root_system();
            let mut rows = Vec::new();
            let mut t = String::new();
            for a in 0..rs.len() {
                for b in 0..rs.len() {
                    if let Some(n) = wb.n(a, b) {
                        let (la, lb) = (rs.label(a), rs.label(b));
                        let mut row = json!({ "alpha": la, "beta": lb, "n": n.to_string() });
                        if cfg.approx {
                            row["approx"] = json!(approx(n));
                            writeln!(t, "n({la}, {lb}) = {n}    ~{} (approximate)", approx(n)).unwrap();
                        } else {
                            writeln!(t, "n({la}, {lb}) = {n}").unwrap();
                        }
                        rows.push(row);
                    }
                }
            }
            Ok(Outcome::new(json!({ "table": "n", "rows": rows }), t, true))
        }
        Table::R => {
            let flag = flag_from(cfg)?;
            let table = single_table(cfg, &flag)?;
            let rs = flag.root_system();
            let mut rows = Vec::new();
            let mut t = String::new();
            for (a, b, r) in table.r_entries() {
                let (la, lb) = (rs.label(a), rs.label(b));
                let mut row = json!({ "alpha": la, "beta": lb, "r": r.to_string() });
                if cfg.approx {
                    row["approx"] = json!(approx(r));
                    writeln!(t, "r({la}, {lb}) = {r}    ~{} (approximate)", approx(r)).unwrap();
                } else {
                    writeln!(t, "r({la}, {lb}) = {r}").unwrap();
                }
                rows.push(row);
            }
            let d = table.structure().describe();
            Ok(Outcome::new(json!({ "table": "r", "lambda": d.lambda, "rows": rows }), t, true))
        }
        Table::Summands => {
            let flag = flag_from(cfg)?;
            let s = flag.summary();
            let mut t = String::new();
            let rows: Vec<Value> = s
                .summands
                .iter()
                .enumerate()
                .map(|(k, roots)| {
                    writeln!(t, "class {}: real dim {}: {}", k + 1, 2 * roots.len(), roots.join(", ")).unwrap();
                    json!({ "class": k + 1, "roots": roots, "real_dim": 2 * roots.len() })
                })
                .collect();
            Ok(Outcome::new(json!({ "table": "summands", "rows": rows }), t, true))
        }
    }
}
