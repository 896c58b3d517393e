//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints its verdict; exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use flagherm::ahstruct::{AhStructure, Iacs, InvariantMetric};
use flagherm::classify::{classify, verify_ask_universal, ClassFlags};
use flagherm::flag::FlagManifold;
use flagherm::geometry::ConnectionTable;
use flagherm::rootsys::{self, check_weyl_basis, AlgebraVector, Family};
use flagherm::scalar::{int, rat, Cx, ExactScalar, Rational};
use flagherm_cli::commands::{self, PairSweep, EXAMPLE_R_PRIME, EXAMPLE_R_THETA};
use flagherm_cli::config::{parse_epsilon, parse_lambda, RunConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn within(t: Duration, budget: Duration) -> Result<(), String> {
    ensure(t <= budget, || format!("took {t:.1?}, budget {budget:?}"))
}

// Independent root enumeration in the standard orthonormal model, used to
// predict counts and dimensions.

fn ambient_positive_roots(fam: Family, n: usize) -> Vec<Vec<i64>> {
    let dim = if fam == Family::A { n + 1 } else { n };
    let unit = |i: usize, s: i64| {
        let mut v = vec![0; dim];
        v[i] = s;
        v
    };
    let add = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            out.push(add(&unit(i, 1), &unit(j, -1)));
            if fam != Family::A {
                out.push(add(&unit(i, 1), &unit(j, 1)));
            }
        }
        match fam {
            Family::B => out.push(unit(i, 1)),
            Family::C => out.push(unit(i, 2)),
            _ => {}
        }
    }
    out
}

/// Coordinates on the standard simple roots.
fn simple_coords(fam: Family, n: usize, v: &[i64]) -> Vec<i64> {
    let partial: Vec<i64> = v
        .iter()
        .scan(0, |s, x| {
            *s += x;
            Some(*s)
        })
        .collect();
    match fam {
        Family::A | Family::B => partial[..n].to_vec(),
        Family::C => {
            let mut c = partial[..n].to_vec();
            c[n - 1] /= 2;
            c
        }
        Family::D => {
            let mut c = partial[..n].to_vec();
            c[n - 2] = (partial[n - 2] - v[n - 1]) / 2;
            c[n - 1] = partial[n - 1] / 2;
            c
        }
    }
}

struct FlagCounts {
    /// `|R_Theta^+|`
    complement: usize,
    classes: usize,
}

fn flag_counts(fam: Family, n: usize, theta: &[usize]) -> FlagCounts {
    let mut classes = BTreeSet::new();
    let mut complement = 0;
    for r in ambient_positive_roots(fam, n) {
        let c = simple_coords(fam, n, &r);
        let outside: Vec<i64> = (0..n).filter(|i| !theta.contains(i)).map(|i| c[i]).collect();
        if outside.iter().any(|&x| x != 0) {
            complement += 1;
            classes.insert(outside);
        }
    }
    FlagCounts {
        complement,
        classes: classes.len(),
    }
}

/// Real dimension of the sub-flag: positive roots supported in `Theta'` but
/// not in `Theta`, doubled.
fn subflag_dim(fam: Family, n: usize, theta: &[usize], theta_prime: &[usize]) -> usize {
    2 * ambient_positive_roots(fam, n)
        .iter()
        .map(|r| simple_coords(fam, n, r))
        .filter(|c| {
            let support: Vec<usize> = (0..n).filter(|&i| c[i] != 0).collect();
            support.iter().all(|i| theta_prime.contains(i)) && !support.iter().all(|i| theta.contains(i))
        })
        .count()
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

fn criterion_1() -> Verdict {
    let t0 = Instant::now();
    let cases = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
    ];
    let mut total = 0;
    for (fam, n) in cases {
        let wb = rootsys::build(fam, n).map_err(|e| e.to_string())?;
        let want = ambient_positive_roots(fam, n).len() * 2;
        ensure(wb.root_system().len() == want, || format!("{fam}{n}: {} roots, want {want}", wb.root_system().len()))?;
        let report = check_weyl_basis(&wb);
        for c in &report.checks {
            total += c.cases;
            ensure(c.passed(), || format!("{fam}{n} {}: {:?}", c.name, c.witness))?;
        }
        // rank one has no pair of roots summing to a root
        let needed: &[&str] = if n == 1 {
            &["B(X_a, X_b)", "[X_a, X_-a] = H_a", "Jacobi"]
        } else {
            &["B(X_a, X_b)", "n_{a,b} = -n_{-a,-b}", "a+b+c = 0", "[X_a, X_-a] = H_a", "Jacobi"]
        };
        for needed in needed {
            ensure(report.checks.iter().any(|c| c.name.contains(needed) && c.cases > 0), || {
                format!("{fam}{n}: no cases for {needed}")
            })?;
        }
    }
    within(t0.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{total} identity cases in {:.1?}", t0.elapsed()))
}

struct AskRun {
    configurations: usize,
    termwise: usize,
    elapsed: Duration,
    failures: Vec<String>,
}

/// Criteria 2 and 3 share one sweep.
fn ask_sweep() -> Result<AskRun, String> {
    let t0 = Instant::now();
    let mut run = AskRun {
        configurations: 0,
        termwise: 0,
        elapsed: Duration::ZERO,
        failures: Vec::new(),
    };
    // ranks run from the family minimum, so A_1, B_2 and C_2 ride along
    for (fam, max_rank, seed) in [(Family::A, 3, 11), (Family::B, 3, 12), (Family::C, 3, 13)] {
        let cert = verify_ask_universal(fam, max_rank, 5, seed).map_err(|e| e.to_string())?;
        for r in &cert.ranks {
            let (mut configs, mut evals) = (0, 0);
            for theta in subsets(r.rank).into_iter().filter(|t| t.len() < r.rank) {
                let c = flag_counts(fam, r.rank, &theta);
                let k = (1usize << c.classes) * 5;
                configs += k;
                evals += k * 2 * c.complement;
            }
            ensure(r.configurations == configs && r.evaluations == evals, || {
                format!(
                    "{fam}{}: swept {} configurations / {} evaluations, expected {configs} / {evals}",
                    r.rank, r.configurations, r.evaluations
                )
            })?;
        }
        if let Some(x) = &cert.counterexample {
            run.failures.push(format!("{x:?}"));
        }
        run.configurations += cert.configurations;
        if !cert.passed && cert.counterexample.is_none() {
            run.failures.push(format!("{fam}: sweep failed without a counterexample"));
        }
        // termwise tally for this family alone
        let expected_terms: usize = cert
            .ranks
            .iter()
            .map(|r| {
                subsets(r.rank)
                    .into_iter()
                    .filter(|t| t.len() < r.rank)
                    .map(|t| {
                        let c = flag_counts(fam, r.rank, &t);
                        (1usize << c.classes) * 5 * 4 * c.complement * c.complement
                    })
                    .sum::<usize>()
            })
            .sum();
        ensure(cert.termwise_terms == expected_terms, || {
            format!("{fam}: {} frame terms checked, expected {expected_terms}", cert.termwise_terms)
        })?;
        run.termwise += cert.termwise_terms;
    }
    run.elapsed = t0.elapsed();
    Ok(run)
}

fn criterion_2(run: &Result<AskRun, String>) -> Verdict {
    let run = run.as_ref().map_err(Clone::clone)?;
    ensure(run.failures.is_empty(), || run.failures.join("; "))?;
    within(run.elapsed, Duration::from_secs(300))?;
    Ok(format!("{} configurations in {:.1?}", run.configurations, run.elapsed))
}

fn criterion_3(run: &Result<AskRun, String>) -> Verdict {
    let run = run.as_ref().map_err(Clone::clone)?;
    let termwise: Vec<&String> = run.failures.iter().filter(|f| f.contains("termwise: true")).collect();
    ensure(run.failures.is_empty(), || format!("{termwise:?}"))?;
    Ok(format!("{} frame terms vanish", run.termwise))
}

fn criterion_4() -> Verdict {
    let t0 = Instant::now();
    let cfg = RunConfig {
        seed: 8,
        ..RunConfig::default()
    };
    let out = commands::verify_example(&cfg).map_err(|e| e.to_string())?;
    let doc = &out.json;
    let labels = |key: &str| -> BTreeSet<String> {
        doc[key].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect()
    };
    let signed = |l: &[&str]| -> BTreeSet<String> { l.iter().flat_map(|s| [s.to_string(), format!("-{s}")]).collect() };
    ensure(labels("r_theta") == signed(&EXAMPLE_R_THETA), || format!("R(Theta) = {:?}", labels("r_theta")))?;
    ensure(labels("r_prime") == signed(&EXAMPLE_R_PRIME), || format!("R' = {:?}", labels("r_prime")))?;
    ensure(doc["flag_dimension"] == 48, || format!("dim F = {}", doc["flag_dimension"]))?;
    ensure(doc["subflag_dimension"] == 8, || format!("sub-flag dim = {}", doc["subflag_dimension"]))?;
    let want_dim = 2 * (flag_counts(Family::A, 7, &[0, 1, 4]).complement);
    ensure(want_dim == 48, || format!("independent count gives dim F = {want_dim}"))?;
    ensure(subflag_dim(Family::A, 7, &[0, 1, 4], &[0, 1, 2, 6]) == 8, || "independent sub-flag dim".into())?;
    let pair = &doc["sweep"]["pairs"][0];
    let classes = flag_counts(Family::A, 7, &[0, 1, 4]).classes;
    let want = 5 * (1usize << classes);
    ensure(pair["configurations"] == want, || format!("{} configurations, want {want}", pair["configurations"]))?;
    ensure(pair["minimal"] == true && pair["totally_geodesic"] == true, || format!("{pair}"))?;
    ensure(out.passed, || "certificate failed".into())?;
    within(t0.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{want} certificates in {:.1?}", t0.elapsed()))
}

struct TgRun {
    pairs: Vec<(Family, PairSweep)>,
    elapsed: Duration,
}

/// Criteria 5, 6 and 9 share this sweep.
fn tg_sweep() -> Result<TgRun, String> {
    let t0 = Instant::now();
    let mut pairs = Vec::new();
    for (fam, seed) in [(Family::A, 21), (Family::B, 22)] {
        let cfg = RunConfig {
            family: fam,
            rank: 3,
            lambda: parse_lambda("random").unwrap(),
            epsilon: parse_epsilon("all").unwrap(),
            samples: Some(3),
            seed,
            sweep: true,
            json: true,
            ..RunConfig::default()
        };
        let out = commands::verify_tg(&cfg).map_err(|e| e.to_string())?;
        let list: Vec<PairSweep> = serde_json::from_value::<Vec<serde_json::Value>>(out.json["pairs"].clone())
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|v| pair_from_json(&v))
            .collect();
        pairs.extend(list.into_iter().map(|p| (fam, p)));
    }
    Ok(TgRun {
        pairs,
        elapsed: t0.elapsed(),
    })
}

fn pair_from_json(v: &serde_json::Value) -> PairSweep {
    let idx = |k: &str| v[k].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect();
    let b = |k: &str| v[k].as_bool().unwrap();
    PairSweep {
        theta: idx("theta"),
        theta_prime: idx("theta_prime"),
        dimension: v["dimension"].as_u64().unwrap() as usize,
        codimension: v["codimension"].as_u64().unwrap() as usize,
        configurations: v["configurations"].as_u64().unwrap() as usize,
        totally_geodesic: b("totally_geodesic"),
        minimal: b("minimal"),
        minimal_identity: b("minimal_identity"),
        partial_codifferential_zero: b("partial_codifferential_zero"),
        brackets_agree: b("brackets_agree"),
        inherited: v["inherited"].as_bool(),
        ambient_sk: v["ambient_sk"].as_u64().unwrap() as usize,
        passed: b("passed"),
        first_failure: None,
    }
}

fn criterion_5(run: &Result<TgRun, String>) -> Verdict {
    let run = run.as_ref().map_err(Clone::clone)?;
    let mut expected = BTreeSet::new();
    for fam in [Family::A, Family::B] {
        for theta in subsets(3).into_iter().filter(|t| t.len() < 3) {
            for tp in subsets(3) {
                if !tp.is_empty() && !tp.iter().all(|i| theta.contains(i)) {
                    expected.insert((fam, theta.clone(), tp));
                }
            }
        }
    }
    let seen: BTreeSet<(Family, Vec<usize>, Vec<usize>)> = run
        .pairs
        .iter()
        .map(|(f, p)| (*f, p.theta.iter().map(|i| i - 1).collect(), p.theta_prime.iter().map(|i| i - 1).collect()))
        .collect();
    ensure(seen == expected, || format!("swept {} pairs, expected {}", seen.len(), expected.len()))?;
    let mut configs = 0;
    for (fam, p) in &run.pairs {
        let theta: Vec<usize> = p.theta.iter().map(|i| i - 1).collect();
        let tp: Vec<usize> = p.theta_prime.iter().map(|i| i - 1).collect();
        ensure(p.dimension == subflag_dim(*fam, 3, &theta, &tp), || {
            format!("{fam}3 {:?} {:?}: dimension {}", p.theta, p.theta_prime, p.dimension)
        })?;
        let want = 3 * (1usize << flag_counts(*fam, 3, &theta).classes);
        ensure(p.configurations == want, || format!("{fam}3 {:?}: {} configurations", p.theta, p.configurations))?;
        ensure(p.totally_geodesic, || format!("{fam}3 {:?} {:?}: second fundamental form nonzero", p.theta, p.theta_prime))?;
        configs += p.configurations;
    }
    within(run.elapsed, Duration::from_secs(300))?;
    Ok(format!("{} pairs, {configs} certificates in {:.1?}", run.pairs.len(), run.elapsed))
}

fn criterion_6(run: &Result<TgRun, String>) -> Verdict {
    let run = run.as_ref().map_err(Clone::clone)?;
    for (fam, p) in &run.pairs {
        ensure(p.minimal && p.partial_codifferential_zero && p.minimal_identity, || {
            format!(
                "{fam}3 {:?} {:?}: minimal {} coderivative {} identity {}",
                p.theta, p.theta_prime, p.minimal, p.partial_codifferential_zero, p.minimal_identity
            )
        })?;
    }
    Ok(format!("{} sub-flags minimal", run.pairs.len()))
}

fn a2_table(lambda: &[Rational], eps: &[i8]) -> ConnectionTable {
    let flag = Arc::new(FlagManifold::new(rootsys::build(Family::A, 2).unwrap(), &[]).unwrap());
    let metric = InvariantMetric::new(&flag, lambda.to_vec()).unwrap();
    let iacs = Iacs::new(&flag, eps.to_vec()).unwrap();
    ConnectionTable::new(Arc::new(AhStructure::new(flag, metric, iacs).unwrap()))
}

/// `(nabla_X J) X = 0` on random rational combinations of the real basis.
fn nearly_kaehler_by_expansion(t: &ConnectionTable, rng: &mut ChaCha8Rng) -> bool {
    let basis: Vec<AlgebraVector> = t.structure().flag().real_basis().into_iter().map(|b| b.vector).collect();
    (0..20).all(|_| {
        let mut x = AlgebraVector::zero(basis[0].rank());
        for b in &basis {
            x.axpy(&Cx::from_rational(rat(rng.random_range(-5..=5), rng.random_range(1..=4))), b);
        }
        t.nabla_j(&x, &x).is_zero()
    })
}

fn flags_of(f: &ClassFlags) -> [bool; 7] {
    [f.k, f.ak, f.nk, f.qk, f.ask, f.sk, f.h]
}

fn criterion_7() -> Verdict {
    let ones = [int(1), int(1), int(1)];
    let kaehler = classify(&a2_table(&[int(1), int(1), int(2)], &[1, 1, 1]));
    ensure(flags_of(&kaehler.flags) == [true; 7], || format!("(1,1,2) canonical: {:?}", kaehler.flags))?;

    let nk_table = a2_table(&ones, &[1, 1, -1]);
    let nk = classify(&nk_table).flags;
    ensure(nk.nk && nk.qk && nk.ask && !nk.k && !nk.h, || format!("(1,1,1) (+,+,-): {nk:?}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(70);
    ensure(nearly_kaehler_by_expansion(&nk_table, &mut rng), || "direct expansion disagrees on NK".into())?;

    // canonical structure is integrable for every metric tried
    let mut classified = 0;
    let mut lattice_ok = true;
    for _ in 0..12 {
        let lambda: Vec<Rational> = (0..3).map(|_| rat(rng.random_range(1..=20), rng.random_range(1..=20))).collect();
        for mask in 0u64..8 {
            let eps: Vec<i8> = (0..3).map(|c| if mask >> c & 1 == 1 { -1 } else { 1 }).collect();
            let f = classify(&a2_table(&lambda, &eps)).flags;
            classified += 1;
            lattice_ok &= f.lattice_consistent() && f.ask;
            if mask == 0 {
                ensure(f.h, || format!("canonical J not integrable for lambda {lambda:?}"))?;
            }
        }
    }
    // a wider pool: A3 and B2 on every Theta and sign
    for (fam, n) in [(Family::A, 3), (Family::B, 2)] {
        let wb = rootsys::build(fam, n).unwrap();
        for theta in subsets(n).into_iter().filter(|t| t.len() < n) {
            let flag = Arc::new(FlagManifold::new(wb.clone(), &theta).unwrap());
            for iacs in Iacs::all(&flag) {
                let metric = InvariantMetric::random(&flag, &mut rng);
                let s = Arc::new(AhStructure::new(flag.clone(), metric, iacs).unwrap());
                let f = classify(&ConnectionTable::new(s)).flags;
                classified += 1;
                lattice_ok &= f.lattice_consistent() && f.ask;
            }
        }
    }
    ensure(lattice_ok, || "inclusion lattice violated".into())?;
    Ok(format!("{classified} structures classified"))
}

/// `sl(N)` in elementary matrices: `X_a = E_ij / sqrt(2N)` for the root
/// `e_i - e_j`, since `B(E_ij, E_ji) = 2N`.
fn criterion_8() -> Verdict {
    let mut checked = 0;
    for n in 2..=4 {
        let wb = rootsys::build(Family::A, n).map_err(|e| e.to_string())?;
        let rs = wb.root_system().clone();
        let size = n + 1;
        let index = |a: usize| -> (usize, usize) {
            let v = rs.ambient(a);
            (v.iter().position(|&x| x == 1).unwrap(), v.iter().position(|&x| x == -1).unwrap())
        };
        let by_pair: BTreeMap<(usize, usize), usize> = (0..rs.len()).map(|a| (index(a), a)).collect();
        let scale = ExactScalar::sqrt_rational(&rat(1, 2 * size as i64)).map_err(|e| e.to_string())?;
        for a in 0..rs.len() {
            for b in 0..rs.len() {
                let ((i, j), (k, l)) = (index(a), index(b));
                // [E_ij, E_kl] = d_jk E_il - d_li E_kj
                let mut comm: BTreeMap<(usize, usize), i64> = BTreeMap::new();
                if j == k {
                    *comm.entry((i, l)).or_default() += 1;
                }
                if l == i {
                    *comm.entry((k, j)).or_default() -= 1;
                }
                comm.retain(|&(r, c), v| *v != 0 && r != c);
                let want = comm.iter().next().map(|(&p, &c)| (by_pair[&p], scale.scale(&int(c))));
                let got = rs.sum(a, b).and_then(|c| wb.n(a, b).map(|v| (c, v.clone())));
                ensure(want == got, || {
                    format!("A{n} n({}, {}) = {got:?}, oracle {want:?}", rs.label(a), rs.label(b))
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} root pairs"))
}

fn criterion_9(run: &Result<TgRun, String>) -> Verdict {
    let run = run.as_ref().map_err(Clone::clone)?;
    for (fam, p) in &run.pairs {
        ensure(p.brackets_agree, || format!("{fam}3 {:?} {:?}: [,]_n differs from [,]_m", p.theta, p.theta_prime))?;
    }
    Ok(format!("{} sub-flags", run.pairs.len()))
}

fn criterion_10() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_flagherm");
    let args = ["verify", "ask", "--family", "A", "--max-rank", "3", "--samples", "5", "--seed", "7", "--json"];
    let run = || Command::new(bin).args(args).output().map_err(|e| e.to_string());
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || format!("exit {:?} / {:?}", a.status.code(), b.status.code()))?;
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || "outputs differ".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() {
    let ask = ask_sweep();
    let tg = tg_sweep();
    let results: Vec<(&str, Verdict)> = vec![
        ("Weyl-basis identities", criterion_1()),
        ("ASK universality sweep", criterion_2(&ask)),
        ("codifferential termwise", criterion_3(&ask)),
        ("SU(8) example reproduction", criterion_4()),
        ("sub-flags totally geodesic", criterion_5(&tg)),
        ("sub-flags minimal", criterion_6(&tg)),
        ("classification sanity", criterion_7()),
        ("matrix-commutator oracle", criterion_8()),
        ("bracket projection equality", criterion_9(&tg)),
        ("deterministic output", criterion_10()),
    ];
    let mut failed = 0;
    for (k, (name, verdict)) in results.iter().enumerate() {
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
