//! Gray–Hervella membership of an invariant almost Hermitian structure.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ahstruct::{AhStructure, Iacs, InvariantMetric};
use crate::error::Result;
use crate::flag::FlagManifold;
use crate::geometry::ConnectionTable;
use crate::rootsys::{self, AlgebraVector, Family};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub k: bool,
    pub ak: bool,
    pub nk: bool,
    pub qk: bool,
    pub ask: bool,
    pub sk: bool,
    pub h: bool,
}

impl ClassFlags {
    /// Inclusions of the Gray–Hervella table.
    pub fn lattice_consistent(&self) -> bool {
        let implies = |a: bool, b: bool| !a || b;
        implies(self.k, self.ak && self.nk && self.qk && self.h && self.sk)
            && implies(self.ak, self.qk)
            && implies(self.nk, self.qk)
            && implies(self.qk, self.ask)
            && self.sk == (self.ask && self.h)
    }
}

/// First basis tuple (canonical order) violating a defining condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<String>,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub flags: ClassFlags,
    pub witnesses: BTreeMap<&'static str, Witness>,
}

struct Basis {
    labels: Vec<String>,
    vectors: Vec<AlgebraVector>,
}

fn real_basis(flag: &FlagManifold) -> Basis {
    let basis = flag.real_basis();
    Basis {
        labels: basis.iter().map(|b| flag.real_label(b)).collect(),
        vectors: basis.into_iter().map(|b| b.vector).collect(),
    }
}

fn first_pair(
    b: &Basis,
    mut f: impl FnMut(&AlgebraVector, &AlgebraVector) -> Option<String>,
) -> Option<Witness> {
    for (i, x) in b.vectors.iter().enumerate() {
        for (j, y) in b.vectors.iter().enumerate() {
            if let Some(value) = f(x, y) {
                return Some(Witness {
                    tuple: vec![b.labels[i].clone(), b.labels[j].clone()],
                    value,
                });
            }
        }
    }
    None
}

/// Runs every defining condition on the real basis `A_alpha`, `iS_alpha`.
pub fn classify(t: &ConnectionTable) -> ClassReport {
    let s = t.structure();
    let flag = s.flag();
    let b = real_basis(flag);
    let nonzero_vec = |v: AlgebraVector| (!v.is_zero()).then(|| flag.render(&v));
    let mut witnesses = BTreeMap::new();

    let k = first_pair(&b, |x, y| nonzero_vec(t.nabla_j(x, y)));
    let nk = first_pair(&b, |x, y| {
        let mut v = t.nabla_j(x, y);
        v.axpy(&crate::scalar::Cx::one(), &t.nabla_j(y, x));
        nonzero_vec(v)
    });
    let qk = first_pair(&b, |x, y| {
        let mut v = t.nabla_j(x, y);
        v.axpy(&crate::scalar::Cx::one(), &t.nabla_j(&s.j(x), &s.j(y)));
        nonzero_vec(v)
    });
    let h = first_pair(&b, |x, y| nonzero_vec(t.nijenhuis(x, y)));

    let mut ak = None;
    'outer: for (i, x) in b.vectors.iter().enumerate() {
        for (j, y) in b.vectors.iter().enumerate().skip(i + 1) {
            for (l, z) in b.vectors.iter().enumerate().skip(j + 1) {
                let v = t.d_omega(x, y, z);
                if !v.is_zero() {
                    ak = Some(Witness {
                        tuple: vec![b.labels[i].clone(), b.labels[j].clone(), b.labels[l].clone()],
                        value: v.to_string(),
                    });
                    break 'outer;
                }
            }
        }
    }

    let ask = b.vectors.iter().zip(&b.labels).find_map(|(x, label)| {
        let v = t.codifferential(x);
        (!v.is_zero()).then(|| Witness {
            tuple: vec![label.clone()],
            value: v.to_string(),
        })
    });

    let mut flags = ClassFlags::default();
    for (name, slot, w) in [
        ("K", &mut flags.k, k),
        ("AK", &mut flags.ak, ak),
        ("NK", &mut flags.nk, nk),
        ("QK", &mut flags.qk, qk),
        ("ASK", &mut flags.ask, ask),
        ("H", &mut flags.h, h),
    ] {
        *slot = w.is_none();
        if let Some(w) = w {
            witnesses.insert(name, w);
        }
    }
    flags.sk = flags.ask && flags.h;
    if !flags.sk {
        let w = witnesses
            .get("ASK")
            .or_else(|| witnesses.get("H"))
            .cloned()
            .expect("a failing component has a witness");
        witnesses.insert("SK", w);
    }
    ClassReport { flags, witnesses }
}

/// A configuration in which the codifferential failed to vanish.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub family: String,
    pub rank: usize,
    pub theta: Vec<usize>,
    pub lambda: Vec<String>,
    pub epsilon: Vec<i8>,
    pub vector: String,
    pub value: String,
    pub termwise: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankSweep {
    pub rank: usize,
    pub theta_subsets: usize,
    pub skipped_full_theta: usize,
    pub configurations: usize,
    pub evaluations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AskCertificate {
    pub family: String,
    pub max_rank: usize,
    pub samples: usize,
    pub seed: u64,
    pub lambda_draw: &'static str,
    pub ranks: Vec<RankSweep>,
    pub configurations: usize,
    pub evaluations: usize,
    pub termwise_terms: usize,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

/// Checks `delta Omega(X) = 0` for every basis `X`, and each frame term
/// separately, on every `Theta` other than `Sigma`, every sign assignment and
/// `samples` random metrics, for ranks from the family minimum to `max_rank`.
pub fn verify_ask_universal(family: Family, max_rank: usize, samples: usize, seed: u64) -> Result<AskCertificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cert = AskCertificate {
        family: family.to_string(),
        max_rank,
        samples,
        seed,
        lambda_draw: "ChaCha8 seeded; numerator and denominator uniform in 1..=20",
        ranks: Vec::new(),
        configurations: 0,
        evaluations: 0,
        termwise_terms: 0,
        passed: true,
        counterexample: None,
    };
    for rank in family.min_rank()..=max_rank {
        let wb = rootsys::build(family, rank)?;
        let mut sweep = RankSweep {
            rank,
            theta_subsets: 1 << rank,
            skipped_full_theta: 0,
            configurations: 0,
            evaluations: 0,
        };
        for mask in 0u32..(1 << rank) {
            let theta: Vec<usize> = (0..rank).filter(|i| mask >> i & 1 == 1).collect();
            let flag = Arc::new(FlagManifold::new(wb.clone(), &theta)?);
            if flag.is_point() {
                sweep.skipped_full_theta += 1;
                continue;
            }
            let basis = real_basis(&flag);
            for iacs in Iacs::all(&flag) {
                for _ in 0..samples {
                    let metric = InvariantMetric::random(&flag, &mut rng);
                    let s = Arc::new(AhStructure::new(flag.clone(), metric, iacs.clone())?);
                    let t = ConnectionTable::new(s.clone());
                    sweep.configurations += 1;
                    let frame = s.j_frame();
                    for (x, label) in basis.vectors.iter().zip(&basis.labels) {
                        sweep.evaluations += 1;
                        let terms = t.codifferential_terms_in(&frame, x);
                        cert.termwise_terms += 2 * terms.len();
                        let bad_term = terms
                            .iter()
                            .flat_map(|tm| [&tm.v_term, &tm.jv_term])
                            .find(|v| !v.is_zero());
                        let total = t.codifferential_in(&frame, x);
                        let failure = if !total.is_zero() {
                            Some((total, false))
                        } else {
                            bad_term.map(|v| (v.clone(), true))
                        };
                        if let Some((value, termwise)) = failure {
                            if cert.counterexample.is_none() {
                                let d = s.describe();
                                cert.counterexample = Some(Counterexample {
                                    family: family.to_string(),
                                    rank,
                                    theta: theta.iter().map(|i| i + 1).collect(),
                                    lambda: d.lambda,
                                    epsilon: d.epsilon,
                                    vector: label.clone(),
                                    value: value.to_string(),
                                    termwise,
                                });
                            }
                            cert.passed = false;
                        }
                    }
                }
            }
        }
        cert.configurations += sweep.configurations;
        cert.evaluations += sweep.evaluations;
        cert.ranks.push(sweep);
    }
    Ok(cert)
}
