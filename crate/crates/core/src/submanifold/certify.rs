use std::collections::BTreeMap;

use serde::Serialize;

use super::{SubKind, SubmanifoldData};
use crate::classify::Witness;
use crate::rootsys::AlgebraVector;
use crate::scalar::{int, Cx};

/// Which of the optional (and more expensive) checks to run.
#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    /// Gray–Hervella ASK/H of the ambient space and of the submanifold.
    pub classes: bool,
    /// Gauss formula for `nabla J` on tangent pairs.
    pub gauss: bool,
    /// Normal coderivative, termwise, on the full frame of `m`.
    pub normal_terms: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            classes: true,
            gauss: true,
            normal_terms: true,
        }
    }
}

impl CertifyOptions {
    /// Only what the minimality and totally-geodesic claims need.
    pub fn core() -> Self {
        Self {
            classes: false,
            gauss: false,
            normal_terms: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassComparison {
    pub ambient_ask: bool,
    pub ambient_h: bool,
    pub ambient_sk: bool,
    pub sub_ask: bool,
    pub sub_h: bool,
    pub sub_sk: bool,
    /// ASK and SK pass from the ambient space to the submanifold.
    pub inherited: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubmanifoldCertificate {
    pub kind: &'static str,
    pub theta: Vec<usize>,
    pub theta_prime: Option<Vec<usize>>,
    pub lambda: Vec<String>,
    pub epsilon: Vec<i8>,
    pub dimension: usize,
    pub codimension: usize,
    pub r_prime: Vec<String>,
    pub tangent_roots: Vec<String>,
    pub holomorphic: bool,
    pub brackets_agree: bool,
    pub second_form_normal: bool,
    pub totally_geodesic: bool,
    pub minimal: bool,
    pub minimal_identity: bool,
    pub partial_codifferential_zero: bool,
    pub intrinsic_codifferential_zero: bool,
    pub normal_codifferential_zero: Option<bool>,
    pub split_identity: Option<bool>,
    pub gauss: Option<bool>,
    pub classes: Option<ClassComparison>,
    /// For sub-flags minimality and total geodesy must hold; a failure
    /// here is a bug in this crate.
    pub required_outcomes_met: bool,
    pub passed: bool,
    pub witnesses: BTreeMap<String, Witness>,
}

struct Tracker {
    witnesses: BTreeMap<String, Witness>,
}

impl Tracker {
    /// Records the first failing tuple under `name`; returns `ok`.
    fn check(&mut self, name: &str, ok: bool, tuple: impl FnOnce() -> (Vec<String>, String)) -> bool {
        if !ok && !self.witnesses.contains_key(name) {
            let (tuple, value) = tuple();
            self.witnesses.insert(name.to_string(), Witness { tuple, value });
        }
        ok
    }
}

impl SubmanifoldData {
    pub fn certify(&self) -> SubmanifoldCertificate {
        self.certify_with(CertifyOptions::default())
    }

    pub fn certify_with(&self, opts: CertifyOptions) -> SubmanifoldCertificate {
        let flag = self.flag().clone();
        let s = self.structure().clone();
        let t = self.table().clone();
        let wb = flag.weyl_basis().clone();
        let rs = flag.root_system().clone();
        let render = |v: &AlgebraVector| flag.render(v);
        let mut tr = Tracker {
            witnesses: BTreeMap::new(),
        };

        let tan: Vec<AlgebraVector> = self.frame_vectors().cloned().collect();
        let tan_labels = self.frame_labels();
        let perp: Vec<AlgebraVector> = self.perp_vectors().cloned().collect();
        let perp_labels = self.perp_labels();

        let mut holomorphic = true;
        for (x, l) in tan.iter().zip(&tan_labels) {
            let jx = s.j(x);
            holomorphic &= tr.check("holomorphic", self.in_n(&jx), || (vec![l.clone()], render(&jx)));
        }

        // [X,Y]_n = [X,Y]_m: on root vectors for sub-flags, on the frame otherwise.
        let mut brackets_agree = true;
        let signed: Vec<usize> = self.r_n().iter().flat_map(|&a| [a, rs.neg(a)]).collect();
        if matches!(self.kind(), SubKind::Subflag { .. }) {
            for &a in &signed {
                for &b in &signed {
                    let (xa, xb) = (wb.x(a), wb.x(b));
                    let bn = self.bracket_n(&xa, &xb);
                    let bm = t.bracket_m(&xa, &xb);
                    brackets_agree &= tr.check("brackets_agree", bn == bm, || {
                        (vec![rs.label(a), rs.label(b)], render(&(&bm - &bn)))
                    });
                }
            }
        } else {
            for (i, x) in tan.iter().enumerate() {
                for (j, y) in tan.iter().enumerate() {
                    let bn = self.bracket_n(x, y);
                    let bm = t.bracket_m(x, y);
                    brackets_agree &= tr.check("brackets_agree", bn == bm, || {
                        (vec![tan_labels[i].clone(), tan_labels[j].clone()], render(&(&bm - &bn)))
                    });
                }
            }
        }

        // Second fundamental form on all tangent frame pairs.
        let mut alpha: Vec<Vec<AlgebraVector>> = Vec::with_capacity(tan.len());
        let (mut tg, mut normal) = (true, true);
        for i in 0..tan.len() {
            let mut row = Vec::with_capacity(tan.len());
            for j in 0..tan.len() {
                let a = self.second_form_frame(i, j);
                let pair = || vec![tan_labels[i].clone(), tan_labels[j].clone()];
                tg &= tr.check("totally_geodesic", a.is_zero(), || (pair(), render(&a)));
                normal &= tr.check("second_form_normal", self.proj_n(&a).is_zero(), || {
                    (pair(), render(&self.proj_n(&a)))
                });
                row.push(a);
            }
            alpha.push(row);
        }

        let h = self.mean_curvature();
        let minimal = tr.check("minimal", h.is_zero(), || (vec!["H".into()], render(&h)));
        let jh = s.j(&h);
        let two_r = Cx::from_rational(int(self.dim() as i64));
        let (mut minimal_identity, mut partial_zero) = (true, true);
        for (z, l) in perp.iter().zip(&perp_labels) {
            let d = self.partial_codifferential(z);
            let rhs = &two_r * &s.g(&jh, z);
            minimal_identity &= tr.check("minimal_identity", d == rhs, || {
                (vec![l.clone()], format!("{d} != {rhs}"))
            });
            partial_zero &= tr.check("partial_codifferential", d.is_zero(), || (vec![l.clone()], d.to_string()));
        }
        let mut intrinsic_zero = true;
        for (m, (x, l)) in tan.iter().zip(&tan_labels).enumerate() {
            let d = self.partial_codifferential(x);
            partial_zero &= tr.check("partial_codifferential", d.is_zero(), || (vec![l.clone()], d.to_string()));
            let di = self.intrinsic_codifferential_frame(m);
            intrinsic_zero &= tr.check("intrinsic_codifferential", di.is_zero(), || {
                (vec![l.clone()], di.to_string())
            });
        }

        let (mut normal_zero, mut split) = (None, None);
        if opts.normal_terms {
            let (mut nz, mut sp) = (true, true);
            let everything: Vec<(&AlgebraVector, &String)> =
                tan.iter().zip(&tan_labels).chain(perp.iter().zip(&perp_labels)).collect();
            for (x, l) in &everything {
                for (a, b) in self.normal_codifferential_terms(x) {
                    nz &= tr.check("normal_codifferential", a.is_zero() && b.is_zero(), || {
                        (vec![(*l).clone()], format!("{a}; {b}"))
                    });
                }
            }
            for (m, (x, l)) in tan.iter().zip(&tan_labels).enumerate() {
                let full = t.codifferential(x);
                let parts = &self.intrinsic_codifferential_frame(m) + &self.normal_codifferential(x);
                sp &= tr.check("split_identity", full == parts, || (vec![l.clone()], format!("{full} != {parts}")));
            }
            normal_zero = Some(nz);
            split = Some(sp);
        }

        let mut gauss = None;
        if opts.gauss {
            let mut ok = true;
            for (i, x) in tan.iter().enumerate() {
                for (j, y) in tan.iter().enumerate() {
                    let pair = || vec![tan_labels[i].clone(), tan_labels[j].clone()];
                    // nabla_X Y = nabla'_X Y + alpha(X, Y), split orthogonally
                    let lhs = t.nabla_vec(x, y);
                    let np = self.nabla_prime(x, y);
                    let a = &alpha[i][j];
                    let residual = &(&lhs - &np) - a;
                    ok &= tr.check("gauss", residual.is_zero() && self.in_n(&np), || (pair(), render(&residual)));
                    // (nabla_X J) Y = (nabla'_X J) Y + alpha(X, JY) - J alpha(X, Y)
                    // J f_j = f_{j+1} or -f_{j-1}
                    let a_jy = if j % 2 == 0 {
                        alpha[i][j + 1].clone()
                    } else {
                        alpha[i][j - 1].scale(&Cx::from_int(-1))
                    };
                    let rhs = &(&self.nabla_prime_j(x, y) + &a_jy) - &s.j(a);
                    let lhs = t.nabla_j(x, y);
                    ok &= tr.check("gauss_j", lhs == rhs, || (pair(), render(&(&lhs - &rhs))));
                }
            }
            gauss = Some(ok);
        }

        let mut classes = None;
        if opts.classes {
            let ambient: Vec<AlgebraVector> = flag.real_basis().into_iter().map(|b| b.vector).collect();
            let ambient_ask = ambient.iter().all(|x| t.codifferential(x).is_zero());
            let ambient_h = ambient
                .iter()
                .all(|x| ambient.iter().all(|y| t.nijenhuis(x, y).is_zero()));
            let sub_ask = (0..tan.len()).all(|m| self.intrinsic_codifferential_frame(m).is_zero());
            let sub_h = tan
                .iter()
                .all(|x| tan.iter().all(|y| self.intrinsic_nijenhuis(x, y).is_zero()));
            let ambient_sk = ambient_ask && ambient_h;
            let sub_sk = sub_ask && sub_h;
            let inherited = (!ambient_ask || sub_ask) && (!ambient_sk || sub_sk);
            tr.check("classes", inherited, || (vec![], "class not inherited".into()));
            classes = Some(ClassComparison {
                ambient_ask,
                ambient_h,
                ambient_sk,
                sub_ask,
                sub_h,
                sub_sk,
                inherited,
            });
        }

        let is_subflag = matches!(self.kind(), SubKind::Subflag { .. });
        let required_outcomes_met = !is_subflag || (minimal && tg);
        let passed = holomorphic
            && brackets_agree
            && normal
            && minimal_identity
            && intrinsic_zero
            && normal_zero.unwrap_or(true)
            && split.unwrap_or(true)
            && gauss.unwrap_or(true)
            && classes.as_ref().is_none_or(|c| c.inherited)
            && (!is_subflag || (tg && minimal && partial_zero && brackets_agree));

        let d = s.describe();
        SubmanifoldCertificate {
            kind: if is_subflag { "subflag" } else { "subalgebra" },
            theta: flag.theta().iter().map(|i| i + 1).collect(),
            theta_prime: match self.kind() {
                SubKind::Subflag { theta_prime } => Some(theta_prime.iter().map(|i| i + 1).collect()),
                SubKind::Subalgebra { .. } => None,
            },
            lambda: d.lambda,
            epsilon: d.epsilon,
            dimension: self.dim(),
            codimension: self.codim(),
            r_prime: self.r_prime().iter().map(|&a| rs.label(a)).collect(),
            tangent_roots: self.r_n().iter().map(|&a| rs.label(a)).collect(),
            holomorphic,
            brackets_agree,
            second_form_normal: normal,
            totally_geodesic: tg,
            minimal,
            minimal_identity,
            partial_codifferential_zero: partial_zero,
            intrinsic_codifferential_zero: intrinsic_zero,
            normal_codifferential_zero: normal_zero,
            split_identity: split,
            gauss,
            classes,
            required_outcomes_met,
            passed,
            witnesses: tr.witnesses,
        }
    }
}
