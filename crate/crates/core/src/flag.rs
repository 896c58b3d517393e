//! Generalized flag manifolds `U/K_Theta` as root data.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{AlgebraVector, RootId, RootSystem, WeylBasis};
use crate::scalar::Cx;

/// `F = G/P_Theta` described by `Theta`, `R(Theta)`, the complementary
/// roots `R_Theta` and the isotropy summands of the tangent space.
#[derive(Debug)]
pub struct FlagManifold {
    wb: Arc<WeylBasis>,
    /// 0-based indices into the simple roots, sorted.
    theta: Vec<usize>,
    in_r_theta: Vec<bool>,
    m_positive: Vec<RootId>,
    summands: Vec<Vec<RootId>>,
    /// Class of each root of `R_Theta` (negatives share their positive's).
    class_of: Vec<Option<usize>>,
}

/// One real tangent basis vector: `A_alpha` or `iS_alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealKind {
    A,
    IS,
}

#[derive(Clone, Debug)]
pub struct RealBasisVector {
    pub root: RootId,
    pub kind: RealKind,
    pub vector: AlgebraVector,
}

/// `R(Theta)`: roots generated from `±Theta` by adding roots.
pub(crate) fn close_theta(rs: &RootSystem, theta: &[usize]) -> BTreeSet<RootId> {
    let simples = rs.simples();
    let mut set: BTreeSet<RootId> = theta
        .iter()
        .flat_map(|&i| [simples[i], rs.neg(simples[i])])
        .collect();
    loop {
        let mut added = Vec::new();
        for &a in &set {
            for &b in &set {
                if let Some(c) = rs.sum(a, b) {
                    if !set.contains(&c) {
                        added.push(c);
                    }
                }
            }
        }
        if added.is_empty() {
            return set;
        }
        set.extend(added);
    }
}

/// `A_alpha = X_alpha - X_-alpha`.
pub fn a_vector(rs: &RootSystem, a: RootId) -> AlgebraVector {
    let mut v = AlgebraVector::root(rs.rank(), a);
    v.add_root(rs.neg(a), &Cx::from_int(-1));
    v
}

/// `S_alpha = X_alpha + X_-alpha`.
pub fn s_vector(rs: &RootSystem, a: RootId) -> AlgebraVector {
    let mut v = AlgebraVector::root(rs.rank(), a);
    v.add_root(rs.neg(a), &Cx::one());
    v
}

impl FlagManifold {
    /// `theta` holds 0-based simple-root indices; duplicates are ignored.
    pub fn new(wb: Arc<WeylBasis>, theta: &[usize]) -> Result<Self> {
        let rs = wb.root_system().clone();
        let rank = rs.rank();
        if let Some(&bad) = theta.iter().find(|&&i| i >= rank) {
            return Err(Error::ThetaOutOfRange {
                index: bad + 1,
                rank,
            });
        }
        let theta: Vec<usize> = theta.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let r_theta = close_theta(&rs, &theta);
        let in_r_theta: Vec<bool> = (0..rs.len()).map(|a| r_theta.contains(&a)).collect();
        let m_positive: Vec<RootId> = rs.positives().filter(|&a| !in_r_theta[a]).collect();

        // Summands are the fibres of restriction to the centre of k_Theta:
        // the coordinates on simple roots outside Theta.
        let outside: Vec<usize> = (0..rank).filter(|i| !theta.contains(i)).collect();
        let mut key_to_class: HashMap<Vec<i32>, usize> = HashMap::new();
        let mut summands: Vec<Vec<RootId>> = Vec::new();
        let mut class_of = vec![None; rs.len()];
        for &a in &m_positive {
            let key: Vec<i32> = outside.iter().map(|&i| rs.root(a).coords[i]).collect();
            let c = *key_to_class.entry(key).or_insert_with(|| {
                summands.push(Vec::new());
                summands.len() - 1
            });
            summands[c].push(a);
            class_of[a] = Some(c);
            class_of[rs.neg(a)] = Some(c);
        }

        Ok(Self {
            wb,
            theta,
            in_r_theta,
            m_positive,
            summands,
            class_of,
        })
    }

    pub fn weyl_basis(&self) -> &Arc<WeylBasis> {
        &self.wb
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.wb.root_system()
    }

    pub fn rank(&self) -> usize {
        self.wb.rank()
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    /// `R(Theta)` in root order.
    pub fn r_theta(&self) -> Vec<RootId> {
        (0..self.in_r_theta.len())
            .filter(|&a| self.in_r_theta[a])
            .collect()
    }

    pub fn in_r_theta(&self, a: RootId) -> bool {
        self.in_r_theta[a]
    }

    /// `R_Theta = R \ R(Theta)` in root order.
    pub fn complement(&self) -> Vec<RootId> {
        (0..self.in_r_theta.len())
            .filter(|&a| !self.in_r_theta[a])
            .collect()
    }

    pub fn in_complement(&self, a: RootId) -> bool {
        !self.in_r_theta[a]
    }

    /// `R_Theta^+`, the roots indexing the tangent space.
    pub fn m_positive(&self) -> &[RootId] {
        &self.m_positive
    }

    pub fn summands(&self) -> &[Vec<RootId>] {
        &self.summands
    }

    pub fn num_classes(&self) -> usize {
        self.summands.len()
    }

    pub fn class_of(&self, a: RootId) -> Option<usize> {
        self.class_of[a]
    }

    pub fn real_dim(&self) -> usize {
        2 * self.m_positive.len()
    }

    /// `Theta = Sigma` leaves no tangent directions.
    pub fn is_point(&self) -> bool {
        self.m_positive.is_empty()
    }

    pub fn label(&self, a: RootId) -> String {
        self.root_system().label(a)
    }

    pub fn a_vector(&self, a: RootId) -> AlgebraVector {
        a_vector(self.root_system(), a)
    }

    pub fn s_vector(&self, a: RootId) -> AlgebraVector {
        s_vector(self.root_system(), a)
    }

    /// `[A_alpha, iS_alpha]` for each `alpha` in `R_Theta^+`.
    pub fn real_basis(&self) -> Vec<RealBasisVector> {
        let mut out = Vec::with_capacity(self.real_dim());
        for &a in &self.m_positive {
            out.push(RealBasisVector {
                root: a,
                kind: RealKind::A,
                vector: self.a_vector(a),
            });
            out.push(RealBasisVector {
                root: a,
                kind: RealKind::IS,
                vector: self.s_vector(a).scale(&Cx::i()),
            });
        }
        out
    }

    pub fn real_label(&self, v: &RealBasisVector) -> String {
        match v.kind {
            RealKind::A => format!("A[{}]", self.label(v.root)),
            RealKind::IS => format!("iS[{}]", self.label(v.root)),
        }
    }

    /// Complex basis `X_alpha`, `alpha` in `R_Theta`.
    pub fn complex_basis(&self) -> Vec<(RootId, AlgebraVector)> {
        self.complement()
            .into_iter()
            .map(|a| (a, self.wb.x(a)))
            .collect()
    }

    /// Generators of the complexified isotropy algebra: the Cartan basis
    /// and `X_beta` for `beta` in `R(Theta)`.
    pub fn isotropy_generators(&self) -> Vec<AlgebraVector> {
        let rank = self.rank();
        let mut out: Vec<AlgebraVector> = (0..rank)
            .map(|j| {
                let mut c = vec![Cx::zero(); rank];
                c[j] = Cx::one();
                AlgebraVector::cartan_vector(c)
            })
            .collect();
        out.extend(self.r_theta().into_iter().map(|b| self.wb.x(b)));
        out
    }

    /// Projection of a vector of `g` onto `m^C`.
    pub fn project_m(&self, v: &AlgebraVector) -> AlgebraVector {
        v.project_roots(|a| !self.in_r_theta[a])
    }

    /// `true` when the vector lies in `m^C`.
    pub fn in_tangent(&self, v: &AlgebraVector) -> bool {
        !v.has_cartan() && v.roots.keys().all(|&a| !self.in_r_theta[a])
    }

    /// Exact rendering such as `(1/2)*X[α_{1,2}] + (-i)*X[-α_{1,2}]`.
    pub fn render(&self, v: &AlgebraVector) -> String {
        let mut parts: Vec<String> = v
            .cartan
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("({c})*H_{}", j + 1))
            .collect();
        parts.extend(
            v.roots
                .iter()
                .map(|(&a, c)| format!("({c})*X[{}]", self.label(a))),
        );
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn summary(&self) -> FlagSummary {
        let rs = self.root_system();
        FlagSummary {
            family: rs.family().to_string(),
            rank: rs.rank(),
            theta: self.theta.iter().map(|i| i + 1).collect(),
            theta_labels: self
                .theta
                .iter()
                .map(|&i| rs.label(rs.simples()[i]))
                .collect(),
            num_roots: rs.len(),
            num_positive: rs.num_positive(),
            r_theta: self.r_theta().into_iter().map(|a| rs.label(a)).collect(),
            m_positive: self.m_positive.iter().map(|&a| rs.label(a)).collect(),
            summands: self
                .summands
                .iter()
                .map(|c| c.iter().map(|&a| rs.label(a)).collect())
                .collect(),
            real_dim: self.real_dim(),
            isotropy_dim: rs.rank() + self.r_theta().len(),
            algebra_dim: rs.rank() + rs.len(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FlagSummary {
    pub family: String,
    pub rank: usize,
    /// 1-based simple-root indices.
    pub theta: Vec<usize>,
    pub theta_labels: Vec<String>,
    pub num_roots: usize,
    pub num_positive: usize,
    pub r_theta: Vec<String>,
    pub m_positive: Vec<String>,
    pub summands: Vec<Vec<String>>,
    pub real_dim: usize,
    pub isotropy_dim: usize,
    pub algebra_dim: usize,
}
