use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use super::realization::{IntMatrix, MatrixModel};
use super::roots::{RootId, RootSystem};
use super::vector::AlgebraVector;
use crate::scalar::{int, Cx, ExactScalar, Rational};

/// A Weyl basis `{X_alpha, H_alpha}` normalized so `B(X_alpha, X_-alpha) = 1`,
/// with structure constants read off the matrix model.
#[derive(Debug)]
pub struct WeylBasis {
    rs: Arc<RootSystem>,
    model: MatrixModel,
    /// `B(e_alpha, e_-alpha)` for the unnormalized matrix root vectors.
    norms: Vec<Rational>,
    n: Vec<Option<ExactScalar>>,
    killing_h: Vec<Vec<Rational>>,
    /// `alpha(H_j)` for the Cartan basis `H_j = H_{alpha_j}`.
    on_cartan: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureConstantRow {
    pub alpha: String,
    pub beta: String,
    pub n: String,
}

impl WeylBasis {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        let model = MatrixModel::new(&rs);
        let total = rs.len();
        let rank = rs.rank();
        let norms: Vec<Rational> = (0..total)
            .map(|a| model.killing(model.root_vector(a), model.root_vector(rs.neg(a))))
            .collect();

        let mut n = vec![None; total * total];
        for a in 0..total {
            for b in 0..total {
                if let Some(c) = rs.sum(a, b) {
                    let comm = model.root_vector(a).commutator(model.root_vector(b));
                    let m = comm
                        .ratio_to(model.root_vector(c))
                        .expect("[e_a, e_b] is proportional to e_(a+b)");
                    let ratio = &norms[c] / (&norms[a] * &norms[b]);
                    let root = ExactScalar::sqrt_rational(&ratio).expect("positive norms");
                    n[a * total + b] = Some(root.scale(&m));
                }
            }
        }

        let simples = rs.simples();
        let h_mats: Vec<IntMatrix> = simples
            .iter()
            .map(|&s| model.root_vector(s).commutator(model.root_vector(rs.neg(s))))
            .collect();
        let h_scale: Vec<Rational> = simples.iter().map(|&s| norms[s].recip()).collect();
        let killing_h = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| model.killing(&h_mats[i], &h_mats[j]) * &h_scale[i] * &h_scale[j])
                    .collect()
            })
            .collect();
        let on_cartan = (0..total)
            .map(|a| {
                let v = rs.ambient(a);
                (0..rank)
                    .map(|j| {
                        let ev: i64 = v
                            .iter()
                            .enumerate()
                            .map(|(t, c)| c * h_mats[j].get(t, t))
                            .sum();
                        int(ev) * &h_scale[j]
                    })
                    .collect()
            })
            .collect();

        Self {
            rs,
            model,
            norms,
            n,
            killing_h,
            on_cartan,
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn model(&self) -> &MatrixModel {
        &self.model
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// `n_{alpha,beta}`, or `None` when `alpha + beta` is not a root.
    pub fn n(&self, a: RootId, b: RootId) -> Option<&ExactScalar> {
        self.n[a * self.rs.len() + b].as_ref()
    }

    /// `B(e_alpha, e_-alpha)` of the unnormalized matrix root vector.
    pub fn matrix_norm(&self, a: RootId) -> &Rational {
        &self.norms[a]
    }

    pub fn killing_h(&self) -> &[Vec<Rational>] {
        &self.killing_h
    }

    /// `alpha(H_j)` for each Cartan basis element.
    pub fn root_on_cartan(&self, a: RootId) -> &[Rational] {
        &self.on_cartan[a]
    }

    /// Coefficients of the Riesz element `H_alpha` on the Cartan basis.
    pub fn riesz(&self, a: RootId) -> Vec<Rational> {
        self.rs.root(a).coords.iter().map(|&c| int(c as i64)).collect()
    }

    pub fn h_alpha(&self, a: RootId) -> AlgebraVector {
        AlgebraVector::cartan_vector(self.riesz(a).into_iter().map(Cx::from_rational).collect())
    }

    pub fn x(&self, a: RootId) -> AlgebraVector {
        AlgebraVector::root(self.rank(), a)
    }

    /// `alpha(H)` for a Cartan element given by its coefficients.
    pub fn eval_root(&self, a: RootId, cartan: &[Cx]) -> Cx {
        let mut acc = Cx::zero();
        for (h, w) in cartan.iter().zip(&self.on_cartan[a]) {
            if !h.is_zero() && !w.is_zero() {
                acc += &h.scale_rational(w);
            }
        }
        acc
    }

    /// Lie bracket, extended bilinearly from the basis table.
    pub fn bracket(&self, v: &AlgebraVector, w: &AlgebraVector) -> AlgebraVector {
        let rank = self.rank();
        let mut out = AlgebraVector::zero(rank);
        if v.has_cartan() {
            for (&b, c) in &w.roots {
                let ev = self.eval_root(b, &v.cartan);
                out.add_root(b, &(&ev * c));
            }
        }
        if w.has_cartan() {
            for (&a, c) in &v.roots {
                let ev = self.eval_root(a, &w.cartan);
                out.add_root(a, &-(&ev * c));
            }
        }
        for (&a, ca) in &v.roots {
            for (&b, cb) in &w.roots {
                if b == self.rs.neg(a) {
                    let c = ca * cb;
                    for (slot, k) in out.cartan.iter_mut().zip(&self.rs.root(a).coords) {
                        if *k != 0 {
                            *slot += &c.scale_rational(&int(*k as i64));
                        }
                    }
                } else if let Some(s) = self.rs.sum(a, b) {
                    let n = self.n(a, b).expect("n defined on sums");
                    out.add_root(s, &(ca * cb).scale(n));
                }
            }
        }
        out
    }

    /// Killing form, from `killing_h` on the Cartan part and
    /// `B(X_alpha, X_beta) = delta_{alpha+beta,0}`.
    pub fn killing(&self, v: &AlgebraVector, w: &AlgebraVector) -> Cx {
        let mut acc = Cx::zero();
        for (i, vi) in v.cartan.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, wj) in w.cartan.iter().enumerate() {
                if !wj.is_zero() && !self.killing_h[i][j].is_zero() {
                    acc += &(vi * wj).scale_rational(&self.killing_h[i][j]);
                }
            }
        }
        for (&a, ca) in &v.roots {
            if let Some(cb) = w.roots.get(&self.rs.neg(a)) {
                acc += &(ca * cb);
            }
        }
        acc
    }

    /// All nonzero structure constants in root order.
    pub fn constants_table(&self) -> Vec<StructureConstantRow> {
        let total = self.rs.len();
        let mut rows = Vec::new();
        for a in 0..total {
            for b in 0..total {
                if let Some(n) = self.n(a, b) {
                    rows.push(StructureConstantRow {
                        alpha: self.rs.label(a),
                        beta: self.rs.label(b),
                        n: n.to_string(),
                    });
                }
            }
        }
        rows
    }

    /// Basis of the algebra: Cartan basis then `X_alpha` in root order.
    pub fn basis(&self) -> Vec<AlgebraVector> {
        let rank = self.rank();
        let mut out: Vec<AlgebraVector> = (0..rank)
            .map(|j| {
                let mut c = vec![Cx::zero(); rank];
                c[j] = Cx::one();
                AlgebraVector::cartan_vector(c)
            })
            .collect();
        out.extend((0..self.rs.len()).map(|a| self.x(a)));
        out
    }

    /// `true` when every stored constant equals the normalized
    /// elementary-matrix commutator coefficient, computed from scratch.
    pub fn matches_matrix_oracle(&self) -> bool {
        let total = self.rs.len();
        for a in 0..total {
            for b in 0..total {
                let comm = self
                    .model
                    .root_vector(a)
                    .commutator(self.model.root_vector(b));
                match self.rs.sum(a, b) {
                    Some(c) => {
                        let Some(m) = comm.ratio_to(self.model.root_vector(c)) else {
                            return false;
                        };
                        // n^2 = m^2 * c_(a+b) / (c_a c_b), with the sign of m
                        let n = self.n(a, b).unwrap();
                        let sq = n * n;
                        let want = &m * &m * &self.norms[c] / (&self.norms[a] * &self.norms[b]);
                        let sign_ok = n
                            .single_term()
                            .map(|(q, _)| (q > &Rational::zero()) == (m > Rational::zero()))
                            .unwrap_or(false);
                        if sq.as_rational() != Some(want) || !sign_ok {
                            return false;
                        }
                    }
                    None => {
                        if b != self.rs.neg(a) && !comm.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}
