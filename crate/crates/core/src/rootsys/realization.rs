//! Defining-representation matrix models of the classical algebras.
//!
//! Root vectors are integer matrices built from matrix units; the negative
//! of each positive root vector is its transpose, which makes
//! `X -> -X^T` the compact conjugation. The same matrices serve as the
//! brute-force oracle for structure constants and the Killing form.

use num_traits::Zero;

use super::roots::{Family, RootId, RootSystem};
use crate::scalar::{int, Rational};

/// Dense square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub dim: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.dim + c] = v;
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * o.get(k, j);
                }
            }
        }
        out
    }

    pub fn commutator(&self, o: &Self) -> Self {
        let ab = self.mul(o);
        let ba = o.mul(self);
        Self {
            dim: self.dim,
            data: ab.data.iter().zip(&ba.data).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// `tr(self * o)` without forming the product.
    pub fn trace_product(&self, o: &Self) -> i64 {
        let n = self.dim;
        let mut t = 0;
        for i in 0..n {
            for k in 0..n {
                t += self.get(i, k) * o.get(k, i);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `Some(q)` with `self = q * other` when `other` is nonzero and the two
    /// are proportional.
    pub fn ratio_to(&self, other: &Self) -> Option<Rational> {
        let pivot = other.data.iter().position(|&x| x != 0)?;
        let q = Rational::new(self.data[pivot].into(), other.data[pivot].into());
        let ok = self
            .data
            .iter()
            .zip(&other.data)
            .all(|(&a, &b)| int(a) == &q * int(b));
        ok.then_some(q)
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }
}

/// Matrix model of a classical algebra in its defining representation.
#[derive(Debug, Clone)]
pub struct MatrixModel {
    pub family: Family,
    pub dim: usize,
    /// `B(X, Y) = killing_factor * tr(XY)`.
    pub killing_factor: Rational,
    /// Invariant bilinear form (`None` for type A).
    pub form: Option<IntMatrix>,
    /// One matrix per root, indexed like the root system.
    pub root_vectors: Vec<IntMatrix>,
}

impl MatrixModel {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let family = rs.family();
        let dim = match family {
            Family::A => n + 1,
            Family::B => 2 * n + 1,
            Family::C | Family::D => 2 * n,
        };
        let killing_factor = int(match family {
            Family::A => 2 * dim as i64,
            Family::B | Family::D => dim as i64 - 2,
            Family::C => dim as i64 + 2,
        });
        let form = match family {
            Family::A => None,
            _ => {
                let mut f = IntMatrix::zeros(dim);
                for p in 0..dim {
                    let s = if family == Family::C && p >= n { -1 } else { 1 };
                    f.set(p, dim - 1 - p, s);
                }
                Some(f)
            }
        };
        // weight of the p-th standard basis vector, in e-coordinates
        let weight = |p: usize| -> Vec<i64> {
            let len = if family == Family::A { dim } else { n };
            let mut w = vec![0; len];
            match family {
                Family::A => w[p] = 1,
                _ => {
                    if p < n {
                        w[p] = 1;
                    } else if p >= dim - n {
                        w[dim - 1 - p] = -1;
                    }
                }
            }
            w
        };
        let weights: Vec<Vec<i64>> = (0..dim).map(weight).collect();

        let mut model = Self {
            family,
            dim,
            killing_factor,
            form,
            root_vectors: Vec::new(),
        };
        let mut pos = Vec::new();
        for id in rs.positives() {
            let v = rs.ambient(id);
            pos.push(model.root_vector_for(v, &weights));
        }
        let neg: Vec<IntMatrix> = pos.iter().map(IntMatrix::transpose).collect();
        model.root_vectors = pos.into_iter().chain(neg).collect();
        model
    }

    fn contains(&self, x: &IntMatrix) -> bool {
        match &self.form {
            None => (0..self.dim).map(|i| x.get(i, i)).sum::<i64>() == 0,
            Some(f) => {
                let a = x.transpose().mul(f);
                let b = f.mul(x);
                a.data.iter().zip(&b.data).all(|(p, q)| p + q == 0)
            }
        }
    }

    fn root_vector_for(&self, v: &[i64], weights: &[Vec<i64>]) -> IntMatrix {
        let d = self.dim;
        for p in 0..d {
            for q in 0..d {
                if p == q {
                    continue;
                }
                let diff: Vec<i64> = weights[p]
                    .iter()
                    .zip(&weights[q])
                    .map(|(a, b)| a - b)
                    .collect();
                if diff != v {
                    continue;
                }
                let (pb, qb) = (d - 1 - p, d - 1 - q);
                let mut candidates = Vec::new();
                if self.form.is_none() || (qb, pb) == (p, q) {
                    let mut m = IntMatrix::zeros(d);
                    m.set(p, q, 1);
                    candidates.push(m);
                } else {
                    for s in [1, -1] {
                        let mut m = IntMatrix::zeros(d);
                        m.set(p, q, 1);
                        m.set(qb, pb, s);
                        candidates.push(m);
                    }
                }
                if let Some(m) = candidates.into_iter().find(|m| self.contains(m)) {
                    return m;
                }
            }
        }
        unreachable!("every root has a matrix-unit root vector")
    }

    pub fn root_vector(&self, id: RootId) -> &IntMatrix {
        &self.root_vectors[id]
    }

    /// `B(x, y)` from the trace form.
    pub fn killing(&self, x: &IntMatrix, y: &IntMatrix) -> Rational {
        &self.killing_factor * int(x.trace_product(y))
    }

    /// A basis of the algebra: diagonal Cartan elements followed by the
    /// root vectors.
    pub fn basis(&self, rs: &RootSystem) -> Vec<IntMatrix> {
        let mut out: Vec<IntMatrix> = rs
            .simples()
            .into_iter()
            .map(|s| {
                self.root_vector(s)
                    .commutator(self.root_vector(rs.neg(s)))
            })
            .collect();
        out.extend(self.root_vectors.iter().cloned());
        out
    }

    /// `tr(ad x ad y)` on the matrix basis; used only to certify the
    /// proportionality constant of the trace form.
    pub fn ad_trace(&self, rs: &RootSystem, x: &IntMatrix, y: &IntMatrix) -> Rational {
        let basis = self.basis(rs);
        let coords = |m: &IntMatrix| -> Vec<Rational> { self.coordinates(rs, &basis, m) };
        let mut tr = Rational::zero();
        for (k, b) in basis.iter().enumerate() {
            let img = x.commutator(&y.commutator(b));
            tr += &coords(&img)[k];
        }
        tr
    }

    /// Coordinates of `m` in [`MatrixModel::basis`]. The root part is read
    /// off matrix-unit positions; the Cartan part is solved exactly.
    fn coordinates(&self, rs: &RootSystem, basis: &[IntMatrix], m: &IntMatrix) -> Vec<Rational> {
        let rank = rs.rank();
        let mut out = vec![Rational::zero(); basis.len()];
        let mut rest: Vec<Rational> = m.data.iter().map(|&x| int(x)).collect();
        for (id, rv) in self.root_vectors.iter().enumerate() {
            let pivot = rv.data.iter().position(|&x| x != 0).unwrap();
            let c = &rest[pivot] / int(rv.data[pivot]);
            if !c.is_zero() {
                for (r, &v) in rest.iter_mut().zip(&rv.data) {
                    *r -= &c * int(v);
                }
            }
            out[rank + id] = c;
        }
        // remaining part is diagonal: solve against the Cartan basis
        let diag: Vec<Rational> = (0..self.dim).map(|i| rest[i * self.dim + i].clone()).collect();
        let hs: Vec<Vec<i64>> = basis[..rank].iter().map(|h| h.diagonal()).collect();
        let mut rows: Vec<Vec<Rational>> = (0..self.dim)
            .map(|i| {
                let mut r: Vec<Rational> = hs.iter().map(|h| int(h[i])).collect();
                r.push(diag[i].clone());
                r
            })
            .collect();
        let mut prow = 0;
        let mut pivots = Vec::new();
        for col in 0..rank {
            if let Some(p) = (prow..rows.len()).find(|&r| !rows[r][col].is_zero()) {
                rows.swap(prow, p);
                let pv = rows[prow][col].clone();
                for x in rows[prow].iter_mut() {
                    *x = &*x / &pv;
                }
                for r in 0..rows.len() {
                    if r != prow && !rows[r][col].is_zero() {
                        let f = rows[r][col].clone();
                        for c in 0..=rank {
                            let d = &f * &rows[prow][c];
                            rows[r][c] -= d;
                        }
                    }
                }
                pivots.push(col);
                prow += 1;
            }
        }
        for (r, col) in pivots.into_iter().enumerate() {
            out[col] = rows[r][rank].clone();
        }
        out
    }
}
