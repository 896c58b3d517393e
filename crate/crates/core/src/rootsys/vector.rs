use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use super::roots::RootId;
use crate::scalar::{Cx, ExactScalar};

/// Element of the complexified algebra: Cartan coefficients on the basis
/// `H_{alpha_1}, ..., H_{alpha_l}` plus sparse coefficients on the root
/// vectors `X_alpha`. No zero coefficient is ever stored in `roots`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgebraVector {
    pub cartan: Vec<Cx>,
    pub roots: BTreeMap<RootId, Cx>,
}

impl AlgebraVector {
    pub fn zero(rank: usize) -> Self {
        Self {
            cartan: vec![Cx::zero(); rank],
            roots: BTreeMap::new(),
        }
    }

    /// The basis vector `X_alpha`.
    pub fn root(rank: usize, id: RootId) -> Self {
        Self::root_scaled(rank, id, Cx::one())
    }

    pub fn root_scaled(rank: usize, id: RootId, c: Cx) -> Self {
        let mut v = Self::zero(rank);
        v.add_root(id, &c);
        v
    }

    pub fn cartan_vector(cartan: Vec<Cx>) -> Self {
        Self {
            cartan,
            roots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn add_root(&mut self, id: RootId, c: &Cx) {
        if c.is_zero() {
            return;
        }
        match self.roots.get_mut(&id) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.roots.remove(&id);
                }
            }
            None => {
                self.roots.insert(id, c.clone());
            }
        }
    }

    pub fn coeff(&self, id: RootId) -> Cx {
        self.roots.get(&id).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.roots.is_empty() && self.cartan.iter().all(Cx::is_zero)
    }

    pub fn has_cartan(&self) -> bool {
        self.cartan.iter().any(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Cx) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank());
        }
        Self {
            cartan: self.cartan.iter().map(|x| x * c).collect(),
            roots: self.roots.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn scale_real(&self, s: &ExactScalar) -> Self {
        self.scale(&Cx::real(s.clone()))
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Cx, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.cartan.iter_mut().zip(&other.cartan) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
        for (&k, v) in &other.roots {
            self.add_root(k, &(c * v));
        }
    }

    /// Keeps only the root components accepted by `keep`; drops the Cartan
    /// part.
    pub fn project_roots(&self, keep: impl Fn(RootId) -> bool) -> Self {
        Self {
            cartan: vec![Cx::zero(); self.rank()],
            roots: self
                .roots
                .iter()
                .filter(|(&k, _)| keep(k))
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }
}

impl Add<&AlgebraVector> for &AlgebraVector {
    type Output = AlgebraVector;
    fn add(self, rhs: &AlgebraVector) -> AlgebraVector {
        let mut out = self.clone();
        out.axpy(&Cx::one(), rhs);
        out
    }
}

impl Sub<&AlgebraVector> for &AlgebraVector {
    type Output = AlgebraVector;
    fn sub(self, rhs: &AlgebraVector) -> AlgebraVector {
        let mut out = self.clone();
        out.axpy(&Cx::from_int(-1), rhs);
        out
    }
}

impl Neg for &AlgebraVector {
    type Output = AlgebraVector;
    fn neg(self) -> AlgebraVector {
        self.scale(&Cx::from_int(-1))
    }
}
