//! Exact complex spans of algebra vectors, kept in reduced echelon form.

use crate::error::{Error, Result};
use crate::rootsys::{AlgebraVector, RootId};
use crate::scalar::Cx;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Key {
    Cartan(usize),
    Root(RootId),
}

fn coeff(v: &AlgebraVector, k: Key) -> Cx {
    match k {
        Key::Cartan(j) => v.cartan[j].clone(),
        Key::Root(a) => v.coeff(a),
    }
}

fn keys(v: &AlgebraVector) -> impl Iterator<Item = (Key, &Cx)> {
    v.cartan
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (Key::Cartan(j), c))
        .chain(v.roots.iter().map(|(&a, c)| (Key::Root(a), c)))
}

/// Basis vectors each carry a pivot coordinate equal to 1 that vanishes in
/// every other basis vector.
#[derive(Clone, Debug, Default)]
pub struct Span {
    basis: Vec<(Key, AlgebraVector)>,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &AlgebraVector> {
        self.basis.iter().map(|(_, v)| v)
    }

    pub fn reduce(&self, v: &AlgebraVector) -> AlgebraVector {
        let mut r = v.clone();
        for (k, b) in &self.basis {
            let c = coeff(&r, *k);
            if !c.is_zero() {
                r.axpy(&-c, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &AlgebraVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` if it is independent; `Ok(false)` when it already lies in
    /// the span. Pivots must be invertible exactly.
    pub fn insert(&mut self, v: &AlgebraVector, render: impl Fn(&AlgebraVector) -> String) -> Result<bool> {
        let r = self.reduce(v);
        if r.is_zero() {
            return Ok(false);
        }
        let (key, inv) = keys(&r)
            .find_map(|(k, c)| c.inv().ok().map(|i| (k, i)))
            .ok_or_else(|| Error::NoMonomialPivot(render(&r)))?;
        let b = r.scale(&inv);
        for (_, old) in &mut self.basis {
            let c = coeff(old, key);
            if !c.is_zero() {
                old.axpy(&-c, &b);
            }
        }
        self.basis.push((key, b));
        Ok(true)
    }
}
