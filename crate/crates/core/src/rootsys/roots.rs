use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// A root written in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i32>,
}

impl Root {
    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn negate(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// Index of a root inside its [`RootSystem`].
pub type RootId = usize;

/// Roots of a classical simple Lie algebra.
///
/// Positive roots come first, ordered by height and then by descending
/// coordinates (so simple roots appear in Bourbaki order); the negatives
/// follow in the same order, so `neg(i) = i ± |R+|`.
#[derive(Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    roots: Vec<Root>,
    /// Coordinates in the orthonormal basis e_1, e_2, ... of the standard
    /// realization.
    ambient: Vec<Vec<i64>>,
    n_pos: usize,
    cartan: Vec<Vec<i64>>,
    index: HashMap<Vec<i32>, RootId>,
    sums: Vec<Option<RootId>>,
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn combo(dim: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; dim];
    for &(i, c) in terms {
        v[i] += c;
    }
    v
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Ambient-space dimension, simple roots and all roots, for the standard
/// Bourbaki realization of each family.
fn ambient_data(family: Family, n: usize) -> (usize, Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut all = Vec::new();
    match family {
        Family::A => {
            let dim = n + 1;
            for i in 0..dim {
                for j in 0..dim {
                    if i != j {
                        all.push(combo(dim, &[(i, 1), (j, -1)]));
                    }
                }
            }
            let simple = (0..n).map(|i| combo(dim, &[(i, 1), (i + 1, -1)])).collect();
            (dim, simple, all)
        }
        Family::B | Family::C | Family::D => {
            let dim = n;
            for i in 0..n {
                for j in (i + 1)..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        all.push(combo(dim, &[(i, si), (j, sj)]));
                    }
                }
                match family {
                    Family::B => {
                        all.push(unit(dim, i, 1));
                        all.push(unit(dim, i, -1));
                    }
                    Family::C => {
                        all.push(unit(dim, i, 2));
                        all.push(unit(dim, i, -2));
                    }
                    _ => {}
                }
            }
            let mut simple: Vec<Vec<i64>> =
                (0..n - 1).map(|i| combo(dim, &[(i, 1), (i + 1, -1)])).collect();
            simple.push(match family {
                Family::B => unit(dim, n - 1, 1),
                Family::C => unit(dim, n - 1, 2),
                _ => combo(dim, &[(n - 2, 1), (n - 1, 1)]),
            });
            (dim, simple, all)
        }
    }
}

/// Solves `G k = b` over the rationals (G symmetric positive definite).
fn solve_rational(g: &[Vec<Rational>], b: &[Rational]) -> Vec<Rational> {
    let n = b.len();
    let mut m: Vec<Vec<Rational>> = g
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Gram matrix is nonsingular");
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let d = &f * &m[col][c];
                    m[r][c] -= d;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n].clone()).collect()
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::UnsupportedRootSystem {
                family: family.letter(),
                rank,
            });
        }
        let (_, simple, all) = ambient_data(family, rank);
        let gram: Vec<Vec<Rational>> = simple
            .iter()
            .map(|a| simple.iter().map(|b| int(dot(a, b))).collect())
            .collect();
        let to_simple = |v: &[i64]| -> Vec<i32> {
            let rhs: Vec<Rational> = simple.iter().map(|s| int(dot(v, s))).collect();
            solve_rational(&gram, &rhs)
                .into_iter()
                .map(|k| {
                    assert!(k.is_integer(), "root is an integer combination of simples");
                    k.to_integer().to_i32().expect("small coordinate")
                })
                .collect()
        };

        let mut pos: Vec<(Root, Vec<i64>)> = all
            .iter()
            .map(|v| (Root { coords: to_simple(v) }, v.clone()))
            .filter(|(r, _)| r.is_positive())
            .collect();
        pos.sort_by(|(a, _), (b, _)| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.coords.cmp(&a.coords))
        });
        let n_pos = pos.len();
        assert_eq!(n_pos * 2, all.len(), "R = R+ u -R+");

        let mut roots = Vec::with_capacity(2 * n_pos);
        let mut ambient = Vec::with_capacity(2 * n_pos);
        for (r, v) in &pos {
            roots.push(r.clone());
            ambient.push(v.clone());
        }
        for (r, v) in &pos {
            roots.push(r.negate());
            ambient.push(v.iter().map(|x| -x).collect());
        }
        let index: HashMap<Vec<i32>, RootId> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();

        let cartan = simple
            .iter()
            .map(|a| {
                simple
                    .iter()
                    .map(|b| 2 * dot(a, b) / dot(b, b))
                    .collect()
            })
            .collect();

        let total = roots.len();
        let mut sums = vec![None; total * total];
        for i in 0..total {
            for j in 0..total {
                let s: Vec<i32> = roots[i]
                    .coords
                    .iter()
                    .zip(&roots[j].coords)
                    .map(|(a, b)| a + b)
                    .collect();
                sums[i * total + j] = index.get(&s).copied();
            }
        }

        Ok(Self {
            family,
            rank,
            roots,
            ambient,
            n_pos,
            cartan,
            index,
            sums,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id]
    }

    pub fn ambient(&self, id: RootId) -> &[i64] {
        &self.ambient[id]
    }

    pub fn positives(&self) -> std::ops::Range<RootId> {
        0..self.n_pos
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id < self.n_pos
    }

    /// Simple roots in Bourbaki order.
    pub fn simples(&self) -> Vec<RootId> {
        (0..self.rank)
            .map(|i| {
                let mut c = vec![0; self.rank];
                c[i] = 1;
                self.index[&c]
            })
            .collect()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn neg(&self, id: RootId) -> RootId {
        if id < self.n_pos {
            id + self.n_pos
        } else {
            id - self.n_pos
        }
    }

    pub fn find(&self, coords: &[i32]) -> Option<RootId> {
        self.index.get(coords).copied()
    }

    /// `alpha + beta` when it is a root; `None` otherwise (including 0).
    pub fn sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sums[a * self.roots.len() + b]
    }

    /// Human-readable label: `α_{i,j}` for type A, simple-root coordinates
    /// otherwise.
    pub fn label(&self, id: RootId) -> String {
        let pos = self.is_positive(id);
        let base = if pos { id } else { self.neg(id) };
        let sign = if pos { "" } else { "-" };
        match self.family {
            Family::A => {
                let v = &self.ambient[base];
                let i = v.iter().position(|&x| x == 1).unwrap() + 1;
                let j = v.iter().position(|&x| x == -1).unwrap() + 1;
                format!("{sign}α_{{{i},{j}}}")
            }
            _ => {
                let c: Vec<String> = self.roots[base]
                    .coords
                    .iter()
                    .map(|x| x.to_string())
                    .collect();
                format!("{sign}α[{}]", c.join(","))
            }
        }
    }

    /// Positive root count for the family, by formula.
    pub fn expected_len(family: Family, n: usize) -> usize {
        match family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_classical_formulas() {
        for (fam, ranks) in [
            (Family::A, 1..=8),
            (Family::B, 2..=5),
            (Family::C, 2..=5),
            (Family::D, 3..=6),
        ] {
            for n in ranks {
                let rs = RootSystem::new(fam, n).unwrap();
                assert_eq!(rs.len(), RootSystem::expected_len(fam, n), "{fam}{n}");
            }
        }
        assert_eq!(RootSystem::new(Family::A, 7).unwrap().len(), 56);
    }

    #[test]
    fn rank_one_and_b2() {
        let a1 = RootSystem::new(Family::A, 1).unwrap();
        assert_eq!(a1.roots(), &[Root { coords: vec![1] }, Root { coords: vec![-1] }]);

        // oracle: ±e_i, ±e_1±e_2 in coordinates
        let b2 = RootSystem::new(Family::B, 2).unwrap();
        let mut brute = Vec::new();
        for v in [[1, 0], [0, 1], [1, 1], [1, -1]] {
            brute.push(v.to_vec());
            brute.push(v.iter().map(|x| -x).collect());
        }
        let mut got: Vec<Vec<i64>> = (0..b2.len()).map(|i| b2.ambient(i).to_vec()).collect();
        brute.sort();
        got.sort();
        assert_eq!(got, brute);
    }

    #[test]
    fn rejects_degenerate_ranks() {
        assert!(RootSystem::new(Family::A, 0).is_err());
        assert!(RootSystem::new(Family::B, 1).is_err());
        assert!(RootSystem::new(Family::C, 1).is_err());
        assert!(RootSystem::new(Family::D, 2).is_err());
    }

    #[test]
    fn positivity_split_and_simples() {
        let rs = RootSystem::new(Family::C, 3).unwrap();
        for i in 0..rs.len() {
            let r = rs.root(i);
            assert_eq!(rs.is_positive(i), r.is_positive());
            assert_eq!(rs.root(rs.neg(i)), &r.negate());
        }
        let simples = rs.simples();
        assert_eq!(simples, vec![0, 1, 2]);
        assert_eq!(
            rs.cartan_matrix(),
            &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
    }

    #[test]
    fn sums_in_a7() {
        let rs = RootSystem::new(Family::A, 7).unwrap();
        let a12 = rs.find(&[1, 0, 0, 0, 0, 0, 0]).unwrap();
        let a23 = rs.find(&[0, 1, 0, 0, 0, 0, 0]).unwrap();
        let a13 = rs.sum(a12, a23).unwrap();
        assert_eq!(rs.label(a13), "α_{1,3}");
        assert_eq!(rs.sum(a12, a12), None);
        assert_eq!(rs.sum(a12, rs.neg(a12)), None);
        assert_eq!(rs.label(rs.neg(a13)), "-α_{1,3}");
    }

    #[test]
    fn d3_matches_a3() {
        assert_eq!(
            RootSystem::new(Family::D, 3).unwrap().len(),
            RootSystem::new(Family::A, 3).unwrap().len()
        );
    }
}
