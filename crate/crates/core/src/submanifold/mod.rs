//! Invariant holomorphic submanifolds `L/(L ∩ K_Theta)` through the origin.
//!
//! The tangent space `n` carries a g-orthonormal J-frame. Ambient tensors use
//! the connection table of the flag manifold; the intrinsic connection is
//! rebuilt on `n` from projected brackets and its own `U'`.

mod certify;
mod span;

pub use certify::{CertifyOptions, ClassComparison, SubmanifoldCertificate};
pub use span::Span;

use std::sync::{Arc, OnceLock};

use num_traits::Signed;

use crate::ahstruct::AhStructure;
use crate::error::{Error, Result};
use crate::flag::{close_theta, FlagManifold};
use crate::geometry::ConnectionTable;
use crate::rootsys::{AlgebraVector, RootId, WeylBasis};
use crate::scalar::{int, rat, Cx, ExactScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubKind {
    /// 0-based simple-root indices of `Theta'`.
    Subflag { theta_prime: Vec<usize> },
    /// Real dimension of the input subalgebra `l`.
    Subalgebra { dim: usize },
}

/// A frame vector `E` and `JE`; `root` is set when `E = V_alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentPair {
    pub root: Option<RootId>,
    pub e: AlgebraVector,
    pub je: AlgebraVector,
}

#[derive(Debug)]
pub struct SubmanifoldData {
    table: Arc<ConnectionTable>,
    kind: SubKind,
    /// `R'` for sub-flags, empty otherwise.
    r_prime: Vec<RootId>,
    r_n: Vec<RootId>,
    n_frame: Vec<TangentPair>,
    perp_frame: Vec<TangentPair>,
    /// `c[z][a][k] = g([f_z, f_a]_n, f_k)` on the real frame `f` of `n`.
    frame_constants: OnceLock<Vec<Vec<Vec<Cx>>>>,
}

/// Conjugation fixing the compact form `u`: `X_alpha -> -X_-alpha`,
/// `H -> -H`, antilinear.
pub fn compact_conjugate(wb: &WeylBasis, v: &AlgebraVector) -> AlgebraVector {
    let rs = wb.root_system();
    let mut out = AlgebraVector::cartan_vector(v.cartan.iter().map(|c| -c.conj()).collect());
    for (&a, c) in &v.roots {
        out.add_root(rs.neg(a), &-c.conj());
    }
    out
}

fn in_compact_form(wb: &WeylBasis, v: &AlgebraVector) -> bool {
    &compact_conjugate(wb, v) == v
}

/// Real and imaginary parts with respect to `u`.
fn real_parts(wb: &WeylBasis, v: &AlgebraVector) -> [AlgebraVector; 2] {
    let t = compact_conjugate(wb, v);
    let half = Cx::from_rational(rat(1, 2));
    let re = (v + &t).scale(&half);
    let im = (v - &t).scale(&half.times_i()).scale(&Cx::from_int(-1));
    [re, im]
}

/// Real basis of the subalgebra of `u` generated by `generators`.
pub fn generate_subalgebra(wb: &WeylBasis, generators: &[AlgebraVector]) -> Result<Vec<AlgebraVector>> {
    let render = |v: &AlgebraVector| format!("{v:?}");
    for (i, g) in generators.iter().enumerate() {
        if !in_compact_form(wb, g) {
            return Err(Error::NotSubalgebra(format!("generator {i} is not in the compact real form")));
        }
    }
    let mut span = Span::new();
    let mut list: Vec<AlgebraVector> = Vec::new();
    for g in generators {
        if span.insert(g, render)? {
            list.push(g.clone());
        }
    }
    let mut done = 0;
    while done < list.len() {
        let new = list[done].clone();
        for k in 0..=done {
            let b = wb.bracket(&list[k], &new);
            if span.insert(&b, render)? {
                list.push(b);
            }
        }
        done += 1;
    }
    Ok(list)
}

fn orthonormalize_pairs(
    s: &AhStructure,
    candidates: impl IntoIterator<Item = (Option<RootId>, AlgebraVector)>,
    against: &[TangentPair],
) -> Result<Vec<TangentPair>> {
    let flag = s.flag();
    let mut out: Vec<TangentPair> = Vec::new();
    for (root, c) in candidates {
        let mut y = c.clone();
        for p in against.iter().chain(out.iter()) {
            let a = s.g(&y, &p.e);
            let b = s.g(&y, &p.je);
            y.axpy(&-a, &p.e);
            y.axpy(&-b, &p.je);
        }
        if y.is_zero() {
            continue;
        }
        let norm = s.g(&y, &y);
        let q = norm
            .is_real()
            .then(|| norm.re.as_rational())
            .flatten()
            .filter(|q| q.is_positive())
            .ok_or_else(|| Error::NonRationalNorm(flag.render(&y)))?;
        let k = ExactScalar::sqrt_rational(&q.recip())?;
        let e = y.scale_real(&k);
        let je = s.j(&e);
        let root = if y == c { root } else { None };
        out.push(TangentPair { root, e, je });
    }
    Ok(out)
}

impl SubmanifoldData {
    /// Sub-flag `L/(L ∩ K_Theta)` where `l` is the semisimple part of the
    /// Levi factor of `Theta'` (0-based indices).
    pub fn build_subflag(table: Arc<ConnectionTable>, theta_prime: &[usize]) -> Result<Self> {
        let s = table.structure().clone();
        let flag = s.flag().clone();
        let rs = flag.root_system().clone();
        if theta_prime.is_empty() {
            return Err(Error::EmptyThetaPrime);
        }
        if let Some(&bad) = theta_prime.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::ThetaOutOfRange {
                index: bad + 1,
                rank: rs.rank(),
            });
        }
        if theta_prime.iter().all(|i| flag.theta().contains(i)) {
            return Err(Error::ThetaPrimeInTheta);
        }
        let mut tp = theta_prime.to_vec();
        tp.sort_unstable();
        tp.dedup();
        let r_prime: Vec<RootId> = close_theta(&rs, &tp).into_iter().collect();
        let tangent: Vec<RootId> = flag
            .m_positive()
            .iter()
            .copied()
            .filter(|a| r_prime.contains(a))
            .collect();
        let pair = |a: RootId| {
            let p = s.frame_pair(a);
            TangentPair {
                root: Some(a),
                e: p.v,
                je: p.jv,
            }
        };
        let n_frame = tangent.iter().map(|&a| pair(a)).collect();
        let perp_frame = flag
            .m_positive()
            .iter()
            .filter(|a| !tangent.contains(a))
            .map(|&a| pair(a))
            .collect();
        let data = Self {
            table,
            kind: SubKind::Subflag { theta_prime: tp },
            r_prime,
            r_n: tangent,
            n_frame,
            perp_frame,
            frame_constants: OnceLock::new(),
        };
        if !data.is_j_invariant() {
            return Err(Error::NotHolomorphic);
        }
        Ok(data)
    }

    /// Orbit of the subgroup with Lie algebra spanned by `basis`, a list of
    /// real vectors of `u` whose span must be closed under the bracket.
    pub fn build_from_subalgebra(table: Arc<ConnectionTable>, basis: &[AlgebraVector]) -> Result<Self> {
        let s = table.structure().clone();
        let flag = s.flag().clone();
        let wb = flag.weyl_basis().clone();
        let render = |v: &AlgebraVector| flag.render(v);
        for (i, b) in basis.iter().enumerate() {
            if !in_compact_form(&wb, b) {
                return Err(Error::NotSubalgebra(format!("vector {i} is not in the compact real form")));
            }
        }
        let mut l = Span::new();
        let mut dim = 0;
        for b in basis {
            if l.insert(b, render)? {
                dim += 1;
            }
        }
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate().skip(i + 1) {
                if !l.contains(&wb.bracket(x, y)) {
                    return Err(Error::NotSubalgebra(format!(
                        "bracket of vectors {i} and {j} leaves the span"
                    )));
                }
            }
        }

        let mut n = Span::new();
        for b in basis {
            let m_part = flag.project_m(b);
            if !l.contains(&m_part) {
                return Err(Error::NotReductiveSplit);
            }
            n.insert(&m_part, render)?;
        }
        if n.dim() == 0 {
            return Err(Error::DegenerateSubmanifold("a point: l lies in the isotropy algebra"));
        }
        if n.dim() == flag.real_dim() {
            return Err(Error::DegenerateSubmanifold(
                "open in the flag manifold: codimension 0",
            ));
        }
        if n.vectors().any(|v| !n.contains(&s.j(v))) {
            return Err(Error::NotHolomorphic);
        }

        let candidates: Vec<(Option<RootId>, AlgebraVector)> = n
            .vectors()
            .flat_map(|v| real_parts(&wb, v))
            .map(|v| (None, v))
            .collect();
        let n_frame = orthonormalize_pairs(&s, candidates, &[])?;
        debug_assert_eq!(2 * n_frame.len(), n.dim());

        let mut data = Self {
            table,
            kind: SubKind::Subalgebra { dim },
            r_prime: Vec::new(),
            r_n: Vec::new(),
            n_frame,
            perp_frame: Vec::new(),
            frame_constants: OnceLock::new(),
        };
        data.r_n = flag
            .m_positive()
            .iter()
            .copied()
            .filter(|&a| {
                let p = s.frame_pair(a);
                data.frame_vectors()
                    .any(|x| !s.g(x, &p.v).is_zero() || !s.g(x, &p.jv).is_zero())
            })
            .collect();
        let ambient: Vec<(Option<RootId>, AlgebraVector)> = s
            .j_frame()
            .into_iter()
            .flat_map(|p| [(Some(p.root), p.v), (None, p.jv)])
            .collect();
        data.perp_frame = orthonormalize_pairs(&s, ambient, &data.n_frame)?;
        Ok(data)
    }

    pub fn table(&self) -> &Arc<ConnectionTable> {
        &self.table
    }

    pub fn structure(&self) -> &Arc<AhStructure> {
        self.table.structure()
    }

    pub fn flag(&self) -> &Arc<FlagManifold> {
        self.table.structure().flag()
    }

    pub fn kind(&self) -> &SubKind {
        &self.kind
    }

    pub fn r_prime(&self) -> &[RootId] {
        &self.r_prime
    }

    /// Roots `alpha` of `R_Theta^+` with `V_alpha` or `JV_alpha` not orthogonal to `n`.
    pub fn r_n(&self) -> &[RootId] {
        &self.r_n
    }

    pub fn n_frame(&self) -> &[TangentPair] {
        &self.n_frame
    }

    pub fn perp_frame(&self) -> &[TangentPair] {
        &self.perp_frame
    }

    pub fn dim(&self) -> usize {
        2 * self.n_frame.len()
    }

    pub fn codim(&self) -> usize {
        2 * self.perp_frame.len()
    }

    /// `E_1, JE_1, E_2, ...`
    pub fn frame_vectors(&self) -> impl Iterator<Item = &AlgebraVector> {
        self.n_frame.iter().flat_map(|p| [&p.e, &p.je])
    }

    pub fn perp_vectors(&self) -> impl Iterator<Item = &AlgebraVector> {
        self.perp_frame.iter().flat_map(|p| [&p.e, &p.je])
    }

    pub fn frame_labels(&self) -> Vec<String> {
        label_pairs(self.flag(), &self.n_frame, "E")
    }

    pub fn perp_labels(&self) -> Vec<String> {
        label_pairs(self.flag(), &self.perp_frame, "F")
    }

    fn g(&self, v: &AlgebraVector, w: &AlgebraVector) -> Cx {
        self.structure().g(v, w)
    }

    fn project(&self, frame: &[TangentPair], v: &AlgebraVector) -> AlgebraVector {
        let mut out = AlgebraVector::zero(self.flag().rank());
        for p in frame {
            out.axpy(&self.g(v, &p.e), &p.e);
            out.axpy(&self.g(v, &p.je), &p.je);
        }
        out
    }

    /// Orthogonal projection onto `n` (components outside `m` dropped).
    pub fn proj_n(&self, v: &AlgebraVector) -> AlgebraVector {
        self.project(&self.n_frame, v)
    }

    pub fn proj_perp(&self, v: &AlgebraVector) -> AlgebraVector {
        self.project(&self.perp_frame, v)
    }

    pub fn in_n(&self, v: &AlgebraVector) -> bool {
        !v.has_cartan() && &self.proj_n(v) == v
    }

    fn check_n(&self, v: &AlgebraVector) -> Result<()> {
        if self.in_n(v) {
            Ok(())
        } else {
            Err(Error::OutsideSubmanifold(self.flag().render(v)))
        }
    }

    fn is_j_invariant(&self) -> bool {
        let s = self.structure();
        self.frame_vectors().all(|v| self.in_n(&s.j(v)))
    }

    /// `[x, y]_n`.
    pub fn bracket_n(&self, x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
        self.proj_n(&self.flag().weyl_basis().bracket(x, y))
    }

    /// The same identity evaluated with full brackets; `g(w_n, y) = g(w, y)`
    /// for `y` in `n`.
    #[cfg(test)]
    fn u_prime_direct(&self, x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
        let wb = self.flag().weyl_basis();
        let half = Cx::from_rational(rat(1, 2));
        let mut out = AlgebraVector::zero(self.flag().rank());
        for z in self.frame_vectors() {
            let c = &self.g(&wb.bracket(z, x), y) + &self.g(x, &wb.bracket(z, y));
            out.axpy(&(&c * &half), z);
        }
        out
    }

    /// Nonzero coordinates of `v` in the orthonormal frame of `n`.
    fn frame_coords(&self, v: &AlgebraVector) -> Vec<(usize, Cx)> {
        self.frame_vectors()
            .enumerate()
            .map(|(k, f)| (k, self.g(v, f)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    fn frame_constants(&self) -> &[Vec<Vec<Cx>>] {
        self.frame_constants.get_or_init(|| {
            // frame coordinates of w and of w_n agree
            let wb = self.flag().weyl_basis();
            let frame: Vec<&AlgebraVector> = self.frame_vectors().collect();
            frame
                .iter()
                .map(|z| frame.iter().map(|a| self.frame_coords_dense(&wb.bracket(z, a))).collect())
                .collect()
        })
    }

    fn frame_coords_dense(&self, v: &AlgebraVector) -> Vec<Cx> {
        self.frame_vectors().map(|f| self.g(v, f)).collect()
    }

    /// `U'` from `2 g(U'(x,y), Z) = g([Z,x]_n, y) + g(x, [Z,y]_n)` with `Z`
    /// over the orthonormal frame, read off the structure constants of `n`.
    pub fn u_prime(&self, x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
        let c = self.frame_constants();
        let (cx, cy) = (self.frame_coords(x), self.frame_coords(y));
        let half = Cx::from_rational(rat(1, 2));
        let mut out = AlgebraVector::zero(self.flag().rank());
        for (z, f) in self.frame_vectors().enumerate() {
            let mut acc = Cx::zero();
            for (i, a) in &cx {
                for (j, b) in &cy {
                    let k = &c[z][*i][*j] + &c[z][*j][*i];
                    if !k.is_zero() {
                        acc += &(&(a * b) * &k);
                    }
                }
            }
            if !acc.is_zero() {
                out.axpy(&(&acc * &half), f);
            }
        }
        out
    }

    /// `nabla'_{f_i} f_j = sum_k n[i][j][k] f_k`: the same `U'` identity,
    /// read off the frame constants without further pairings.
    fn frame_nabla(&self, i: usize, j: usize) -> Vec<Cx> {
        let c = self.frame_constants();
        let half = Cx::from_rational(rat(1, 2));
        (0..c.len())
            .map(|k| &(&(&c[k][i][j] + &c[k][j][i]) - &c[i][j][k]) * &half)
            .collect()
    }

    fn frame_combination(&self, coeffs: &[Cx]) -> AlgebraVector {
        let mut out = AlgebraVector::zero(self.flag().rank());
        for (c, f) in coeffs.iter().zip(self.frame_vectors()) {
            if !c.is_zero() {
                out.axpy(c, f);
            }
        }
        out
    }

    /// `alpha(f_i, f_j)` on frame indices (`E_1, JE_1, E_2, ...`).
    pub(crate) fn second_form_frame(&self, i: usize, j: usize) -> AlgebraVector {
        let f: Vec<&AlgebraVector> = self.frame_vectors().collect();
        let mut out = self.table.nabla_vec(f[i], f[j]);
        out.axpy(&Cx::from_int(-1), &self.frame_combination(&self.frame_nabla(i, j)));
        out
    }

    /// Intrinsic codifferential at `f_m`. `J f_{2q} = f_{2q+1}` and
    /// `J f_{2q+1} = -f_{2q}`, and the frame is orthonormal, so every
    /// pairing is a single coefficient.
    pub(crate) fn intrinsic_codifferential_frame(&self, m: usize) -> Cx {
        let c = self.frame_constants();
        let j = |k: usize| if k % 2 == 0 { (1, k + 1) } else { (-1, k - 1) };
        // Lambda' = nabla' + [,]_n
        let lam = |a: usize, b: usize| -> Vec<Cx> {
            self.frame_nabla(a, b).iter().zip(&c[a][b]).map(|(x, y)| x + y).collect()
        };
        let (sm, jm) = j(m);
        let mut acc = Cx::zero();
        for p in 0..c.len() {
            // g(f_p, Lambda'(f_p, J f_m) - J Lambda'(f_p, f_m))
            acc += &lam(p, jm)[p].scale_rational(&int(sm));
            let (sp, jp) = j(p);
            // J f_jp = -sp f_p, so the f_p component of J v is -sp v_jp
            acc += &lam(p, m)[jp].scale_rational(&int(sp));
        }
        acc
    }

    /// `nabla'_x y = -1/2 [x,y]_n + U'(x,y)` on fundamental fields.
    pub fn nabla_prime(&self, x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
        let mut out = self.u_prime(x, y);
        out.axpy(&Cx::from_rational(rat(-1, 2)), &self.bracket_n(x, y));
        out
    }

    /// Intrinsic Nomizu operator `1/2 [x,y]_n + U'(x,y)`.
    pub fn lambda_prime(&self, x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
        let mut out = self.u_prime(x, y);
        out.axpy(&Cx::from_rational(rat(1, 2)), &self.bracket_n(x, y));
        out
    }

    /// `(nabla'_x J) z`.
    pub fn nabla_prime_j(&self, x: &AlgebraVector, z: &AlgebraVector) -> AlgebraVector {
        let s = self.structure();
        let mut out = self.lambda_prime(x, &s.j(z));
        out.axpy(&Cx::from_int(-1), &s.j(&self.lambda_prime(x, z)));
        out
    }

    /// `alpha(x, y) = (-1/2 [x,y]_m + U(x,y)) - (-1/2 [x,y]_n + U'(x,y))`.
    pub fn second_fundamental_form(&self, x: &AlgebraVector, y: &AlgebraVector) -> Result<AlgebraVector> {
        self.check_n(x)?;
        self.check_n(y)?;
        Ok(self.second_form_unchecked(x, y))
    }

    fn second_form_unchecked(&self, x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
        let mut out = self.table.nabla_vec(x, y);
        out.axpy(&Cx::from_int(-1), &self.nabla_prime(x, y));
        out
    }

    fn mean_curvature_in(&self, frame: &[TangentPair]) -> AlgebraVector {
        let mut out = AlgebraVector::zero(self.flag().rank());
        for p in frame {
            out.axpy(&Cx::one(), &self.second_form_unchecked(&p.e, &p.e));
            out.axpy(&Cx::one(), &self.second_form_unchecked(&p.je, &p.je));
        }
        out.scale_real(&ExactScalar::from_rational(int(2 * frame.len() as i64).recip()))
    }

    /// `H = (1/2r) sum_i (alpha(E_i,E_i) + alpha(JE_i,JE_i))`.
    pub fn mean_curvature(&self) -> AlgebraVector {
        self.mean_curvature_in(&self.n_frame)
    }

    fn frame_codiff(&self, frame: &[TangentPair], x: &AlgebraVector) -> (Cx, Vec<(Cx, Cx)>) {
        let t = &self.table;
        let terms: Vec<(Cx, Cx)> = frame
            .iter()
            .map(|p| (t.cov_deriv_omega(&p.e, &p.e, x), t.cov_deriv_omega(&p.je, &p.je, x)))
            .collect();
        let mut total = Cx::zero();
        for (a, b) in &terms {
            total += a;
            total += b;
        }
        (total, terms)
    }

    /// Tangent coderivative: ambient `nabla Omega` summed over the frame of `n`.
    pub fn partial_codifferential(&self, x: &AlgebraVector) -> Cx {
        self.frame_codiff(&self.n_frame, x).0
    }

    /// Normal coderivative: ambient `nabla Omega` summed over the frame of `n^perp`.
    pub fn normal_codifferential(&self, x: &AlgebraVector) -> Cx {
        self.frame_codiff(&self.perp_frame, x).0
    }

    /// Individual frame terms of the normal coderivative.
    pub fn normal_codifferential_terms(&self, x: &AlgebraVector) -> Vec<(Cx, Cx)> {
        self.frame_codiff(&self.perp_frame, x).1
    }

    /// Codifferential of the submanifold's own Kähler form.
    pub fn intrinsic_codifferential(&self, x: &AlgebraVector) -> Result<Cx> {
        self.check_n(x)?;
        let mut acc = Cx::zero();
        for p in &self.n_frame {
            acc += &self.g(&p.e, &self.nabla_prime_j(&p.e, x));
            acc += &self.g(&p.je, &self.nabla_prime_j(&p.je, x));
        }
        Ok(acc)
    }

    /// Nijenhuis tensor of `J|_n` with `n`-projected brackets.
    pub fn intrinsic_nijenhuis(&self, x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
        let s = self.structure();
        let (jx, jy) = (s.j(x), s.j(y));
        let minus = Cx::from_int(-1);
        let mut out = self.bracket_n(&jx, &jy);
        out.axpy(&minus, &s.j(&self.bracket_n(&jx, y)));
        out.axpy(&minus, &s.j(&self.bracket_n(x, &jy)));
        out.axpy(&minus, &self.bracket_n(x, y));
        out.scale(&Cx::from_int(2))
    }

    /// Same submanifold with its tangent frame reordered.
    pub fn with_frame_permuted(&self, order: &[usize]) -> Self {
        Self {
            table: self.table.clone(),
            kind: self.kind.clone(),
            r_prime: self.r_prime.clone(),
            r_n: self.r_n.clone(),
            n_frame: order.iter().map(|&i| self.n_frame[i].clone()).collect(),
            perp_frame: self.perp_frame.clone(),
            frame_constants: OnceLock::new(),
        }
    }
}

fn label_pairs(flag: &FlagManifold, frame: &[TangentPair], letter: &str) -> Vec<String> {
    frame
        .iter()
        .enumerate()
        .flat_map(|(k, p)| match p.root {
            Some(a) => {
                let l = flag.label(a);
                [format!("V[{l}]"), format!("JV[{l}]")]
            }
            None => [format!("{letter}{}", k + 1), format!("J{letter}{}", k + 1)],
        })
        .collect()
}
