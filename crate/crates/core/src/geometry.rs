//! Levi-Civita connection of an invariant metric at the origin, and the
//! tensors built from it.
//!
//! Two operators appear. `nabla` is the connection on fundamental vector
//! fields, `nabla_{X*} Y* = (-1/2 [X,Y]_m + U(X,Y))*`, whose coefficients
//! are `r_{alpha,beta}`. Covariant derivatives of the invariant tensors
//! `J` and `Omega` use the Nomizu operator `Lambda(X)Y = 1/2 [X,Y]_m + U(X,Y)`,
//! so that `Lambda(X_alpha) X_beta = r_{beta,alpha} X_{alpha+beta}`.

use std::sync::Arc;

use crate::ahstruct::{AhStructure, JFramePair};
use crate::rootsys::{AlgebraVector, RootId};
use crate::scalar::{int, rat, Cx, ExactScalar};

#[derive(Debug)]
pub struct ConnectionTable {
    s: Arc<AhStructure>,
    total: usize,
    /// `r_{alpha,beta}` when `alpha`, `beta`, `alpha+beta` are all in `R_Theta`.
    r: Vec<Option<ExactScalar>>,
    /// Coefficient of `X_{alpha+beta}` in `U(X_alpha, X_beta)`.
    u: Vec<Option<ExactScalar>>,
}

/// `A_beta` or `S_beta`, the real vectors spanning `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealDir {
    A(RootId),
    S(RootId),
}

/// One summand of the codifferential: the two frame terms for `beta`.
#[derive(Clone, Debug)]
pub struct CodiffTerm {
    pub root: RootId,
    pub v_term: Cx,
    pub jv_term: Cx,
}

impl ConnectionTable {
    pub fn new(s: Arc<AhStructure>) -> Self {
        let flag = s.flag().clone();
        let rs = flag.root_system();
        let wb = flag.weyl_basis();
        let total = rs.len();
        let mut r = vec![None; total * total];
        let mut u = vec![None; total * total];
        let comp = flag.complement();
        for &a in &comp {
            for &b in &comp {
                let Some(c) = rs.sum(a, b) else { continue };
                if !flag.in_complement(c) {
                    continue;
                }
                let (la, lb, lc) = (s.lambda_of(a), s.lambda_of(b), s.lambda_of(c));
                let two_lc = lc * int(2);
                let n_ba = wb.n(b, a).expect("sum is a root");
                r[a * total + b] = Some(n_ba.scale(&((lc + la - lb) / &two_lc)));
                let n_ab = wb.n(a, b).expect("sum is a root");
                u[a * total + b] = Some(n_ab.scale(&((lb - la) / &two_lc)));
            }
        }
        Self { s, total, r, u }
    }

    pub fn structure(&self) -> &Arc<AhStructure> {
        &self.s
    }

    pub fn r(&self, a: RootId, b: RootId) -> Option<&ExactScalar> {
        self.r[a * self.total + b].as_ref()
    }

    fn u_coeff(&self, a: RootId, b: RootId) -> Option<&ExactScalar> {
        self.u[a * self.total + b].as_ref()
    }

    fn rank(&self) -> usize {
        self.s.flag().rank()
    }

    /// Every stored `r_{alpha,beta}` in root order.
    pub fn r_entries(&self) -> Vec<(RootId, RootId, &ExactScalar)> {
        (0..self.total * self.total)
            .filter_map(|k| self.r[k].as_ref().map(|v| (k / self.total, k % self.total, v)))
            .collect()
    }

    /// `U(X_alpha, X_beta)` from the closed formula.
    pub fn u_map(&self, a: RootId, b: RootId) -> AlgebraVector {
        match (self.u_coeff(a, b), self.s.flag().root_system().sum(a, b)) {
            (Some(c), Some(sum)) => AlgebraVector::root_scaled(self.rank(), sum, Cx::real(c.clone())),
            _ => AlgebraVector::zero(self.rank()),
        }
    }

    /// Bilinear extension of [`Self::u_map`].
    pub fn u_bilinear(&self, v: &AlgebraVector, w: &AlgebraVector) -> AlgebraVector {
        self.sparse_bilinear(v, w, |a, b| self.u_coeff(a, b))
    }

    /// `U(v, w)` solved from `2 g(U(v,w), Z) = g([Z,v]_m, w) + g(v, [Z,w]_m)`
    /// with `Z` running over the complex basis of `m^C`.
    pub fn u_map_general(&self, v: &AlgebraVector, w: &AlgebraVector) -> AlgebraVector {
        let flag = self.s.flag();
        let rs = flag.root_system();
        let wb = flag.weyl_basis();
        let mut out = AlgebraVector::zero(self.rank());
        for g in flag.complement() {
            let z = wb.x(rs.neg(g));
            let zv = flag.project_m(&wb.bracket(&z, v));
            let zw = flag.project_m(&wb.bracket(&z, w));
            let rhs = &self.s.g(&zv, w) + &self.s.g(v, &zw);
            if rhs.is_zero() {
                continue;
            }
            // 2 g(c X_g, X_-g) = -2 c lambda_g
            let denom = -(self.s.lambda_of(g) * int(2));
            out.add_root(g, &rhs.scale_rational(&denom.recip()));
        }
        out
    }

    fn sparse_bilinear<'a>(
        &'a self,
        v: &AlgebraVector,
        w: &AlgebraVector,
        coeff: impl Fn(RootId, RootId) -> Option<&'a ExactScalar>,
    ) -> AlgebraVector {
        let rs = self.s.flag().root_system();
        let mut out = AlgebraVector::zero(self.rank());
        for (&a, ca) in &v.roots {
            for (&b, cb) in &w.roots {
                if let Some(k) = coeff(a, b) {
                    let sum = rs.sum(a, b).expect("stored pairs sum to a root");
                    out.add_root(sum, &(ca * cb).scale(k));
                }
            }
        }
        out
    }

    /// `[v, w]_m` for `v, w` in `m^C`.
    pub fn bracket_m(&self, v: &AlgebraVector, w: &AlgebraVector) -> AlgebraVector {
        let flag = self.s.flag();
        let rs = flag.root_system();
        let wb = flag.weyl_basis();
        let mut out = AlgebraVector::zero(self.rank());
        for (&a, ca) in &v.roots {
            for (&b, cb) in &w.roots {
                if let Some(sum) = rs.sum(a, b) {
                    if flag.in_complement(sum) {
                        out.add_root(sum, &(ca * cb).scale(wb.n(a, b).unwrap()));
                    }
                }
            }
        }
        out
    }

    /// `nabla_{X_alpha*} X_beta* = r_{alpha,beta} X_{alpha+beta}` at the origin.
    pub fn nabla(&self, a: RootId, b: RootId) -> AlgebraVector {
        match self.r(a, b) {
            Some(c) => {
                let sum = self.s.flag().root_system().sum(a, b).unwrap();
                AlgebraVector::root_scaled(self.rank(), sum, Cx::real(c.clone()))
            }
            None => AlgebraVector::zero(self.rank()),
        }
    }

    /// Bilinear extension of [`Self::nabla`].
    pub fn nabla_vec(&self, v: &AlgebraVector, w: &AlgebraVector) -> AlgebraVector {
        self.sparse_bilinear(v, w, |a, b| self.r(a, b))
    }

    /// Nomizu operator `Lambda(v) w`.
    pub fn lambda_op(&self, v: &AlgebraVector, w: &AlgebraVector) -> AlgebraVector {
        self.sparse_bilinear(v, w, |a, b| self.r(b, a))
    }

    fn real_vector(&self, d: RealDir) -> AlgebraVector {
        let flag = self.s.flag();
        match d {
            RealDir::A(a) => flag.a_vector(a),
            RealDir::S(a) => flag.s_vector(a),
        }
    }

    /// `nabla_X Y` for `X, Y` among `A_beta`, `S_alpha`, by expanding over
    /// `X_{±alpha}`, `X_{±beta}`.
    pub fn nabla_real(&self, x: RealDir, y: RealDir) -> AlgebraVector {
        self.nabla_vec(&self.real_vector(x), &self.real_vector(y))
    }

    /// `(nabla_x J) z = Lambda(x)(J z) - J(Lambda(x) z)`.
    pub fn nabla_j(&self, x: &AlgebraVector, z: &AlgebraVector) -> AlgebraVector {
        let s = &self.s;
        let mut out = self.lambda_op(x, &s.j(z));
        out.axpy(&Cx::from_int(-1), &s.j(&self.lambda_op(x, z)));
        out
    }

    /// `(nabla_x Omega)(y, z) = g(y, (nabla_x J) z)`.
    pub fn cov_deriv_omega(&self, x: &AlgebraVector, y: &AlgebraVector, z: &AlgebraVector) -> Cx {
        self.s.g(y, &self.nabla_j(x, z))
    }

    /// `d Omega(x, y, z)`, a third of the cyclic sum of `nabla Omega`.
    pub fn d_omega(&self, x: &AlgebraVector, y: &AlgebraVector, z: &AlgebraVector) -> Cx {
        let mut acc = self.cov_deriv_omega(x, y, z);
        acc += &self.cov_deriv_omega(y, z, x);
        acc += &self.cov_deriv_omega(z, x, y);
        acc.scale_rational(&rat(1, 3))
    }

    /// Frame terms `(nabla_{V} Omega)(V, x)` and `(nabla_{JV} Omega)(JV, x)`
    /// over the given J-frame.
    pub fn codifferential_terms_in(&self, frame: &[JFramePair], x: &AlgebraVector) -> Vec<CodiffTerm> {
        frame
            .iter()
            .map(|p| CodiffTerm {
                root: p.root,
                v_term: self.cov_deriv_omega(&p.v, &p.v, x),
                jv_term: self.cov_deriv_omega(&p.jv, &p.jv, x),
            })
            .collect()
    }

    pub fn codifferential_terms(&self, x: &AlgebraVector) -> Vec<CodiffTerm> {
        self.codifferential_terms_in(&self.s.j_frame(), x)
    }

    pub fn codifferential_in(&self, frame: &[JFramePair], x: &AlgebraVector) -> Cx {
        let mut acc = Cx::zero();
        for t in self.codifferential_terms_in(frame, x) {
            acc += &t.v_term;
            acc += &t.jv_term;
        }
        acc
    }

    /// `(delta Omega)(x)` over the invariant J-frame.
    pub fn codifferential(&self, x: &AlgebraVector) -> Cx {
        self.codifferential_in(&self.s.j_frame(), x)
    }

    /// `N(x, y) = 2([Jx,Jy]_m - J[Jx,y]_m - J[x,Jy]_m - [x,y]_m)`.
    pub fn nijenhuis(&self, x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
        let s = &self.s;
        let (jx, jy) = (s.j(x), s.j(y));
        let minus = Cx::from_int(-1);
        let mut out = self.bracket_m(&jx, &jy);
        out.axpy(&minus, &s.j(&self.bracket_m(&jx, y)));
        out.axpy(&minus, &s.j(&self.bracket_m(x, &jy)));
        out.axpy(&minus, &self.bracket_m(x, y));
        out.scale(&Cx::from_int(2))
    }
}

/// Integrability read off the signs: whenever `epsilon_alpha = epsilon_beta = +1`
/// and `alpha + beta` is in `R_Theta`, also `epsilon_{alpha+beta} = +1`.
pub fn root_criterion_integrable(s: &AhStructure) -> bool {
    let flag = s.flag();
    let rs = flag.root_system();
    let comp = flag.complement();
    comp.iter().all(|&a| {
        comp.iter().all(|&b| match rs.sum(a, b) {
            Some(c) if flag.in_complement(c) && s.epsilon_of(a) == 1 && s.epsilon_of(b) == 1 => {
                s.epsilon_of(c) == 1
            }
            _ => true,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ahstruct::{Iacs, InvariantMetric};
    use crate::flag::FlagManifold;
    use crate::rootsys::{self, Family};
    use crate::scalar::Rational;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn structure(fam: Family, n: usize, theta: &[usize], lambda: Vec<Rational>, mask: u64) -> ConnectionTable {
        let flag = Arc::new(FlagManifold::new(rootsys::build(fam, n).unwrap(), theta).unwrap());
        let metric = InvariantMetric::new(&flag, lambda).unwrap();
        let iacs = Iacs::from_mask(&flag, mask);
        ConnectionTable::new(Arc::new(AhStructure::new(flag, metric, iacs).unwrap()))
    }

    fn random_structure(fam: Family, n: usize, theta: &[usize], seed: u64) -> ConnectionTable {
        let flag = Arc::new(FlagManifold::new(rootsys::build(fam, n).unwrap(), theta).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let metric = InvariantMetric::random(&flag, &mut rng);
        let mask = rng.random_range(0..1u64 << flag.num_classes());
        let iacs = Iacs::from_mask(&flag, mask);
        ConnectionTable::new(Arc::new(AhStructure::new(flag, metric, iacs).unwrap()))
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn tangent_vectors(t: &ConnectionTable) -> Vec<AlgebraVector> {
        t.structure().flag().real_basis().into_iter().map(|b| b.vector).collect()
    }

    use rand::Rng;

    #[test]
    fn u_map_a2_example() {
        // classes of the maximal flag are {a12}, {a23}, {a13}
        let t = structure(Family::A, 2, &[], ints(&[1, 1, 2]), 0);
        let rs = t.structure().flag().root_system().clone();
        let a12 = rs.find(&[1, 0]).unwrap();
        let a23 = rs.find(&[0, 1]).unwrap();
        let a13 = rs.find(&[1, 1]).unwrap();
        assert!(t.u_map(a12, a23).is_zero());
        let n = t.structure().flag().weyl_basis().n(a12, rs.neg(a13)).unwrap().clone();
        // n/(2 lambda_23) (lambda_-13 - lambda_12) with lambda_23 = 1
        let want = AlgebraVector::root_scaled(rs.rank(), rs.neg(a23), Cx::real(n.scale(&rat(1, 2))));
        assert_eq!(t.u_map(a12, rs.neg(a13)), want);
        let general = t.u_map_general(&t.structure().flag().weyl_basis().x(a12), &t.structure().flag().weyl_basis().x(rs.neg(a13)));
        assert_eq!(general, want);
    }

    #[test]
    fn u_map_agrees_with_defining_identity() {
        let t = random_structure(Family::B, 3, &[1], 11);
        let flag = t.structure().flag().clone();
        let wb = flag.weyl_basis();
        let comp = flag.complement();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let a = comp[rng.random_range(0..comp.len())];
            let b = comp[rng.random_range(0..comp.len())];
            let (x, y) = (wb.x(a), wb.x(b));
            assert_eq!(t.u_map(a, b), t.u_map_general(&x, &y));
            assert_eq!(t.u_map_general(&x, &y), t.u_map_general(&y, &x));
        }
    }

    #[test]
    fn killing_metric_has_no_u() {
        let flag = Arc::new(FlagManifold::new(rootsys::build(Family::C, 3).unwrap(), &[0]).unwrap());
        let s = AhStructure::new(flag.clone(), InvariantMetric::killing(&flag), Iacs::canonical(&flag)).unwrap();
        let t = ConnectionTable::new(Arc::new(s));
        let wb = flag.weyl_basis();
        for a in flag.complement() {
            for b in flag.complement() {
                assert!(t.u_map(a, b).is_zero());
                if let Some(r) = t.r(a, b) {
                    assert_eq!(r, &wb.n(b, a).unwrap().scale(&rat(1, 2)));
                }
            }
        }
    }

    #[test]
    fn r_identities() {
        let t = random_structure(Family::A, 4, &[2], 3);
        let s = t.structure();
        let rs = s.flag().root_system();
        let wb = s.flag().weyl_basis();
        for (a, b, r) in t.r_entries() {
            assert_eq!(t.r(rs.neg(a), rs.neg(b)), Some(&-r));
            let sum = rs.sum(a, b).unwrap();
            let want = wb
                .n(b, a)
                .unwrap()
                .scale(&((s.lambda_of(a) - s.lambda_of(b)) / s.lambda_of(sum)));
            assert_eq!(r + t.r(b, a).unwrap(), want);
        }
    }

    #[test]
    fn metric_compatibility_and_torsion() {
        for (fam, n, theta) in [(Family::A, 3, vec![]), (Family::B, 3, vec![0]), (Family::C, 3, vec![2])] {
            let t = random_structure(fam, n, &theta, 17);
            let s = t.structure();
            let flag = s.flag();
            let wb = flag.weyl_basis();
            let rs = flag.root_system();
            for a in flag.complement() {
                for b in flag.complement() {
                    let (xa, xb) = (wb.x(a), wb.x(b));
                    // nabla_X Y - nabla_Y X = -[X, Y]_m
                    let mut tors = t.nabla(a, b);
                    tors.axpy(&Cx::from_int(-1), &t.nabla(b, a));
                    tors.axpy(&Cx::one(), &t.bracket_m(&xa, &xb));
                    assert!(tors.is_zero());
                    if let Some(sum) = rs.sum(a, b) {
                        if !flag.in_complement(sum) {
                            continue;
                        }
                        let c = rs.neg(sum);
                        let xc = wb.x(c);
                        // X_a* is Killing: g(nabla_Y X*, Z) + g(nabla_Z X*, Y) = 0
                        let lhs = &s.g(&t.nabla(b, a), &xc) + &s.g(&t.nabla(c, a), &xb);
                        assert!(lhs.is_zero(), "{a} {b}");
                        let lam = &s.g(&t.lambda_op(&xa, &xb), &xc) + &s.g(&xb, &t.lambda_op(&xa, &xc));
                        assert!(lam.is_zero());
                    }
                }
            }
        }
    }

    /// `A_{-g} = -A_g`, `S_{-g} = S_g`.
    fn signed_real(t: &ConnectionTable, kind: char, root: Option<RootId>) -> AlgebraVector {
        let flag = t.structure().flag();
        let rs = flag.root_system();
        let Some(g) = root.filter(|&g| flag.in_complement(g)) else {
            return AlgebraVector::zero(rs.rank());
        };
        let (p, sign) = if rs.is_positive(g) { (g, 1) } else { (rs.neg(g), -1) };
        match kind {
            'A' => flag.a_vector(p).scale(&Cx::from_int(sign)),
            _ => flag.s_vector(p),
        }
    }

    #[test]
    fn real_connection_formulas_on_a3() {
        let t = random_structure(Family::A, 3, &[], 23);
        let flag = t.structure().flag().clone();
        let rs = flag.root_system().clone();
        let coef = |a: RootId, b: RootId| Cx::real(t.r(a, b).cloned().unwrap_or_else(ExactScalar::zero));
        for &b in flag.m_positive() {
            for &a in flag.m_positive() {
                let plus = rs.sum(a, b);
                let minus = rs.sum(b, rs.neg(a));
                let (rp, rm) = (coef(b, a), coef(b, rs.neg(a)));
                let term = |c: &Cx, v: AlgebraVector| v.scale(c);
                let cases = [
                    (RealDir::S(b), RealDir::A(a), &term(&rp, signed_real(&t, 'S', plus)) - &term(&rm, signed_real(&t, 'S', minus))),
                    (RealDir::S(b), RealDir::S(a), &term(&rp, signed_real(&t, 'A', plus)) + &term(&rm, signed_real(&t, 'A', minus))),
                    (RealDir::A(b), RealDir::A(a), &term(&rp, signed_real(&t, 'A', plus)) - &term(&rm, signed_real(&t, 'A', minus))),
                    (RealDir::A(b), RealDir::S(a), &term(&rp, signed_real(&t, 'S', plus)) + &term(&rm, signed_real(&t, 'S', minus))),
                ];
                for (x, y, want) in cases {
                    assert_eq!(t.nabla_real(x, y), want, "{x:?} {y:?}");
                }
            }
        }
    }

    #[test]
    fn codifferential_vanishes_termwise() {
        for seed in 0..4 {
            let t = random_structure(Family::A, 3, &[1], seed);
            for x in tangent_vectors(&t) {
                for term in t.codifferential_terms(&x) {
                    assert!(term.v_term.is_zero() && term.jv_term.is_zero());
                }
            }
        }
    }

    #[test]
    fn kaehler_a2_has_parallel_j() {
        let t = structure(Family::A, 2, &[], ints(&[1, 1, 2]), 0);
        let basis = tangent_vectors(&t);
        for x in &basis {
            for z in &basis {
                assert!(t.nabla_j(x, z).is_zero());
                for y in &basis {
                    assert!(t.d_omega(x, y, z).is_zero());
                }
            }
        }
    }

    #[test]
    fn d_omega_nonzero_for_normal_metric() {
        let t = structure(Family::A, 2, &[], ints(&[1, 1, 1]), 0);
        let flag = t.structure().flag().clone();
        let rs = flag.root_system();
        let a12 = rs.find(&[1, 0]).unwrap();
        let a23 = rs.find(&[0, 1]).unwrap();
        let a13 = rs.find(&[1, 1]).unwrap();
        let v = t.d_omega(&flag.a_vector(a12), &flag.a_vector(a23), &flag.s_vector(a13));
        assert!(!v.is_zero());
        let basis = tangent_vectors(&t);
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let d = t.d_omega(x, y, z);
                    assert_eq!(t.d_omega(y, x, z), -&d);
                    assert_eq!(t.d_omega(x, z, y), -&d);
                    assert_eq!(t.cov_deriv_omega(x, y, z), -t.cov_deriv_omega(x, z, y));
                }
            }
        }
    }

    #[test]
    fn nijenhuis_examples() {
        let t = structure(Family::A, 2, &[], ints(&[1, 2, 3]), 0);
        for x in tangent_vectors(&t) {
            for y in tangent_vectors(&t) {
                assert!(t.nijenhuis(&x, &y).is_zero());
            }
        }
        // epsilon = (+, +, -)
        let t = structure(Family::A, 2, &[], ints(&[1, 1, 1]), 0b100);
        let flag = t.structure().flag().clone();
        let rs = flag.root_system();
        let wb = flag.weyl_basis();
        let a12 = rs.find(&[1, 0]).unwrap();
        let a23 = rs.find(&[0, 1]).unwrap();
        assert!(!t.nijenhuis(&wb.x(a12), &wb.x(a23)).is_zero());
        for x in tangent_vectors(&t) {
            assert!(t.nijenhuis(&x, &x).is_zero());
        }
    }

    #[test]
    fn root_criterion_matches_nijenhuis() {
        for (fam, n) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::C, 3), (Family::B, 3)] {
            let wb = rootsys::build(fam, n).unwrap();
            for theta_mask in 0..(1u32 << n) - 1 {
                let theta: Vec<usize> = (0..n).filter(|i| theta_mask >> i & 1 == 1).collect();
                let flag = Arc::new(FlagManifold::new(wb.clone(), &theta).unwrap());
                for iacs in Iacs::all(&flag) {
                    let s = Arc::new(
                        AhStructure::new(flag.clone(), InvariantMetric::killing(&flag), iacs).unwrap(),
                    );
                    let t = ConnectionTable::new(s.clone());
                    let comp = flag.complement();
                    let vanishes = comp
                        .iter()
                        .all(|&a| comp.iter().all(|&b| t.nijenhuis(&wb.x(a), &wb.x(b)).is_zero()));
                    assert_eq!(vanishes, root_criterion_integrable(&s));
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn codifferential_frame_independent(seed in 0u64..1000, rot in 0usize..6) {
            let t = random_structure(Family::A, 3, &[], seed);
            let mut frame = t.structure().j_frame();
            let len = frame.len();
            frame.rotate_left(rot % len);
            frame.reverse();
            for x in tangent_vectors(&t) {
                prop_assert_eq!(t.codifferential_in(&frame, &x), t.codifferential(&x));
                prop_assert!(t.codifferential(&x).is_zero());
            }
        }

        #[test]
        fn nabla_j_is_real_linear(seed in 0u64..1000, k in 1i64..5) {
            let t = random_structure(Family::B, 2, &[], seed);
            let basis = tangent_vectors(&t);
            for x in &basis {
                for z in &basis {
                    let lhs = t.nabla_j(&x.scale(&Cx::from_int(k)), z);
                    prop_assert_eq!(lhs, t.nabla_j(x, z).scale(&Cx::from_int(k)));
                }
            }
        }
    }
}
