//! Invariant almost Hermitian structures `(g, J)` on a flag manifold.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Signed};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flag::FlagManifold;
use crate::rootsys::{AlgebraVector, RootId};
use crate::scalar::{int, Cx, ExactScalar, Rational};

/// `g = -sum_i lambda_i B|_{m_i}`, one positive rational per summand class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMetric {
    lambda: Vec<Rational>,
}

impl InvariantMetric {
    pub fn new(flag: &FlagManifold, lambda: Vec<Rational>) -> Result<Self> {
        if lambda.len() != flag.num_classes() {
            return Err(Error::ClassCountMismatch {
                expected: flag.num_classes(),
                got: lambda.len(),
            });
        }
        if let Some((class, v)) = lambda.iter().enumerate().find(|(_, v)| !v.is_positive()) {
            return Err(Error::NonPositiveLambda {
                class,
                value: v.to_string(),
            });
        }
        Ok(Self { lambda })
    }

    /// Keys are class indices; every class must be present.
    pub fn from_class_map(flag: &FlagManifold, map: &BTreeMap<usize, Rational>) -> Result<Self> {
        let lambda = (0..flag.num_classes())
            .map(|c| map.get(&c).cloned().ok_or(Error::MissingClass(c)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(flag, lambda)
    }

    /// All `lambda_i = 1`: the normal metric `-B|_m`.
    pub fn killing(flag: &FlagManifold) -> Self {
        Self {
            lambda: vec![Rational::one(); flag.num_classes()],
        }
    }

    /// Numerators and denominators drawn uniformly from `1..=20`.
    pub fn random<R: Rng>(flag: &FlagManifold, rng: &mut R) -> Self {
        let lambda = (0..flag.num_classes())
            .map(|_| {
                let p: i64 = rng.random_range(1..=20);
                let q: i64 = rng.random_range(1..=20);
                int(p) / int(q)
            })
            .collect();
        Self { lambda }
    }

    pub fn lambda(&self) -> &[Rational] {
        &self.lambda
    }

    /// Same metric multiplied by a positive constant.
    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::NonPositiveLambda {
                class: 0,
                value: c.to_string(),
            });
        }
        Ok(Self {
            lambda: self.lambda.iter().map(|l| l * c).collect(),
        })
    }
}

/// Invariant almost complex structure, a sign per summand class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iacs {
    signs: Vec<i8>,
}

impl Iacs {
    pub fn new(flag: &FlagManifold, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != flag.num_classes() {
            return Err(Error::ClassCountMismatch {
                expected: flag.num_classes(),
                got: signs.len(),
            });
        }
        if let Some((class, &s)) = signs.iter().enumerate().find(|(_, s)| s.abs() != 1) {
            return Err(Error::BadSign {
                class,
                value: s as i64,
            });
        }
        Ok(Self { signs })
    }

    /// `J_C`: `epsilon = +1` on every positive root.
    pub fn canonical(flag: &FlagManifold) -> Self {
        Self {
            signs: vec![1; flag.num_classes()],
        }
    }

    /// The assignment whose bit `c` (set means `-1`) is taken from `mask`.
    pub fn from_mask(flag: &FlagManifold, mask: u64) -> Self {
        let signs = (0..flag.num_classes())
            .map(|c| if mask >> c & 1 == 1 { -1 } else { 1 })
            .collect();
        Self { signs }
    }

    /// Every one of the `2^classes` structures, in mask order.
    pub fn all(flag: &FlagManifold) -> impl Iterator<Item = Iacs> + '_ {
        let count = 1u64 << flag.num_classes();
        (0..count).map(move |m| Self::from_mask(flag, m))
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

/// The pair `(g, J)` with per-root tables of `lambda_alpha`, `epsilon_alpha`.
#[derive(Debug)]
pub struct AhStructure {
    flag: Arc<FlagManifold>,
    metric: InvariantMetric,
    iacs: Iacs,
    /// Zero on `R(Theta)`.
    lam: Vec<Rational>,
    /// Zero on `R(Theta)`; `eps[-a] = -eps[a]`.
    eps: Vec<i8>,
}

impl AhStructure {
    pub fn new(flag: Arc<FlagManifold>, metric: InvariantMetric, iacs: Iacs) -> Result<Self> {
        let classes = flag.num_classes();
        for got in [metric.lambda.len(), iacs.signs.len()] {
            if got != classes {
                return Err(Error::ClassCountMismatch {
                    expected: classes,
                    got,
                });
            }
        }
        let rs = flag.root_system().clone();
        let mut lam = vec![Rational::default(); rs.len()];
        let mut eps = vec![0i8; rs.len()];
        for &a in flag.m_positive() {
            let c = flag.class_of(a).expect("tangent root has a class");
            lam[a] = metric.lambda[c].clone();
            lam[rs.neg(a)] = metric.lambda[c].clone();
            eps[a] = iacs.signs[c];
            eps[rs.neg(a)] = -iacs.signs[c];
        }
        Ok(Self {
            flag,
            metric,
            iacs,
            lam,
            eps,
        })
    }

    pub fn flag(&self) -> &Arc<FlagManifold> {
        &self.flag
    }

    pub fn metric(&self) -> &InvariantMetric {
        &self.metric
    }

    pub fn iacs(&self) -> &Iacs {
        &self.iacs
    }

    pub fn lambda_of(&self, a: RootId) -> &Rational {
        &self.lam[a]
    }

    pub fn epsilon_of(&self, a: RootId) -> i8 {
        self.eps[a]
    }

    fn check(&self, v: &AlgebraVector) -> Result<()> {
        if v.has_cartan() {
            return Err(Error::OutsideTangent("Cartan component".into()));
        }
        match v.roots.keys().find(|&&a| self.eps[a] == 0) {
            Some(&a) => Err(Error::OutsideTangent(self.flag.label(a))),
            None => Ok(()),
        }
    }

    /// `g(X_alpha, X_-alpha) = -lambda_alpha`, so `g(A_alpha, A_alpha) = 2 lambda_alpha`.
    pub fn metric_eval(&self, v: &AlgebraVector, w: &AlgebraVector) -> Result<Cx> {
        self.check(v)?;
        self.check(w)?;
        Ok(self.g(v, w))
    }

    /// Unchecked `g`; components outside `m^C` are ignored.
    pub fn g(&self, v: &AlgebraVector, w: &AlgebraVector) -> Cx {
        let rs = self.flag.root_system();
        let mut acc = Cx::zero();
        for (&a, c) in &v.roots {
            if self.eps[a] == 0 {
                continue;
            }
            if let Some(d) = w.roots.get(&rs.neg(a)) {
                acc -= &(c * d).scale_rational(&self.lam[a]);
            }
        }
        acc
    }

    pub fn apply_j(&self, v: &AlgebraVector) -> Result<AlgebraVector> {
        self.check(v)?;
        Ok(self.j(v))
    }

    /// Unchecked `J`: `X_alpha -> i epsilon_alpha X_alpha`, zero off `m^C`.
    pub fn j(&self, v: &AlgebraVector) -> AlgebraVector {
        let mut out = AlgebraVector::zero(v.rank());
        for (&a, c) in &v.roots {
            match self.eps[a] {
                1 => out.add_root(a, &c.times_i()),
                -1 => out.add_root(a, &-c.times_i()),
                _ => {}
            }
        }
        out
    }

    pub fn omega(&self, v: &AlgebraVector, w: &AlgebraVector) -> Result<Cx> {
        self.check(v)?;
        self.check(w)?;
        Ok(self.g(v, &self.j(w)))
    }

    /// `1/sqrt(2 lambda_alpha)`.
    pub fn frame_scale(&self, a: RootId) -> ExactScalar {
        let two_lam = &self.lam[a] * int(2);
        ExactScalar::sqrt_rational(&two_lam.recip()).expect("lambda is positive on R_Theta")
    }

    pub fn frame_pair(&self, a: RootId) -> JFramePair {
        let s = Cx::real(self.frame_scale(a));
        let v = self.flag.a_vector(a).scale(&s);
        let jv = self.j(&v);
        JFramePair { root: a, v, jv }
    }

    /// `V_alpha = A_alpha / sqrt(2 lambda_alpha)` and `J V_alpha` for
    /// `alpha` in `R_Theta^+`; a g-orthonormal basis of `m`.
    pub fn j_frame(&self) -> Vec<JFramePair> {
        self.flag
            .m_positive()
            .iter()
            .map(|&a| self.frame_pair(a))
            .collect()
    }

    pub fn describe(&self) -> StructureSummary {
        StructureSummary {
            lambda: self.metric.lambda.iter().map(|l| l.to_string()).collect(),
            epsilon: self.iacs.signs.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct JFramePair {
    pub root: RootId,
    pub v: AlgebraVector,
    pub jv: AlgebraVector,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureSummary {
    pub lambda: Vec<String>,
    pub epsilon: Vec<i8>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{self, Family};
    use crate::scalar::rat;

    fn a2_max(lambda: [i64; 3], eps: [i8; 3]) -> AhStructure {
        let flag = Arc::new(FlagManifold::new(rootsys::build(Family::A, 2).unwrap(), &[]).unwrap());
        let metric = InvariantMetric::new(&flag, lambda.iter().map(|&l| int(l)).collect()).unwrap();
        let iacs = Iacs::new(&flag, eps.to_vec()).unwrap();
        AhStructure::new(flag, metric, iacs).unwrap()
    }

    #[test]
    fn metric_validation() {
        let flag = FlagManifold::new(rootsys::build(Family::A, 2).unwrap(), &[]).unwrap();
        let mut map = BTreeMap::new();
        map.insert(0, int(1));
        map.insert(1, int(1));
        assert_eq!(
            InvariantMetric::from_class_map(&flag, &map).unwrap_err(),
            Error::MissingClass(2)
        );
        map.insert(2, int(2));
        assert!(InvariantMetric::from_class_map(&flag, &map).is_ok());
        assert!(matches!(
            InvariantMetric::new(&flag, vec![int(1), int(0), int(1)]),
            Err(Error::NonPositiveLambda { class: 1, .. })
        ));
        assert!(matches!(
            Iacs::new(&flag, vec![1, 0, 1]),
            Err(Error::BadSign { class: 1, value: 0 })
        ));
    }

    #[test]
    fn metric_on_root_vectors() {
        let s = a2_max([1, 1, 2], [1, 1, 1]);
        let flag = s.flag().clone();
        let wb = flag.weyl_basis();
        for &a in flag.m_positive() {
            let lam = Cx::from_rational(s.lambda_of(a).clone());
            let na = flag.root_system().neg(a);
            assert_eq!(s.metric_eval(&wb.x(a), &wb.x(na)).unwrap(), -&lam);
            let av = flag.a_vector(a);
            let is = flag.s_vector(a).scale(&Cx::i());
            assert_eq!(s.g(&av, &av), lam.scale_rational(&int(2)));
            assert_eq!(s.g(&is, &is), lam.scale_rational(&int(2)));
            assert!(s.g(&av, &is).is_zero());
            for &b in flag.m_positive() {
                if b != a {
                    assert!(s.g(&wb.x(a), &wb.x(b)).is_zero());
                }
            }
        }
    }

    #[test]
    fn j_squares_to_minus_one_and_is_compatible() {
        let s = a2_max([1, 3, 2], [1, -1, 1]);
        let flag = s.flag().clone();
        let basis = flag.real_basis();
        for x in &basis {
            assert_eq!(s.j(&s.j(&x.vector)), -&x.vector);
            for y in &basis {
                assert_eq!(s.g(&s.j(&x.vector), &s.j(&y.vector)), s.g(&x.vector, &y.vector));
                assert_eq!(
                    s.omega(&x.vector, &y.vector).unwrap(),
                    -s.omega(&y.vector, &x.vector).unwrap()
                );
            }
        }
        let a = flag.m_positive()[1];
        let ja = s.j(&flag.a_vector(a));
        let want = flag.s_vector(a).scale(&Cx::i()).scale_real(&ExactScalar::from_int(-1));
        assert_eq!(ja, want);
    }

    #[test]
    fn omega_on_root_pair() {
        let s = a2_max([1, 1, 2], [1, 1, -1]);
        let flag = s.flag().clone();
        let wb = flag.weyl_basis();
        for &a in flag.m_positive() {
            let eps = s.epsilon_of(a) as i64;
            let lam = s.lambda_of(a).clone();
            let got = s.omega(&wb.x(a), &wb.x(flag.root_system().neg(a))).unwrap();
            assert_eq!(got, Cx::imag(ExactScalar::from_rational(lam * int(eps))));
        }
    }

    #[test]
    fn frame_is_orthonormal() {
        let s = a2_max([1, 3, 7], [1, -1, 1]);
        let frame = s.j_frame();
        let vecs: Vec<&AlgebraVector> = frame.iter().flat_map(|p| [&p.v, &p.jv]).collect();
        assert_eq!(vecs.len(), 6);
        for (i, v) in vecs.iter().enumerate() {
            for (k, w) in vecs.iter().enumerate() {
                let want = if i == k { Cx::one() } else { Cx::zero() };
                assert_eq!(s.g(v, w), want);
            }
        }
        for p in &frame {
            assert_eq!(s.omega(&p.v, &p.jv).unwrap(), Cx::from_int(-1));
        }
    }

    #[test]
    fn outside_tangent_rejected() {
        let flag = Arc::new(FlagManifold::new(rootsys::build(Family::A, 2).unwrap(), &[0]).unwrap());
        let s = AhStructure::new(flag.clone(), InvariantMetric::killing(&flag), Iacs::canonical(&flag)).unwrap();
        let wb = flag.weyl_basis();
        let a12 = flag.root_system().find(&[1, 0]).unwrap();
        assert_eq!(
            s.apply_j(&wb.x(a12)).unwrap_err(),
            Error::OutsideTangent("α_{1,2}".into())
        );
        assert!(matches!(s.apply_j(&wb.h_alpha(a12)), Err(Error::OutsideTangent(_))));
    }

    #[test]
    fn enumeration_and_equivariance() {
        let wb = rootsys::build(Family::A, 3).unwrap();
        let flag = Arc::new(FlagManifold::new(wb.clone(), &[1]).unwrap());
        let all: Vec<Iacs> = Iacs::all(&flag).collect();
        assert_eq!(all.len(), 1 << flag.num_classes());
        let a2 = Arc::new(FlagManifold::new(rootsys::build(Family::A, 2).unwrap(), &[]).unwrap());
        assert_eq!(Iacs::all(&a2).count(), 8);

        for iacs in all {
            let s = AhStructure::new(flag.clone(), InvariantMetric::killing(&flag), iacs).unwrap();
            for y in flag.isotropy_generators() {
                for x in flag.real_basis() {
                    let lhs = s.j(&flag.project_m(&wb.bracket(&y, &x.vector)));
                    let rhs = flag.project_m(&wb.bracket(&y, &s.j(&x.vector)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn random_lambda_in_range() {
        use rand::SeedableRng;
        let flag = FlagManifold::new(rootsys::build(Family::B, 3).unwrap(), &[]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let m = InvariantMetric::random(&flag, &mut rng);
        for l in m.lambda() {
            assert!(l.is_positive());
            assert!(l <= &int(20) && l >= &rat(1, 20));
        }
    }
}
