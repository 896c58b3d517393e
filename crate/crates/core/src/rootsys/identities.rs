//! Exhaustive checks of the Weyl-basis relations.

use serde::Serialize;

use super::vector::AlgebraVector;
use super::weyl::WeylBasis;
use crate::scalar::Cx;

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// First failing case, if any.
    pub witness: Option<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub algebra: String,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failures: 0,
            witness: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(what());
            }
        }
    }

    fn done(self) -> IdentityCheck {
        IdentityCheck {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            witness: self.witness,
        }
    }
}

/// Runs every relation of the Weyl basis. Jacobi and associativity of the
/// Killing form run on all basis triples, which is cubic in the dimension.
pub fn check_weyl_basis(wb: &WeylBasis) -> IdentityReport {
    let rs = wb.root_system();
    let total = rs.len();
    let label = |a| rs.label(a);

    let mut norm = Tally::new("B(X_a, X_b) = delta_{a+b,0}");
    let mut nonzero = Tally::new("n_{a,b} != 0 iff a+b in R");
    let mut anti = Tally::new("n_{a,b} = -n_{-a,-b} = -n_{b,a}");
    let mut cyclic = Tally::new("n_{a,b} = n_{b,c} = n_{c,a} when a+b+c = 0");
    let mut igual = Tally::new("[X_a, X_-a] = H_a and a(H) = B(H, H_a)");
    for a in 0..total {
        for b in 0..total {
            let k = wb.killing(&wb.x(a), &wb.x(b));
            let want = if b == rs.neg(a) { Cx::one() } else { Cx::zero() };
            norm.check(k == want, || format!("B({}, {}) = {k}", label(a), label(b)));

            let n = wb.n(a, b);
            nonzero.check(
                n.is_some_and(|n| !n.is_zero()) == rs.sum(a, b).is_some(),
                || format!("({}, {})", label(a), label(b)),
            );
            if let Some(n) = n {
                let ok = wb.n(rs.neg(a), rs.neg(b)) == Some(&-n) && wb.n(b, a) == Some(&-n);
                anti.check(ok, || format!("({}, {})", label(a), label(b)));
                let c = rs.neg(rs.sum(a, b).unwrap());
                let ok = wb.n(b, c) == Some(n) && wb.n(c, a) == Some(n);
                cyclic.check(ok, || format!("({}, {}, {})", label(a), label(b), label(c)));
            }
        }
        let h = wb.bracket(&wb.x(a), &wb.x(rs.neg(a)));
        let mut ok = h == wb.h_alpha(a);
        for j in 0..wb.rank() {
            let mut c = vec![Cx::zero(); wb.rank()];
            c[j] = Cx::one();
            let hj = AlgebraVector::cartan_vector(c);
            ok &= wb.killing(&hj, &h) == wb.eval_root(a, &hj.cartan);
        }
        igual.check(ok, || label(a));
    }

    let basis = wb.basis();
    let mut jacobi = Tally::new("Jacobi identity on basis triples");
    let mut assoc = Tally::new("B([u,v], w) = B(u, [v,w]) on basis triples");
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let uv = wb.bracket(u, v);
            for (k, w) in basis.iter().enumerate() {
                let vw = wb.bracket(v, w);
                let wu = wb.bracket(w, u);
                let mut sum = wb.bracket(&uv, w);
                sum.axpy(&Cx::one(), &wb.bracket(&vw, u));
                sum.axpy(&Cx::one(), &wb.bracket(&wu, v));
                jacobi.check(sum.is_zero(), || format!("basis ({i}, {j}, {k})"));
                assoc.check(wb.killing(&uv, w) == wb.killing(u, &vw), || {
                    format!("basis ({i}, {j}, {k})")
                });
            }
        }
    }

    let mut oracle = Tally::new("structure constants match the matrix commutators");
    oracle.check(wb.matches_matrix_oracle(), || "mismatch".into());

    IdentityReport {
        algebra: format!("{}{}", rs.family(), rs.rank()),
        checks: vec![
            norm.done(),
            nonzero.done(),
            anti.done(),
            cyclic.done(),
            igual.done(),
            jacobi.done(),
            assoc.done(),
            oracle.done(),
        ],
    }
}
