use serde::{Deserialize, Serialize};

use super::{Courant0Error, LieAlgebra};
use crate::linrel::{QuadraticSpace, Rat, Subspace};
use crate::report::{Check, Report};

/// A Lie algebra with a nondegenerate invariant symmetric form — a Courant
/// algebroid over a point.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticLieAlgebra {
    lie: LieAlgebra,
    metric: QuadraticSpace,
}

impl QuadraticLieAlgebra {
    /// Verifies dimension agreement and metric invariance
    /// `⟨[x,y],z⟩ + ⟨y,[x,z]⟩ = 0` on all basis triples.
    pub fn new(lie: LieAlgebra, metric: QuadraticSpace) -> Result<Self, Courant0Error> {
        if lie.dim() != metric.dim() {
            return Err(Courant0Error::DimensionMismatch(format!(
                "lie dim {} vs metric dim {}",
                lie.dim(),
                metric.dim()
            )));
        }
        let q = QuadraticLieAlgebra { lie, metric };
        if let Some((i, j, k)) = q.invariance_witness() {
            return Err(Courant0Error::NotInvariant(i, j, k));
        }
        Ok(q)
    }

    pub fn new_unchecked(lie: LieAlgebra, metric: QuadraticSpace) -> Self {
        QuadraticLieAlgebra { lie, metric }
    }

    /// Abelian algebra with the hyperbolic form on `Q^{2n}`.
    pub fn hyperbolic_abelian(n: usize) -> Self {
        QuadraticLieAlgebra {
            lie: LieAlgebra::abelian(2 * n),
            metric: QuadraticSpace::hyperbolic(n),
        }
    }

    /// so(3) with the Killing form `-2·id`.
    pub fn so3_killing() -> Self {
        let mut form = crate::linrel::RatMatrix::zeros(3, 3);
        for i in 0..3 {
            form[(i, i)] = Rat::from_int(-2);
        }
        QuadraticLieAlgebra {
            lie: LieAlgebra::so3(),
            metric: QuadraticSpace::new(form).expect("nondegenerate"),
        }
    }

    /// sl(2) with the Killing form: `B(h,h) = 8`, `B(e,f) = 4` in the basis
    /// (e, h, f).
    pub fn sl2_killing() -> Self {
        let mut form = crate::linrel::RatMatrix::zeros(3, 3);
        form[(1, 1)] = Rat::from_int(8);
        form[(0, 2)] = Rat::from_int(4);
        form[(2, 0)] = Rat::from_int(4);
        QuadraticLieAlgebra {
            lie: LieAlgebra::sl2(),
            metric: QuadraticSpace::new(form).expect("nondegenerate"),
        }
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn metric(&self) -> &QuadraticSpace {
        &self.metric
    }

    pub fn pair(&self, x: &[Rat], y: &[Rat]) -> Rat {
        self.metric.pair(x, y)
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        self.lie.bracket(x, y)
    }

    /// First basis triple where `⟨[x,y],z⟩ + ⟨y,[x,z]⟩ ≠ 0`, if any.
    pub fn invariance_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        let mut basis = Vec::with_capacity(n);
        for i in 0..n {
            let mut v = vec![Rat::zero(); n];
            v[i] = Rat::one();
            basis.push(v);
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = self.pair(&self.bracket(&basis[i], &basis[j]), &basis[k]);
                    let b = self.pair(&basis[j], &self.bracket(&basis[i], &basis[k]));
                    if !(&a + &b).is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// The same algebra with the metric negated.
    pub fn negated(&self) -> QuadraticLieAlgebra {
        QuadraticLieAlgebra {
            lie: self.lie.clone(),
            metric: self.metric.negated(),
        }
    }

    /// Product `d1 × d2` with metric `diag(Q1, Q2)` and componentwise bracket.
    pub fn direct_sum(&self, other: &QuadraticLieAlgebra) -> QuadraticLieAlgebra {
        let n = self.dim();
        let m = other.dim();
        let total = n + m;
        let mut c = vec![vec![vec![Rat::zero(); total]; total]; total];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[i][j][k] = self.lie.structure_constant(i, j, k).clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    c[n + i][n + j][n + k] = other.lie.structure_constant(i, j, k).clone();
                }
            }
        }
        QuadraticLieAlgebra {
            lie: LieAlgebra::new_unchecked(c),
            metric: self.metric.direct_sum(&other.metric),
        }
    }
}

impl std::fmt::Debug for QuadraticLieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuadraticLieAlgebra(dim {})", self.dim())
    }
}

/// Verifies the over-a-point Courant axioms: c1 is the Jacobi identity, c2
/// is metric invariance, and c3 is skew-symmetry of the bracket (the anchor
/// vanishes over a point). Failures are report entries with a witness basis
/// triple, not errors.
pub fn check_quadratic_lie(q: &QuadraticLieAlgebra) -> Report {
    let mut report = Report::new();
    report.push(match q.lie().antisymmetry_witness() {
        None => Check::pass("c3_skew_symmetry"),
        Some((i, j)) => Check::fail("c3_skew_symmetry", format!("basis pair (e{i}, e{j})")),
    });
    report.push(match q.lie().jacobi_witness() {
        None => Check::pass("c1_jacobi"),
        Some((i, j, k)) => Check::fail("c1_jacobi", format!("basis triple (e{i}, e{j}, e{k})")),
    });
    report.push(match q.invariance_witness() {
        None => Check::pass("c2_invariance"),
        Some((i, j, k)) => Check::fail("c2_invariance", format!("basis triple (e{i}, e{j}, e{k})")),
    });
    report
}

/// Flags for a candidate Dirac structure `w` in a Courant algebroid over a
/// point: Lagrangian, involutive (a subalgebra), and their conjunction.
pub fn dirac_check_point(
    q: &QuadraticLieAlgebra,
    w: &Subspace,
) -> Result<Report, Courant0Error> {
    if w.ambient_dim() != q.dim() {
        return Err(Courant0Error::DimensionMismatch(format!(
            "subspace ambient {} vs algebra dim {}",
            w.ambient_dim(),
            q.dim()
        )));
    }
    let class = q.metric().classify(w)?;
    let mut report = Report::new();
    report.push(Check::of("lagrangian", class.lagrangian, || {
        format!(
            "dim w = {}, dim w⊥ = {}, isotropic = {}, coisotropic = {}",
            w.dim(),
            class.orthogonal.dim(),
            class.isotropic,
            class.coisotropic
        )
    }));
    report.push(match q.lie().subalgebra_witness(w) {
        None => Check::pass("involutive"),
        Some((i, j)) => Check::fail("involutive", format!("basis pair ({i}, {j}) of w")),
    });
    let dirac = report.all_passed();
    report.push(Check::of("dirac", dirac, || {
        "not both Lagrangian and involutive".to_string()
    }));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so3_killing_passes_all() {
        let r = check_quadratic_lie(&QuadraticLieAlgebra::so3_killing());
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn abelian_any_form_passes() {
        let form = crate::linrel::RatMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        let q = QuadraticLieAlgebra::new_unchecked(
            LieAlgebra::abelian(2),
            QuadraticSpace::new(form).unwrap(),
        );
        assert!(check_quadratic_lie(&q).all_passed());
    }

    #[test]
    fn perturbed_so3_jacobi_witness() {
        let bad = QuadraticLieAlgebra::new_unchecked(
            LieAlgebra::so3().perturbed(0, 1, 0, Rat::from_int(2)),
            QuadraticLieAlgebra::so3_killing().metric().clone(),
        );
        let r = check_quadratic_lie(&bad);
        let c1 = r.get("c1_jacobi").unwrap();
        assert_eq!(c1.status, crate::report::CheckStatus::Fail);
        assert_eq!(c1.witness.as_deref(), Some("basis triple (e0, e1, e2)"));
    }

    #[test]
    fn diagonal_is_dirac_in_double() {
        let d = QuadraticLieAlgebra::so3_killing();
        let double = d.direct_sum(&d.negated());
        let n = d.dim();
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut v = vec![Rat::zero(); 2 * n];
                v[i] = Rat::one();
                v[n + i] = Rat::one();
                v
            })
            .collect();
        let diag = Subspace::from_vectors(2 * n, &rows);
        let r = dirac_check_point(&double, &diag).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn sl2_nilpotent_line_not_dirac() {
        let q = QuadraticLieAlgebra::sl2_killing();
        let e = Subspace::coordinate(3, &[0]);
        let r = dirac_check_point(&q, &e).unwrap();
        assert!(!r.passed("lagrangian"));
        assert!(r.passed("involutive"));
        assert!(!r.passed("dirac"));
    }

    #[test]
    fn hyperbolic_abelian_line_is_dirac() {
        let q = QuadraticLieAlgebra::hyperbolic_abelian(1);
        let e1 = Subspace::coordinate(2, &[0]);
        let r = dirac_check_point(&q, &e1).unwrap();
        assert!(r.all_passed());
    }
}
