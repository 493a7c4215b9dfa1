use serde::{Deserialize, Serialize};

use super::{Courant0Error, LieAlgebra};
use crate::linrel::{Rat, RatMatrix, Subspace};
use crate::report::{Check, Report};

/// An element `β ∈ g ⊗ g`, stored as the matrix of `β♯: g* -> g` in the
/// dual/primal bases. Symmetry and invariance are queried, never assumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaElement {
    host: LieAlgebra,
    beta: RatMatrix,
}

impl BetaElement {
    pub fn new(host: LieAlgebra, beta: RatMatrix) -> Result<Self, Courant0Error> {
        if beta.rows() != host.dim() || beta.cols() != host.dim() {
            return Err(Courant0Error::DimensionMismatch(format!(
                "beta is {}x{} but algebra has dim {}",
                beta.rows(),
                beta.cols(),
                host.dim()
            )));
        }
        Ok(BetaElement { host, beta })
    }

    pub fn host(&self) -> &LieAlgebra {
        &self.host
    }

    pub fn beta(&self) -> &RatMatrix {
        &self.beta
    }

    /// `β♯(µ)` for a covector `µ` in dual coordinates.
    pub fn sharp(&self, mu: &[Rat]) -> Vec<Rat> {
        self.beta.mul_vec(mu)
    }
}

/// Reports whether `β` is symmetric and `g`-invariant. Invariance is the
/// identity `β♯ ∘ ad*_ξ = ad_ξ ∘ β♯` on all basis `ξ`, where
/// `ad*_ξ = −(ad_ξ)^T` is the coadjoint action in dual coordinates.
pub fn check_beta(b: &BetaElement) -> Report {
    let mut report = Report::new();
    report.push(Check::of("symmetric", b.beta.is_symmetric(), || {
        "beta != beta^T".to_string()
    }));
    let n = b.host.dim();
    let mut witness = None;
    'outer: for i in 0..n {
        let mut xi = vec![Rat::zero(); n];
        xi[i] = Rat::one();
        let ad = b.host.ad(&xi);
        let coad = ad.transpose().neg();
        // β ∘ ad*_ξ vs ad_ξ ∘ β as matrices acting on dual coordinates
        let lhs = &b.beta * &coad;
        let rhs = &ad * &b.beta;
        if lhs != rhs {
            witness = Some(i);
            break 'outer;
        }
    }
    report.push(match witness {
        None => Check::pass("invariant"),
        Some(i) => Check::fail("invariant", format!("fails for ξ = e{i}")),
    });
    report
}

/// The over-a-point criterion for LA-Dirac structures in `g ⋉ g*`: reports
/// whether `h` is a subalgebra and whether it is β-coisotropic, i.e.
/// `β♯(ann(h)) ⊆ h`.
pub fn la_dirac_point(b: &BetaElement, h: &Subspace) -> Result<Report, Courant0Error> {
    if h.ambient_dim() != b.host.dim() {
        return Err(Courant0Error::DimensionMismatch(format!(
            "subspace ambient {} vs algebra dim {}",
            h.ambient_dim(),
            b.host.dim()
        )));
    }
    let mut report = Report::new();
    report.push(match b.host.subalgebra_witness(h) {
        None => Check::pass("subalgebra"),
        Some((i, j)) => Check::fail("subalgebra", format!("basis pair ({i}, {j}) of h")),
    });
    let ann = h.annihilator();
    let image = ann.map(&b.beta);
    report.push(Check::of(
        "beta_coisotropic",
        h.contains_subspace(&image),
        || format!("β♯(ann h) has dim {} and leaves h", image.dim()),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_beta_passes_and_everything_coisotropic() {
        let g = LieAlgebra::so3();
        let b = BetaElement::new(g, RatMatrix::zeros(3, 3)).unwrap();
        assert!(check_beta(&b).all_passed());
        let h = Subspace::coordinate(3, &[0]);
        let r = la_dirac_point(&b, &h).unwrap();
        assert!(r.passed("beta_coisotropic"));
    }

    #[test]
    fn killing_proportional_beta_invariant_for_so3() {
        let g = LieAlgebra::so3();
        let b = BetaElement::new(g, RatMatrix::from_ints(&[&[-2, 0, 0], &[0, -2, 0], &[0, 0, -2]]))
            .unwrap();
        let r = check_beta(&b);
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn aff1_beta_invariance_fails_with_witness() {
        let g = LieAlgebra::aff1();
        let b = BetaElement::new(g, RatMatrix::from_ints(&[&[1, 0], &[0, 0]])).unwrap();
        let r = check_beta(&b);
        let inv = r.get("invariant").unwrap();
        assert_eq!(inv.status, crate::report::CheckStatus::Fail);
        assert_eq!(inv.witness.as_deref(), Some("fails for ξ = e1"));
    }

    #[test]
    fn beta_coisotropic_criterion() {
        // g = so(3), β = -2·id invertible: ann(h)'s image under β♯ is h⊥
        // w.r.t. the Killing pairing; a line h = span(e1) has
        // β♯(ann h) = span(e2, e3) ⊄ h, so it is not β-coisotropic.
        let g = LieAlgebra::so3();
        let b = BetaElement::new(
            g,
            RatMatrix::from_ints(&[&[-2, 0, 0], &[0, -2, 0], &[0, 0, -2]]),
        )
        .unwrap();
        let h = Subspace::coordinate(3, &[0]);
        let r = la_dirac_point(&b, &h).unwrap();
        assert!(!r.passed("beta_coisotropic"));
        // the whole algebra is always β-coisotropic
        let full = Subspace::full(3);
        assert!(la_dirac_point(&b, &full).unwrap().all_passed());
    }
}
