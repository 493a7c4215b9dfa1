use serde::{Deserialize, Serialize};

use super::{Courant0Error, QuadraticLieAlgebra};
use crate::linrel::{LinearRelation, Subspace};
use crate::report::{Check, Report};

/// A quadratic Lie algebra with a chosen Dirac structure (Lagrangian
/// subalgebra).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManinPairPoint {
    ambient: QuadraticLieAlgebra,
    dirac: Subspace,
}

impl ManinPairPoint {
    pub fn new(ambient: QuadraticLieAlgebra, dirac: Subspace) -> Result<Self, Courant0Error> {
        let report = super::dirac_check_point(&ambient, &dirac)?;
        if !report.all_passed() {
            let reason = report
                .failures()
                .map(|c| c.id.clone())
                .collect::<Vec<_>>()
                .join(", ");
            return Err(Courant0Error::DimensionMismatch(format!(
                "chosen subspace is not Dirac ({reason})"
            )));
        }
        Ok(ManinPairPoint { ambient, dirac })
    }

    pub fn ambient(&self) -> &QuadraticLieAlgebra {
        &self.ambient
    }

    pub fn dirac(&self) -> &Subspace {
        &self.dirac
    }
}

/// Checks that a relation is a morphism of Manin pairs `src ⇸ tgt`:
///
/// - `lagrangian`: the graph is Lagrangian in `tgt × src̄` (metric
///   `diag(Q2, -Q1)`),
/// - `subalgebra`: the graph is closed under the product bracket,
/// - `m1`: `dirac_src ∩ ker(r) = 0`,
/// - `m2`: `r ∘ dirac_src ⊆ dirac_tgt`.
pub fn manin_morphism_check(
    r: &LinearRelation,
    src: &ManinPairPoint,
    tgt: &ManinPairPoint,
) -> Result<Report, Courant0Error> {
    if r.source_dim() != src.ambient.dim() || r.target_dim() != tgt.ambient.dim() {
        return Err(Courant0Error::DimensionMismatch(format!(
            "relation {} ⇸ {} between algebras of dims {} and {}",
            r.source_dim(),
            r.target_dim(),
            src.ambient.dim(),
            tgt.ambient.dim()
        )));
    }
    let mut report = Report::new();

    let product = tgt.ambient.direct_sum(&src.ambient.negated());
    let class = product.metric().classify(r.graph())?;
    report.push(Check::of("lagrangian", class.lagrangian, || {
        format!(
            "graph dim {} in dim-{} product; isotropic = {}, coisotropic = {}",
            r.graph().dim(),
            product.dim(),
            class.isotropic,
            class.coisotropic
        )
    }));

    report.push(match product.lie().subalgebra_witness(r.graph()) {
        None => Check::pass("subalgebra"),
        Some((i, j)) => Check::fail("subalgebra", format!("graph basis pair ({i}, {j})")),
    });

    let kernel = r.kernel();
    let meet = src.dirac.intersection(&kernel)?;
    report.push(Check::of("m1_kernel_transversality", meet.is_zero(), || {
        format!("dirac ∩ ker(r) has dim {}", meet.dim())
    }));

    let image = r.apply(&src.dirac)?;
    report.push(Check::of(
        "m2_image_containment",
        tgt.dirac.contains_subspace(&image),
        || {
            format!(
                "r ∘ dirac has dim {} but is not contained in the target Dirac",
                image.dim()
            )
        },
    ));

    Ok(report)
}
