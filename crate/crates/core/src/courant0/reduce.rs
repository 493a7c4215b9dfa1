use super::{Courant0Error, LieAlgebra, QuadraticLieAlgebra};
use crate::linrel::{QuadraticSpace, Rat, RatMatrix, Subspace};

/// Coisotropic reduction over a point: for an involutive coisotropic
/// subalgebra `c` (meaning `c⊥ ⊆ c`, `[c,c] ⊆ c` and `[c⊥,c] ⊆ c⊥`), returns
/// the quotient `c/c⊥` with the induced bracket and metric.
///
/// The quotient basis is chosen deterministically: the canonical (RREF)
/// basis rows of `c` that extend the RREF basis of `c⊥`, taken in order.
pub fn reduce_coisotropic_point(
    q: &QuadraticLieAlgebra,
    c: &Subspace,
) -> Result<QuadraticLieAlgebra, Courant0Error> {
    if c.ambient_dim() != q.dim() {
        return Err(Courant0Error::DimensionMismatch(format!(
            "subspace ambient {} vs algebra dim {}",
            c.ambient_dim(),
            q.dim()
        )));
    }
    let class = q.metric().classify(c)?;
    if !class.coisotropic {
        return Err(Courant0Error::NotCoisotropic);
    }
    let perp = class.orthogonal;
    if let Some((i, j)) = q.lie().subalgebra_witness(c) {
        return Err(Courant0Error::NotSubalgebra(i, j));
    }
    // The ideal condition needed for the bracket to descend: [c⊥, c] ⊆ c⊥.
    for (i, x) in perp.basis_vectors().iter().enumerate() {
        for (j, y) in c.basis_vectors().iter().enumerate() {
            if !perp.contains(&q.bracket(x, y)) {
                return Err(Courant0Error::BracketDoesNotDescend(i, j));
            }
        }
    }

    // Representatives: canonical basis rows of c that are independent of c⊥.
    let mut reps: Vec<Vec<Rat>> = Vec::new();
    let mut span = perp.clone();
    for row in c.basis_vectors() {
        if !span.contains(&row) {
            span = span
                .sum(&Subspace::from_vectors(c.ambient_dim(), &[row.clone()]))
                .expect("same ambient");
            reps.push(row);
        }
    }
    let k = reps.len();
    debug_assert_eq!(k, c.dim() - perp.dim());

    if k == 0 {
        return Ok(QuadraticLieAlgebra::new_unchecked(
            LieAlgebra::abelian(0),
            QuadraticSpace::new(RatMatrix::zeros(0, 0)).expect("empty form"),
        ));
    }

    // Solve for quotient coordinates: express a vector of c as
    // Σ a_t rep_t  mod c⊥ by solving against [reps | perp-basis].
    let mut solve_cols: Vec<Vec<Rat>> = reps.clone();
    solve_cols.extend(perp.basis_vectors());
    let solve_matrix = RatMatrix::from_rows(solve_cols).transpose();
    let quotient_coords = |v: &[Rat]| -> Result<Vec<Rat>, Courant0Error> {
        let x = solve_matrix
            .solve(v)
            .ok_or(Courant0Error::NotCoisotropic)?;
        Ok(x[..k].to_vec())
    };

    let mut structure = vec![vec![vec![Rat::zero(); k]; k]; k];
    for i in 0..k {
        for j in 0..k {
            let br = q.bracket(&reps[i], &reps[j]);
            structure[i][j] = quotient_coords(&br)?;
        }
    }
    let mut form = RatMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            form[(i, j)] = q.pair(&reps[i], &reps[j]);
        }
    }
    let metric = QuadraticSpace::new(form).map_err(|_| Courant0Error::DegenerateForm)?;
    Ok(QuadraticLieAlgebra::new_unchecked(
        LieAlgebra::new_unchecked(structure),
        metric,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::courant0::check_quadratic_lie;

    #[test]
    fn lagrangian_reduces_to_zero() {
        let q = QuadraticLieAlgebra::hyperbolic_abelian(1);
        let c = Subspace::coordinate(2, &[0]);
        let reduced = reduce_coisotropic_point(&q, &c).unwrap();
        assert_eq!(reduced.dim(), 0);
    }

    #[test]
    fn whole_algebra_reduces_to_itself() {
        let q = QuadraticLieAlgebra::so3_killing();
        let c = Subspace::full(3);
        let reduced = reduce_coisotropic_point(&q, &c).unwrap();
        assert_eq!(reduced.dim(), 3);
        assert_eq!(reduced.lie().structure(), q.lie().structure());
        assert_eq!(reduced.metric().form(), q.metric().form());
    }

    #[test]
    fn sl2_span_e_h_reduces_to_line_with_form_8() {
        let q = QuadraticLieAlgebra::sl2_killing();
        // basis order (e, h, f); c = span(e, h)
        let c = Subspace::coordinate(3, &[0, 1]);
        let reduced = reduce_coisotropic_point(&q, &c).unwrap();
        assert_eq!(reduced.dim(), 1);
        assert_eq!(reduced.metric().form()[(0, 0)], Rat::from_int(8));
        assert!(reduced.lie().structure_constant(0, 0, 0).is_zero());
        assert!(check_quadratic_lie(&reduced).all_passed());
    }

    #[test]
    fn rejects_non_coisotropic() {
        let q = QuadraticLieAlgebra::so3_killing();
        // any line in so(3) with the definite form is not coisotropic
        let c = Subspace::coordinate(3, &[0]);
        assert_eq!(
            reduce_coisotropic_point(&q, &c),
            Err(Courant0Error::NotCoisotropic)
        );
    }

    #[test]
    fn rejects_non_subalgebra() {
        let q = QuadraticLieAlgebra::sl2_killing();
        // span(e, f) is coisotropic for the Killing form? e⊥ ∩ f⊥ ... take
        // span(e, f): orthogonal is span(e, f)⊥ = {v : B(v,e) = B(v,f) = 0}
        // = span(h)⊥? B(e,f)=4 so (span(e,f))⊥ = span(h)... h ∉ span(e,f),
        // so not coisotropic either; use span(h, e+f) instead: not a
        // subalgebra since [h, e+f] = 2e - 2f ∉ span(h, e+f).
        let c = Subspace::from_vectors(
            3,
            &[
                vec![Rat::zero(), Rat::one(), Rat::zero()],
                vec![Rat::one(), Rat::zero(), Rat::one()],
            ],
        );
        let out = reduce_coisotropic_point(&q, &c);
        assert!(matches!(
            out,
            Err(Courant0Error::NotSubalgebra(_, _)) | Err(Courant0Error::NotCoisotropic)
        ));
    }
}
