use super::{Courant0Error, LieAlgebra, QuadraticLieAlgebra};
use crate::linrel::{QuadraticSpace, Rat, RatMatrix, Subspace};

/// The double `g ⋉ g*` on `g ⊕ g*` with the natural pairing
/// `⟨(ξ,µ),(η,ν)⟩ = µ(η) + ν(ξ)`.
///
/// For `t = 0` the bracket is the semidirect product by the coadjoint
/// action, `[(ξ,µ),(η,ν)] = ([ξ,η], ad*_ξ ν − ad*_η µ)`. For `t ≠ 0` the
/// caller must designate an invariant metric `B` on `g`; the `g*`-component
/// then gains the term `t·B♭([ξ,η])`, giving the one-parameter family of
/// quadratic Lie algebras attached to `(g, B)`.
pub fn build_double(
    g: &LieAlgebra,
    t: &Rat,
    metric: Option<&RatMatrix>,
) -> Result<QuadraticLieAlgebra, Courant0Error> {
    if let Some((i, j, k)) = g.jacobi_witness() {
        return Err(Courant0Error::JacobiFailure(i, j, k));
    }
    if let Some((i, j)) = g.antisymmetry_witness() {
        return Err(Courant0Error::NotAntisymmetric(i, j));
    }
    let n = g.dim();
    let b = if t.is_zero() {
        None
    } else {
        let b = metric.ok_or(Courant0Error::MetricRequired)?;
        let host = QuadraticLieAlgebra::new(
            g.clone(),
            QuadraticSpace::new(b.clone()).map_err(Courant0Error::Quadratic)?,
        )?;
        let _ = host; // invariance of B was just verified
        Some(b)
    };

    // Basis order: x_i = (e_i, 0) for i < n, then y^a = (0, e^a).
    let dim = 2 * n;
    let mut c = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
    for i in 0..n {
        for j in 0..n {
            // [x_i, x_j] = ([e_i,e_j], t·B♭[e_i,e_j])
            let br = g.bracket_basis(i, j);
            for k in 0..n {
                c[i][j][k] = br[k].clone();
            }
            if let Some(b) = b {
                // B♭(v)_a = Σ_k B_{a k} v_k
                for a in 0..n {
                    let mut acc = Rat::zero();
                    for k in 0..n {
                        acc += &b[(a, k)] * &br[k];
                    }
                    c[i][j][n + a] = t * &acc;
                }
            }
        }
        // [x_i, y^b] = (0, ad*_{e_i} e^b) with ad*_ξ ν = −ν ∘ ad_ξ:
        // (ad*_{e_i} e^b)(e_j) = −c_{i j}^b, so the y^j-component is −c_{i j}^b.
        for bidx in 0..n {
            for j in 0..n {
                let v = -g.structure_constant(i, j, bidx);
                c[i][n + bidx][n + j] = v.clone();
                c[n + bidx][i][n + j] = -v;
            }
        }
    }
    let lie = LieAlgebra::new_unchecked(c);
    let metric = QuadraticSpace::hyperbolic(n);
    Ok(QuadraticLieAlgebra::new_unchecked(lie, metric))
}

/// The VB-Dirac structure of `g ⋉ g*` attached to a subalgebra `h ⊆ g`:
/// `h ⋉ ann(h) ⊆ g ⊕ g*`.
pub fn vb_dirac_point(g: &LieAlgebra, h: &Subspace) -> Result<Subspace, Courant0Error> {
    if h.ambient_dim() != g.dim() {
        return Err(Courant0Error::DimensionMismatch(format!(
            "subspace ambient {} vs algebra dim {}",
            h.ambient_dim(),
            g.dim()
        )));
    }
    if let Some((i, j)) = g.subalgebra_witness(h) {
        return Err(Courant0Error::NotSubalgebra(i, j));
    }
    Ok(h.direct_sum(&h.annihilator()))
}

/// Tangent prolongation of a quadratic Lie algebra: `Td = d ⋉ d` with
/// `[(ξ,ξ'),(η,η')] = ([ξ,η], [ξ,η'] + [ξ',η])` and
/// `⟨(ξ,ξ'),(η,η')⟩ = ⟨ξ,η'⟩ + ⟨ξ',η⟩`. Basis order: tangent block first,
/// then the core block.
pub fn tangent_prolong_point(d: &QuadraticLieAlgebra) -> QuadraticLieAlgebra {
    let n = d.dim();
    let dim = 2 * n;
    let mut c = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
    for i in 0..n {
        for j in 0..n {
            let br = d.lie().bracket_basis(i, j);
            for k in 0..n {
                // [ξT, ηT] = [ξ,η]T
                c[i][j][k] = br[k].clone();
                // [ξT, ηC] = [ξ,η]C and [ξC, ηT] = [ξ,η]C
                c[i][n + j][n + k] = br[k].clone();
                c[n + i][j][n + k] = br[k].clone();
            }
        }
    }
    let mut form = RatMatrix::zeros(dim, dim);
    for i in 0..n {
        for j in 0..n {
            let g = d.metric().form()[(i, j)].clone();
            form[(i, n + j)] = g.clone();
            form[(n + i, j)] = g;
        }
    }
    QuadraticLieAlgebra::new_unchecked(
        LieAlgebra::new_unchecked(c),
        QuadraticSpace::new(form).expect("T-pairing nondegenerate"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::courant0::{check_quadratic_lie, dirac_check_point};

    #[test]
    fn abelian_double_is_hyperbolic() {
        let d = build_double(&LieAlgebra::abelian(2), &Rat::zero(), None).unwrap();
        assert_eq!(d.metric().form(), QuadraticSpace::hyperbolic(2).form());
        assert!(check_quadratic_lie(&d).all_passed());
    }

    #[test]
    fn so3_double_untwisted_and_twisted() {
        let g = LieAlgebra::so3();
        let d0 = build_double(&g, &Rat::zero(), None).unwrap();
        assert!(check_quadratic_lie(&d0).all_passed());

        let killing = QuadraticLieAlgebra::so3_killing().metric().form().clone();
        let d1 = build_double(&g, &Rat::one(), Some(&killing)).unwrap();
        assert!(check_quadratic_lie(&d1).all_passed());
        let d2 = build_double(&g, &Rat::new(-3, 2), Some(&killing)).unwrap();
        assert!(check_quadratic_lie(&d2).all_passed());
    }

    #[test]
    fn twisted_double_requires_metric() {
        assert_eq!(
            build_double(&LieAlgebra::so3(), &Rat::one(), None),
            Err(Courant0Error::MetricRequired)
        );
    }

    #[test]
    fn twisted_double_rejects_non_invariant_metric() {
        // The identity form is not so(3)-invariant? It is (-1/2 × Killing is
        // invariant, and scaling preserves invariance), so use a non-scalar
        // asymmetric-invariance breaker instead.
        let bad = RatMatrix::from_ints(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]);
        assert!(build_double(&LieAlgebra::so3(), &Rat::one(), Some(&bad)).is_err());
    }

    #[test]
    fn double_of_bad_algebra_fails() {
        let bad = LieAlgebra::so3().perturbed(0, 1, 0, Rat::from_int(2));
        assert!(matches!(
            build_double(&bad, &Rat::zero(), None),
            Err(Courant0Error::JacobiFailure(_, _, _))
        ));
    }

    #[test]
    fn vb_dirac_cases() {
        let g = LieAlgebra::aff1();
        let double = build_double(&g, &Rat::zero(), None).unwrap();

        // h = 0 -> g* (abelian Dirac)
        let l0 = vb_dirac_point(&g, &Subspace::zero(2)).unwrap();
        assert_eq!(l0, Subspace::coordinate(4, &[2, 3]));
        assert!(dirac_check_point(&double, &l0).unwrap().all_passed());

        // h = g -> g
        let lg = vb_dirac_point(&g, &Subspace::full(2)).unwrap();
        assert_eq!(lg, Subspace::coordinate(4, &[0, 1]));
        assert!(dirac_check_point(&double, &lg).unwrap().all_passed());

        // h = span(b): span(b) ⊕ span(a*) is Dirac
        let lb = vb_dirac_point(&g, &Subspace::coordinate(2, &[1])).unwrap();
        assert_eq!(lb, Subspace::coordinate(4, &[1, 2]));
        assert!(dirac_check_point(&double, &lb).unwrap().all_passed());

        // h not a subalgebra is rejected: span(a + b) in aff(1)? [a+b, x]
        // stays in span(b)... span(a+b) is closed iff [a+b,a+b]=0 ∈ span ✓,
        // so use so(3) with a line instead — lines are abelian hence
        // subalgebras; use sl2 span(e+f): [e+f, e+f] = 0, fine too. All
        // 1-dim subspaces are subalgebras, so test with a 2-dim non-closed
        // subspace of so(3).
        let so3 = LieAlgebra::so3();
        let bad = Subspace::coordinate(3, &[0, 1]);
        assert!(matches!(
            vb_dirac_point(&so3, &bad),
            Err(Courant0Error::NotSubalgebra(_, _))
        ));
    }

    #[test]
    fn tangent_prolong_point_cases() {
        let ab = QuadraticLieAlgebra::hyperbolic_abelian(1);
        let tab = tangent_prolong_point(&ab);
        assert_eq!(tab.dim(), 4);
        assert!(check_quadratic_lie(&tab).all_passed());

        let so3 = QuadraticLieAlgebra::so3_killing();
        let tso3 = tangent_prolong_point(&so3);
        assert_eq!(tso3.dim(), 6);
        assert!(check_quadratic_lie(&tso3).all_passed());
    }

    #[test]
    fn tangent_of_lagrangian_subalgebra_is_dirac() {
        // g Lagrangian subalgebra of d = g ⋉ g*: take g itself inside the
        // double of so(3); then Tg = g ⋉ g ⊆ Td is Dirac.
        let g = LieAlgebra::so3();
        let d = build_double(&g, &Rat::zero(), None).unwrap();
        let td = tangent_prolong_point(&d);
        // g = first block of d; Tg = blocks {0..3} (tangent copy) and
        // {6..9} (core copy) in the 12-dim Td.
        let tg = Subspace::coordinate(12, &[0, 1, 2, 6, 7, 8]);
        assert!(dirac_check_point(&td, &tg).unwrap().all_passed());
    }

    #[test]
    fn prolong_commutes_with_double_up_to_shuffle() {
        // T(g ⋉ g*) ≅ (Tg) ⋉ (Tg)* via the basis shuffle
        // (ξ, µ, ξ', µ') -> (ξ, ξ', µ', µ), where Tg = g ⋉ g with the
        // tangent Lie algebra bracket.
        let g = LieAlgebra::so3();
        let n = g.dim();
        let lhs = tangent_prolong_point(&build_double(&g, &Rat::zero(), None).unwrap());

        // Tg as a Lie algebra: [(ξ,ξ'),(η,η')] = ([ξ,η], [ξ,η'] + [ξ',η]).
        let dim = 2 * n;
        let mut c = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for i in 0..n {
            for j in 0..n {
                let br = g.bracket_basis(i, j);
                for k in 0..n {
                    c[i][j][k] = br[k].clone();
                    c[i][n + j][n + k] = br[k].clone();
                    c[n + i][j][n + k] = br[k].clone();
                }
            }
        }
        let tg = LieAlgebra::new_unchecked(c);
        let rhs = build_double(&tg, &Rat::zero(), None).unwrap();

        // Shuffle: lhs basis index -> rhs basis index.
        // lhs order: (x_i, y^a | x'_i, y'^a), blocks of size n at 0, n, 2n, 3n.
        // rhs order: (ξ_i, ξ'_i | µ'-slot_a, µ-slot_a).
        let mut perm = vec![0usize; 4 * n];
        for i in 0..n {
            perm[i] = i; // ξ slot
            perm[n + i] = 3 * n + i; // µ slot
            perm[2 * n + i] = n + i; // ξ' slot
            perm[3 * n + i] = 2 * n + i; // µ' slot
        }
        // compare structure constants and metric through the shuffle
        for i in 0..4 * n {
            for j in 0..4 * n {
                assert_eq!(
                    lhs.metric().form()[(i, j)],
                    rhs.metric().form()[(perm[i], perm[j])],
                    "metric mismatch at ({i}, {j})"
                );
                for k in 0..4 * n {
                    assert_eq!(
                        lhs.lie().structure_constant(i, j, k),
                        rhs.lie().structure_constant(perm[i], perm[j], perm[k]),
                        "structure mismatch at ({i}, {j}, {k})"
                    );
                }
            }
        }
    }
}
