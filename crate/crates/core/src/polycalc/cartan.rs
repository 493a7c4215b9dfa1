use super::{Poly, PolyForm, PolyMultiVector};

/// Exterior derivative: `d(f dx_I) = Σ_i ∂_i f · dx_i ∧ dx_I`.
pub fn ext_deriv(omega: &PolyForm) -> PolyForm {
    let n = omega.n_vars();
    let mut out = PolyForm::zero(n, omega.degree() + 1);
    if omega.degree() + 1 > n {
        return out;
    }
    for (idx, p) in omega.iter() {
        for i in 0..n {
            let df = p.partial(i);
            if df.is_zero() {
                continue;
            }
            let mut new_idx = vec![i];
            new_idx.extend_from_slice(idx);
            out.set(&new_idx, df);
        }
    }
    out
}

/// Interior product `ι_X ω` for a vector field `X`:
/// `(ι_X ω)_I = Σ_p (−1)^p X^{i_p} ω_{i_0 … i_k}` with slot `p` removed.
pub fn interior_product(x: &PolyMultiVector, omega: &PolyForm) -> PolyForm {
    assert_eq!(x.degree(), 1, "interior product needs a vector field");
    assert_eq!(x.n_vars(), omega.n_vars());
    let n = omega.n_vars();
    if omega.degree() == 0 {
        return PolyForm::zero(n, 0);
    }
    let comps = x.vector_components();
    let mut out = PolyForm::zero(n, omega.degree() - 1);
    for (idx, p) in omega.iter() {
        for (pos, &i) in idx.iter().enumerate() {
            if comps[i].is_zero() {
                continue;
            }
            let mut rest: Vec<usize> = idx.clone();
            rest.remove(pos);
            let coeff = comps[i].mul(p);
            let signed = if pos % 2 == 1 { coeff.neg() } else { coeff };
            out.set(&rest, signed);
        }
    }
    out
}

/// Lie derivative via the Cartan magic formula: `L_X = ι_X d + d ι_X`.
pub fn lie_derivative(x: &PolyMultiVector, omega: &PolyForm) -> PolyForm {
    let first = interior_product(x, &ext_deriv(omega));
    if omega.degree() == 0 {
        return first;
    }
    first.add(&ext_deriv(&interior_product(x, omega)))
}

/// Direct Lie derivative by coefficient transport, independent of the
/// Cartan-formula route: `L_X ω = Σ_I (Xω_I) dx^I + Σ_I ω_I Σ_p dX^{i_p}`-
/// insertions. Kept as an oracle for [`lie_derivative`].
pub fn lie_derivative_direct(x: &PolyMultiVector, omega: &PolyForm) -> PolyForm {
    assert_eq!(x.degree(), 1);
    assert_eq!(x.n_vars(), omega.n_vars());
    let n = omega.n_vars();
    let comps = x.vector_components();
    let mut out = PolyForm::zero(n, omega.degree());
    for (idx, p) in omega.iter() {
        // transport of the coefficient
        out.set(idx, x.apply_to_function(p));
        // L_X dx^i = d(X^i) = Σ_j ∂_j X^i dx^j, inserted at each slot
        for (pos, &i) in idx.iter().enumerate() {
            for j in 0..n {
                let dxi = comps[i].partial(j);
                if dxi.is_zero() {
                    continue;
                }
                let mut new_idx = idx.clone();
                new_idx[pos] = j;
                out.set(&new_idx, p.mul(&dxi));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linrel::Rat;

    fn x(i: usize) -> Poly {
        Poly::var(2, i)
    }

    #[test]
    fn d_of_x_dy() {
        // d(x dy) = dx ∧ dy
        let mut w = PolyForm::zero(2, 1);
        w.set(&[1], x(0));
        let dw = ext_deriv(&w);
        let expected = PolyForm::dx(2, 0).wedge(&PolyForm::dx(2, 1));
        assert_eq!(dw, expected);
    }

    #[test]
    fn d_of_constant_and_top_form() {
        let c = PolyForm::function(Poly::constant(2, Rat::from_int(7)));
        assert!(ext_deriv(&c).is_zero());
        let top = PolyForm::dx(2, 0).wedge(&PolyForm::dx(2, 1));
        assert!(ext_deriv(&top).is_zero());
    }

    #[test]
    fn d_squared_zero() {
        let mut w = PolyForm::zero(3, 1);
        w.set(&[0], Poly::var(3, 1).mul(&Poly::var(3, 2)));
        w.set(&[2], Poly::var(3, 0).mul(&Poly::var(3, 0)));
        assert!(ext_deriv(&ext_deriv(&w)).is_zero());
    }

    #[test]
    fn interior_product_cases() {
        // ι_∂x (dx ∧ dy) = dy
        let w = PolyForm::dx(2, 0).wedge(&PolyForm::dx(2, 1));
        let px = PolyMultiVector::partial(2, 0);
        assert_eq!(interior_product(&px, &w), PolyForm::dx(2, 1));
        // ι_∂y (dx ∧ dy) = -dx
        let py = PolyMultiVector::partial(2, 1);
        assert_eq!(interior_product(&py, &w), PolyForm::dx(2, 0).neg());
    }

    #[test]
    fn lie_derivative_examples() {
        // L_∂x (x dy) = dy
        let mut w = PolyForm::zero(2, 1);
        w.set(&[1], x(0));
        let px = PolyMultiVector::partial(2, 0);
        assert_eq!(lie_derivative(&px, &w), PolyForm::dx(2, 1));
        // L_X f = X·f on functions
        let f = PolyForm::function(x(0).mul(&x(1)));
        let lf = lie_derivative(&px, &f);
        assert_eq!(lf.component(&[]), x(1));
    }

    #[test]
    fn two_lie_derivative_routes_agree() {
        let v = PolyMultiVector::vector(&[x(1).mul(&x(1)), x(0).add(&x(1))]);
        let mut w = PolyForm::zero(2, 1);
        w.set(&[0], x(0).mul(&x(1)));
        w.set(&[1], x(1).mul(&x(1)).add(&Poly::one(2)));
        assert_eq!(lie_derivative(&v, &w), lie_derivative_direct(&v, &w));

        let w2 = PolyForm::dx(2, 0).wedge(&PolyForm::dx(2, 1)).scale_poly(&x(0));
        assert_eq!(lie_derivative(&v, &w2), lie_derivative_direct(&v, &w2));
    }
}
