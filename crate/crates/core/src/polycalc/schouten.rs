use super::cartan::{ext_deriv, interior_product};
use super::{Poly, PolyForm, PolyMultiVector};

/// Lie bracket of vector fields:
/// `[X,Y]^i = Σ_j X^j ∂_j Y^i − Y^j ∂_j X^i`.
pub fn lie_bracket(x: &PolyMultiVector, y: &PolyMultiVector) -> PolyMultiVector {
    assert_eq!(x.degree(), 1, "lie_bracket needs vector fields");
    assert_eq!(y.degree(), 1, "lie_bracket needs vector fields");
    assert_eq!(x.n_vars(), y.n_vars());
    let n = x.n_vars();
    let xc = x.vector_components();
    let yc = y.vector_components();
    let mut out = vec![Poly::zero(n); n];
    for (i, item) in out.iter_mut().enumerate() {
        for j in 0..n {
            *item = item
                .add(&xc[j].mul(&yc[i].partial(j)))
                .sub(&yc[j].mul(&xc[i].partial(j)));
        }
    }
    PolyMultiVector::vector(&out)
}

/// Schouten bracket of multivector fields, evaluated recursively from its
/// defining rules:
///
/// - `[X,Y]` is the Lie bracket and `[X,f] = X·f` on vector fields and
///   functions,
/// - `[P,Q] = −(−1)^{(p−1)(q−1)} [Q,P]`,
/// - `[P, Y∧Z] = [P,Y]∧Z + (−1)^{(p−1)·deg Y} Y∧[P,Z]`.
pub fn schouten(p: &PolyMultiVector, q: &PolyMultiVector) -> PolyMultiVector {
    assert_eq!(p.n_vars(), q.n_vars());
    let n = p.n_vars();
    let out_degree = (p.degree() + q.degree()).saturating_sub(1);
    let mut out = PolyMultiVector::zero(n, out_degree);
    for (idx, coeff) in q.iter() {
        // [P, f·θ_I] = [P,f]∧θ_I + f·[P,θ_I]
        let pf = bracket_with_function(p, coeff);
        if let Some(pf) = pf {
            out = out.add(&pf.wedge(&theta_monomial(n, idx)));
        }
        if let Some(pm) = bracket_with_monomial(p, idx) {
            out = out.add(&pm.scale_poly(coeff));
        }
    }
    out
}

/// The multivector `θ_{i1} ∧ … ∧ θ_{ik}` with unit coefficient.
fn theta_monomial(n: usize, indices: &[usize]) -> PolyMultiVector {
    let mut m = PolyMultiVector::zero(n, indices.len());
    m.set(indices, Poly::one(n));
    m
}

/// `[P, f]` for a function `f`; `None` encodes the zero of degree `p − 1`
/// when `p = 0` (where no degree tag exists).
fn bracket_with_function(p: &PolyMultiVector, f: &Poly) -> Option<PolyMultiVector> {
    match p.degree() {
        0 => None,
        1 => Some(PolyMultiVector::function(p.apply_to_function(f))),
        d => {
            // [P, f] = (−1)^p [f, P]
            let fp = schouten(&PolyMultiVector::function(f.clone()), p);
            Some(if d % 2 == 0 { fp } else { fp.neg() })
        }
    }
}

/// `[P, θ_{i1} ∧ … ∧ θ_{iq}]` by Leibniz recursion on the monomial.
/// `None` encodes a zero whose degree tag would be `−1`.
fn bracket_with_monomial(p: &PolyMultiVector, indices: &[usize]) -> Option<PolyMultiVector> {
    let n = p.n_vars();
    if indices.is_empty() {
        // [P, 1] = 0 of degree p − 1
        if p.degree() == 0 {
            return None;
        }
        return Some(PolyMultiVector::zero(n, p.degree() - 1));
    }
    let j = indices[0];
    let rest = &indices[1..];
    // [P, θ_j ∧ M'] = [P,θ_j] ∧ M' + (−1)^{p−1} θ_j ∧ [P, M']
    let t1 = bracket_with_single(p, j).wedge(&theta_monomial(n, rest));
    let Some(inner) = bracket_with_monomial(p, rest) else {
        return Some(t1);
    };
    let t2 = theta_monomial(n, &[j]).wedge(&inner);
    Some(if (p.degree() + 1) % 2 == 0 {
        // (−1)^{p−1} = +1 for odd p
        t1.add(&t2)
    } else {
        t1.sub(&t2)
    })
}

/// `[P, ∂_j]`.
fn bracket_with_single(p: &PolyMultiVector, j: usize) -> PolyMultiVector {
    let n = p.n_vars();
    let theta_j = PolyMultiVector::partial(n, j);
    match p.degree() {
        0 => {
            // [f, X] = −X·f
            PolyMultiVector::function(theta_j.apply_to_function(&p.component(&[])).neg())
        }
        1 => lie_bracket(p, &theta_j),
        _ => {
            // [P, θ_j] = −(−1)^{(p−1)·0} [θ_j, P] = −[θ_j, P]
            schouten(&theta_j, p).neg()
        }
    }
}

/// Koszul bracket of 1-forms with respect to a bivector:
/// `[α,β]_π = d π(α,β) + ι_{π♯α} dβ − ι_{π♯β} dα`.
pub fn koszul(pi: &PolyMultiVector, alpha: &PolyForm, beta: &PolyForm) -> PolyForm {
    assert_eq!(pi.degree(), 2, "koszul needs a bivector");
    assert_eq!(alpha.degree(), 1);
    assert_eq!(beta.degree(), 1);
    let pairing = pi.pair_two_forms(alpha, beta);
    let d_pairing = ext_deriv(&PolyForm::function(pairing));
    let t2 = interior_product(&pi.sharp(alpha), &ext_deriv(beta));
    let t3 = interior_product(&pi.sharp(beta), &ext_deriv(alpha));
    d_pairing.add(&t2).sub(&t3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linrel::Rat;

    fn x(i: usize) -> Poly {
        Poly::var(3, i)
    }

    #[test]
    fn lie_bracket_examples() {
        // [X, X] = 0
        let v = PolyMultiVector::vector(&[x(1), x(2), x(0).mul(&x(0))]);
        assert!(lie_bracket(&v, &v).is_zero());
        // [x ∂y, y ∂x] = x ∂x − y ∂y on R² (embedded in R³)
        let a = PolyMultiVector::vector(&[Poly::zero(3), x(0), Poly::zero(3)]);
        let b = PolyMultiVector::vector(&[x(1), Poly::zero(3), Poly::zero(3)]);
        let ab = lie_bracket(&a, &b);
        let expected = PolyMultiVector::vector(&[x(0), x(1).neg(), Poly::zero(3)]);
        assert_eq!(ab, expected);
    }

    #[test]
    fn lie_bracket_jacobi() {
        // Jacobi on (x∂y, y∂z, z∂x)
        let a = PolyMultiVector::vector(&[Poly::zero(3), x(0), Poly::zero(3)]);
        let b = PolyMultiVector::vector(&[Poly::zero(3), Poly::zero(3), x(1)]);
        let c = PolyMultiVector::vector(&[x(2), Poly::zero(3), Poly::zero(3)]);
        let j = lie_bracket(&lie_bracket(&a, &b), &c)
            .add(&lie_bracket(&lie_bracket(&b, &c), &a))
            .add(&lie_bracket(&lie_bracket(&c, &a), &b));
        assert!(j.is_zero());
    }

    #[test]
    fn schouten_reduces_to_lie_bracket() {
        let a = PolyMultiVector::vector(&[x(1).mul(&x(1)), x(0), x(2)]);
        let b = PolyMultiVector::vector(&[x(2), Poly::one(3), x(0).mul(&x(1))]);
        assert_eq!(schouten(&a, &b), lie_bracket(&a, &b));
    }

    #[test]
    fn schouten_on_functions() {
        // [X, f] = X·f and [f, X] = -X·f
        let v = PolyMultiVector::vector(&[x(1), Poly::zero(3), Poly::zero(3)]);
        let f = PolyMultiVector::function(x(0).mul(&x(2)));
        let xf = schouten(&v, &f);
        assert_eq!(xf.component(&[]), x(1).mul(&x(2)));
        let fx = schouten(&f, &v);
        assert_eq!(fx.component(&[]), x(1).mul(&x(2)).neg());
    }

    #[test]
    fn constant_bivector_self_bracket_vanishes() {
        let pi = PolyMultiVector::partial(3, 0).wedge(&PolyMultiVector::partial(3, 1));
        assert!(schouten(&pi, &pi).is_zero());
    }

    #[test]
    fn so3_linear_poisson() {
        // π = z ∂x∧∂y + x ∂y∧∂z + y ∂z∧∂x on R³ has [π,π] = 0.
        let mut pi = PolyMultiVector::zero(3, 2);
        pi.set(&[0, 1], x(2));
        pi.set(&[1, 2], x(0));
        pi.set(&[2, 0], x(1));
        assert!(schouten(&pi, &pi).is_zero());
    }

    #[test]
    fn non_poisson_bivector_detected() {
        // π = x1² ∂0∧∂1 + x0 ∂1∧∂2 is generally not Poisson.
        let mut pi = PolyMultiVector::zero(3, 2);
        pi.set(&[0, 1], x(1).mul(&x(1)));
        pi.set(&[1, 2], x(0));
        assert!(!schouten(&pi, &pi).is_zero());
    }

    #[test]
    fn poisson_iff_self_bracket_pairing() {
        // [π,π](df,dg,dh)-type check: for Poisson π, the cyclic Jacobi sum of
        // {f,g} = π(df,dg) vanishes; for the non-Poisson instance it does not.
        let jacobi_sum = |pi: &PolyMultiVector, f: &Poly, g: &Poly, h: &Poly| -> Poly {
            let pb = |a: &Poly, b: &Poly| {
                let da = ext_deriv(&PolyForm::function(a.clone()));
                let db = ext_deriv(&PolyForm::function(b.clone()));
                pi.pair_two_forms(&da, &db)
            };
            pb(f, &pb(g, h)).add(&pb(g, &pb(h, f))).add(&pb(h, &pb(f, g)))
        };
        let mut pi = PolyMultiVector::zero(3, 2);
        pi.set(&[0, 1], x(2));
        pi.set(&[1, 2], x(0));
        pi.set(&[2, 0], x(1));
        let (f, g, h) = (x(0).mul(&x(1)), x(2), x(1).add(&x(2)));
        assert!(jacobi_sum(&pi, &f, &g, &h).is_zero());

        let mut bad = PolyMultiVector::zero(3, 2);
        bad.set(&[0, 1], x(1).mul(&x(1)));
        bad.set(&[1, 2], x(0));
        assert!(!schouten(&bad, &bad).is_zero());
        // and some triple detects it through the Jacobi defect
        let defect = jacobi_sum(&bad, &x(0), &x(1), &x(2));
        assert!(!defect.is_zero());
    }

    #[test]
    fn graded_antisymmetry() {
        // [P,Q] = −(−1)^{(p−1)(q−1)} [Q,P]
        let mut p = PolyMultiVector::zero(3, 2);
        p.set(&[0, 1], x(2));
        p.set(&[1, 2], x(0).mul(&x(0)));
        let q = PolyMultiVector::vector(&[x(1), x(2), Poly::one(3)]);
        // p deg 2, q deg 1: (p-1)(q-1) = 0, so [P,Q] = -[Q,P]
        assert_eq!(schouten(&p, &q), schouten(&q, &p).neg());
        // deg (2,2): (p-1)(q-1) = 1, so [P,Q] = +[Q,P]
        let mut r = PolyMultiVector::zero(3, 2);
        r.set(&[0, 2], x(1));
        assert_eq!(schouten(&p, &r), schouten(&r, &p));
    }

    #[test]
    fn leibniz_rule() {
        // [X, Y ∧ Z] = [X,Y] ∧ Z + (−1)^{(k−1)l} Y ∧ [X,Z], k = deg X, l = deg Y
        let xv = PolyMultiVector::vector(&[x(1), x(0).mul(&x(2)), Poly::one(3)]);
        let yv = PolyMultiVector::vector(&[x(2), Poly::zero(3), x(0)]);
        let zv = PolyMultiVector::vector(&[Poly::zero(3), x(1), x(2)]);
        let lhs = schouten(&xv, &yv.wedge(&zv));
        // k = 1: sign = +1
        let rhs = schouten(&xv, &yv)
            .wedge(&zv)
            .add(&yv.wedge(&schouten(&xv, &zv)));
        assert_eq!(lhs, rhs);

        // k = 2 case: [P, Y∧Z] = [P,Y]∧Z + (−1)^{(2−1)·1} Y∧[P,Z]
        let mut p = PolyMultiVector::zero(3, 2);
        p.set(&[0, 1], x(2));
        p.set(&[0, 2], x(0));
        let lhs2 = schouten(&p, &yv.wedge(&zv));
        let rhs2 = schouten(&p, &yv)
            .wedge(&zv)
            .sub(&yv.wedge(&schouten(&p, &zv)));
        assert_eq!(lhs2, rhs2);
    }

    #[test]
    fn graded_jacobi() {
        // [X,[Y,Z]] = [[X,Y],Z] + (−1)^{(k−1)(l−1)} [Y,[X,Z]]
        let mut xm = PolyMultiVector::zero(3, 2);
        xm.set(&[0, 1], x(2).mul(&x(2)));
        xm.set(&[1, 2], x(0));
        let ym = PolyMultiVector::vector(&[x(1), x(2), x(0)]);
        let mut zm = PolyMultiVector::zero(3, 2);
        zm.set(&[0, 2], x(1).add(&Poly::one(3)));
        // k = 2, l = 1: (k-1)(l-1) = 0 -> plus sign
        let lhs = schouten(&xm, &schouten(&ym, &zm));
        let rhs = schouten(&schouten(&xm, &ym), &zm).add(&schouten(&ym, &schouten(&xm, &zm)));
        assert_eq!(lhs, rhs);

        // degrees (2,2,1): (k-1)(l-1) = 1 -> minus sign
        let lhs2 = schouten(&xm, &schouten(&zm, &ym));
        let rhs2 =
            schouten(&schouten(&xm, &zm), &ym).sub(&schouten(&zm, &schouten(&xm, &ym)));
        assert_eq!(lhs2, rhs2);
    }

    #[test]
    fn koszul_cases() {
        // π = ∂x∧∂y on R²: [dx, dy]_π = 0
        let pi2 = PolyMultiVector::partial(2, 0).wedge(&PolyMultiVector::partial(2, 1));
        let dx = PolyForm::dx(2, 0);
        let dy = PolyForm::dx(2, 1);
        assert!(koszul(&pi2, &dx, &dy).is_zero());
        // π = 0 -> bracket ≡ 0
        let zero = PolyMultiVector::zero(2, 2);
        assert!(koszul(&zero, &dx, &dy).is_zero());
    }

    #[test]
    fn koszul_hamiltonian_compat() {
        // [df, dg]_π = d{f,g} = d(π(df,dg)) for the so(3) Poisson structure
        let mut pi = PolyMultiVector::zero(3, 2);
        pi.set(&[0, 1], x(2));
        pi.set(&[1, 2], x(0));
        pi.set(&[2, 0], x(1));
        let f = x(0).mul(&x(0)).add(&x(1));
        let g = x(2).mul(&x(1));
        let df = ext_deriv(&PolyForm::function(f.clone()));
        let dg = ext_deriv(&PolyForm::function(g.clone()));
        let lhs = koszul(&pi, &df, &dg);
        let rhs = ext_deriv(&PolyForm::function(pi.pair_two_forms(&df, &dg)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn koszul_jacobi_for_poisson() {
        let mut pi = PolyMultiVector::zero(3, 2);
        pi.set(&[0, 1], x(2));
        pi.set(&[1, 2], x(0));
        pi.set(&[2, 0], x(1));
        let a = {
            let mut w = PolyForm::zero(3, 1);
            w.set(&[0], x(1));
            w.set(&[2], Poly::one(3));
            w
        };
        let b = {
            let mut w = PolyForm::zero(3, 1);
            w.set(&[1], x(0).mul(&x(2)));
            w
        };
        let c = {
            let mut w = PolyForm::zero(3, 1);
            w.set(&[2], x(0));
            w.set(&[0], Poly::constant(3, Rat::new(1, 2)));
            w
        };
        let j = koszul(&pi, &koszul(&pi, &a, &b), &c)
            .add(&koszul(&pi, &koszul(&pi, &b, &c), &a))
            .add(&koszul(&pi, &koszul(&pi, &c, &a), &b));
        assert!(j.is_zero(), "{j:?}");
    }
}
