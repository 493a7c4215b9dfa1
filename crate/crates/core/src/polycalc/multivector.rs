use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::form::sort_indices;
use super::{Poly, PolyForm};
use crate::linrel::Rat;

/// A multivector field of homogeneous degree `k` with polynomial
/// coefficients, stored like [`PolyForm`] with strictly increasing index
/// tuples.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMultiVector {
    n_vars: usize,
    degree: usize,
    components: BTreeMap<Vec<usize>, Poly>,
}

impl PolyMultiVector {
    pub fn zero(n_vars: usize, degree: usize) -> Self {
        PolyMultiVector {
            n_vars,
            degree,
            components: BTreeMap::new(),
        }
    }

    pub fn function(f: Poly) -> Self {
        let n = f.n_vars();
        let mut m = PolyMultiVector::zero(n, 0);
        m.set(&[], f);
        m
    }

    /// The coordinate vector field `∂_i`.
    pub fn partial(n_vars: usize, i: usize) -> Self {
        let mut m = PolyMultiVector::zero(n_vars, 1);
        m.set(&[i], Poly::one(n_vars));
        m
    }

    /// A vector field from its coordinate components.
    pub fn vector(components: &[Poly]) -> Self {
        let n = components.len();
        let mut m = PolyMultiVector::zero(n, 1);
        for (i, p) in components.iter().enumerate() {
            m.set(&[i], p.clone());
        }
        m
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, indices: &[usize]) -> Poly {
        assert_eq!(indices.len(), self.degree);
        match sort_indices(indices) {
            None => Poly::zero(self.n_vars),
            Some((idx, sign)) => {
                let p = self
                    .components
                    .get(&idx)
                    .cloned()
                    .unwrap_or_else(|| Poly::zero(self.n_vars));
                if sign < 0 {
                    p.neg()
                } else {
                    p
                }
            }
        }
    }

    pub fn set(&mut self, indices: &[usize], coeff: Poly) {
        assert_eq!(indices.len(), self.degree, "index tuple length mismatch");
        assert!(indices.iter().all(|&i| i < self.n_vars), "index range");
        let Some((idx, sign)) = sort_indices(indices) else {
            return;
        };
        let coeff = if sign < 0 { coeff.neg() } else { coeff };
        let entry = self
            .components
            .entry(idx.clone())
            .or_insert_with(|| Poly::zero(self.n_vars));
        *entry = entry.add(&coeff);
        if entry.is_zero() {
            self.components.remove(&idx);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.components.iter()
    }

    pub fn add(&self, other: &PolyMultiVector) -> PolyMultiVector {
        assert_eq!(self.n_vars, other.n_vars);
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (idx, p) in &other.components {
            out.set(idx, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolyMultiVector) -> PolyMultiVector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyMultiVector {
        PolyMultiVector {
            n_vars: self.n_vars,
            degree: self.degree,
            components: self
                .components
                .iter()
                .map(|(i, p)| (i.clone(), p.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> PolyMultiVector {
        if c.is_zero() {
            return PolyMultiVector::zero(self.n_vars, self.degree);
        }
        PolyMultiVector {
            n_vars: self.n_vars,
            degree: self.degree,
            components: self
                .components
                .iter()
                .map(|(i, p)| (i.clone(), p.scale(c)))
                .collect(),
        }
    }

    pub fn scale_poly(&self, f: &Poly) -> PolyMultiVector {
        let mut out = PolyMultiVector::zero(self.n_vars, self.degree);
        for (idx, p) in &self.components {
            out.set(idx, p.mul(f));
        }
        out
    }

    pub fn wedge(&self, other: &PolyMultiVector) -> PolyMultiVector {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = PolyMultiVector::zero(self.n_vars, self.degree + other.degree);
        for (i1, p1) in &self.components {
            for (i2, p2) in &other.components {
                let mut idx = i1.clone();
                idx.extend_from_slice(i2);
                out.set(&idx, p1.mul(p2));
            }
        }
        out
    }

    /// The coordinate components of a degree-1 multivector (vector field).
    pub fn vector_components(&self) -> Vec<Poly> {
        assert_eq!(self.degree, 1, "vector_components requires degree 1");
        (0..self.n_vars).map(|i| self.component(&[i])).collect()
    }

    /// Derivative of a function along a vector field: `X · f`.
    pub fn apply_to_function(&self, f: &Poly) -> Poly {
        assert_eq!(self.degree, 1, "apply_to_function requires degree 1");
        let mut out = Poly::zero(self.n_vars);
        for (idx, p) in &self.components {
            out = out.add(&p.mul(&f.partial(idx[0])));
        }
        out
    }

    /// Full contraction of a bivector with two 1-forms: `π(α, β)`.
    pub fn pair_two_forms(&self, alpha: &PolyForm, beta: &PolyForm) -> Poly {
        assert_eq!(self.degree, 2);
        assert_eq!(alpha.degree(), 1);
        assert_eq!(beta.degree(), 1);
        let mut out = Poly::zero(self.n_vars);
        for (idx, p) in &self.components {
            let (a, b) = (idx[0], idx[1]);
            // π^{ab}(α_a β_b − α_b β_a)
            let t1 = alpha.component(&[a]).mul(&beta.component(&[b]));
            let t2 = alpha.component(&[b]).mul(&beta.component(&[a]));
            out = out.add(&p.mul(&t1.sub(&t2)));
        }
        out
    }

    /// `π♯(α) = π(α, ·)` for a bivector, as a vector field.
    pub fn sharp(&self, alpha: &PolyForm) -> PolyMultiVector {
        assert_eq!(self.degree, 2);
        assert_eq!(alpha.degree(), 1);
        let mut out = PolyMultiVector::zero(self.n_vars, 1);
        for (idx, p) in &self.components {
            let (a, b) = (idx[0], idx[1]);
            // π^{ab}(α_a ∂_b − α_b ∂_a)
            out.set(&[b], p.mul(&alpha.component(&[a])));
            out.set(&[a], p.mul(&alpha.component(&[b])).neg());
        }
        out
    }
}

impl fmt::Debug for PolyMultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, p) in &self.components {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({p}) ")?;
            for (t, i) in idx.iter().enumerate() {
                if t > 0 {
                    write!(f, "∧")?;
                }
                write!(f, "∂{i}")?;
            }
        }
        Ok(())
    }
}
