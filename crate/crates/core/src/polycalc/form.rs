use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Poly;
use crate::linrel::Rat;

/// Sorts an index tuple into strictly increasing order, returning the sign
/// of the permutation, or `None` if an index repeats.
pub(crate) fn sort_indices(indices: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut idx = indices.to_vec();
    let mut sign = 1i64;
    // insertion sort, counting transpositions
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in idx.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((idx, sign))
}

/// A differential form of homogeneous degree `k` with polynomial
/// coefficients: components indexed by strictly increasing tuples
/// `i1 < … < ik`; absent keys are zero.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyForm {
    n_vars: usize,
    degree: usize,
    components: BTreeMap<Vec<usize>, Poly>,
}

impl PolyForm {
    pub fn zero(n_vars: usize, degree: usize) -> Self {
        PolyForm {
            n_vars,
            degree,
            components: BTreeMap::new(),
        }
    }

    /// A degree-0 form (a function).
    pub fn function(f: Poly) -> Self {
        let n = f.n_vars();
        let mut form = PolyForm::zero(n, 0);
        form.set(&[], f);
        form
    }

    /// The coordinate 1-form `dx_i`.
    pub fn dx(n_vars: usize, i: usize) -> Self {
        let mut form = PolyForm::zero(n_vars, 1);
        form.set(&[i], Poly::one(n_vars));
        form
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

    /// Adds `coeff` to the component at `indices` (any order; the sign of
    /// the sorting permutation is applied).
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

    pub fn add(&self, other: &PolyForm) -> PolyForm {
        assert_eq!(self.n_vars, other.n_vars);
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (idx, p) in &other.components {
            out.set(idx, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolyForm) -> PolyForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyForm {
        PolyForm {
            n_vars: self.n_vars,
            degree: self.degree,
            components: self
                .components
                .iter()
                .map(|(i, p)| (i.clone(), p.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> PolyForm {
        if c.is_zero() {
            return PolyForm::zero(self.n_vars, self.degree);
        }
        PolyForm {
            n_vars: self.n_vars,
            degree: self.degree,
            components: self
                .components
                .iter()
                .map(|(i, p)| (i.clone(), p.scale(c)))
                .collect(),
        }
    }

    pub fn scale_poly(&self, f: &Poly) -> PolyForm {
        let mut out = PolyForm::zero(self.n_vars, self.degree);
        for (idx, p) in &self.components {
            out.set(idx, p.mul(f));
        }
        out
    }

    pub fn wedge(&self, other: &PolyForm) -> PolyForm {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = PolyForm::zero(self.n_vars, self.degree + other.degree);
        for (i1, p1) in &self.components {
            for (i2, p2) in &other.components {
                let mut idx = i1.clone();
                idx.extend_from_slice(i2);
                out.set(&idx, p1.mul(p2));
            }
        }
        out
    }

    /// Evaluates a 1-form on a coordinate vector of polynomials (the
    /// components of a vector field).
    pub fn pair_vector(&self, v: &[Poly]) -> Poly {
        assert_eq!(self.degree, 1);
        assert_eq!(v.len(), self.n_vars);
        let mut out = Poly::zero(self.n_vars);
        for (idx, p) in &self.components {
            out = out.add(&p.mul(&v[idx[0]]));
        }
        out
    }
}

impl fmt::Debug for PolyForm {
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
                write!(f, "dx{i}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorting_signs() {
        assert_eq!(sort_indices(&[2, 1]), Some((vec![1, 2], -1)));
        assert_eq!(sort_indices(&[0, 1, 2]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_indices(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_indices(&[1, 1]), None);
    }

    #[test]
    fn wedge_antisymmetry() {
        let dx = PolyForm::dx(2, 0);
        let dy = PolyForm::dx(2, 1);
        let a = dx.wedge(&dy);
        let b = dy.wedge(&dx);
        assert_eq!(a, b.neg());
        assert!(dx.wedge(&dx).is_zero());
    }

    #[test]
    fn component_lookup_with_sign() {
        let mut w = PolyForm::zero(3, 2);
        w.set(&[0, 1], Poly::one(3));
        assert_eq!(w.component(&[1, 0]), Poly::one(3).neg());
    }
}
