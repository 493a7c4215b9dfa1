use serde::{Deserialize, Serialize};

use super::{LinRelError, Rat, RatMatrix, Subspace};

/// A vector space with a nondegenerate symmetric bilinear form. Degenerate
/// forms are rejected at construction.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticSpace {
    dim: usize,
    form: RatMatrix,
}

/// Classification of a subspace with respect to the form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceClass {
    pub orthogonal: Subspace,
    pub isotropic: bool,
    pub coisotropic: bool,
    pub lagrangian: bool,
}

impl QuadraticSpace {
    pub fn new(form: RatMatrix) -> Result<Self, LinRelError> {
        if form.rows() != form.cols() {
            return Err(LinRelError::DimensionMismatch(format!(
                "form is {}x{}",
                form.rows(),
                form.cols()
            )));
        }
        if !form.is_symmetric() {
            return Err(LinRelError::NotSymmetric);
        }
        if form.det().is_zero() {
            return Err(LinRelError::Singular);
        }
        Ok(QuadraticSpace {
            dim: form.rows(),
            form,
        })
    }

    /// The hyperbolic pairing on `Q^{2n} = V ⊕ V*`: `⟨(v,µ),(w,ν)⟩ = µ(w) + ν(v)`.
    pub fn hyperbolic(n: usize) -> Self {
        let mut form = RatMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            form[(i, n + i)] = Rat::one();
            form[(n + i, i)] = Rat::one();
        }
        QuadraticSpace { dim: 2 * n, form }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn form(&self) -> &RatMatrix {
        &self.form
    }

    pub fn pair(&self, v: &[Rat], w: &[Rat]) -> Rat {
        let fv = self.form.mul_vec(w);
        v.iter().zip(&fv).map(|(a, b)| a * b).sum()
    }

    /// Form-orthogonal complement `w⊥ = {v : ⟨v, w⟩ = 0}`.
    pub fn orthogonal(&self, w: &Subspace) -> Result<Subspace, LinRelError> {
        if w.ambient_dim() != self.dim {
            return Err(LinRelError::DimensionMismatch(format!(
                "subspace ambient {} vs space dim {}",
                w.ambient_dim(),
                self.dim
            )));
        }
        if w.is_zero() {
            return Ok(Subspace::full(self.dim));
        }
        // v ∈ w⊥ iff (W B) v = 0 where W holds the basis rows of w.
        let constraints = w.basis() * &self.form;
        Ok(Subspace::from_rows(&constraints.kernel()))
    }

    pub fn classify(&self, w: &Subspace) -> Result<SubspaceClass, LinRelError> {
        let orthogonal = self.orthogonal(w)?;
        let isotropic = orthogonal.contains_subspace(w);
        let coisotropic = w.contains_subspace(&orthogonal);
        Ok(SubspaceClass {
            lagrangian: isotropic && coisotropic,
            isotropic,
            coisotropic,
            orthogonal,
        })
    }

    /// The space with the form negated.
    pub fn negated(&self) -> QuadraticSpace {
        QuadraticSpace {
            dim: self.dim,
            form: self.form.neg(),
        }
    }

    /// Product space with form `diag(Q_self, Q_other)`.
    pub fn direct_sum(&self, other: &QuadraticSpace) -> QuadraticSpace {
        QuadraticSpace {
            dim: self.dim + other.dim,
            form: self.form.block_diag(&other.form),
        }
    }
}

impl std::fmt::Debug for QuadraticSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuadraticSpace(dim {}) {:?}", self.dim, self.form)
    }
}
