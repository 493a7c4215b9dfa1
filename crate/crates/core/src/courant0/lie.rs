use serde::{Deserialize, Serialize};

use super::Courant0Error;
use crate::linrel::{Rat, Subspace};

/// A Lie algebra given by structure constants: `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
///
/// Antisymmetry and the Jacobi identity are verified at construction by
/// exhaustive basis-triple enumeration; use [`LieAlgebra::new_unchecked`] to
/// defer (e.g. for deliberately perturbed instances).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieAlgebra {
    dim: usize,
    structure: Vec<Vec<Vec<Rat>>>,
}

impl LieAlgebra {
    pub fn new(structure: Vec<Vec<Vec<Rat>>>) -> Result<Self, Courant0Error> {
        let alg = Self::new_unchecked(structure);
        if let Some((i, j)) = alg.antisymmetry_witness() {
            return Err(Courant0Error::NotAntisymmetric(i, j));
        }
        if let Some((i, j, k)) = alg.jacobi_witness() {
            return Err(Courant0Error::JacobiFailure(i, j, k));
        }
        Ok(alg)
    }

    pub fn new_unchecked(structure: Vec<Vec<Vec<Rat>>>) -> Self {
        let dim = structure.len();
        for plane in &structure {
            assert_eq!(plane.len(), dim, "structure tensor not cubic");
            for row in plane {
                assert_eq!(row.len(), dim, "structure tensor not cubic");
            }
        }
        LieAlgebra { dim, structure }
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::new_unchecked(vec![vec![vec![Rat::zero(); dim]; dim]; dim])
    }

    /// so(3): `[e_i, e_j] = ε_{ijk} e_k`.
    pub fn so3() -> Self {
        let mut c = vec![vec![vec![Rat::zero(); 3]; 3]; 3];
        let eps = [(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)];
        for &(i, j, k, s) in &eps {
            c[i][j][k] = Rat::from_int(s);
            c[j][i][k] = Rat::from_int(-s);
        }
        LieAlgebra::new_unchecked(c)
    }

    /// sl(2) in the basis (e, h, f): `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let mut c = vec![vec![vec![Rat::zero(); 3]; 3]; 3];
        // indices: 0 = e, 1 = h, 2 = f
        c[1][0][0] = Rat::from_int(2);
        c[0][1][0] = Rat::from_int(-2);
        c[1][2][2] = Rat::from_int(-2);
        c[2][1][2] = Rat::from_int(2);
        c[0][2][1] = Rat::from_int(1);
        c[2][0][1] = Rat::from_int(-1);
        LieAlgebra::new_unchecked(c)
    }

    /// aff(1) = span(a, b) with `[a, b] = b`.
    pub fn aff1() -> Self {
        let mut c = vec![vec![vec![Rat::zero(); 2]; 2]; 2];
        c[0][1][1] = Rat::one();
        c[1][0][1] = -Rat::one();
        LieAlgebra::new_unchecked(c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self) -> &Vec<Vec<Vec<Rat>>> {
        &self.structure
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.structure[i][j][k]
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        self.structure[i][j].clone()
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let scale = &x[i] * &y[j];
                for k in 0..self.dim {
                    let c = &self.structure[i][j][k];
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&scale * c);
                    }
                }
            }
        }
        out
    }

    /// First basis pair violating antisymmetry, if any.
    pub fn antisymmetry_witness(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let sum = &self.structure[i][j][k] + &self.structure[j][i][k];
                    if !sum.is_zero() {
                        return Some((i, j));
                    }
                }
            }
        }
        None
    }

    /// First basis triple violating the Jacobi identity, if any. Exhaustive
    /// enumeration of all dim³ triples.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize)> {
        let mut basis = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut v = vec![Rat::zero(); self.dim];
            v[i] = Rat::one();
            basis.push(v);
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if !self.jacobi_sum(&basis, i, j, k).iter().all(Rat::is_zero) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn jacobi_sum(&self, basis: &[Vec<Rat>], i: usize, j: usize, k: usize) -> Vec<Rat> {
        let a = self.bracket(&self.bracket(&basis[i], &basis[j]), &basis[k]);
        let b = self.bracket(&self.bracket(&basis[j], &basis[k]), &basis[i]);
        let c = self.bracket(&self.bracket(&basis[k], &basis[i]), &basis[j]);
        (0..self.dim).map(|t| &(&a[t] + &b[t]) + &c[t]).collect()
    }

    pub fn satisfies_jacobi(&self) -> bool {
        self.antisymmetry_witness().is_none() && self.jacobi_witness().is_none()
    }

    /// Whether a subspace is closed under the bracket; returns the first
    /// violating basis pair otherwise.
    pub fn subalgebra_witness(&self, h: &Subspace) -> Option<(usize, usize)> {
        let basis = h.basis_vectors();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                if !h.contains(&self.bracket(x, y)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_subalgebra(&self, h: &Subspace) -> bool {
        h.ambient_dim() == self.dim && self.subalgebra_witness(h).is_none()
    }

    /// Matrix of `ad_x` acting on coordinates: `(ad_x)_{kj} = Σ_i x_i c[i][j][k]`.
    pub fn ad(&self, x: &[Rat]) -> crate::linrel::RatMatrix {
        let mut m = crate::linrel::RatMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = &self.structure[i][j][k];
                    if !c.is_zero() {
                        let delta = &x[i] * c;
                        m[(k, j)] = &m[(k, j)] + &delta;
                    }
                }
            }
        }
        m
    }

    /// Perturbs one structure constant; used to manufacture Jacobi failures.
    pub fn perturbed(&self, i: usize, j: usize, k: usize, value: Rat) -> LieAlgebra {
        let mut c = self.structure.clone();
        c[i][j][k] = value.clone();
        c[j][i][k] = -value;
        LieAlgebra::new_unchecked(c)
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {})", self.dim)
    }
}
