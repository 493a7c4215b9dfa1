use serde::{Deserialize, Serialize};

use super::matrix::dot;
use super::{LinRelError, Rat, RatMatrix};

/// A subspace of `Q^n` in canonical form: the stored basis is the reduced
/// row echelon form of any spanning set, with zero rows dropped. Two
/// subspaces are equal iff their canonical bases are identical entrywise.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RatMatrix,
}

/// Output of [`Subspace::quotient`]: a complement to the subspace together
/// with the projection onto it along the subspace.
#[derive(Clone, Debug)]
pub struct QuotientData {
    /// Canonical complement, spanned by the non-pivot coordinate vectors.
    pub complement: Subspace,
    /// Matrix of the projection `V -> V` onto the complement along the
    /// subspace.
    pub projection: RatMatrix,
}

impl Subspace {
    /// Row space of `m`, canonicalized.
    pub fn from_rows(m: &RatMatrix) -> Self {
        let (r, pivots) = m.rref();
        let k = pivots.len();
        let rows: Vec<Vec<Rat>> = (0..k).map(|i| r.row_vec(i)).collect();
        let basis = if rows.is_empty() {
            RatMatrix::zeros(0, m.cols())
        } else {
            RatMatrix::from_rows(rows)
        };
        Subspace {
            ambient_dim: m.cols(),
            basis,
        }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<Rat>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        Subspace::from_rows(&RatMatrix::from_rows(vectors.to_vec()))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: RatMatrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::from_rows(&RatMatrix::identity(ambient_dim))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let rows: Vec<Vec<Rat>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rat::zero(); ambient_dim];
                v[i] = Rat::one();
                v
            })
            .collect();
        Subspace::from_vectors(ambient_dim, &rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        // Reduce v against the RREF basis; membership iff it reduces to zero.
        let mut v = v.to_vec();
        let (_, pivots) = self.basis.rref();
        for (row, &p) in pivots.iter().enumerate() {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for j in 0..self.ambient_dim {
                    let delta = &c * &self.basis[(row, j)];
                    v[j] = &v[j] - &delta;
                }
            }
        }
        v.iter().all(Rat::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other
            .basis_vectors()
            .iter()
            .all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinRelError> {
        self.check_ambient(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        Ok(Subspace::from_rows(&self.basis.vstack(&other.basis)))
    }

    /// Intersection, via the kernel of the stacked system: solve
    /// `x^T A = y^T B` and collect the common vectors `x^T A`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinRelError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // Columns of [A^T | -B^T] index (x, y); kernel rows give pairs with
        // A^T x = B^T y.
        let stacked = self.basis.transpose().hstack(&other.basis.transpose().neg());
        let ker = stacked.kernel();
        let a = self.dim();
        let mut vectors = Vec::new();
        for i in 0..ker.rows() {
            let xy = ker.row_vec(i);
            let x = &xy[..a];
            let v: Vec<Rat> = (0..self.ambient_dim)
                .map(|j| {
                    (0..a)
                        .map(|r| &x[r] * &self.basis[(r, j)])
                        .sum()
                })
                .collect();
            vectors.push(v);
        }
        Ok(Subspace::from_vectors(self.ambient_dim, &vectors))
    }

    /// Annihilator `{µ : µ(v) = 0 for all v in self}` in the dual space,
    /// identified with `Q^n` via the dual basis.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient_dim);
        }
        Subspace::from_rows(&self.basis.kernel())
    }

    /// Canonical complement (spanned by the non-pivot coordinates) and the
    /// projection onto it along `self`.
    pub fn quotient(&self) -> QuotientData {
        let (_, pivots) = self.basis.rref();
        let free: Vec<usize> = (0..self.ambient_dim)
            .filter(|c| !pivots.contains(c))
            .collect();
        let complement = Subspace::coordinate(self.ambient_dim, &free);
        // Projection along self: e_p maps into the complement by subtracting
        // the basis row with pivot p; free coordinates map to themselves.
        let mut proj = RatMatrix::identity(self.ambient_dim);
        for (row, &p) in pivots.iter().enumerate() {
            for i in 0..self.ambient_dim {
                let delta = self.basis[(row, i)].clone();
                proj[(i, p)] = &proj[(i, p)] - &delta;
            }
        }
        QuotientData {
            complement,
            projection: proj,
        }
    }

    /// Image of the subspace under a linear map given by `m` (columns =
    /// ambient dim of self).
    pub fn map(&self, m: &RatMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim, "map domain mismatch");
        let vectors: Vec<Vec<Rat>> = self
            .basis_vectors()
            .iter()
            .map(|v| m.mul_vec(v))
            .collect();
        Subspace::from_vectors(m.rows(), &vectors)
    }

    /// Projection onto a coordinate block `[start, start+len)`.
    pub fn project_block(&self, start: usize, len: usize) -> Subspace {
        let vectors: Vec<Vec<Rat>> = self
            .basis_vectors()
            .iter()
            .map(|v| v[start..start + len].to_vec())
            .collect();
        Subspace::from_vectors(len, &vectors)
    }

    /// Direct sum inside `Q^{n1+n2}`: `self × other`.
    pub fn direct_sum(&self, other: &Subspace) -> Subspace {
        let n = self.ambient_dim + other.ambient_dim;
        let mut vectors = Vec::new();
        for v in self.basis_vectors() {
            let mut w = v;
            w.extend(vec![Rat::zero(); other.ambient_dim]);
            vectors.push(w);
        }
        for v in other.basis_vectors() {
            let mut w = vec![Rat::zero(); self.ambient_dim];
            w.extend(v);
            vectors.push(w);
        }
        Subspace::from_vectors(n, &vectors)
    }

    /// Applies a coordinate permutation: new coordinate `i` reads old
    /// coordinate `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Subspace {
        assert_eq!(perm.len(), self.ambient_dim);
        let vectors: Vec<Vec<Rat>> = self
            .basis_vectors()
            .iter()
            .map(|v| perm.iter().map(|&p| v[p].clone()).collect())
            .collect();
        Subspace::from_vectors(self.ambient_dim, &vectors)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinRelError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinRelError::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of Q^{}) {:?}",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}

/// Pairing of a dual vector with a vector (dual basis identification).
pub(crate) fn pair(mu: &[Rat], v: &[Rat]) -> Rat {
    dot(mu, v)
}
