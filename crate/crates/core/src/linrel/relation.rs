use serde::{Deserialize, Serialize};

use super::{LinRelError, Rat, RatMatrix, Subspace};

/// A linear relation `R: V1 ⇸ V2`, stored as a subspace of `V2 × V1` with
/// the target block first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearRelation {
    source_dim: usize,
    target_dim: usize,
    graph: Subspace,
}

/// Dimension bookkeeping for a composition. Linear composition is always
/// set-theoretically exact; `fiber_dim` records the dimension of the fiber
/// of the intersection over its image, for clean-intersection accounting
/// downstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposeInfo {
    pub intersection_dim: usize,
    pub fiber_dim: usize,
    /// True iff `intersection_dim - composition_dim` equals the kernel
    /// dimension of the projection, computed independently.
    pub clean: bool,
}

impl LinearRelation {
    pub fn new(source_dim: usize, target_dim: usize, graph: Subspace) -> Result<Self, LinRelError> {
        if graph.ambient_dim() != source_dim + target_dim {
            return Err(LinRelError::DimensionMismatch(format!(
                "graph ambient {} != target {} + source {}",
                graph.ambient_dim(),
                target_dim,
                source_dim
            )));
        }
        Ok(LinearRelation {
            source_dim,
            target_dim,
            graph,
        })
    }

    /// The diagonal relation `V ⇸ V`.
    pub fn identity(dim: usize) -> Self {
        let mut rows = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut v = vec![Rat::zero(); 2 * dim];
            v[i] = Rat::one();
            v[dim + i] = Rat::one();
            rows.push(v);
        }
        LinearRelation {
            source_dim: dim,
            target_dim: dim,
            graph: Subspace::from_vectors(2 * dim, &rows),
        }
    }

    /// Graph of a linear map `A: V1 -> V2` (matrix rows = target dim).
    pub fn graph_of(a: &RatMatrix) -> Self {
        let (t, s) = (a.rows(), a.cols());
        let mut rows = Vec::with_capacity(s);
        for j in 0..s {
            let mut v = vec![Rat::zero(); t + s];
            let mut ej = vec![Rat::zero(); s];
            ej[j] = Rat::one();
            let img = a.mul_vec(&ej);
            v[..t].clone_from_slice(&img);
            v[t + j] = Rat::one();
            rows.push(v);
        }
        LinearRelation {
            source_dim: s,
            target_dim: t,
            graph: Subspace::from_vectors(t + s, &rows),
        }
    }

    /// The zero relation `0 ⊆ V2 × V1`.
    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        LinearRelation {
            source_dim,
            target_dim,
            graph: Subspace::zero(source_dim + target_dim),
        }
    }

    /// A subspace `S ⊆ V` viewed as a relation `0 ⇸ V`.
    pub fn from_subspace(s: &Subspace) -> Self {
        LinearRelation {
            source_dim: 0,
            target_dim: s.ambient_dim(),
            graph: s.clone(),
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn graph(&self) -> &Subspace {
        &self.graph
    }

    pub fn dim(&self) -> usize {
        self.graph.dim()
    }

    /// `ker(R) = {v1 : v1 ~ 0}`, a subspace of the source.
    pub fn kernel(&self) -> Subspace {
        let t = self.target_dim;
        let vectors: Vec<Vec<Rat>> = self
            .graph
            .basis_vectors()
            .into_iter()
            .filter(|v| v[..t].iter().all(Rat::is_zero))
            .map(|v| v[t..].to_vec())
            .collect();
        // The filter above only sees basis rows; take the honest kernel via
        // intersection with the 0 × V1 block instead.
        let _ = vectors;
        let block = Subspace::zero(t).direct_sum(&Subspace::full(self.source_dim));
        let inter = self
            .graph
            .intersection(&block)
            .expect("dims agree by construction");
        inter.project_block(t, self.source_dim)
    }

    /// `ran(R) = {v2 : ∃ v1, (v2, v1) ∈ R}`, a subspace of the target.
    pub fn range(&self) -> Subspace {
        self.graph.project_block(0, self.target_dim)
    }

    /// Transpose relation `R^T: V2 ⇸ V1`: swaps the blocks.
    pub fn transpose(&self) -> LinearRelation {
        let t = self.target_dim;
        let s = self.source_dim;
        let perm: Vec<usize> = (t..t + s).chain(0..t).collect();
        LinearRelation {
            source_dim: t,
            target_dim: s,
            graph: self.graph.permute(&perm),
        }
    }

    /// Set-theoretic composition `r2 ∘ r1`, computed as the image of
    /// `(r2 × r1) ∩ (V3 × Δ_{V2} × V1)` under projection to `V3 × V1`.
    pub fn compose(r2: &LinearRelation, r1: &LinearRelation) -> Result<LinearRelation, LinRelError> {
        Ok(Self::compose_with_info(r2, r1)?.0)
    }

    /// Composition together with the fiber-dimension accounting.
    pub fn compose_with_info(
        r2: &LinearRelation,
        r1: &LinearRelation,
    ) -> Result<(LinearRelation, ComposeInfo), LinRelError> {
        if r1.target_dim != r2.source_dim {
            return Err(LinRelError::DimensionMismatch(format!(
                "compose: r1 target {} != r2 source {}",
                r1.target_dim, r2.source_dim
            )));
        }
        let v3 = r2.target_dim;
        let v2 = r2.source_dim;
        let v1 = r1.source_dim;
        // Ambient V3 × V2 × V2 × V1.
        let product = r2.graph.direct_sum(&r1.graph);
        // Diagonal constraint subspace V3 × Δ_{V2} × V1.
        let mut rows = Vec::new();
        let n = v3 + 2 * v2 + v1;
        for i in 0..v3 {
            let mut v = vec![Rat::zero(); n];
            v[i] = Rat::one();
            rows.push(v);
        }
        for i in 0..v2 {
            let mut v = vec![Rat::zero(); n];
            v[v3 + i] = Rat::one();
            v[v3 + v2 + i] = Rat::one();
            rows.push(v);
        }
        for i in 0..v1 {
            let mut v = vec![Rat::zero(); n];
            v[v3 + 2 * v2 + i] = Rat::one();
            rows.push(v);
        }
        let constraint = Subspace::from_vectors(n, &rows);
        let inter = product.intersection(&constraint)?;

        // Project to V3 × V1.
        let vectors: Vec<Vec<Rat>> = inter
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let mut w = v[..v3].to_vec();
                w.extend_from_slice(&v[v3 + 2 * v2..]);
                w
            })
            .collect();
        let graph = Subspace::from_vectors(v3 + v1, &vectors);
        let composition = LinearRelation {
            source_dim: v1,
            target_dim: v3,
            graph,
        };

        // Kernel of the projection restricted to the intersection, computed
        // independently: elements with vanishing V3 and V1 blocks.
        let middle = Subspace::zero(v3)
            .direct_sum(&Subspace::full(2 * v2))
            .direct_sum(&Subspace::zero(v1));
        let fiber = inter.intersection(&middle)?;
        let info = ComposeInfo {
            intersection_dim: inter.dim(),
            fiber_dim: fiber.dim(),
            clean: inter.dim() - composition.dim() == fiber.dim(),
        };
        Ok((composition, info))
    }

    /// Applies the relation to a subspace of the source:
    /// `R ∘ S = {v2 : ∃ v1 ∈ S, (v2, v1) ∈ R}`.
    pub fn apply(&self, s: &Subspace) -> Result<Subspace, LinRelError> {
        if s.ambient_dim() != self.source_dim {
            return Err(LinRelError::DimensionMismatch(format!(
                "apply: subspace ambient {} != source {}",
                s.ambient_dim(),
                self.source_dim
            )));
        }
        let block = Subspace::full(self.target_dim).direct_sum(s);
        let inter = self.graph.intersection(&block)?;
        Ok(inter.project_block(0, self.target_dim))
    }

    /// `ann♮(R): V1* ⇸ V2*` — pairs `(µ2, µ1)` with `⟨µ1, v1⟩ = ⟨µ2, v2⟩`
    /// for all `(v2, v1) ∈ R`. Computed as the annihilator of the graph with
    /// the source block negated; this is the single sign convention all
    /// other modules route through.
    pub fn ann_natural(&self) -> LinearRelation {
        let ann = self.graph.annihilator();
        let t = self.target_dim;
        let vectors: Vec<Vec<Rat>> = ann
            .basis_vectors()
            .into_iter()
            .map(|mut v| {
                for x in v[t..].iter_mut() {
                    *x = -x.clone();
                }
                v
            })
            .collect();
        LinearRelation {
            source_dim: self.source_dim,
            target_dim: t,
            graph: Subspace::from_vectors(t + self.source_dim, &vectors),
        }
    }

    /// Direct product `r2 × r1 : V1 × W1 ⇸ V2 × W2`, with block order
    /// `(V2, W2, V1, W1)`.
    pub fn product(r2: &LinearRelation, r1: &LinearRelation) -> LinearRelation {
        let t2 = r2.target_dim;
        let s2 = r2.source_dim;
        let t1 = r1.target_dim;
        let s1 = r1.source_dim;
        // r2.graph × r1.graph has block order (t2, s2, t1, s1); reorder to
        // (t2, t1, s2, s1).
        let sum = r2.graph.direct_sum(&r1.graph);
        let mut perm = Vec::with_capacity(t2 + s2 + t1 + s1);
        perm.extend(0..t2);
        perm.extend(t2 + s2..t2 + s2 + t1);
        perm.extend(t2..t2 + s2);
        perm.extend(t2 + s2 + t1..t2 + s2 + t1 + s1);
        LinearRelation {
            source_dim: s2 + s1,
            target_dim: t2 + t1,
            graph: sum.permute(&perm),
        }
    }

    /// Renumbers the coordinates of both blocks: entry `i` of the new graph
    /// reads entry `perm[i]` of the old one.
    pub fn permute_coordinates(&self, perm: &[usize]) -> LinearRelation {
        LinearRelation {
            source_dim: self.source_dim,
            target_dim: self.target_dim,
            graph: self.graph.permute(perm),
        }
    }
}

impl std::fmt::Debug for LinearRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LinearRelation({} ⇸ {}, dim {}) {:?}",
            self.source_dim,
            self.target_dim,
            self.dim(),
            self.graph
        )
    }
}
