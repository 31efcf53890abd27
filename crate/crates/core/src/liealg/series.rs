//! Centres, centralizers and upper central series, all computed as null
//! spaces of sparse linear systems over ℚ.

use crate::exactq::sparse::{self, SparseVec};
use crate::exactq::QVector;

use super::{Ideal, LieAlgebra, Subspace};

impl LieAlgebra {
    /// `{ x ∈ inside : image(x) = 0 }` for a linear `image`, evaluated on the
    /// canonical basis of `inside`.
    fn solve_within(&self, inside: &Subspace, image: impl Fn(&QVector) -> SparseVec) -> Subspace {
        let rows: Vec<SparseVec> = inside.rows().iter().map(image).collect();
        let kernel = sparse::left_kernel(rows);
        let n = self.dim();
        let vecs = kernel
            .iter()
            .map(|coef| {
                let mut v = QVector::zeros(n);
                for (r, c) in coef {
                    v.add_scaled(c, &inside.rows()[*r]);
                }
                v
            })
            .collect();
        Subspace::span(n, vecs).expect("dims")
    }

    /// `{ x ∈ inside : [x, of] = 0 }`.
    pub fn centralizer(&self, inside: &Subspace, of: &Subspace) -> Subspace {
        let n = self.dim();
        let of_sparse: Vec<SparseVec> = of.rows().iter().map(sparse::from_dense).collect();
        self.solve_within(inside, |u| {
            let mut out = SparseVec::new();
            for (k, b) in of_sparse.iter().enumerate() {
                out.extend(self.bracket_sparse(u, b).into_iter().map(|(j, c)| (k * n + j, c)));
            }
            out
        })
    }

    /// `{ x ∈ inside : [x, over] ⊆ lower }`.
    pub fn preimage_of_center(&self, inside: &Subspace, over: &Subspace, lower: &Subspace) -> Subspace {
        let n = self.dim();
        let over_sparse: Vec<SparseVec> = over.rows().iter().map(sparse::from_dense).collect();
        self.solve_within(inside, |u| {
            let mut out = SparseVec::new();
            for (k, b) in over_sparse.iter().enumerate() {
                let w = sparse::to_dense(&self.bracket_sparse(u, b), n);
                let r = lower.reduce(&w);
                out.extend(r.nonzeros().map(|(j, c)| (k * n + j, c.clone())));
            }
            out
        })
    }

    pub fn center(&self) -> Ideal {
        let g = Subspace::whole(self.dim());
        let z = self.centralizer(&g, &g);
        self.ideal(z)
    }

    /// Upper central series `Z₁ ⊂ Z₂ ⊂ … ⊂ Z_c = g` of `g` itself.
    pub fn upper_central_series(&self) -> Vec<Ideal> {
        self.upper_central_series_within(&Subspace::whole(self.dim())).into_iter().map(|s| self.ideal(s)).collect()
    }

    /// Upper central series of the subalgebra `s`, computed inside `s`:
    /// `Z_i(s) = { x ∈ s : [x, s] ⊆ Z_{i-1}(s) }`. Stops when the chain
    /// reaches `s` or stops growing.
    pub fn upper_central_series_within(&self, s: &Subspace) -> Vec<Subspace> {
        let mut out = Vec::new();
        let mut prev = Subspace::zero(self.dim());
        loop {
            let next = self.preimage_of_center(s, s, &prev);
            if next.dim() == prev.dim() {
                return out;
            }
            out.push(next.clone());
            if next.dim() == s.dim() {
                return out;
            }
            prev = next;
        }
    }

    /// The `k`-th centre of the subalgebra `s` (`k = 0` gives zero).
    pub fn nth_center_within(&self, s: &Subspace, k: usize) -> Subspace {
        let mut z = Subspace::zero(self.dim());
        for _ in 0..k {
            z = self.preimage_of_center(s, s, &z);
        }
        z
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let n = self.dim();
        s.rows().iter().all(|v| (0..n).all(|i| s.contains(&self.bracket_unchecked(&QVector::unit(n, i), v))))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let rows = s.rows();
        (0..rows.len()).all(|a| (a + 1..rows.len()).all(|b| s.contains(&self.bracket_unchecked(&rows[a], &rows[b]))))
    }

    pub fn is_abelian(&self, s: &Subspace) -> bool {
        let rows = s.rows();
        (0..rows.len()).all(|a| (a + 1..rows.len()).all(|b| self.bracket_unchecked(&rows[a], &rows[b]).is_zero()))
    }

    /// Wraps `s` with the result of the ideal test.
    pub fn ideal(&self, s: Subspace) -> Ideal {
        let ok = self.is_ideal(&s);
        Ideal::new_checked(s, ok)
    }

    /// `[x, s] ⊆ lower` for every `x ∈ g`, i.e. `s/lower` is central in `g/lower`.
    pub fn is_central_modulo(&self, s: &Subspace, lower: &Subspace) -> bool {
        let n = self.dim();
        s.rows().iter().all(|v| (0..n).all(|i| lower.contains(&self.bracket_unchecked(&QVector::unit(n, i), v))))
    }

    /// `ad(x)` applied to each basis vector of `s`.
    pub fn ad_images(&self, x: &QVector, s: &Subspace) -> Vec<QVector> {
        s.rows().iter().map(|v| self.bracket_unchecked(x, v)).collect()
    }

    /// `[x, [x, s]] = 0`.
    pub fn ad_squared_kills(&self, x: &QVector, s: &Subspace) -> bool {
        s.rows().iter().all(|v| self.bracket_unchecked(x, &self.bracket_unchecked(x, v)).is_zero())
    }
}
