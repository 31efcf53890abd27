//! Finite-dimensional nilpotent Lie algebras given by structure constants.
//!
//! An algebra is a labelled basis `b₁ … bₙ` and a table
//! `[bᵢ, bⱼ] = Σₖ cᵢⱼᵏ bₖ` supplied for `i < j`; the rest of the table follows
//! from antisymmetry. Construction verifies the Jacobi identity on every basis
//! triple and nilpotency through the lower central series, so every
//! [`LieAlgebra`] value in the program is a genuine nilpotent Lie algebra.
//!
//! Subspaces ([`Subspace`]) are kept in canonical reduced row-echelon form;
//! centralizers and central series are obtained as null spaces of sparse
//! linear systems.

pub mod examples;
mod series;
mod subspace;

pub use examples::{abelian, filiform, heisenberg, six_dim_example};
pub use subspace::{Ideal, Subspace};

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::exactq::sparse::{self, SparseVec};
use crate::exactq::{QVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket key ({i}, {j}) must satisfy i < j")]
    KeyOrder { i: usize, j: usize },
    #[error("bracket ({i}, {j}) given twice")]
    DuplicateKey { i: usize, j: usize },
    #[error("{labels} labels supplied for dimension {dim}")]
    LabelCount { labels: usize, dim: usize },
    #[error("algebra must have positive dimension")]
    Empty,
    #[error("Jacobi identity fails on ({a}, {b}, {c})")]
    Jacobi { a: String, b: String, c: String, triple: (usize, usize, usize) },
    #[error("not nilpotent: lower central series stabilises at a nonzero term of dimension {stabilized_dim}")]
    NotNilpotent { stabilized_dim: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("rescaling factor for basis vector {0} is zero")]
    ZeroScale(usize),
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
}

/// Whether [`LieAlgebra::from_constants`] runs the Jacobi and nilpotency
/// checks. `Deferred` exists only so malformed tables can be inspected with
/// [`LieAlgebra::jacobi_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Checks {
    Full,
    Deferred,
}

/// One table entry `[b_i, b_j] = Σ coeffs`, 0-based, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: SparseVec,
}

impl BracketEntry {
    pub fn new(i: usize, j: usize, coeffs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut m = BTreeMap::new();
        for (k, c) in coeffs {
            *m.entry(k).or_insert_with(Rational::zero) += c;
        }
        BracketEntry { i, j, coeffs: sparse::from_map(m) }
    }

    /// `[b_i, b_j] = c · b_k` with integer `c`.
    pub fn simple(i: usize, j: usize, k: usize, c: i64) -> Self {
        Self::new(i, j, [(k, crate::exactq::rat(c))])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// Full antisymmetric table; `table[i][j] = [b_i, b_j]`.
    table: Vec<Vec<SparseVec>>,
}

impl LieAlgebra {
    pub fn from_constants(
        dim: usize,
        labels: Option<Vec<String>>,
        entries: Vec<BracketEntry>,
        checks: Checks,
    ) -> Result<Self, LieError> {
        if dim == 0 {
            return Err(LieError::Empty);
        }
        let labels = labels.unwrap_or_else(|| default_labels(dim));
        if labels.len() != dim {
            return Err(LieError::LabelCount { labels: labels.len(), dim });
        }
        let mut table = vec![vec![SparseVec::new(); dim]; dim];
        let mut seen = vec![vec![false; dim]; dim];
        for e in entries {
            for &idx in [e.i, e.j].iter().chain(e.coeffs.iter().map(|(k, _)| k)) {
                if idx >= dim {
                    return Err(LieError::IndexOutOfRange { index: idx, dim });
                }
            }
            if e.i >= e.j {
                return Err(LieError::KeyOrder { i: e.i, j: e.j });
            }
            if seen[e.i][e.j] {
                return Err(LieError::DuplicateKey { i: e.i, j: e.j });
            }
            seen[e.i][e.j] = true;
            let coeffs: SparseVec = e.coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            table[e.j][e.i] = coeffs.iter().map(|(k, c)| (*k, -c)).collect();
            table[e.i][e.j] = coeffs;
        }
        let g = LieAlgebra { labels, table };
        if checks == Checks::Full {
            g.validate()?;
        }
        Ok(g)
    }

    /// Runs the construction-time checks on an algebra built with
    /// [`Checks::Deferred`].
    pub fn validate(&self) -> Result<(), LieError> {
        if let Some(&(a, b, c)) = self.jacobi_check().first() {
            return Err(LieError::Jacobi {
                a: self.labels[a].clone(),
                b: self.labels[b].clone(),
                c: self.labels[c].clone(),
                triple: (a, b, c),
            });
        }
        let lcs = self.lower_central_series();
        let last = lcs.last().expect("nonempty");
        if last.dim() != 0 {
            return Err(LieError::NotNilpotent { stabilized_dim: last.dim() });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// `[b_i, b_j]` as a sparse vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    /// The nonzero table entries with `i < j`, in order.
    pub fn entries(&self) -> Vec<BracketEntry> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.table[i][j].is_empty() {
                    out.push(BracketEntry { i, j, coeffs: self.table[i][j].clone() });
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &QVector, y: &QVector) -> Result<QVector, LieError> {
        for v in [x, y] {
            if v.dim() != self.dim() {
                return Err(LieError::Dimension(format!(
                    "vector of length {} for algebra of dimension {}",
                    v.dim(),
                    self.dim()
                )));
            }
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &QVector, y: &QVector) -> QVector {
        let mut out = vec![Rational::zero(); self.dim()];
        let ys: Vec<(usize, &Rational)> = y.nonzeros().collect();
        for (i, xi) in x.nonzeros() {
            for &(j, yj) in &ys {
                let row = &self.table[i][j];
                if row.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, v) in row {
                    out[*k] += &c * v;
                }
            }
        }
        QVector::new(out)
    }

    /// `[x, v]` for `v` given sparsely.
    pub(crate) fn bracket_sparse(&self, x: &QVector, v: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, xi) in x.nonzeros() {
            for (j, vj) in v {
                let row = &self.table[i][*j];
                if !row.is_empty() {
                    sparse::accumulate(&mut acc, &(xi * vj), row);
                }
            }
        }
        sparse::from_map(acc)
    }

    fn bracket_basis_sparse(&self, i: usize, v: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (j, vj) in v {
            let row = &self.table[i][*j];
            if !row.is_empty() {
                sparse::accumulate(&mut acc, vj, row);
            }
        }
        sparse::from_map(acc)
    }

    /// Basis triples `i < j < k` on which the Jacobi identity fails. By
    /// trilinearity an empty result proves the identity everywhere.
    pub fn jacobi_check(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut out: Vec<(usize, usize, usize)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut bad = Vec::new();
                for j in i + 1..n {
                    for k in j + 1..n {
                        let t1 = self.bracket_basis_sparse(i, &self.table[j][k]);
                        let t2 = self.bracket_basis_sparse(j, &self.table[k][i]);
                        let t3 = self.bracket_basis_sparse(k, &self.table[i][j]);
                        let one = Rational::from_integer(1.into());
                        let s = sparse::axpy(&sparse::axpy(&t1, &one, &t2), &one, &t3);
                        if !s.is_empty() {
                            bad.push((i, j, k));
                        }
                    }
                }
                bad
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// `g = g¹ ⊇ g² = [g, g] ⊇ …`, ending at the first repeated term (zero
    /// for a nilpotent algebra).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let n = self.dim();
        let mut series = vec![Subspace::whole(n)];
        loop {
            let cur = series.last().expect("nonempty");
            let mut vecs = Vec::new();
            for v in cur.rows() {
                let sv = sparse::from_dense(v);
                for i in 0..n {
                    let w = self.bracket_basis_sparse(i, &sv);
                    if !w.is_empty() {
                        vecs.push(sparse::to_dense(&w, n));
                    }
                }
            }
            let next = Subspace::span(n, vecs).expect("dims");
            let stop = next.dim() == 0 || next.dim() == cur.dim();
            if next.dim() != cur.dim() {
                series.push(next);
            }
            if stop {
                return series;
            }
        }
    }

    /// Number of nonzero terms of the lower central series.
    pub fn nilpotency_class(&self) -> usize {
        self.lower_central_series().iter().filter(|s| s.dim() > 0).count()
    }

    pub fn is_abelian_algebra(&self) -> bool {
        self.table.iter().all(|row| row.iter().all(Vec::is_empty))
    }

    /// `g₁ ⊕ g₂` with the basis of `g₂` placed after that of `g₁`. Labels of
    /// the second summand are primed until they are distinct.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n1 = self.dim();
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let shift = |v: &SparseVec| -> SparseVec { v.iter().map(|(k, c)| (k + n1, c.clone())).collect() };
        let mut entries = self.entries();
        entries.extend(other.entries().into_iter().map(|e| BracketEntry {
            i: e.i + n1,
            j: e.j + n1,
            coeffs: shift(&e.coeffs),
        }));
        LieAlgebra::from_constants(labels.len(), Some(labels), entries, Checks::Deferred)
            .expect("direct sum of valid algebras")
    }

    /// The same algebra in the basis `b'_i = q_i b_i`:
    /// `[b'_i, b'_j] = Σ_k q_i q_j c_ij^k / q_k · b'_k`.
    pub fn rescale(&self, q: &[Rational]) -> Result<LieAlgebra, LieError> {
        if q.len() != self.dim() {
            return Err(LieError::Dimension(format!("{} scale factors for dimension {}", q.len(), self.dim())));
        }
        if let Some(i) = q.iter().position(Zero::is_zero) {
            return Err(LieError::ZeroScale(i));
        }
        let entries = self
            .entries()
            .into_iter()
            .map(|e| {
                let f = &q[e.i] * &q[e.j];
                let coeffs = e.coeffs.iter().map(|(k, c)| (*k, &f * c / &q[*k])).collect();
                BracketEntry { i: e.i, j: e.j, coeffs }
            })
            .collect();
        LieAlgebra::from_constants(self.dim(), Some(self.labels.clone()), entries, Checks::Deferred)
    }

    /// A subalgebra `s` as an algebra in its own right, in the coordinates of
    /// the canonical basis of `s`.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra, LieError> {
        let rows = s.rows();
        if rows.is_empty() {
            return Err(LieError::Empty);
        }
        let mut entries = Vec::new();
        for a in 0..rows.len() {
            for b in a + 1..rows.len() {
                let w = self.bracket_unchecked(&rows[a], &rows[b]);
                let c = s.coordinates(&w).ok_or(LieError::NotSubalgebra)?;
                let coeffs: Vec<(usize, Rational)> = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                if !coeffs.is_empty() {
                    entries.push(BracketEntry { i: a, j: b, coeffs });
                }
            }
        }
        let labels = rows
            .iter()
            .map(|r| {
                let terms: Vec<String> = r
                    .nonzeros()
                    .map(|(i, c)| {
                        if *c == Rational::from_integer(1.into()) {
                            self.labels[i].clone()
                        } else {
                            format!("({c}){}", self.labels[i])
                        }
                    })
                    .collect();
                terms.join("+")
            })
            .collect();
        LieAlgebra::from_constants(rows.len(), Some(labels), entries, Checks::Deferred)
    }
}

pub(crate) fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("x{i}")).collect()
}
