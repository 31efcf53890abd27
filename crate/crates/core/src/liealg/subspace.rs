use std::ops::Deref;

use num_traits::Zero;

use crate::exactq::{QMatrix, QVector, Rational};

use super::LieError;

/// A subspace of ℚⁿ in canonical form: the reduced row-echelon basis. Two
/// subspaces are equal iff their canonical bases are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: QMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: Vec<QVector>) -> Result<Self, LieError> {
        let m = QMatrix::new(ambient, vectors).map_err(|e| LieError::Dimension(e.to_string()))?;
        Ok(Self::from_matrix(&m))
    }

    pub fn from_matrix(m: &QMatrix) -> Self {
        let (basis, pivots) = m.rref_with_pivots();
        Subspace { basis, pivots }
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace { basis: QMatrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { basis: QMatrix::empty(ambient), pivots: Vec::new() }
    }

    /// `span{ e_i : i ∈ indices }`.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let rows = idx.iter().map(|&i| QVector::unit(ambient, i)).collect();
        Subspace { basis: QMatrix::new(ambient, rows).expect("unit rows"), pivots: idx }
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn rows(&self) -> &[QVector] {
        self.basis.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// When the subspace is spanned by standard basis vectors, their indices.
    pub fn coordinate_support(&self) -> Option<Vec<usize>> {
        self.rows().iter().all(|r| r.nonzeros().count() == 1).then(|| self.pivots.clone())
    }

    /// Remainder of `v` after eliminating the pivot coordinates; zero iff
    /// `v` lies in the subspace. This is the projection onto the canonical
    /// complement spanned by the non-pivot coordinates.
    pub fn reduce(&self, v: &QVector) -> QVector {
        let mut out = v.clone();
        for (row, &p) in self.rows().iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                out.add_scaled(&-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &QVector) -> bool {
        v.dim() == self.ambient_dim() && self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows().iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in the canonical basis (read off the pivots).
    pub fn coordinates(&self, v: &QVector) -> Option<Vec<Rational>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let m = QMatrix::intersect(&self.basis, &other.basis).expect("same ambient");
        Subspace::from_matrix(&m)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_matrix(&self.basis.stack(&other.basis).expect("same ambient"))
    }

    /// Embed into a larger ambient space at coordinate offset `offset`.
    pub fn embed(&self, ambient: usize, offset: usize) -> Subspace {
        let rows = self
            .rows()
            .iter()
            .map(|r| {
                let mut e = vec![Rational::zero(); ambient];
                for (i, x) in r.nonzeros() {
                    e[offset + i] = x.clone();
                }
                QVector::new(e)
            })
            .collect();
        Subspace::from_matrix(&QMatrix::new(ambient, rows).expect("dims"))
    }
}

/// A subspace together with the outcome of the ideal test `[g, s] ⊆ s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    subspace: Subspace,
    verified: bool,
}

impl Ideal {
    pub(crate) fn new_checked(subspace: Subspace, verified: bool) -> Self {
        Ideal { subspace, verified }
    }

    pub fn verified(&self) -> bool {
        self.verified
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn into_subspace(self) -> Subspace {
        self.subspace
    }
}

impl Deref for Ideal {
    type Target = Subspace;
    fn deref(&self) -> &Subspace {
        &self.subspace
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat;

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(3, vec![QVector::from_i64(&[1, 1, 0]), QVector::from_i64(&[1, -1, 0])]).unwrap();
        assert_eq!(a, Subspace::coordinate(3, [0, 1]));
        assert_eq!(a.coordinate_support(), Some(vec![0, 1]));
    }

    #[test]
    fn reduce_and_coordinates() {
        let s = Subspace::span(3, vec![QVector::from_i64(&[1, 0, 2])]).unwrap();
        assert!(s.contains(&QVector::from_i64(&[2, 0, 4])));
        assert!(!s.contains(&QVector::from_i64(&[0, 0, 1])));
        assert_eq!(s.coordinates(&QVector::from_i64(&[3, 0, 6])), Some(vec![rat(3)]));
        assert_eq!(s.reduce(&QVector::from_i64(&[1, 1, 1])), QVector::from_i64(&[0, 1, -1]));
    }

    #[test]
    fn intersect_and_sum() {
        let a = Subspace::coordinate(4, [0, 1, 2]);
        let b = Subspace::coordinate(4, [2, 3]);
        assert_eq!(a.intersect(&b), Subspace::coordinate(4, [2]));
        assert_eq!(a.sum(&b), Subspace::whole(4));
        assert_eq!(a.intersect(&Subspace::zero(4)), Subspace::zero(4));
    }
}
