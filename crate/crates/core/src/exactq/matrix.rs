use std::fmt;

use num_traits::{One, Zero};

use super::{ExactqError, QVector, Rational};

/// Dense rational matrix stored by rows. A matrix with zero rows still knows
/// its column count, so the zero subspace of ℚⁿ is representable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    ncols: usize,
    rows: Vec<QVector>,
}

impl QMatrix {
    pub fn new(ncols: usize, rows: Vec<QVector>) -> Result<Self, ExactqError> {
        for r in &rows {
            r.check_dim(ncols)?;
        }
        Ok(QMatrix { ncols, rows })
    }

    pub fn from_i64(ncols: usize, rows: &[&[i64]]) -> Result<Self, ExactqError> {
        Self::new(ncols, rows.iter().map(|r| QVector::from_i64(r)).collect())
    }

    pub fn empty(ncols: usize) -> Self {
        QMatrix { ncols, rows: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        QMatrix { ncols: n, rows: (0..n).map(|i| QVector::unit(n, i)).collect() }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        QMatrix { ncols, rows: vec![QVector::zeros(ncols); nrows] }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[QVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<QVector> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &QVector {
        &self.rows[i]
    }

    pub fn mul_vec(&self, v: &QVector) -> Result<QVector, ExactqError> {
        v.check_dim(self.ncols)?;
        Ok(QVector::new(self.rows.iter().map(|r| r.dot(v)).collect()))
    }

    pub fn transpose(&self) -> QMatrix {
        let rows = (0..self.ncols).map(|j| QVector::new(self.rows.iter().map(|r| r[j].clone()).collect())).collect();
        QMatrix { ncols: self.nrows(), rows }
    }

    /// Reduced row-echelon form with zero rows dropped, plus pivot columns.
    pub fn rref_with_pivots(&self) -> (QMatrix, Vec<usize>) {
        let mut m: Vec<Vec<Rational>> = self.rows.iter().map(|r| r.entries().to_vec()).collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..self.ncols {
            if top == m.len() {
                break;
            }
            let Some(p) = (top..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(top, p);
            let inv = Rational::one() / &m[top][col];
            if !inv.is_one() {
                for x in m[top].iter_mut().skip(col) {
                    if !x.is_zero() {
                        *x *= &inv;
                    }
                }
            }
            let pivot_row = m[top].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == top || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
            pivots.push(col);
            top += 1;
        }
        m.truncate(top);
        let rows = m.into_iter().map(QVector::new).collect();
        (QMatrix { ncols: self.ncols, rows }, pivots)
    }

    pub fn rref(&self) -> QMatrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Pivot columns of a matrix already in reduced row-echelon form.
    pub fn pivots_of_rref(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.nonzeros().next().map(|(i, _)| i).expect("rref rows are nonzero")).collect()
    }

    pub fn is_rref(&self) -> bool {
        self.rref() == *self
    }

    /// Basis (in rref) of the null space `{ v : self · v = 0 }`.
    pub fn kernel(&self) -> QMatrix {
        let (r, pivots) = self.rref_with_pivots();
        let n = self.ncols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = QVector::unit(n, free).into_entries();
            for (row, &p) in r.rows.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            basis.push(QVector::new(v));
        }
        let k = QMatrix { ncols: n, rows: basis }.rref();
        debug_assert_eq!(pivots.len() + k.nrows(), n, "rank-nullity");
        k
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &QMatrix) -> Result<QMatrix, ExactqError> {
        if self.ncols != other.ncols {
            return Err(ExactqError::DimensionMismatch { expected: self.ncols, found: other.ncols });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(QMatrix { ncols: self.ncols, rows })
    }

    /// Rref basis of `rowspace(a) ∩ rowspace(b)`, computed as the common null
    /// space of both annihilators.
    pub fn intersect(a: &QMatrix, b: &QMatrix) -> Result<QMatrix, ExactqError> {
        let ann = a.kernel().stack(&b.kernel())?;
        Ok(ann.kernel())
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat;
    use proptest::prelude::*;

    fn m(ncols: usize, rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_i64(ncols, rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        assert_eq!(m(2, &[&[2, 4], &[1, 2]]).rref(), m(2, &[&[1, 2]]));
        assert_eq!(QMatrix::identity(3).rref(), QMatrix::identity(3));
        assert_eq!(m(2, &[&[0, 1], &[1, 0]]).rref(), m(2, &[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(QMatrix::zero(2, 2).kernel(), QMatrix::identity(2));
        assert_eq!(QMatrix::identity(4).kernel().nrows(), 0);
        // [1,1,0]: hand solution {(1,-1,0), (0,0,1)}; rref of that set.
        assert_eq!(m(3, &[&[1, 1, 0]]).kernel(), m(3, &[&[1, -1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn intersect_examples() {
        let e12 = m(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let e23 = m(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(QMatrix::intersect(&e12, &e23).unwrap(), m(3, &[&[0, 1, 0]]));
        assert_eq!(QMatrix::intersect(&e12, &e12).unwrap(), e12);
        assert_eq!(QMatrix::intersect(&e12, &QMatrix::empty(3)).unwrap(), QMatrix::empty(3));
        assert!(QMatrix::intersect(&e12, &QMatrix::identity(2)).is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(QMatrix::new(2, vec![QVector::from_i64(&[1, 2, 3])]).is_err());
    }

    fn matrix_with_cols(c: usize) -> impl Strategy<Value = QMatrix> {
        (1usize..5).prop_flat_map(move |r| {
            prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
                .prop_map(move |rows| QMatrix::new(c, rows.iter().map(|r| QVector::from_i64(r)).collect()).unwrap())
        })
    }

    fn small_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..6).prop_flat_map(matrix_with_cols)
    }

    fn three_matrices() -> impl Strategy<Value = (QMatrix, QMatrix, QMatrix)> {
        (1usize..6).prop_flat_map(|c| (matrix_with_cols(c), matrix_with_cols(c), matrix_with_cols(c)))
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(a in small_matrix()) {
            let r = a.rref();
            prop_assert_eq!(r.rref(), r.clone());
            prop_assert!(r.rows().iter().all(|row| !row.is_zero()));
            for (row, p) in r.rows().iter().zip(r.pivots_of_rref()) {
                prop_assert_eq!(row[p].clone(), rat(1));
            }
        }

        #[test]
        fn kernel_respects_rank_nullity(a in small_matrix()) {
            let k = a.kernel();
            prop_assert_eq!(a.rank() + k.nrows(), a.ncols());
            prop_assert_eq!(a.rref().kernel(), k.clone());
            for v in k.rows() {
                prop_assert!(a.mul_vec(v).unwrap().is_zero());
            }
        }

        #[test]
        fn intersect_commutes_and_associates((a, b, c) in three_matrices()) {
            let (a, b, c) = (a.rref(), b.rref(), c.rref());
            let ab = QMatrix::intersect(&a, &b).unwrap();
            prop_assert_eq!(ab.clone(), QMatrix::intersect(&b, &a).unwrap());
            prop_assert!(ab.nrows() <= a.nrows().min(b.nrows()));
            let left = QMatrix::intersect(&ab, &c).unwrap();
            let right = QMatrix::intersect(&a, &QMatrix::intersect(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
