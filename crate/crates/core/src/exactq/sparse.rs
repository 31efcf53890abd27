//! Sparse rows for the large, mostly-zero linear systems that centralizer and
//! central-series computations produce (up to `dim²` equations for a
//! 120-dimensional algebra).

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{QVector, Rational};

/// Sorted by index, no explicit zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn from_dense(v: &QVector) -> SparseVec {
    v.nonzeros().map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &SparseVec, dim: usize) -> QVector {
    let mut out = vec![Rational::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    QVector::new(out)
}

/// `a + c * b`.
pub fn axpy(a: &SparseVec, c: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Accumulates `Σ_k coeff_k · v_k` into a map keyed by coordinate.
pub fn accumulate(acc: &mut BTreeMap<usize, Rational>, c: &Rational, v: &SparseVec) {
    for (i, x) in v {
        let e = acc.entry(*i).or_insert_with(Rational::zero);
        *e += c * x;
    }
}

pub fn from_map(acc: BTreeMap<usize, Rational>) -> SparseVec {
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// Basis of `{ c : Σ_r c_r · rows[r] = 0 }`, each vector indexed by row number.
///
/// Forward elimination on `[rows | I]`; a row whose left part cancels to zero
/// contributes its right part to the kernel.
pub fn left_kernel(rows: Vec<SparseVec>) -> Vec<SparseVec> {
    let mut pivots: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut kernel = Vec::new();
    let nrows = rows.len();
    for (r, row) in rows.into_iter().enumerate() {
        let mut left = row;
        let mut right: SparseVec = vec![(r, Rational::from_integer(1.into()))];
        loop {
            let Some((lead, lead_val)) = left.first().cloned() else {
                kernel.push(right);
                break;
            };
            match pivots.get(&lead) {
                Some((pl, pr)) => {
                    let c = -(lead_val / &pl[0].1);
                    left = axpy(&left, &c, pl);
                    right = axpy(&right, &c, pr);
                }
                None => {
                    pivots.insert(lead, (left, right));
                    break;
                }
            }
        }
    }
    debug_assert_eq!(pivots.len() + kernel.len(), nrows, "rank-nullity");
    kernel
}
