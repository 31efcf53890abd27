//! Root vectors of the classical types as sparse integer matrices.
//!
//! | type | size | form | positive root vectors |
//! |------|------|------|-----------------------|
//! | Aₙ | n+1 | | `E_ij` for `eᵢ − eⱼ` |
//! | Bₙ | 2n+1 | `M[i,n+i] = M[n+i,i] = 1`, `M[2n,2n] = 2`, `MX` skew | `E_ij − E_{n+j,n+i}`, `E_{i,n+j} − E_{j,n+i}`, `2E_{i,2n} − E_{2n,n+i}` |
//! | Cₙ | 2n | `M[i,n+i] = 1, M[n+i,i] = −1`, `MX` symmetric | `E_ij − E_{n+j,n+i}`, `E_{i,n+j} + E_{j,n+i}`, `E_{i,n+i}` |
//! | Dₙ | 2n | as Bₙ without the last row and column | `E_ij − E_{n+j,n+i}`, `E_{i,n+j} − E_{j,n+i}` |
//!
//! Indices are 0-based; the torus acts on position `a` by `eₐ` for `a < n`,
//! by `−e_{a−n}` for `n ≤ a < 2n` and trivially on the extra row of Bₙ.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::ChevalleyError;
use crate::exactq::{QVector, Rational};
use crate::rootsys::{Family, RootSystem};

pub(super) type SparseMatrix = BTreeMap<(usize, usize), i64>;

pub(super) fn commutator(x: &SparseMatrix, y: &SparseMatrix) -> SparseMatrix {
    let mut out = SparseMatrix::new();
    let mut add = |a: &SparseMatrix, b: &SparseMatrix, sign: i64| {
        for (&(i, k), &u) in a {
            for (&(_, j), &v) in b.range((k, 0)..(k + 1, 0)) {
                *out.entry((i, j)).or_insert(0) += sign * u * v;
            }
        }
    };
    add(x, y, 1);
    add(y, x, -1);
    out.retain(|_, v| *v != 0);
    out
}

pub(super) struct Realisation {
    pub size: usize,
    /// The bilinear form, absent for type A.
    pub form: Option<SparseMatrix>,
    /// `true` when members satisfy `MX` symmetric rather than skew.
    pub symplectic: bool,
    pub vectors: Vec<SparseMatrix>,
}

fn weight(rs: &RootSystem, a: usize) -> QVector {
    let m = rs.ambient_dim();
    let mut w = vec![Rational::zero(); m];
    // type A matrices are m×m, so only the first branch applies
    if a < m {
        w[a] = Rational::one();
    } else if a < 2 * m {
        w[a - m] = -Rational::one();
    }
    QVector::new(w)
}

/// Positive root vector for `r` in the matrix realisation of `rs`.
fn root_vector(rs: &RootSystem, r: &QVector) -> Option<SparseMatrix> {
    let family = rs.rtype().family();
    let n = rs.ambient_dim();
    let nz: Vec<(usize, i64)> =
        r.nonzeros().map(|(i, c)| (i, c.to_integer().try_into().expect("small coordinate"))).collect();
    let m = |entries: &[((usize, usize), i64)]| Some(entries.iter().copied().collect::<SparseMatrix>());
    match (family, nz.as_slice()) {
        (Family::A, [(i, 1), (j, -1)]) => m(&[((*i, *j), 1)]),
        (_, [(i, 1), (j, -1)]) => m(&[((*i, *j), 1), ((n + j, n + i), -1)]),
        (Family::C, [(i, 1), (j, 1)]) => m(&[((*i, n + j), 1), ((*j, n + i), 1)]),
        (Family::B | Family::D, [(i, 1), (j, 1)]) => m(&[((*i, n + j), 1), ((*j, n + i), -1)]),
        (Family::C, [(i, 2)]) => m(&[((*i, n + i), 1)]),
        (Family::B, [(i, 1)]) => m(&[((*i, 2 * n), 2), ((2 * n, n + i), -1)]),
        _ => None,
    }
}

pub(super) fn realise(rs: &RootSystem) -> Result<Realisation, ChevalleyError> {
    let family = rs.rtype().family();
    let n = rs.ambient_dim();
    let (size, form, symplectic) = match family {
        Family::A => (n, None, false),
        Family::B | Family::D => {
            let size = if family == Family::B { 2 * n + 1 } else { 2 * n };
            let mut f = SparseMatrix::new();
            for i in 0..n {
                f.insert((i, n + i), 1);
                f.insert((n + i, i), 1);
            }
            if family == Family::B {
                f.insert((2 * n, 2 * n), 2);
            }
            (size, Some(f), false)
        }
        Family::C => {
            let mut f = SparseMatrix::new();
            for i in 0..n {
                f.insert((i, n + i), 1);
                f.insert((n + i, i), -1);
            }
            (2 * n, Some(f), true)
        }
        _ => return Err(ChevalleyError::NoMatrixRealisation(rs.rtype().to_string())),
    };
    let mut vectors = Vec::with_capacity(rs.num_positive());
    for (idx, r) in rs.positive().iter().enumerate() {
        let x = root_vector(rs, r)
            .ok_or_else(|| ChevalleyError::SignAssignment(format!("no root vector for {}", rs.label(idx))))?;
        for &(a, b) in x.keys() {
            if &(&weight(rs, a) - &weight(rs, b)) != r {
                return Err(ChevalleyError::SignAssignment(format!(
                    "entry ({a}, {b}) has the wrong weight for {}",
                    rs.label(idx)
                )));
            }
        }
        vectors.push(x);
    }
    Ok(Realisation { size, form, symplectic, vectors })
}

/// `c` with `x = c · y`, if `x` is a multiple of `y ≠ 0`.
pub(super) fn proportion(x: &SparseMatrix, y: &SparseMatrix) -> Option<Rational> {
    let (&key, &base) = y.iter().next()?;
    let c = Rational::new(x.get(&key).copied().unwrap_or(0).into(), base.into());
    let entry = |m: &SparseMatrix, k| Rational::from_integer(m.get(k).copied().unwrap_or(0).into());
    let fits = x.keys().chain(y.keys()).all(|k| entry(x, k) == &c * entry(y, k));
    fits.then_some(c)
}

impl Realisation {
    /// Whether `x` preserves the form: `MX` skew (or symmetric for Cₙ).
    pub(super) fn preserves_form(&self, x: &SparseMatrix) -> bool {
        let Some(form) = &self.form else { return x.keys().all(|&(i, j)| i < j && j < self.size) };
        let mx = product(form, x);
        let sign = if self.symplectic { 1 } else { -1 };
        mx.iter().all(|(&(i, j), &v)| mx.get(&(j, i)).copied().unwrap_or(0) == sign * v)
    }
}

fn product(x: &SparseMatrix, y: &SparseMatrix) -> SparseMatrix {
    let mut out = SparseMatrix::new();
    for (&(i, k), &u) in x {
        for (&(_, j), &v) in y.range((k, 0)..(k + 1, 0)) {
            *out.entry((i, j)).or_insert(0) += u * v;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}
