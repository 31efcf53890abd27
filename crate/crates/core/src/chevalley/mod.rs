//! The positive nilpotent subalgebra `n⁺` of each split simple type.
//!
//! [`build_nplus`] returns a [`GradedBasis`]: a nilpotent Lie algebra with one
//! basis vector `x_α` per positive root and `[x_α, x_β] = N_{α,β} x_{α+β}`
//! (zero when `α + β` is not a root). Classical types come from commutators
//! of elementary matrices in `sl`, `so` and `sp`; every type can also be
//! built from the extraspecial-pair sign algorithm, see
//! [`structure_constants`]. Either way the table is Jacobi-checked before it
//! is returned.

mod extraspecial;
mod matrix;
#[cfg(test)]
mod tests;

pub use extraspecial::string_below;

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactq::{rat, QVector, Rational};
use crate::liealg::{BracketEntry, Checks, LieAlgebra, LieError};
use crate::rootsys::{Family, RootError, RootSystem, RootType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChevalleyError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("sign assignment failed: {0}")]
    SignAssignment(String),
    #[error("no matrix realisation for type {0}")]
    NoMatrixRealisation(String),
    #[error("grading violated at ({0}, {1}): {2}")]
    Grading(usize, usize, String),
}

/// How [`build_nplus_with`] obtains the structure constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Matrix commutators; types A to D only.
    Matrix,
    /// Extraspecial pairs, any type.
    Extraspecial,
}

/// `N_{α,β}` for ordered pairs of positive roots (indices into
/// [`RootSystem::positive`]) with `α + β ∈ Φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    n_map: BTreeMap<(usize, usize), Rational>,
}

impl StructureConstants {
    pub fn get(&self, a: usize, b: usize) -> Option<&Rational> {
        self.n_map.get(&(a, b))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.n_map.iter()
    }

    pub fn len(&self) -> usize {
        self.n_map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n_map.is_empty()
    }

    /// Pairs whose presence in the map disagrees with `α + β ∈ Φ`.
    pub fn support_mismatches(&self, rs: &RootSystem) -> Vec<(usize, usize)> {
        let n = rs.num_positive();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let present = self.n_map.get(&(a, b)).is_some_and(|c| !c.is_zero());
                if present != rs.sum(a, b).is_some() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Pairs with `|N_{α,β}| ≠ p + 1`.
    pub fn magnitude_violations(&self, rs: &RootSystem) -> Vec<(usize, usize)> {
        self.n_map
            .iter()
            .filter(|((a, b), c)| c.abs() != rat(string_below(rs, *a, *b) as i64 + 1))
            .map(|(&k, _)| k)
            .collect()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.n_map.iter().all(|((a, b), c)| self.n_map.get(&(*b, *a)) == Some(&-c))
    }
}

/// Chevalley constants of `rs` from the extraspecial-pair algorithm, with
/// `N = p + 1 > 0` on every extraspecial pair.
pub fn structure_constants(rs: &RootSystem) -> Result<StructureConstants, ChevalleyError> {
    Ok(StructureConstants { n_map: extraspecial::Solver::new(rs).solve()? })
}

fn matrix_constants(rs: &RootSystem) -> Result<StructureConstants, ChevalleyError> {
    let real = matrix::realise(rs)?;
    let n = rs.num_positive();
    let mut n_map = BTreeMap::new();
    for a in 0..n {
        debug_assert!(real.preserves_form(&real.vectors[a]));
        for b in 0..n {
            let c = matrix::commutator(&real.vectors[a], &real.vectors[b]);
            match rs.sum(a, b) {
                Some(s) => {
                    let k = matrix::proportion(&c, &real.vectors[s])
                        .filter(|k| !k.is_zero())
                        .ok_or_else(|| ChevalleyError::Grading(a, b, "commutator off the root line".into()))?;
                    n_map.insert((a, b), k);
                }
                None if !c.is_empty() => {
                    return Err(ChevalleyError::Grading(a, b, "nonzero commutator for a non-root sum".into()))
                }
                None => {}
            }
        }
    }
    Ok(StructureConstants { n_map })
}

/// A nilpotent algebra whose basis is indexed by positive roots, with every
/// bracket of basis vectors a multiple of a single basis vector.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    algebra: LieAlgebra,
    roots: RootSystem,
    root_of: Vec<usize>,
    basis_of: Vec<usize>,
    k_map: Vec<Vec<usize>>,
}

impl GradedBasis {
    /// Checks that `root_of` is a bijection onto `Φ⁺` and that
    /// `[x_i, x_j]` is a nonzero multiple of `x_k` with `root(k) = root(i) + root(j)`
    /// exactly when that sum is a root.
    pub fn new(algebra: LieAlgebra, roots: RootSystem, root_of: Vec<usize>) -> Result<Self, ChevalleyError> {
        let n = roots.num_positive();
        if algebra.dim() != n || root_of.len() != n {
            return Err(LieError::Dimension(format!(
                "{} basis vectors, {} roots, {} grades",
                algebra.dim(),
                n,
                root_of.len()
            ))
            .into());
        }
        let mut basis_of = vec![usize::MAX; n];
        for (i, &r) in root_of.iter().enumerate() {
            if r >= n || basis_of[r] != usize::MAX {
                return Err(ChevalleyError::Grading(i, i, "grading is not a bijection onto the positive roots".into()));
            }
            basis_of[r] = i;
        }
        let mut k_map = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let br = algebra.basis_bracket(i, j);
                k_map[i][j] = match roots.sum(root_of[i], root_of[j]) {
                    Some(s) => {
                        let k = basis_of[s];
                        if br.len() != 1 || br[0].0 != k {
                            return Err(ChevalleyError::Grading(
                                i,
                                j,
                                format!("expected a multiple of {}", algebra.label(k)),
                            ));
                        }
                        k
                    }
                    None if br.is_empty() => i,
                    None => return Err(ChevalleyError::Grading(i, j, "bracket should vanish".into())),
                };
            }
        }
        Ok(GradedBasis { algebra, roots, root_of, basis_of, k_map })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Positive-root index of basis vector `i`.
    pub fn root_of(&self, i: usize) -> usize {
        self.root_of[i]
    }

    pub fn root(&self, i: usize) -> &QVector {
        self.roots.root(self.root_of[i])
    }

    /// Basis index of positive root `r`.
    pub fn basis_of(&self, r: usize) -> usize {
        self.basis_of[r]
    }

    /// `k(i, j)`: the basis vector `[x_i, x_j]` is a multiple of, or `i` when
    /// the bracket vanishes.
    pub fn k(&self, i: usize, j: usize) -> usize {
        self.k_map[i][j]
    }

    pub fn bracket_vanishes(&self, i: usize, j: usize) -> bool {
        self.algebra.basis_bracket(i, j).is_empty()
    }

    /// Basis index of the highest root.
    pub fn highest(&self) -> usize {
        self.basis_of[self.roots.highest_index()]
    }

    /// Basis labels paired with root coordinates.
    pub fn grading(&self) -> Vec<(String, QVector)> {
        (0..self.dim()).map(|i| (self.algebra.label(i).to_string(), self.root(i).clone())).collect()
    }

    /// `N_{α,β}` read off the algebra.
    pub fn structure_constants(&self) -> StructureConstants {
        let mut n_map = BTreeMap::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if let Some((_, c)) = self.algebra.basis_bracket(i, j).first() {
                    n_map.insert((self.root_of[i], self.root_of[j]), c.clone());
                }
            }
        }
        StructureConstants { n_map }
    }
}

fn from_constants(
    rs: &RootSystem,
    nc: &StructureConstants,
    labels: Vec<String>,
) -> Result<GradedBasis, ChevalleyError> {
    let n = rs.num_positive();
    let entries = nc
        .iter()
        .filter(|((a, b), _)| a < b)
        .map(|(&(a, b), c)| BracketEntry::new(a, b, [(rs.sum(a, b).expect("root sum"), c.clone())]))
        .collect();
    let algebra = LieAlgebra::from_constants(n, Some(labels), entries, Checks::Full)?;
    GradedBasis::new(algebra, rs.clone(), (0..n).collect())
}

/// `n⁺` of `rs`, basis in positive-root order and labelled by roots.
/// Matrix commutators for A to D, extraspecial pairs otherwise.
pub fn build_nplus(rs: &RootSystem) -> Result<GradedBasis, ChevalleyError> {
    let method = match rs.rtype().family() {
        Family::A | Family::B | Family::C | Family::D => Method::Matrix,
        _ => Method::Extraspecial,
    };
    build_nplus_with(rs, method)
}

pub fn build_nplus_with(rs: &RootSystem, method: Method) -> Result<GradedBasis, ChevalleyError> {
    let nc = match method {
        Method::Matrix => matrix_constants(rs)?,
        Method::Extraspecial => structure_constants(rs)?,
    };
    let labels = (0..rs.num_positive()).map(|i| rs.label(i)).collect();
    from_constants(rs, &nc, labels)
}

/// Strictly upper triangular `n × n` matrices, basis `E_ij` (`i < j`) graded
/// by `eᵢ − eⱼ` in the Aₙ₋₁ realisation and ordered like its positive roots.
pub fn upper_triangular(n: usize) -> Result<GradedBasis, ChevalleyError> {
    let rs = RootSystem::build(RootType::new(Family::A, n.saturating_sub(1))?);
    let nc = matrix_constants(&rs)?;
    let labels = rs
        .positive()
        .iter()
        .map(|r| {
            let mut it = r.nonzeros();
            let (i, _) = it.next().expect("e_i");
            let (j, _) = it.next().expect("e_j");
            if n < 10 {
                format!("E{}{}", i + 1, j + 1)
            } else {
                format!("E{},{}", i + 1, j + 1)
            }
        })
        .collect();
    from_constants(&rs, &nc, labels)
}

/// `n⁺(C₂)` as `x0 = x_{e1−e2}`, `x1 = x_{2e1}`, `x2 = x_{2e2}`,
/// `x3 = x_{e1+e2}` with `[x0, x2] = x3`, `[x0, x3] = x1`.
pub fn c2_unit_presentation() -> GradedBasis {
    let rs = RootSystem::build(RootType::new(Family::C, 2).expect("C2"));
    let idx = |v: &[i64]| rs.positive_index(&QVector::from_i64(v)).expect("positive root of C2");
    let root_of = vec![idx(&[1, -1]), idx(&[2, 0]), idx(&[0, 2]), idx(&[1, 1])];
    let labels = (0..4).map(|i| format!("x{i}")).collect();
    let entries = vec![BracketEntry::simple(0, 2, 3, 1), BracketEntry::simple(0, 3, 1, 1)];
    let algebra = LieAlgebra::from_constants(4, Some(labels), entries, Checks::Full).expect("valid table");
    GradedBasis::new(algebra, rs, root_of).expect("graded by C2")
}
