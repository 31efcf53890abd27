use std::collections::BTreeSet;

use crate::chevalley::{build_nplus, GradedBasis};
use crate::liealg::{Ideal, Subspace};
use crate::rootsys::{Family, RootSystem, RootType};

use super::{b_upper_bound, AbsubError, Certificate, CertificateMethod, TraceStep};

/// One application of the root-basis shrink: `B(g) ⊆ ⟨x_j : j ∈ J⟩` implies
/// `B(g) ⊆ ⟨x_j : j ∈ T⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shrink {
    pub witness: usize,
    pub removed: BTreeSet<usize>,
    pub remaining: BTreeSet<usize>,
}

/// `[x_i, [x_i, x_j]] = 0`, read off the grading.
fn ad_squared_vanishes(gb: &GradedBasis, i: usize, j: usize) -> bool {
    gb.bracket_vanishes(i, j) || gb.bracket_vanishes(i, gb.k(i, j))
}

/// Looks for a basis index `i`, smallest root first, with
/// (a) `[x_i, [x_i, x_j]] = 0` for all `j ∈ J`,
/// (b) `S = { m ∈ J : [x_i, x_m] ≠ 0 }` nonempty and
/// (c) `k(i, m)` pairwise distinct on `S`,
/// and returns `(i, S, J ∖ S)`.
pub fn root_basis_shrink(gb: &GradedBasis, j_set: &BTreeSet<usize>) -> Option<Shrink> {
    (0..gb.dim()).map(|r| gb.basis_of(r)).find_map(|i| {
        if !j_set.iter().all(|&j| ad_squared_vanishes(gb, i, j)) {
            return None;
        }
        let removed: BTreeSet<usize> = j_set.iter().copied().filter(|&m| !gb.bracket_vanishes(i, m)).collect();
        if removed.is_empty() {
            return None;
        }
        let targets: BTreeSet<usize> = removed.iter().map(|&m| gb.k(i, m)).collect();
        if targets.len() != removed.len() {
            return None;
        }
        let remaining = j_set.difference(&removed).copied().collect();
        Some(Shrink { witness: i, removed, remaining })
    })
}

/// Runs the shrink from `J = Φ⁺` down to `{θ}` on `n⁺(rtype)` and checks the
/// result against the fixpoint bound and the centre. Types Cₙ and B₂ ≅ C₂
/// are refused.
pub fn verify_b_equals_z(rtype: RootType) -> Result<Certificate, AbsubError> {
    // B₂ and C₂ are the same root system.
    if rtype.family() == Family::C || (rtype.family() == Family::B && rtype.rank() == 2) {
        return Err(AbsubError::TypeCExcluded(rtype.to_string()));
    }
    let rs = RootSystem::build(rtype);
    let gb = build_nplus(&rs)?;
    verify_b_equals_z_graded(&gb)
}

pub fn verify_b_equals_z_graded(gb: &GradedBasis) -> Result<Certificate, AbsubError> {
    let rtype = gb.root_system().rtype();
    let n = gb.dim();
    let theta = gb.highest();
    let mut j: BTreeSet<usize> = (0..n).collect();
    let mut trace = Vec::new();
    let label = |i: usize| gb.algebra().label(i).to_string();
    while j.len() > 1 || !j.contains(&theta) {
        let step = root_basis_shrink(gb, &j).ok_or_else(|| AbsubError::ShrinkStalled {
            rtype: rtype.to_string(),
            remaining: j.iter().map(|&i| label(i)).collect(),
        })?;
        trace.push(TraceStep {
            witness: label(step.witness),
            removed: step.removed.iter().map(|&i| label(i)).collect(),
            dim_after: step.remaining.len(),
        });
        j = step.remaining;
    }
    let terminal = Subspace::coordinate(n, j.iter().copied());
    let fixpoint = b_upper_bound(gb.algebra(), None);
    let center = gb.algebra().center();
    if fixpoint.bound != terminal || *center.subspace() != terminal {
        return Err(AbsubError::Disagreement {
            rtype: rtype.to_string(),
            shrink_dim: terminal.dim(),
            fixpoint_dim: fixpoint.bound.dim(),
            center_dim: center.dim(),
        });
    }
    Ok(Certificate {
        claim: format!("B(n+({rtype})) = Z = <x_{}>", label(theta)),
        method: CertificateMethod::ShrinkChain,
        witnesses: trace.iter().map(|t| t.witness.clone()).collect(),
        trace,
        exact: true,
    })
}

#[derive(Debug, Clone)]
pub struct MaxAbelian {
    pub nplus: GradedBasis,
    pub ideal: Ideal,
    pub abelian: bool,
    /// `C_g(a) = a`, so no abelian subalgebra properly contains `a`.
    pub self_centralizing: bool,
}

/// `⟨x_α : α = eᵢ + eⱼ, i ≤ j⟩` inside `n⁺(Cₙ)`.
pub fn type_c_max_abelian(n: usize) -> Result<MaxAbelian, AbsubError> {
    let rs = RootSystem::build(RootType::new(Family::C, n)?);
    let nplus = build_nplus(&rs)?;
    let dim = nplus.dim();
    let idx = (0..dim).filter(|&i| nplus.root(i).nonzeros().all(|(_, c)| c > &num_traits::Zero::zero()));
    let s = Subspace::coordinate(dim, idx);
    let g = nplus.algebra();
    let abelian = g.is_abelian(&s);
    let self_centralizing = g.centralizer(&Subspace::whole(dim), &s) == s;
    let ideal = g.ideal(s);
    Ok(MaxAbelian { nplus, ideal, abelian, self_centralizing })
}
