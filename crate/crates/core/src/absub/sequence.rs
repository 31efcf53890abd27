use crate::liealg::{Ideal, LieAlgebra, Subspace};

#[derive(Debug, Clone)]
pub struct ASequenceResult {
    /// `A₀ = g ⊋ A₁ ⊋ … ⊋ A_s`, without the repeated final term.
    pub chain: Vec<Ideal>,
    /// Index of the first term equal to its successor.
    pub stabilized_at: usize,
    pub a_of_g: Ideal,
}

impl ASequenceResult {
    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(|a| a.dim()).collect()
    }
}

/// `A_{i+1} = C_{A_i}(Z₂(A_i))` from `A₀ = g` until it stabilises.
pub fn a_sequence(g: &LieAlgebra) -> ASequenceResult {
    let mut cur = Subspace::whole(g.dim());
    let mut chain = Vec::new();
    loop {
        let z2 = g.nth_center_within(&cur, 2);
        let next = g.centralizer(&cur, &z2);
        let done = next == cur;
        chain.push(g.ideal(cur));
        if done {
            break;
        }
        cur = next;
    }
    let stabilized_at = chain.len() - 1;
    let a_of_g = chain[stabilized_at].clone();
    ASequenceResult { chain, stabilized_at, a_of_g }
}

/// How the implication "`Z₂` abelian and `Z₂ ≠ Z` ⟹ `Z₂ ⊆ A(g)`" played out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Z2InA {
    Holds,
    Fails,
    /// `Z₂` is not abelian or equals `Z`.
    Vacuous,
}

pub fn z2_in_a(g: &LieAlgebra) -> Z2InA {
    let whole = Subspace::whole(g.dim());
    let z = g.nth_center_within(&whole, 1);
    let z2 = g.nth_center_within(&whole, 2);
    if !g.is_abelian(&z2) || z2 == z {
        return Z2InA::Vacuous;
    }
    if a_sequence(g).a_of_g.contains_subspace(&z2) {
        Z2InA::Holds
    } else {
        Z2InA::Fails
    }
}

pub fn z2_in_a_check(g: &LieAlgebra) -> bool {
    z2_in_a(g) != Z2InA::Fails
}
