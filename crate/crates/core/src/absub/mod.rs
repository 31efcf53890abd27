//! Characteristic ideals of nilpotent Lie algebras.
//!
//! * [`a_sequence`]: `A_{i+1} = C_{A_i}(Z₂(A_i))` down to its stable term
//!   `A(g)`.
//! * [`b_upper_bound`]: an upper bound for `B(g)`, the largest ideal `a` with
//!   property (**): `[x, [x, a]] = 0 ⟹ [x, a] = 0` for every `x ∈ g`. When the
//!   bound collapses to the centre it is exact, since `Z(g) ⊆ B(g)`.
//! * [`root_basis_shrink`] and [`verify_b_equals_z`]: the same bound obtained
//!   combinatorially on a positive root basis.
//! * [`star_grid_oracle`] and [`star_finite_field_check`]: brute-force
//!   searches for counterexamples to (**). An empty result is evidence, not a
//!   proof.

mod bound;
mod certificate;
mod hypothesis;
mod oracle;
mod sequence;
mod shrink;
#[cfg(test)]
mod tests;

pub use bound::{b_upper_bound, vector_label, BBoundResult};
pub use certificate::{Certificate, Method as CertificateMethod, TraceStep};
pub use hypothesis::{new_examples_check, NewExamples};
pub use oracle::{star_finite_field_check, star_grid_oracle, OracleOutcome, StarViolation, DEFAULT_BUDGET};
pub use sequence::{a_sequence, z2_in_a, z2_in_a_check, ASequenceResult, Z2InA};
pub use shrink::{
    root_basis_shrink, type_c_max_abelian, verify_b_equals_z, verify_b_equals_z_graded, MaxAbelian, Shrink,
};

use thiserror::Error;

use crate::chevalley::ChevalleyError;
use crate::rootsys::RootError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbsubError {
    #[error("type {0}: B(g) = Z(g) fails for type C (and for B2 = C2); the bound there is a maximal abelian ideal")]
    TypeCExcluded(String),
    #[error("type {rtype}: no shrink step applies to {{{}}}", remaining.join(", "))]
    ShrinkStalled { rtype: String, remaining: Vec<String> },
    #[error("type {rtype}: shrink chain (dim {shrink_dim}), fixpoint (dim {fixpoint_dim}) and centre (dim {center_dim}) disagree")]
    Disagreement { rtype: String, shrink_dim: usize, fixpoint_dim: usize, center_dim: usize },
    #[error("oracle needs {needed} evaluations, budget is {budget}; lower the height or use the finite-field check")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    Root(#[from] RootError),
}
