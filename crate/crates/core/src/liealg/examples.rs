//! Small named algebras used as fixtures and in tests.

use super::{BracketEntry, Checks, LieAlgebra};

fn build(dim: usize, entries: Vec<BracketEntry>) -> LieAlgebra {
    LieAlgebra::from_constants(dim, None, entries, Checks::Full).expect("fixture is a nilpotent Lie algebra")
}

/// Abelian algebra of dimension `dim`.
pub fn abelian(dim: usize) -> LieAlgebra {
    build(dim, Vec::new())
}

/// `[x1, x2] = x3`.
pub fn heisenberg() -> LieAlgebra {
    build(3, vec![BracketEntry::simple(0, 1, 2, 1)])
}

/// The filiform algebra `f_n`: `[x1, x_i] = x_{i+1}` for `2 ≤ i ≤ n−1`.
/// Class `n − 1`, with the abelian hyperplane ideal `⟨x2, …, xn⟩`.
pub fn filiform(n: usize) -> LieAlgebra {
    assert!(n >= 2, "filiform algebra needs n >= 2");
    build(n, (1..n - 1).map(|i| BracketEntry::simple(0, i, i + 1, 1)).collect())
}

/// Six-dimensional class-5 algebra:
/// `[x1,x2]=x3, [x1,x5]=x6, [x2,x3]=x4, [x2,x4]=x5, [x3,x4]=x6`.
pub fn six_dim_example() -> LieAlgebra {
    build(6, six_dim_entries())
}

pub(crate) fn six_dim_entries() -> Vec<BracketEntry> {
    vec![
        BracketEntry::simple(0, 1, 2, 1),
        BracketEntry::simple(0, 4, 5, 1),
        BracketEntry::simple(1, 2, 3, 1),
        BracketEntry::simple(1, 3, 4, 1),
        BracketEntry::simple(2, 3, 5, 1),
    ]
}
