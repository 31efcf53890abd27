use crate::exactq::QVector;
use crate::liealg::{LieAlgebra, Subspace};

use super::{a_sequence, b_upper_bound};

/// Search for an ideal `h ⊇ bound` whose own fixpoint bound is exact and
/// whose centre is `Z₂(g)`. Candidates are the terms of the upper central
/// series, the A-chain, `C_g(Z₂(g))`, the bound and `g`.
#[derive(Debug, Clone)]
pub struct NewExamples {
    pub bound: Subspace,
    pub bound_exact: bool,
    pub z2: Subspace,
    /// The first candidate that works, with a short name.
    pub witness: Option<(String, Subspace)>,
}

pub fn new_examples_check(g: &LieAlgebra) -> NewExamples {
    let n = g.dim();
    let whole = Subspace::whole(n);
    let b = b_upper_bound(g, None);
    let z2 = g.nth_center_within(&whole, 2);
    let mut candidates: Vec<(String, Subspace)> = Vec::new();
    for (i, z) in g.upper_central_series().into_iter().enumerate() {
        candidates.push((format!("Z{}", i + 1), z.into_subspace()));
    }
    for (i, a) in a_sequence(g).chain.into_iter().enumerate() {
        candidates.push((format!("A{i}"), a.into_subspace()));
    }
    candidates.push(("C(Z2)".into(), g.centralizer(&whole, &z2)));
    candidates.push(("bound".into(), b.bound.clone()));
    candidates.push(("g".into(), whole));
    let witness = candidates
        .into_iter()
        .find(|(_, h)| h.dim() > 0 && h.contains_subspace(&b.bound) && g.is_ideal(h) && centre_matches(g, h, &z2));
    NewExamples { bound: b.bound, bound_exact: b.exact, z2, witness }
}

fn centre_matches(g: &LieAlgebra, h: &Subspace, z2: &Subspace) -> bool {
    let Ok(sub) = g.restrict(h) else { return false };
    let hb = b_upper_bound(&sub, None);
    if !hb.exact {
        return false;
    }
    let lift = |v: &QVector| {
        let mut out = QVector::zeros(g.dim());
        for (r, c) in v.nonzeros() {
            out.add_scaled(c, &h.rows()[r]);
        }
        out
    };
    let z = Subspace::span(g.dim(), hb.bound.rows().iter().map(lift).collect()).expect("dims");
    z == *z2
}
