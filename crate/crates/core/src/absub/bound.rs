use crate::exactq::QVector;
use crate::liealg::{LieAlgebra, Subspace};

use super::{Certificate, CertificateMethod, TraceStep};

#[derive(Debug, Clone)]
pub struct BBoundResult {
    pub bound: Subspace,
    /// Every shrink: the witness and the dimension after it.
    pub trace: Vec<(QVector, usize)>,
    /// Full sweeps made, including the final one without change.
    pub passes: usize,
    pub exact: bool,
}

impl BBoundResult {
    pub fn certificate(&self, g: &LieAlgebra) -> Certificate {
        let claim = if self.exact {
            format!("B(g) = Z(g), dim {}", self.bound.dim())
        } else {
            format!("B(g) is contained in a subspace of dim {}", self.bound.dim())
        };
        Certificate {
            claim,
            method: CertificateMethod::Fixpoint,
            trace: self
                .trace
                .iter()
                .map(|(w, d)| TraceStep { witness: vector_label(g, w), removed: Vec::new(), dim_after: *d })
                .collect(),
            exact: self.exact,
            witnesses: self.trace.iter().map(|(w, _)| vector_label(g, w)).collect(),
        }
    }
}

/// `V ⊇ B(g)` shrunk by `V ∩ ker ad(w)` whenever `ad(w)²V = 0`, sweeping
/// `witnesses` (the basis by default) until a full pass changes nothing.
pub fn b_upper_bound(g: &LieAlgebra, witnesses: Option<&[QVector]>) -> BBoundResult {
    let n = g.dim();
    let basis: Vec<QVector>;
    let witnesses = match witnesses {
        Some(w) => w,
        None => {
            basis = (0..n).map(|i| QVector::unit(n, i)).collect();
            &basis
        }
    };
    let mut v = Subspace::whole(n);
    let mut trace = Vec::new();
    let mut passes = 0;
    loop {
        passes += 1;
        let mut changed = false;
        for w in witnesses {
            if v.dim() == 0 || !g.ad_squared_kills(w, &v) {
                continue;
            }
            let line = Subspace::span(n, vec![w.clone()]).expect("witness has the algebra's dimension");
            let k = g.centralizer(&v, &line);
            if k.dim() < v.dim() {
                v = k;
                trace.push((w.clone(), v.dim()));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let exact = v == *g.center().subspace();
    BBoundResult { bound: v, trace, passes, exact }
}

/// `x3`, `2x1-x4`, `(1/2)x2+x5`.
pub fn vector_label(g: &LieAlgebra, v: &QVector) -> String {
    use num_traits::{One, Signed};
    let mut out = String::new();
    for (i, c) in v.nonzeros() {
        let neg = c.is_negative();
        if !out.is_empty() || neg {
            out.push(if neg { '-' } else { '+' });
        }
        let a = c.abs();
        if !a.is_one() {
            if a.is_integer() {
                out.push_str(&a.to_string());
            } else {
                out.push_str(&format!("({a})"));
            }
        }
        out.push_str(g.label(i));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
