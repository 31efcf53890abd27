//! Irreducible root systems in explicit rational coordinates.
//!
//! Each type is realised as a finite set of vectors in ℚᵐ together with the
//! positive system obtained from a fixed linear functional. The realisations
//! are the classical ones:
//!
//! | type | ambient | roots |
//! |------|---------|-------|
//! | Aₙ | ℚⁿ⁺¹ | `eᵢ − eⱼ` |
//! | Bₙ | ℚⁿ | `±eᵢ`, `±eᵢ ± eⱼ` |
//! | Cₙ | ℚⁿ | `±2eᵢ`, `±eᵢ ± eⱼ` |
//! | Dₙ | ℚⁿ | `±eᵢ ± eⱼ` |
//! | E₈ | ℚ⁸ | `±eᵢ ± eⱼ`, `½(±1,…,±1)` with even coordinate sum |
//! | E₇, E₆ | ℚ⁸ | E₈ roots whose first 2 (resp. 3) coordinates agree |
//! | F₄ | ℚ⁴ | `±eᵢ`, `±eᵢ ± eⱼ`, `½(±1,±1,±1,±1)` |
//! | G₂ | ℚ³ | `eᵢ − eⱼ`, `±(2eᵢ − eⱼ − eₖ)` in the plane `x+y+z = 0` |
//!
//! G₂ is placed in the trace-zero plane of ℚ³ so that its coordinates stay
//! rational; the simple roots are `δ = e₁ − e₂` (short) and
//! `ε = −2e₁ + e₂ + e₃` (long).

mod build;
mod report;
mod types;

pub use report::{RootSystemReport, TwoAlphaBetaReport, Z2Report};
pub use types::{Family, RootType};

use std::collections::HashMap;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactq::{QMatrix, QVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("invalid rank {rank} for type {family}: {constraint}")]
    InvalidRank { family: Family, rank: usize, constraint: &'static str },
    #[error("unknown root system family {0:?}")]
    UnknownFamily(String),
    #[error("{0:?} is not a positive root")]
    NotPositive(String),
}

/// A built root system. Positive roots are indexed `0..N` in lexicographic
/// order of their coordinates; the negative of positive root `i` is stored at
/// `N + i` in [`RootSystem::all_roots`].
#[derive(Debug, Clone)]
pub struct RootSystem {
    rtype: RootType,
    ambient_dim: usize,
    roots: Vec<QVector>,
    index: HashMap<QVector, usize>,
    highest: usize,
    simple: Vec<usize>,
    coefficients: Vec<Vec<i64>>,
    positive_sum: Vec<Vec<Option<usize>>>,
}

impl RootSystem {
    pub fn build(rtype: RootType) -> RootSystem {
        let (ambient_dim, all, weights) = build::realise(rtype);
        let weight = |v: &QVector| -> Rational { v.entries().iter().zip(&weights).map(|(x, w)| x * w).sum() };
        let mut positive: Vec<QVector> = all.iter().filter(|v| weight(v).is_positive()).cloned().collect();
        positive.sort();
        assert_eq!(positive.len() * 2, all.len(), "functional vanishes on a root of {rtype}");
        let n = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|v| -v));
        let index: HashMap<QVector, usize> = roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();

        let highest = (0..n).max_by_key(|&i| weight(&roots[i])).expect("nonempty");

        let mut positive_sum = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                let s = &roots[i] + &roots[j];
                positive_sum[i][j] = index.get(&s).copied();
            }
        }
        let simple: Vec<usize> =
            (0..n).filter(|&k| !(0..n).any(|i| (0..n).any(|j| positive_sum[i][j] == Some(k)))).collect();
        assert_eq!(simple.len(), rtype.rank(), "simple root count for {rtype}");
        let coefficients = simple_coefficients(&roots[..n], &simple, ambient_dim);

        RootSystem { rtype, ambient_dim, roots, index, highest, simple, coefficients, positive_sum }
    }

    pub fn rtype(&self) -> RootType {
        self.rtype
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    /// Positive roots in lexicographic order.
    pub fn positive(&self) -> &[QVector] {
        &self.roots[..self.num_positive()]
    }

    /// Positive roots followed by their negatives.
    pub fn all_roots(&self) -> &[QVector] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &QVector {
        &self.roots[i]
    }

    pub fn highest_index(&self) -> usize {
        self.highest
    }

    pub fn highest(&self) -> &QVector {
        &self.roots[self.highest]
    }

    pub fn contains(&self, v: &QVector) -> bool {
        self.index.contains_key(v)
    }

    /// Index into [`all_roots`](Self::all_roots).
    pub fn index_of(&self, v: &QVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn positive_index(&self, v: &QVector) -> Option<usize> {
        self.index_of(v).filter(|&i| i < self.num_positive())
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    /// Index of the negative of root `i`.
    pub fn negate(&self, i: usize) -> usize {
        let n = self.num_positive();
        if i < n {
            i + n
        } else {
            i - n
        }
    }

    /// `α + β` when it is a root, for arbitrary roots given by index.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.num_positive();
        if a < n && b < n {
            return self.positive_sum[a][b];
        }
        self.index_of(&(&self.roots[a] + &self.roots[b]))
    }

    pub fn sum_vectors(&self, a: &QVector, b: &QVector) -> Option<&QVector> {
        self.index_of(&(a + b)).map(|i| &self.roots[i])
    }

    pub fn inner(&self, a: usize, b: usize) -> Rational {
        self.roots[a].dot(&self.roots[b])
    }

    /// Simple roots as positive-root indices, in lexicographic order.
    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    /// Coefficients of positive root `i` in the simple roots.
    pub fn coefficients(&self, i: usize) -> &[i64] {
        &self.coefficients[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        let n = self.num_positive();
        if i < n {
            self.coefficients[i].iter().sum()
        } else {
            -self.coefficients[i - n].iter().sum::<i64>()
        }
    }

    /// All pairs `(α, β)` of positive roots, `β` restricted to `psi` when
    /// given, such that `2α + β` is a root.
    pub fn two_alpha_beta_violations(&self, psi: Option<&[usize]>) -> Vec<(usize, usize)> {
        let n = self.num_positive();
        let betas: Vec<usize> = match psi {
            Some(p) => p.to_vec(),
            None => (0..n).collect(),
        };
        let mut out = Vec::new();
        for a in 0..n {
            let twice = self.roots[a].scale(&Rational::from_integer(2.into()));
            for &b in &betas {
                if self.contains(&(&twice + &self.roots[b])) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// `{ β ∈ Φ⁺ : α + β ∈ Φ for α ∈ Φ⁺ only when α + β = θ }`, i.e. the roots
    /// spanning the second centre of `n⁺`.
    pub fn z2_root_set(&self) -> Vec<usize> {
        let n = self.num_positive();
        (0..n)
            .filter(|&b| {
                (0..n).all(|a| match self.positive_sum[a][b] {
                    Some(s) => s == self.highest,
                    None => true,
                })
            })
            .collect()
    }

    /// True when no two members of the Z₂ root set sum to a root.
    pub fn z2_pairwise_sums_outside(&self) -> bool {
        let z = self.z2_root_set();
        z.iter().all(|&b| z.iter().all(|&c| self.positive_sum[b][c].is_none()))
    }

    pub fn label(&self, i: usize) -> String {
        if self.rtype.family() == Family::G {
            return self.g2_label(i);
        }
        label_vector(&self.roots[i])
    }

    pub fn labels(&self, ids: &[usize]) -> Vec<String> {
        ids.iter().map(|&i| self.label(i)).collect()
    }

    fn g2_label(&self, i: usize) -> String {
        // δ is the short simple root.
        let n = self.num_positive();
        let (p, sign) = if i < n { (i, "") } else { (i - n, "-") };
        let short_first = self.roots[self.simple[0]].dot(&self.roots[self.simple[0]])
            < self.roots[self.simple[1]].dot(&self.roots[self.simple[1]]);
        let c = &self.coefficients[p];
        let (d, e) = if short_first { (c[0], c[1]) } else { (c[1], c[0]) };
        let term = |k: i64, s: &str| match k {
            0 => String::new(),
            1 => s.to_string(),
            k => format!("{k}{s}"),
        };
        let parts: Vec<String> = [term(d, "δ"), term(e, "ε")].into_iter().filter(|t| !t.is_empty()).collect();
        let body = parts.join("+");
        if sign.is_empty() {
            body
        } else {
            format!("-({body})")
        }
    }
}

/// Human-readable name for a root vector: `e1-e8`, `2e3`, `-e1-e4`, or
/// `1/2(+-++---+)` for half-integer vectors.
pub fn label_vector(v: &QVector) -> String {
    let half = v.entries().iter().any(|x| !x.is_integer());
    if half {
        let signs: String = v.entries().iter().map(|x| if x.is_negative() { '-' } else { '+' }).collect();
        return format!("1/2({signs})");
    }
    let mut out = String::new();
    for (i, x) in v.nonzeros() {
        let k = x.to_integer();
        let mag = k.abs();
        let neg = k < 0.into();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if mag != 1.into() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn simple_coefficients(positive: &[QVector], simple: &[usize], ambient: usize) -> Vec<Vec<i64>> {
    let r = simple.len();
    positive
        .iter()
        .map(|alpha| {
            // Solve Σ c_k s_k = α via rref of [s_1 … s_r | α] (columns).
            let rows = (0..ambient)
                .map(|row| {
                    let mut e: Vec<Rational> = simple.iter().map(|&s| positive[s][row].clone()).collect();
                    e.push(alpha[row].clone());
                    QVector::new(e)
                })
                .collect();
            let (red, pivots) = QMatrix::new(r + 1, rows).expect("square").rref_with_pivots();
            assert_eq!(pivots, (0..r).collect::<Vec<_>>(), "simple roots dependent");
            red.rows()
                .iter()
                .map(|row| {
                    let c = &row[r];
                    assert!(c.is_integer() && !c.is_negative() || c.is_zero());
                    i64::try_from(c.to_integer()).expect("small coefficient")
                })
                .collect()
        })
        .collect()
}
