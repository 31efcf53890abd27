use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::chevalley::GradedBasis;
use crate::exactq::{parse_rational, Rational};
use crate::liealg::{BracketEntry, Checks, LieAlgebra};

/// On-disk structure constants. Indices are 1-based and every coefficient is
/// a rational string `"p"` or `"p/q"`.
///
/// ```json
/// {
///   "dim": 3,
///   "basis": ["x1", "x2", "x3"],
///   "brackets": [{ "i": 1, "j": 2, "coeffs": { "3": "1" } }]
/// }
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<FileBracket>,
    /// Basis label to root coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<BTreeMap<String, Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileBracket {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

impl AlgebraFile {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let brackets = g
            .entries()
            .into_iter()
            .map(|e| FileBracket {
                i: e.i + 1,
                j: e.j + 1,
                coeffs: e.coeffs.iter().map(|(k, c)| (k + 1, c.to_string())).collect(),
            })
            .collect();
        AlgebraFile { dim: g.dim(), basis: g.labels().to_vec(), brackets, grading: None }
    }

    pub fn from_graded(gb: &GradedBasis) -> Self {
        let mut f = Self::from_algebra(gb.algebra());
        f.grading = Some(
            gb.grading().into_iter().map(|(l, v)| (l, v.entries().iter().map(Rational::to_string).collect())).collect(),
        );
        f
    }

    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        serde_json::from_str(text).map_err(|e| HarnessError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("file serialises")
    }

    /// Validates indices, rationals and the grading, then builds the algebra
    /// with the full Jacobi and nilpotency checks.
    pub fn to_algebra(&self) -> Result<LieAlgebra, HarnessError> {
        let idx = |k: usize, what: &str| {
            if k == 0 || k > self.dim {
                Err(HarnessError::Parse(format!("{what} index {k} outside 1..={}", self.dim)))
            } else {
                Ok(k - 1)
            }
        };
        let mut entries = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            let (i, j) = (idx(b.i, "bracket")?, idx(b.j, "bracket")?);
            if i >= j {
                return Err(HarnessError::Parse(format!("bracket key ({}, {}) must have i < j", b.i, b.j)));
            }
            let mut coeffs = Vec::new();
            for (k, c) in &b.coeffs {
                let q = parse_rational(c).map_err(|e| HarnessError::Parse(format!("[{}, {}]: {e}", b.i, b.j)))?;
                coeffs.push((idx(*k, "coefficient")?, q));
            }
            entries.push(BracketEntry::new(i, j, coeffs));
        }
        if let Some(gr) = &self.grading {
            for (label, coords) in gr {
                if !self.basis.contains(label) {
                    return Err(HarnessError::Parse(format!("grading names unknown basis vector {label:?}")));
                }
                for c in coords {
                    parse_rational(c).map_err(|e| HarnessError::Parse(format!("grading of {label}: {e}")))?;
                }
            }
        }
        Ok(LieAlgebra::from_constants(self.dim, Some(self.basis.clone()), entries, Checks::Full)?)
    }
}
