use serde::{Deserialize, Serialize};

use crate::exactq::QVector;

use super::RootSystem;

pub(crate) fn coords(v: &QVector) -> Vec<String> {
    v.entries().iter().map(ToString::to_string).collect()
}

/// JSON view of a root system. Coordinates are rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemReport {
    #[serde(rename = "type")]
    pub rtype: String,
    pub rank: usize,
    pub ambient_dim: usize,
    pub positive: Vec<Vec<String>>,
    pub labels: Vec<String>,
    pub highest: Vec<String>,
    pub highest_label: String,
    pub simple: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoAlphaBetaReport {
    pub count: usize,
    /// `(α, β)` label pairs with `2α + β ∈ Φ`.
    pub violations: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Z2Report {
    pub set: Vec<String>,
    pub coordinates: Vec<Vec<String>>,
    /// No two members sum to a root, i.e. Z₂(n⁺) is abelian.
    pub abelian: bool,
}

impl RootSystem {
    pub fn report(&self) -> RootSystemReport {
        let n = self.num_positive();
        RootSystemReport {
            rtype: self.rtype().family().to_string(),
            rank: self.rtype().rank(),
            ambient_dim: self.ambient_dim(),
            positive: self.positive().iter().map(coords).collect(),
            labels: (0..n).map(|i| self.label(i)).collect(),
            highest: coords(self.highest()),
            highest_label: self.label(self.highest_index()),
            simple: self.labels(self.simple()),
        }
    }

    pub fn two_alpha_beta_report(&self) -> TwoAlphaBetaReport {
        let v = self.two_alpha_beta_violations(None);
        TwoAlphaBetaReport {
            count: v.len(),
            violations: v.iter().map(|&(a, b)| (self.label(a), self.label(b))).collect(),
        }
    }

    pub fn z2_report(&self) -> Z2Report {
        let z = self.z2_root_set();
        Z2Report {
            set: self.labels(&z),
            coordinates: z.iter().map(|&i| coords(self.root(i))).collect(),
            abelian: self.z2_pairwise_sums_outside(),
        }
    }
}
