use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ShrinkChain,
    Fixpoint,
    Grid,
    FiniteField,
}

/// One logged step: the witness used, the basis labels it removed (shrink
/// chains only) and the dimension left afterwards.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub witness: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub removed: Vec<String>,
    pub dim_after: usize,
}

/// Outcome of a computation on `B(g)`. `exact` is only ever set when the
/// bound has been matched against the centre; anything else is an upper bound
/// or oracle evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub method: Method,
    pub trace: Vec<TraceStep>,
    pub exact: bool,
    pub witnesses: Vec<String>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialises")
    }
}
