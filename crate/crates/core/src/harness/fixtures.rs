use crate::chevalley::{build_nplus, c2_unit_presentation, upper_triangular, GradedBasis};
use crate::liealg::{abelian, filiform, heisenberg, six_dim_example, LieAlgebra};
use crate::rootsys::{RootSystem, RootType};

use super::HarnessError;

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub algebra: LieAlgebra,
    pub graded: Option<GradedBasis>,
}

impl Fixture {
    fn plain(name: &str, algebra: LieAlgebra) -> Self {
        Fixture { name: name.to_string(), algebra, graded: None }
    }

    fn graded(name: &str, gb: GradedBasis) -> Self {
        Fixture { name: name.to_string(), algebra: gb.algebra().clone(), graded: Some(gb) }
    }
}

fn parametric(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

/// Builtins: `example-6d`, `heisenberg`, `c2-unit-presentation`,
/// `filiform-<n>`, `abelian-<n>`, `upper-triangular-<n>` and
/// `nplus-<type>` such as `nplus-E8`.
pub fn fixture(name: &str) -> Result<Fixture, HarnessError> {
    let unknown = || HarnessError::UnknownFixture(name.to_string());
    match name {
        "example-6d" | "paper-example-6d" => return Ok(Fixture::plain("example-6d", six_dim_example())),
        "heisenberg" => return Ok(Fixture::plain(name, heisenberg())),
        "c2-unit-presentation" | "c2-paper-presentation" => {
            return Ok(Fixture::graded("c2-unit-presentation", c2_unit_presentation()))
        }
        _ => {}
    }
    if let Some(n) = parametric(name, "filiform-") {
        return if n >= 2 { Ok(Fixture::plain(name, filiform(n))) } else { Err(unknown()) };
    }
    if let Some(n) = parametric(name, "abelian-") {
        return if n >= 1 { Ok(Fixture::plain(name, abelian(n))) } else { Err(unknown()) };
    }
    if let Some(n) = parametric(name, "upper-triangular-") {
        return Ok(Fixture::graded(name, upper_triangular(n)?));
    }
    if let Some(t) = name.strip_prefix("nplus-") {
        let t: RootType = t.parse()?;
        let gb = build_nplus(&RootSystem::build(t))?;
        return Ok(Fixture::graded(&format!("nplus-{t}"), gb));
    }
    Err(unknown())
}

/// Every builtin name up to the given rank, in a fixed order.
pub fn fixture_names(max_rank: usize) -> Vec<String> {
    let mut out: Vec<String> =
        ["example-6d", "heisenberg", "c2-unit-presentation"].iter().map(|s| s.to_string()).collect();
    out.extend((3..=8).map(|n| format!("filiform-{n}")));
    out.extend((2..=6).map(|n| format!("upper-triangular-{n}")));
    out.extend(RootType::all_up_to(max_rank).into_iter().map(|t| format!("nplus-{t}")));
    out
}
