//! Structure-constant files, named fixtures and the verification suites
//! behind the `nilchar` command line.

mod file;
mod fixtures;
mod report;
mod suites;

pub use file::{AlgebraFile, FileBracket};
pub use fixtures::{fixture, fixture_names, Fixture};
pub use report::{CaseResult, Report, Status};
pub use suites::{algebra_report, explore, rootsys_report, run_suite, Compute, Options, RootCheck, SUITES};

use thiserror::Error;

use crate::absub::AbsubError;
use crate::chevalley::ChevalleyError;
use crate::exactq::ExactqError;
use crate::liealg::LieError;
use crate::rootsys::RootError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("cannot parse algebra file: {0}")]
    Parse(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    Absub(#[from] AbsubError),
    #[error(transparent)]
    Exactq(#[from] ExactqError),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("unknown suite {0:?}; expected one of {1}")]
    UnknownSuite(String, String),
    #[error("unknown {0} {1:?}")]
    UnknownOption(&'static str, String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl HarnessError {
    /// Every harness error is an input or usage error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
