//! Command-line front end for `kr-decomp`: decompositions in tree, flat and
//! JSON form, oracle cross-checks, growth reports and regression against the
//! stored decomposition tables.

pub mod commands;
pub mod fixtures;
pub mod json;
pub mod render;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kr_decomp::Error),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("missing input: {0}")]
    Missing(String),
}

/// Process exit codes. They depend on the category of the result only.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const INVALID_INPUT: i32 = 2;
    pub const RESOURCE: i32 = 3;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use kr_decomp::Error as E;
        match self {
            CliError::Parse(_) | CliError::Missing(_) => exit::INVALID_INPUT,
            CliError::Core(e) => match e {
                E::OracleScaleExceeded { .. }
                | E::TreeScaleExceeded { .. }
                | E::SearchBudgetExceeded { .. }
                | E::SearchUnsupported(_)
                | E::CountOverflow => exit::RESOURCE,
                E::InvalidAlgebra(_)
                | E::InvalidNode { .. }
                | E::LengthMismatch { .. }
                | E::NotDominant(_)
                | E::InvalidLabel(_)
                | E::InvalidPathType(_)
                | E::NotApplicable(_) => exit::INVALID_INPUT,
            },
        }
    }
}
