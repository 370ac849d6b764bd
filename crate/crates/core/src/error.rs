use thiserror::Error;

use crate::rootsys::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid algebra {0:?}: expected A<n> (n >= 1), D<n> (n >= 3) or E6/E7/E8")]
    InvalidAlgebra(String),

    #[error("node {node} out of range for rank {rank}")]
    InvalidNode { node: usize, rank: usize },

    #[error("coordinate vector has length {got}, expected rank {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("invalid path-type: {0}")]
    InvalidPathType(String),

    #[error("count type overflowed")]
    CountOverflow,

    #[error("oracle scale exceeded: {tuples} partition tuples exceed the limit of {limit}")]
    OracleScaleExceeded { tuples: String, limit: u64 },

    #[error("tree scale exceeded: stopped after {partial} nodes (limit {limit})")]
    TreeScaleExceeded { partial: usize, limit: usize },

    #[error("growth search exceeded its budget of {budget} states")]
    SearchBudgetExceeded { budget: usize },

    #[error("search unsupported: {0}")]
    SearchUnsupported(String),

    #[error("height relation not applicable: {0}")]
    NotApplicable(String),
}
