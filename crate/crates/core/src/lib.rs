//! Decompositions of Kirillov–Reshetikhin modules `W_m(ℓ)` of simply-laced
//! Lie algebras into irreducible modules, organised as a tree of chain
//! labels, together with an independent fermionic-formula oracle and the
//! growth analysis of `dim W_m(ℓ)`.
//!
//! Counts are generic over [`count::Count`]; the aliases below fix them to
//! `BigUint`, which never overflows.

pub mod count;
pub mod error;
pub mod growth;
pub mod oracle;
pub mod rootsys;
pub mod tree;

pub use error::{Error, Result};
pub use rootsys::{AlgebraId, Family, RootSystem, RootVector, Weight};

use num_bigint::BigUint;

pub type Multiplicity = BigUint;
pub type Dimension = BigUint;
pub type Tree = tree::DecompositionTree<BigUint>;
pub type Node = tree::TreeNode<BigUint>;
pub type Decomposition = std::collections::BTreeMap<Weight, BigUint>;
