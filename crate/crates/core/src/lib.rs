//! Finite permutation groups, structural series, Turull towers, a catalog of
//! concrete groups and a verification harness for commutator-order
//! properties.

pub mod arith;
pub mod atlas;
pub mod bsgs;
pub mod error;
pub mod group;
pub mod harness;
pub mod perm;
pub mod quotient;
pub mod structure;
pub mod towers;

pub use error::{Error, Result};
pub use group::{CommutatorWitness, ConjugacyClass, FiniteGroup, Subgroup, DEFAULT_ENUMERATION_CAP};
pub use perm::{commutator, Permutation};
pub use quotient::{quotient_by_normal, Quotient, QuotientOrSelf};
