//! Concrete groups built from finite-field and combinatorial actions.

pub mod catalog;
pub mod exceptional;
pub mod field;
pub mod linear;
pub mod matrix;
pub mod projective;
pub mod psl34;
pub mod small;
pub mod spec;

pub use catalog::{build, build_named, expected_order, AtlasGroup, AtlasId, AtlasParam, CATALOG};
pub use exceptional::{exceptional_automorphism_witness, ExceptionalWitness};
pub use projective::{projective_permutation, Domain};
pub use psl34::{reproduce_psl34_commutators, Psl34Commutators};
pub use spec::{load_group_spec, GroupSpec, NamedGroup};
