//! Finite group computations centred on power subgroups.
//!
//! A group's power subgroups are the `G^m = <g^m : g in G>`; every other
//! subgroup is a nonpower subgroup. This crate builds concrete groups (from
//! permutations, products, named families or presentations), enumerates
//! their full subgroup lattices and counts power and nonpower subgroups.

pub mod arith;
pub mod bitset;
pub mod census;
pub mod error;
pub mod family;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod presentation;

pub use error::{Error, Result};
pub use family::FamilySpec;
pub use group::{Group, Morphism, Subgroup};
