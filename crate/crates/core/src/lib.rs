//! Explicit finite groups and the σ-nilpotency toolkit built on top of them.
//!
//! Groups are stored as dense multiplication tables over element indices with
//! the identity at index 0. Subgroups are bitsets over those indices. On top of
//! that sit the subgroup and normal-subgroup lattices, chief series, the
//! classical characteristic subgroups, and everything that depends on a prime
//! partition σ: σ-nilpotency, σ-subnormality, `F_σ`, `Z_σ`, the σ-nilpotent
//! residual, σ-Carter subgroups, and the semi / weakly semi-σ-nilpotent
//! classification with its structure-theorem verifiers.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod arith;
pub mod bitset;
pub mod classical;
pub mod classify;
pub mod error;
pub mod group;
pub mod lattice;
pub mod partition;
pub mod sigma;
pub mod subgroup;
pub mod theorems;

pub use analysis::Analysis;
pub use bitset::BitSet;
pub use classify::{ClassificationReport, SchmidtStructure, SubnormalVariant, Witness};
pub use error::{Error, Result};
pub use group::{Action, Group, Homomorphism, Limits, Provenance, Verification};
pub use lattice::{ChiefFactor, ChiefSeries, NormalSubgroups, SubgroupLattice};
pub use partition::{BlockId, PrimePartition, Remainder};
pub use sigma::HallSigmaSet;
pub use subgroup::Subgroup;
pub use theorems::{ClauseResult, Theorem, TheoremReport, Verdict};
