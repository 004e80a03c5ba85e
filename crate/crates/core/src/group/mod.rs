//! Permutations, the twisted action as substitution homomorphisms, and
//! coset-partition verification.

pub mod coset;
pub mod hom;
pub mod perm;

pub use coset::{verify_coset_partition, Ambient, PartitionOutcome};
pub use hom::{is_fixed, FieldHom};
pub use perm::Perm;
