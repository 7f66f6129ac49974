//! Exact construction and verification of Beauville structures on cartesian
//! powers A_n^k of alternating groups.
//!
//! Everything is computed over exact permutation arithmetic: generation of
//! A_n is certified by cycle-structure criteria or a deterministic
//! stabilizer chain, conjugacy questions are settled by explicit witnesses
//! or exhausted searches, and every assembled structure is re-checked by an
//! independent verifier before it is emitted as a certificate.

pub mod cert;
pub mod conjugacy;
pub mod count;
pub mod error;
pub mod group;
pub mod perm;
pub mod structure;
pub mod triples;

pub use error::{BuildError, PermError};
pub use perm::{CycleType, Parity, Permutation};
