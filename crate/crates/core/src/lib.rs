//! Combinatorial engine for branched covers of closed oriented surfaces.
//!
//! Covers of the sphere are [`Constellation`]s: tuples of permutations with
//! identity product. Surfaces with embedded graphs are
//! [`CombinatorialMap`](surface::CombinatorialMap)s. The [`ledger`] module
//! audits the integer identities relating degree, branching, Euler
//! characteristic and vertex counts on a closed leaf.

pub mod cli;
pub mod constellation;
pub mod error;
pub mod hurwitz;
pub mod ledger;
pub mod perm;
pub mod pipeline;
pub mod surface;

pub use constellation::{Constellation, ValidationReport};
pub use error::{Error, Result};
pub use hurwitz::{BraidWord, Direction, OrbitSummary};
pub use ledger::{LedgerLine, LedgerReport};
pub use perm::Permutation;
