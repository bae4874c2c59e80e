//! Exact Hurwitz numbers of the Riemann sphere.
//!
//! Disconnected numbers are Frobenius character sums over the irreducibles of
//! `S(d)`; connected numbers are recovered from them by an orbit-of-a-point
//! recursion on tuple counts. The [`spectrum`] module extracts the
//! coefficients of both as exponential sums in the transposition eigenvalues
//! and checks their leading structure. All arithmetic is exact.

pub mod cache;
pub mod character;
pub mod error;
pub mod hurwitz;
pub mod linalg;
pub mod oracle;
pub mod partition;
pub mod rational;
pub mod spectrum;

pub use cache::TableStore;
pub use character::{CharacterMemo, CharacterTable, Provenance};
pub use error::{Error, Result};
pub use hurwitz::{HurwitzQuery, HurwitzSolver, TupleCount};
pub use oracle::BruteForceBound;
pub use partition::{enumerate_partitions, Partition, ProfileSet};
pub use rational::ExactRational;
pub use spectrum::{Flavor, Parity, SpectralDecomposition};
