//! Involutions avoiding 321: substitution decomposition, exhaustive
//! enumeration, exact generating functions and lattice-path bijections.

pub mod enumerate;
pub mod error;
pub mod paths;
pub mod perm;
pub mod render;
pub mod series;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{CycleForm, Permutation};
