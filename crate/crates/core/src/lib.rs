//! Wakeford pairings over finite groups.
//!
//! The crate builds finite groups from short descriptors, counts bijections
//! `φ: B → A` with `x·φ(x) ∉ A` exactly, computes isoperimetric connectivity,
//! and checks the surrounding matchability and counting theorems on every
//! small instance it can enumerate.

pub mod bound;
pub mod cli;
pub mod error;
pub mod group;
pub mod isoperimetry;
pub mod matching;
mod report;
pub mod set;
pub mod setops;
pub mod theorems;
pub mod wakeford;

pub use error::{Error, Result};
pub use group::{make_group, Group, SizeOrInfinity};
pub use set::GroupSet;
pub use setops::Side;
