//! Minimal translation surfaces in the Lie group Sol3.
//!
//! [`ambient`] holds the group, its left-invariant metric, the connection
//! and the isometries. [`surface`] computes fundamental forms and mean
//! curvature of any [`surface::Immersion`]. [`families`] builds the six
//! translation-surface types, [`classified`] the known minimal ones, and
//! [`cli`] the text formats and reports used by the `sol3` binary.

pub mod ambient;
pub mod classified;
pub mod cli;
pub mod error;
pub mod families;
pub mod fd;
pub mod surface;

pub use error::{Result, Sol3Error};
