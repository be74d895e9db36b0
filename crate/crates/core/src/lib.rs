//! Certificate-producing k-colorability deciders for bull-free graph
//! classes.
//!
//! Every decider answers with a [`deciders::Verdict`]: a proper coloring, or
//! a named induced obstruction with the vertices realizing it. An exact
//! branch-and-bound [`oracle`] provides independent ground truth at small
//! sizes, and [`verify`] runs seeded decider-versus-oracle suites.

pub mod deciders;
pub mod error;
pub mod expansion;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod patterns;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{is_proper_coloring, Coloring, Graph};
