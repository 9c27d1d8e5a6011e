//! Local box representations of graphs and local realizers of posets:
//! constructions, verifiers, exact oracles for tiny inputs, and storage.

pub mod bounds;
pub mod claw;
pub mod coloring;
pub mod construct;
pub mod error;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod oracle;
pub mod poset;
pub mod representation;
pub mod storage;

pub use error::{Error, Result};
pub use graph::Graph;
pub use interval::{Interval, IntervalLayer};
pub use poset::Poset;
pub use representation::{verify_representation, LocalBoxRepresentation, VerificationReport};
