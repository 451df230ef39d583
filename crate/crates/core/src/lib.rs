//! Exact enumeration of multiline queues, bully-path projections and
//! standard Young tableaux, with the closed forms they are checked against.

pub mod characterize;
pub mod cli;
pub mod combinatorics;
pub mod engine;
pub mod error;
pub mod formulas;
pub mod golden;
pub mod queue;
pub mod verify;

pub use combinatorics::{ExactCount, ExactRatio, Partition, SkewShape};
pub use engine::{CorrelationTable, Engine, PlacementSpace, WordDistribution};
pub use error::{Error, Result};
pub use queue::{
    bully_project, bully_project_discrete, wrap_count, DiscreteMlq, Placement, ProjectionResult,
    TypeVector,
};
