//! Pattern-mining compiler core.
//!
//! Given a small connected pattern, this crate computes its automorphism
//! group, enumerates the distinct exploration schedules, derives the ID
//! restrictions that make every induced instance discoverable exactly once,
//! scores schedules with a probabilistic cost model and compiles the winner
//! into a nested-loop plan of bounded sorted-set intersections and
//! differences. The plan runs over an immutable CSR [`Graph`].
//!
//! The crate is `no_std` and only needs `alloc`. File IO, parallel execution
//! and the command-line front end live in the `symmine` crate.

#![no_std]
#![warn(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod cost;
pub mod exec;
pub mod graph;
pub mod kernels;
pub mod motif;
pub mod oracle;
pub mod pattern;
pub mod plan;
pub mod restriction;
pub mod schedule;

pub use cost::{
    estimate_cost, restriction_probabilities, select_schedule, CostModelParams, LevelEstimate, ScheduleCost, Selection,
};
pub use error::Error;
pub use exec::{enumerate, Executor};
pub use graph::{orient_reindex, Graph, VertexId, VertexList};
pub use kernels::{difference, intersect};
pub use pattern::{automorphisms, AutomorphismGroup, Pattern, Permutation, MAX_PATTERN_SIZE};
pub use plan::{compile_plan, Plan, PlanLevel, PlanOptions};
pub use restriction::{generate_restrictions, minimize_restrictions, PartialOrder, RestrictionMap};
pub use schedule::{
    generate_distinct, generate_valid_automine, generate_valid_recursive, schedules_equivalent, Schedule, ScheduleSet,
};
