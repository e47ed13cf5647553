//! IO, parallel execution and command-line front end for [`symmine_core`].
//!
//! * [`io`] reads and writes whitespace edge lists.
//! * [`engine`] runs compiled plans across worker threads and drives motif counting.
//! * [`plan_json`] is the stable JSON form of a compiled plan.
//! * [`cli`] implements the `symmine` binary.

pub mod cli;
pub mod engine;
pub mod io;
pub mod plan_json;

pub use symmine_core;
