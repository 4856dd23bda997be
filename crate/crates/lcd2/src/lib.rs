//! Command-line front end and serialization formats for `lcd2-core`.
//!
//! Adds the text formats for matrices and tuples, a multi-threaded census
//! driver with deterministic merging, and JSON/CSV records.

pub mod cli;
pub mod parallel;
pub mod records;
pub mod text;

pub use parallel::Runner;
