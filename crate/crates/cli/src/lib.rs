//! Reports and commands for cyclic codes built from two-prime Whiteman
//! sequences of order 6.

pub mod commands;
pub mod config;
pub mod report;
pub mod suite;

pub use commands::{Command, Outcome};
pub use config::{Format, InputError, JobConfig};
