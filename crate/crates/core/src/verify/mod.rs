//! The named check suite behind `heptagon verify`.

pub mod fixtures;
pub mod report;
pub mod suite;

pub use report::{Check, VerifyReport};
pub use suite::{run, run_all, Section};
