//! Randomized verification that the standard embedding `B_m → B_n` neither
//! merges nor splits conjugacy classes, plus the supporting suites and the
//! benchmark runner used by the `braid` command-line tool.

pub mod bench;
pub mod boundary;
pub mod config;
pub mod error;
pub mod nonmerging;
pub mod pairs;
pub mod report;

pub use boundary::{boundary_suite, BoundaryReport};
pub use config::SuiteConfig;
pub use error::HarnessError;
pub use nonmerging::{lift_witness, verify_nonmerging, Summary, SuiteReport, TrialReport, Verdict};
pub use pairs::{generate_pair, PairMode};
