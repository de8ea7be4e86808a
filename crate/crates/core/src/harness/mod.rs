//! Sweeps and verification suites behind the `knodel` command line.

pub mod sweep;
pub mod verify;

pub use sweep::{sweep, sweep_row, to_csv, to_jsonl, SweepRow, CSV_HEADER};
pub use verify::{run_suite, Suite, VerificationReport};
