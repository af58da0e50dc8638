//! Library side of the `seidel` command: argument parsing, verification
//! suites, sweeps and report writers.

pub mod app;
pub mod report;
pub mod sweep;
pub mod verify;
