//! Support library for the `hydromoments` binary: record model, deterministic
//! formatting/serialization, and the published reference grid the `table1`
//! subcommand reproduces. Kept as a library so the serialization round-trip
//! is testable without spawning the binary.

pub mod output;
pub mod printed;
