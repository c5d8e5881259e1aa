//! Archives, exporters, CAST-128 ingestion and theorem suites on top of
//! [`bentgraph_core`]. The `bentgraph` binary is a thin shell over this crate.

pub mod archive;
pub mod export;
pub mod ingest;
pub mod verify;

pub use bentgraph_core as core;
