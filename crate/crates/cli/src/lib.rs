//! Library surface of the kgscan binary: scan records, grid construction
//! and the configuration-file reader, shared with the integration tests.

pub mod config;
pub mod scan;
