//! File formats, parallel sweeps and the command-line front end for
//! `supergraph-core`.

pub mod cli;
pub mod export;
pub mod ingest;
pub mod sweep;
