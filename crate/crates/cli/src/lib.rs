//! Parsing, serialization, and report formatting shared by the `arcgraph`
//! binary and its tests.

pub mod format;
pub mod report;
