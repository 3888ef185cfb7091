//! Support library for the `ramsey` binary: the graph6 codec, the
//! target-specification grammar, colouring files, and the JSON report
//! format.  The binary itself is a thin argument-parsing layer over
//! these pieces and the `ramsey-core` library.

#![forbid(unsafe_code)]

pub mod graph6;
pub mod report;
pub mod targets;
