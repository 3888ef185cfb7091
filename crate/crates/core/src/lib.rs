//! Constructive certificates for cycle-versus-graph Ramsey problems.
//!
//! Given a red/blue colouring of a complete graph `K_N` and a target graph
//! `H`, this crate extracts an explicit witness — a red cycle `C_k` or a
//! blue copy of `H` — once `N` clears the relevant size bound, and backs
//! every bound with exact brute-force oracles that can verify small cases
//! exhaustively.
//!
//! The pieces, bottom-up:
//!
//! * [`graph`] — bitset graphs, target graphs, and basic structure;
//! * [`search`] — complete path / cycle / embedding searches;
//! * [`chromatic`] — exact chromatic number with a witnessing colouring;
//! * [`matching`] — maximum matching plus its dual certificate;
//! * [`hamilton`] — Hamilton cycles in graphs meeting the half-order
//!   degree bound;
//! * [`path_ramsey`] — red path versus blue multipartite extraction and the
//!   size bounds it certifies;
//! * [`cycle_extract`] — turning long red paths near a hub vertex into red
//!   cycles of exact length;
//! * [`matching_case`] — the sharp matching-target case, with its matching
//!   lower-bound colouring;
//! * [`extractor`] — the staged pipeline combining everything;
//! * [`oracle`] — brute-force ground truth and exhaustive verification.

#![forbid(unsafe_code)]

pub mod chromatic;
pub mod colored;
pub mod cycle_extract;
pub mod error;
pub mod extractor;
pub mod graph;
pub mod hamilton;
pub mod matching;
pub mod matching_case;
pub mod oracle;
pub mod path_ramsey;
pub mod search;
pub mod witness;

pub use colored::ColoredComplete;
pub use error::Error;
pub use graph::{Graph, TargetGraph};
pub use search::Embedding;
pub use witness::Witness;
