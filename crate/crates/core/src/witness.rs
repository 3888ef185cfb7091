//! The certificate type every extraction routine produces.

use crate::search::Embedding;

/// A monochromatic certificate inside a red/blue colouring of `K_N`: either
/// a red cycle on exactly `k` vertices, or an embedded blue copy of the
/// target graph `H`.
///
/// Validation lives in [`crate::oracle::check_witness`], the single
/// authority every producer and consumer defers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An ordered vertex list; consecutive entries and the wrap-around pair
    /// are red.
    RedCycle(Vec<usize>),
    /// An embedding of `H` whose edges all land on blue pairs.
    BlueCopy(Embedding),
}

impl Witness {
    /// Short tag for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::RedCycle(_) => "red_cycle",
            Witness::BlueCopy(_) => "blue_copy",
        }
    }

    /// Rewrites local vertex names through `table` (entry `i` of the table
    /// is the global name of local vertex `i`).  Used when a witness was
    /// found inside a restricted colouring.
    pub fn relabel(self, table: &[usize]) -> Witness {
        match self {
            Witness::RedCycle(cycle) => {
                Witness::RedCycle(cycle.into_iter().map(|v| table[v]).collect())
            }
            Witness::BlueCopy(embedding) => {
                let map = embedding.map().iter().map(|&v| table[v]).collect();
                Witness::BlueCopy(Embedding::from_map(map))
            }
        }
    }
}
