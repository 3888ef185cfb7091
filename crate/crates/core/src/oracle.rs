//! Ground truth: witness validation, complete brute-force search, exhaustive
//! verification over every colouring of a small complete graph, and exact
//! computation of small Ramsey-type numbers.
//!
//! [`check_witness`] is the single validation authority in this crate —
//! every construction elsewhere is piped through it in tests and on the
//! extraction hot path.  The enumeration order of colourings is part of the
//! contract: a colouring of `K_N` is the integer whose bit `b` (with pairs
//! `(0,1), (0,2), ..., (0,N-1), (1,2), ...` in lexicographic order) is `1`
//! exactly when that pair is red.  Workers scan disjoint interleaved index
//! blocks in increasing order and the reported counterexample is always the
//! minimum failing index, so results are independent of the worker count.

use crate::colored::ColoredComplete;
use crate::error::Error;
use crate::graph::{Graph, TargetGraph};
use crate::search::{find_cycle, find_embedding};
use crate::witness::Witness;
use std::ops::RangeInclusive;

/// Largest pair count (colouring-space exponent) [`exhaustive_verify`]
/// accepts unless the caller raises the budget: `2^24` colourings.
pub const DEFAULT_VERIFY_BITS: usize = 24;

/// Validates a witness against a colouring: a red cycle must have exactly
/// `k` distinct in-range vertices with every cyclic pair red; a blue copy
/// must be an injective in-range map sending every edge of `h` to a blue
/// pair.  Never fails — malformed input is simply `false`.
pub fn check_witness(
    coloring: &ColoredComplete,
    k: usize,
    h: &TargetGraph,
    witness: &Witness,
) -> bool {
    let n = coloring.order();
    match witness {
        Witness::RedCycle(cycle) => {
            if cycle.len() != k || k < 3 {
                return false;
            }
            if cycle.iter().any(|&v| v >= n) {
                return false;
            }
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != k {
                return false;
            }
            (0..k).all(|i| coloring.is_red(cycle[i], cycle[(i + 1) % k]))
        }
        Witness::BlueCopy(embedding) => {
            let map = embedding.map();
            if map.len() != h.order() {
                return false;
            }
            if map.iter().any(|&v| v >= n) {
                return false;
            }
            let mut sorted = map.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != map.len() {
                return false;
            }
            h.graph()
                .edges()
                .into_iter()
                .all(|(u, v)| coloring.is_blue(map[u], map[v]))
        }
    }
}

/// Complete search for any witness: a red `k`-cycle, tried first, then a
/// blue embedding of `h`.  Exact — `None` is a proof of absence.
///
/// `max_order` bounds the vertex count; beyond it the search signals a
/// size-limit error instead of running an unbounded enumeration.
pub fn brute_force_witness(
    coloring: &ColoredComplete,
    k: usize,
    h: &TargetGraph,
    max_order: usize,
) -> Result<Option<Witness>, Error> {
    let n = coloring.order();
    if n > max_order {
        return Err(Error::SizeLimit {
            order: n,
            limit: max_order,
        });
    }
    if let Some(cycle) = find_cycle(coloring.red(), k) {
        return Ok(Some(Witness::RedCycle(cycle)));
    }
    if let Some(embedding) = find_embedding(h.graph(), &coloring.blue()) {
        return Ok(Some(Witness::BlueCopy(embedding)));
    }
    Ok(None)
}

/// Existence-only variant used by the exhaustive scan; checks the denser
/// colour first, which cannot change the verdict of two complete searches.
#[allow(clippy::if_same_then_else)] // the branches differ only in search order
fn witness_exists(coloring: &ColoredComplete, k: usize, h: &TargetGraph) -> bool {
    let n = coloring.order();
    let pairs = n * n.saturating_sub(1) / 2;
    let red_first = 2 * coloring.red_edge_count() >= pairs;
    if red_first {
        find_cycle(coloring.red(), k).is_some()
            || find_embedding(h.graph(), &coloring.blue()).is_some()
    } else {
        find_embedding(h.graph(), &coloring.blue()).is_some()
            || find_cycle(coloring.red(), k).is_some()
    }
}

/// All vertex pairs of `K_n` in lexicographic order; index `b` in this list
/// is colouring bit `b`.
fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// The colouring encoded by `index` under the lexicographic pair order.
fn coloring_from_index(n: usize, pairs: &[(usize, usize)], index: u64) -> ColoredComplete {
    let mut red = Graph::new(n);
    for (b, &(u, v)) in pairs.iter().enumerate() {
        if index >> b & 1 == 1 {
            red.add_edge(u, v);
        }
    }
    ColoredComplete::from_red(red)
}

/// Result of an exhaustive scan over every colouring of `K_N`.
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    /// True iff every colouring contains a witness.
    pub verified: bool,
    /// Size of the scanned colouring space (`2^binomial(N,2)`).
    pub space: u64,
    /// The minimum-index colouring without a witness, when one exists.
    pub counterexample: Option<(u64, ColoredComplete)>,
}

const SCAN_BLOCK: u64 = 4096;

/// Decides whether every red/blue colouring of `K_n` contains a red
/// `k`-cycle or a blue copy of `h`, by scanning all `2^binomial(n,2)`
/// colourings.
///
/// `jobs` worker threads split the index space into interleaved blocks;
/// each worker walks its indices in increasing order with incremental
/// edge toggles and stops at its first failure, so the merged
/// counterexample is the global minimum index regardless of `jobs`.
/// `max_bits` guards the exponent (see [`DEFAULT_VERIFY_BITS`]).
pub fn exhaustive_verify(
    k: usize,
    h: &TargetGraph,
    n: usize,
    jobs: usize,
    max_bits: usize,
) -> Result<VerifyOutcome, Error> {
    if jobs == 0 {
        return Err(Error::invalid("worker count must be positive"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if bits > max_bits {
        return Err(Error::BudgetExceeded {
            context: "exhaustive verification",
            detail: format!("{bits} colouring bits exceed the budget of {max_bits}"),
        });
    }
    let space: u64 = 1u64 << bits;
    let pairs = pair_order(n);
    let blocks = space.div_ceil(SCAN_BLOCK);
    let workers = jobs.min(blocks.max(1) as usize);

    let scan_worker = |worker: usize| -> Option<u64> {
        let mut block = worker as u64;
        while block < blocks {
            let start = block * SCAN_BLOCK;
            let end = (start + SCAN_BLOCK).min(space);
            let mut coloring = coloring_from_index(n, &pairs, start);
            let mut index = start;
            loop {
                if !witness_exists(&coloring, k, h) {
                    return Some(index);
                }
                index += 1;
                if index == end {
                    break;
                }
                // binary increment: toggle the trailing ones and the bit
                // that flips to one
                let flipped = (index - 1) ^ index;
                for (b, &(u, v)) in pairs.iter().enumerate() {
                    if flipped >> b & 1 == 1 {
                        coloring.toggle(u, v);
                    }
                }
            }
            block += workers as u64;
        }
        None
    };

    let first_failure: Option<u64> = if workers == 1 {
        scan_worker(0)
    } else {
        let scan = &scan_worker;
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| scope.spawn(move || scan(w)))
                .collect();
            handles
                .into_iter()
                .filter_map(|h| h.join().expect("scan worker panicked"))
                .min()
        })
    };

    Ok(match first_failure {
        Some(index) => VerifyOutcome {
            verified: false,
            space,
            counterexample: Some((index, coloring_from_index(n, &pairs, index))),
        },
        None => VerifyOutcome {
            verified: true,
            space,
            counterexample: None,
        },
    })
}

/// The least `N` in `range` such that every colouring of `K_N` contains a
/// red `k`-cycle or a blue copy of `h` — which is the exact Ramsey-type
/// number provided the range brackets it.
///
/// Bracketing is enforced: the order below the range must admit a
/// counterexample, and some order in the range must verify; otherwise a
/// range error reports which side failed.
pub fn ramsey_number_exact(
    k: usize,
    h: &TargetGraph,
    range: RangeInclusive<usize>,
    jobs: usize,
    max_bits: usize,
) -> Result<usize, Error> {
    let (lo, hi) = (*range.start(), *range.end());
    if lo < 1 || lo > hi {
        return Err(Error::invalid("search range must be nonempty and start at 1 or later"));
    }
    let below = exhaustive_verify(k, h, lo - 1, jobs, max_bits)?;
    if below.verified {
        return Err(Error::RangeExhausted(format!(
            "already verified at order {}, below the search range",
            lo - 1
        )));
    }
    for n in range {
        if exhaustive_verify(k, h, n, jobs, max_bits)?.verified {
            return Ok(n);
        }
    }
    Err(Error::RangeExhausted(format!(
        "no verified order in {lo}..={hi}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching_case::lower_bound_coloring;
    use crate::search::Embedding;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn target(g: Graph) -> TargetGraph {
        TargetGraph::new(g).unwrap()
    }

    #[test]
    fn witness_checks() {
        let coloring = ColoredComplete::all_red(5);
        let h = target(Graph::matching(1));
        assert!(check_witness(
            &coloring,
            5,
            &h,
            &Witness::RedCycle(vec![0, 1, 2, 3, 4])
        ));
        assert!(!check_witness(
            &coloring,
            5,
            &h,
            &Witness::BlueCopy(Embedding::from_map(vec![0, 1]))
        ));
        assert!(!check_witness(
            &coloring,
            5,
            &h,
            &Witness::RedCycle(vec![0, 1, 2, 3, 3])
        ));
        // wrong length, out of range, too short to be a cycle
        assert!(!check_witness(
            &coloring,
            5,
            &h,
            &Witness::RedCycle(vec![0, 1, 2, 3])
        ));
        assert!(!check_witness(
            &coloring,
            5,
            &h,
            &Witness::RedCycle(vec![0, 1, 2, 3, 9])
        ));
        let blue = ColoredComplete::all_blue(5);
        assert!(check_witness(
            &blue,
            3,
            &h,
            &Witness::BlueCopy(Embedding::from_map(vec![2, 4]))
        ));
        assert!(!check_witness(
            &blue,
            3,
            &h,
            &Witness::BlueCopy(Embedding::from_map(vec![2, 2]))
        ));
    }

    #[test]
    fn brute_force_examples() {
        let h3 = target(Graph::matching(3));
        let none = brute_force_witness(&lower_bound_coloring(3, 3).unwrap(), 3, &h3, 16).unwrap();
        assert!(none.is_none());

        let found = brute_force_witness(&ColoredComplete::all_blue(6), 3, &h3, 16)
            .unwrap()
            .unwrap();
        assert!(matches!(found, Witness::BlueCopy(_)));
        assert!(check_witness(&ColoredComplete::all_blue(6), 3, &h3, &found));

        // red graph is a 7-cycle: the red witness is reported even though
        // the blue complement also holds triangles
        let coloring = ColoredComplete::from_red(Graph::cycle(7));
        let k3 = target(Graph::complete(3));
        let found = brute_force_witness(&coloring, 7, &k3, 16).unwrap().unwrap();
        assert!(matches!(found, Witness::RedCycle(_)));
        assert!(check_witness(&coloring, 7, &k3, &found));

        assert!(matches!(
            brute_force_witness(&ColoredComplete::all_red(20), 3, &h3, 16),
            Err(Error::SizeLimit { .. })
        ));
    }

    /// Independent witness enumerator: tries every vertex sequence for the
    /// red cycle and every injection for the blue copy, with no pruning
    /// beyond basic feasibility.
    fn naive_witness_exists(coloring: &ColoredComplete, k: usize, h: &TargetGraph) -> bool {
        fn cycles(coloring: &ColoredComplete, k: usize, seq: &mut Vec<usize>) -> bool {
            let n = coloring.order();
            if seq.len() == k {
                return (0..k).all(|i| coloring.is_red(seq[i], seq[(i + 1) % k]));
            }
            for v in 0..n {
                if !seq.contains(&v) {
                    seq.push(v);
                    if cycles(coloring, k, seq) {
                        return true;
                    }
                    seq.pop();
                }
            }
            false
        }
        fn copies(coloring: &ColoredComplete, h: &Graph, map: &mut Vec<usize>) -> bool {
            let n = coloring.order();
            if map.len() == h.order() {
                return h
                    .edges()
                    .into_iter()
                    .all(|(u, v)| coloring.is_blue(map[u], map[v]));
            }
            for v in 0..n {
                if !map.contains(&v) {
                    map.push(v);
                    if copies(coloring, h, map) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        (k >= 3 && k <= coloring.order() && cycles(coloring, k, &mut Vec::new()))
            || (h.order() <= coloring.order() && copies(coloring, h.graph(), &mut Vec::new()))
    }

    #[test]
    fn brute_force_agrees_with_naive_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1E);
        let targets = [
            target(Graph::matching(2)),
            target(Graph::path(4)),
            target(Graph::complete(3)),
        ];
        for _ in 0..250 {
            let n = rng.random_range(4..=7);
            let coloring = ColoredComplete::random(n, &mut rng);
            for h in &targets {
                for k in [3usize, 5] {
                    let brute = brute_force_witness(&coloring, k, h, 8).unwrap();
                    let naive = naive_witness_exists(&coloring, k, h);
                    assert_eq!(brute.is_some(), naive, "n={n} k={k}");
                    if let Some(w) = brute {
                        assert!(check_witness(&coloring, k, h, &w));
                    }
                }
            }
        }
    }

    #[test]
    fn tiny_verification_and_exact_numbers() {
        let k2 = target(Graph::matching(1));
        assert!(exhaustive_verify(3, &k2, 3, 1, 24).unwrap().verified);
        assert!(!exhaustive_verify(3, &k2, 2, 1, 24).unwrap().verified);
        assert_eq!(ramsey_number_exact(3, &k2, 2..=4, 1, 24).unwrap(), 3);
        assert_eq!(ramsey_number_exact(5, &k2, 2..=6, 1, 24).unwrap(), 5);

        // two-edge matching: below k the formula regime does not apply,
        // the exact number comes out of pure enumeration
        let h2 = target(Graph::matching(2));
        let r = ramsey_number_exact(3, &h2, 2..=6, 2, 24).unwrap();
        assert_eq!(r, 5);
    }

    #[test]
    fn budget_and_range_errors() {
        let k2 = target(Graph::matching(1));
        assert!(matches!(
            exhaustive_verify(3, &k2, 9, 1, 24),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            exhaustive_verify(3, &k2, 4, 0, 24),
            Err(Error::InvalidInput(_))
        ));
        // range starting above the true number is rejected, not misreported
        assert!(matches!(
            ramsey_number_exact(3, &k2, 4..=5, 1, 24),
            Err(Error::RangeExhausted(_))
        ));
        // range ending below the true number reports exhaustion
        let h3 = target(Graph::matching(3));
        assert!(matches!(
            ramsey_number_exact(3, &h3, 2..=5, 4, 24),
            Err(Error::RangeExhausted(_))
        ));
    }

    #[test]
    fn six_vertex_counterexample_is_the_red_star() {
        let h3 = target(Graph::matching(3));
        let outcome = exhaustive_verify(3, &h3, 6, 4, 24).unwrap();
        assert!(!outcome.verified);
        assert_eq!(outcome.space, 1 << 15);
        let (index, coloring) = outcome.counterexample.unwrap();
        // bits 0..4 are the pairs (0,1)..(0,5): the red star at vertex 0,
        // whose blue side is K_5 — the extremal colouring up to relabeling
        assert_eq!(index, 31);
        let mut degrees: Vec<usize> = (0..6).map(|v| coloring.red().degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, [1, 1, 1, 1, 1, 5]);
        assert!(brute_force_witness(&coloring, 3, &h3, 16).unwrap().is_none());
    }

    #[test]
    fn counterexample_is_worker_count_independent() {
        let h3 = target(Graph::matching(3));
        for jobs in [1usize, 2, 3, 8] {
            let outcome = exhaustive_verify(3, &h3, 6, jobs, 24).unwrap();
            assert_eq!(outcome.counterexample.as_ref().unwrap().0, 31, "jobs={jobs}");
        }
    }

    #[test]
    fn verification_is_monotone_in_order() {
        let cases = [
            (3usize, target(Graph::matching(1)), 3usize),
            (5, target(Graph::matching(1)), 5),
            (3, target(Graph::matching(2)), 5),
        ];
        for (k, h, r) in cases {
            assert!(!exhaustive_verify(k, &h, r - 1, 2, 24).unwrap().verified);
            assert!(exhaustive_verify(k, &h, r, 2, 24).unwrap().verified);
            assert!(exhaustive_verify(k, &h, r + 1, 2, 24).unwrap().verified);
        }
    }

    #[test]
    fn degenerate_orders_never_verify() {
        // The order-0 and order-1 boards each have a single colouring
        // with no room for any witness, so they are counterexamples —
        // which lets exact searches start their range at 1.
        let h = target(Graph::matching(2));
        for n in [0, 1] {
            let outcome = exhaustive_verify(3, &h, n, 1, 24).unwrap();
            assert!(!outcome.verified);
            assert_eq!(outcome.space, 1);
            assert_eq!(outcome.counterexample.as_ref().unwrap().0, 0);
        }
        assert_eq!(ramsey_number_exact(3, &h, 1..=6, 1, 24).unwrap(), 5);
    }
}
