//! The matching target in both directions: the extremal colouring showing
//! the bound `2m + floor((k-1)/2)` is sharp, and the constructive witness
//! extractor for colourings at or above that order.
//!
//! The extractor first computes a maximum blue matching.  With `m` blue
//! edges in hand the matching itself is the blue copy.  Otherwise the
//! matching certificate's witness set `S` leaves many components in the
//! blue graph: every pair of vertices in different components is red, so
//! spreading `k` vertices across enough components (never more than
//! `floor((k-1)/2)` per component) yields a red complete multipartite
//! graph whose minimum degree meets the half-order threshold, and the
//! degree-driven Hamilton routine closes the red `k`-cycle.

use crate::colored::ColoredComplete;
use crate::error::Error;
use crate::graph::Graph;
use crate::hamilton::hamiltonian_cycle_dirac;
use crate::matching::tutte_berge_witness;
use crate::search::Embedding;
use crate::witness::Witness;

/// `k` vertices spread across distinct blue components: at least
/// `floor((k+1)/2) + 1` nonempty parts, each of size at most
/// `floor((k-1)/2)`, so cross-part red edges alone give every chosen
/// vertex red degree at least `ceil(k/2)` within the selection.
#[derive(Clone, Debug)]
pub struct PartiteSelection {
    parts: Vec<Vec<usize>>,
}

impl PartiteSelection {
    /// Validates the structural invariants: parts nonempty and disjoint,
    /// sizes capped at `floor((k-1)/2)`, at least `floor((k+1)/2) + 1`
    /// parts, `k` vertices in total.
    pub fn new(parts: Vec<Vec<usize>>, k: usize) -> Result<Self, Error> {
        let total: usize = parts.iter().map(Vec::len).sum();
        if total != k {
            return Err(Error::contract(
                "partite selection",
                format!("selected {total} vertices, wanted {k}"),
            ));
        }
        if parts.iter().any(Vec::is_empty) {
            return Err(Error::contract("partite selection", "empty part"));
        }
        let cap = (k - 1) / 2;
        if let Some(big) = parts.iter().find(|p| p.len() > cap) {
            return Err(Error::contract(
                "partite selection",
                format!("part of size {} exceeds cap {cap}", big.len()),
            ));
        }
        if parts.len() < k.div_ceil(2) + 1 {
            return Err(Error::contract(
                "partite selection",
                format!("{} parts, need at least {}", parts.len(), k.div_ceil(2) + 1),
            ));
        }
        let mut all: Vec<usize> = parts.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != total {
            return Err(Error::contract("partite selection", "parts overlap"));
        }
        Ok(PartiteSelection { parts })
    }

    /// The selected vertex sets, one per blue component used.
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }
}

/// The extremal colouring of `K_{N-1}`, `N = 2m + floor((k-1)/2)`: a blue
/// clique on the first `2m - 1` vertices, all other edges red.
///
/// The red graph is then a complete split graph whose clique side has only
/// `floor((k-1)/2)` vertices, so any red cycle alternates into the clique
/// side too often to reach length `k`; the blue graph has `2m - 1`
/// vertices, one short of an `m`-edge matching.
pub fn lower_bound_coloring(k: usize, m: usize) -> Result<ColoredComplete, Error> {
    if k < 3 {
        return Err(Error::invalid("cycle length k must be at least 3"));
    }
    if m < k {
        return Err(Error::invalid("matching size m must be at least k"));
    }
    let order = 2 * m + (k - 1) / 2 - 1;
    let mut red = Graph::complete(order);
    for u in 0..(2 * m - 1) {
        for v in (u + 1)..(2 * m - 1) {
            red.remove_edge(u, v);
        }
    }
    Ok(ColoredComplete::from_red(red))
}

/// Extracts a red `k`-cycle or a blue matching of `m` edges from any
/// colouring of order at least `2m + floor((k-1)/2)`.
///
/// Requires `m >= k >= 3` and `k` odd.  A blue copy is reported as an
/// embedding of the standard `m`-edge matching graph (pattern vertices
/// `2i`, `2i+1` forming edge `i`).
pub fn matching_witness(
    coloring: &ColoredComplete,
    k: usize,
    m: usize,
) -> Result<Witness, Error> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::invalid("cycle length k must be odd and at least 3"));
    }
    if m < k {
        return Err(Error::invalid("matching size m must be at least k"));
    }
    let n = coloring.order();
    let needed = 2 * m + (k - 1) / 2;
    if n < needed {
        return Err(Error::TooSmall {
            context: "matching-target extraction",
            needed,
            have: n,
        });
    }

    let blue = coloring.blue();
    let certificate = tutte_berge_witness(&blue);
    if certificate.matching.len() >= m {
        let mut map = Vec::with_capacity(2 * m);
        for &(u, v) in &certificate.matching[..m] {
            map.push(u);
            map.push(v);
        }
        return Ok(Witness::BlueCopy(Embedding::from_map(map)));
    }

    // the blue matching certifies its own maximality, so the witness set
    // leaves a component structure rich enough for the red side
    let witness_set = &certificate.witness_set;
    if 2 * witness_set.len() > n {
        return Err(Error::contract(
            "matching-target extraction",
            format!("witness set of size {} exceeds half of {n}", witness_set.len()),
        ));
    }
    if n - witness_set.len() < k {
        return Err(Error::contract(
            "matching-target extraction",
            format!(
                "only {} vertices outside the witness set, need {k}",
                n - witness_set.len()
            ),
        ));
    }

    let mut excluded = vec![false; n];
    for &v in witness_set {
        excluded[v] = true;
    }
    let mut components = blue.components_excluding(&excluded);
    let odd = components.iter().filter(|c| c.len() % 2 == 1).count();
    if odd < (k - 1) / 2 + 2 + witness_set.len() {
        return Err(Error::contract(
            "matching-target extraction",
            format!(
                "{odd} odd blue components, need {}",
                (k - 1) / 2 + 2 + witness_set.len()
            ),
        ));
    }
    components.sort_by_key(|c| std::cmp::Reverse(c.len()));

    let cap = (k - 1) / 2;
    let parts = spread_across(&components, k, cap).ok_or_else(|| {
        Error::contract(
            "matching-target extraction",
            format!("components supply fewer than {k} vertices under cap {cap}"),
        )
    })?;
    let selection = PartiteSelection::new(parts, k)?;

    // cross-part pairs join distinct blue components, hence must be red
    let parts = selection.parts();
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            for &u in &parts[i] {
                for &v in &parts[j] {
                    if !coloring.is_red(u, v) {
                        return Err(Error::contract(
                            "matching-target extraction",
                            format!("cross-component pair {u}-{v} is blue"),
                        ));
                    }
                }
            }
        }
    }

    let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
    let flat: Vec<usize> = parts.iter().flatten().copied().collect();
    let skeleton = Graph::complete_multipartite(&sizes);
    let local_cycle = hamiltonian_cycle_dirac(&skeleton).map_err(|e| {
        Error::contract(
            "matching-target extraction",
            format!("red multipartite skeleton not closable: {e}"),
        )
    })?;
    Ok(Witness::RedCycle(
        local_cycle.into_iter().map(|v| flat[v]).collect(),
    ))
}

/// Takes one vertex per component per sweep (largest components first,
/// lowest vertices first within a component) until `k` vertices are
/// chosen, never exceeding `cap` per component.  Returns the nonempty
/// groups, or `None` if the supply runs out.
fn spread_across(components: &[Vec<usize>], k: usize, cap: usize) -> Option<Vec<Vec<usize>>> {
    let mut taken: Vec<Vec<usize>> = vec![Vec::new(); components.len()];
    let mut total = 0;
    while total < k {
        let mut progressed = false;
        for (slot, component) in taken.iter_mut().zip(components) {
            if total == k {
                break;
            }
            if slot.len() < cap && slot.len() < component.len() {
                slot.push(component[slot.len()]);
                total += 1;
                progressed = true;
            }
        }
        if !progressed {
            return None;
        }
    }
    Some(taken.into_iter().filter(|t| !t.is_empty()).collect())
}
