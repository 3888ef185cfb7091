//! Turning long red paths near a vertex into red cycles of exact length.
//!
//! Both routines take the red graph, a hub vertex `v`, and a red path, and
//! return a red cycle on exactly `k` vertices.
//!
//! * [`cycle_from_first_neighborhood`]: the path lives inside the red
//!   neighbourhood of `v` and has `k - 1` vertices; closing through `v`
//!   is immediate.
//! * [`cycle_from_second_neighborhood`]: the path lives at red distance
//!   exactly two from `v` and has at least `2k - 4` vertices.  For each
//!   path vertex `v_i` let `u_i` be the lowest common red neighbour of
//!   `v` and `v_i`.  If some window pair `u_j != u_{j+k-4}` (`j` ranging
//!   over the first `k` positions), those two hubs close a cycle through
//!   `v`.  Otherwise every `u_i` repeats with period `k - 4`, which chains
//!   the hubs at positions 1, 2, 3 to positions `k-2`, `k-1`, `k` and
//!   beyond; a first-position disagreement then closes a cycle avoiding
//!   `v` entirely, and total agreement closes the path's own prefix.
//!
//! The index arithmetic requires `k >= 5`.  Inputs are validated in full;
//! a violated precondition is reported as invalid input, while a failure
//! of the derived equalities (impossible after the window scan) is an
//! internal contract violation.

use crate::error::Error;
use crate::graph::Graph;

/// Checks that `path` is a duplicate-free red path avoiding `v`.
fn validate_red_path(red: &Graph, v: usize, path: &[usize]) -> Result<(), Error> {
    let n = red.order();
    if v >= n {
        return Err(Error::invalid(format!("hub vertex {v} out of range")));
    }
    let mut seen = vec![false; n];
    for &p in path {
        if p >= n {
            return Err(Error::invalid(format!("path vertex {p} out of range")));
        }
        if p == v {
            return Err(Error::invalid("path passes through the hub vertex"));
        }
        if seen[p] {
            return Err(Error::invalid(format!("path repeats vertex {p}")));
        }
        seen[p] = true;
    }
    for w in path.windows(2) {
        if !red.has_edge(w[0], w[1]) {
            return Err(Error::invalid(format!(
                "path pair {}-{} is not a red edge",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

/// Closes a red path of `k - 1` vertices inside the red neighbourhood of
/// `v` into a red `k`-cycle through `v`.
///
/// Returns the cycle as a vertex sequence of length `k`; the edge from the
/// last vertex back to the first is implied.
pub fn cycle_from_first_neighborhood(
    red: &Graph,
    v: usize,
    path: &[usize],
) -> Result<Vec<usize>, Error> {
    validate_red_path(red, v, path)?;
    if path.len() < 2 {
        return Err(Error::invalid(
            "first-neighbourhood path needs at least two vertices",
        ));
    }
    for &p in path {
        if !red.has_edge(v, p) {
            return Err(Error::invalid(format!(
                "path vertex {p} is not a red neighbour of the hub"
            )));
        }
    }
    let mut cycle = Vec::with_capacity(path.len() + 1);
    cycle.push(v);
    cycle.extend_from_slice(path);
    Ok(cycle)
}

/// Closes a red path of at least `2k - 4` vertices at red distance exactly
/// two from `v` into a red `k`-cycle.
///
/// Preconditions, all checked: `k >= 5`; no path vertex is a red
/// neighbour of `v`; every path vertex shares at least one red neighbour
/// with `v`.  Under them the hubs `u_i` are disjoint from the path, so the
/// constructed cycles are automatically duplicate-free.
pub fn cycle_from_second_neighborhood(
    red: &Graph,
    v: usize,
    k: usize,
    path: &[usize],
) -> Result<Vec<usize>, Error> {
    if k < 5 {
        return Err(Error::invalid("second-neighbourhood closure needs k >= 5"));
    }
    validate_red_path(red, v, path)?;
    let span = 2 * k - 4;
    if path.len() < span {
        return Err(Error::TooSmall {
            context: "second-neighbourhood path",
            needed: span,
            have: path.len(),
        });
    }
    for &p in path {
        if red.has_edge(v, p) {
            return Err(Error::invalid(format!(
                "path vertex {p} is a red neighbour of the hub, not at distance two"
            )));
        }
    }
    let mut hubs = Vec::with_capacity(span);
    for &p in &path[..span] {
        match red.first_common_neighbor(v, p) {
            Some(u) => hubs.push(u),
            None => {
                return Err(Error::invalid(format!(
                    "path vertex {p} shares no red neighbour with the hub"
                )))
            }
        }
    }

    // window scan: positions j and j + k - 4 (1-based), i.e. a segment of
    // k - 3 path vertices whose two end hubs differ
    for j in 0..k {
        let a = j;
        let b = j + k - 4;
        if hubs[a] != hubs[b] {
            let mut cycle = Vec::with_capacity(k);
            cycle.push(v);
            cycle.push(hubs[a]);
            cycle.extend_from_slice(&path[a..=b]);
            cycle.push(hubs[b]);
            debug_assert_eq!(cycle.len(), k);
            return Ok(cycle);
        }
    }

    // all window pairs agree, so hubs repeat with period k - 4; spell out
    // the three chains the remaining cases lean on
    let chains = [
        [0, k - 4, 2 * k - 8],
        [1, k - 3, 2 * k - 7],
        [2, k - 2, 2 * k - 6],
    ];
    for chain in chains {
        if hubs[chain[0]] != hubs[chain[1]] || hubs[chain[1]] != hubs[chain[2]] {
            return Err(Error::contract(
                "second-neighbourhood closure",
                format!("hub chain {chain:?} broken after uniform window scan"),
            ));
        }
    }

    let cycle = if hubs[0] != hubs[1] {
        // segment v_1 v_2 hooked to segment v_{k-2} .. v_{2k-7} through the
        // two distinct hubs; the chains make both hook edges red
        let mut c = vec![hubs[0], path[0], path[1], hubs[1]];
        c.extend_from_slice(&path[k - 3..=2 * k - 8]);
        c
    } else if hubs[1] != hubs[2] {
        // shifted by one: v_2 v_3 hooked to v_{k-1} .. v_{2k-6}
        let mut c = vec![hubs[1], path[1], path[2], hubs[2]];
        c.extend_from_slice(&path[k - 2..=2 * k - 7]);
        c
    } else {
        // u_1 = u_2 = u_3, and the third chain extends the agreement to
        // u_{k-2}, so the single hub closes the path's own prefix
        let mut c = vec![hubs[0]];
        c.extend_from_slice(&path[..k - 1]);
        c
    };
    debug_assert_eq!(cycle.len(), k);
    debug_assert!(is_red_cycle(red, &cycle));
    Ok(cycle)
}

fn is_red_cycle(red: &Graph, cycle: &[usize]) -> bool {
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == cycle.len()
        && (0..cycle.len()).all(|i| red.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Star centred on 0 plus a rim path over the leaves.
    fn wheel_minus_one_spoke_rim(k: usize) -> Graph {
        let mut g = Graph::new(k);
        for i in 1..k {
            g.add_edge(0, i);
            if i + 1 < k {
                g.add_edge(i, i + 1);
            }
        }
        g
    }

    #[test]
    fn first_neighborhood_closes_wheel() {
        for k in 4..=11 {
            let g = wheel_minus_one_spoke_rim(k);
            let path: Vec<usize> = (1..k).collect();
            let cycle = cycle_from_first_neighborhood(&g, 0, &path).unwrap();
            assert_eq!(cycle.len(), k);
            assert_eq!(cycle[0], 0);
            assert!(is_red_cycle(&g, &cycle));
        }
    }

    #[test]
    fn first_neighborhood_rejects_bad_input() {
        let g = wheel_minus_one_spoke_rim(6);
        // hub on the path
        assert!(cycle_from_first_neighborhood(&g, 0, &[1, 0, 2]).is_err());
        // repeated vertex
        assert!(cycle_from_first_neighborhood(&g, 0, &[1, 2, 1]).is_err());
        // non-edge in the path (1 and 3 are not adjacent on the rim)
        assert!(cycle_from_first_neighborhood(&g, 0, &[1, 3, 4]).is_err());
        // vertex not adjacent to the hub
        let mut h = g.clone();
        h.remove_edge(0, 3);
        assert!(cycle_from_first_neighborhood(&h, 0, &[2, 3, 4]).is_err());
        // too short
        assert!(cycle_from_first_neighborhood(&g, 0, &[1]).is_err());
    }

    /// Builds the distance-two configuration: hub 0, path vertices
    /// `1..=2k-4`, and one helper vertex per distinct hub value in
    /// `pattern` (path position `i`, 0-based, gets helper `pattern[i]`).
    /// Returns the graph and the helper vertex ids, indexed by pattern
    /// value.
    fn planted_second(k: usize, pattern: &[usize]) -> (Graph, Vec<usize>) {
        let span = 2 * k - 4;
        assert_eq!(pattern.len(), span);
        let helpers = pattern.iter().max().unwrap() + 1;
        let mut g = Graph::new(1 + span + helpers);
        let helper_id: Vec<usize> = (0..helpers).map(|h| 1 + span + h).collect();
        for i in 0..span {
            if i + 1 < span {
                g.add_edge(1 + i, 2 + i);
            }
            g.add_edge(helper_id[pattern[i]], 1 + i);
        }
        for &h in &helper_id {
            g.add_edge(0, h);
        }
        (g, helper_id)
    }

    #[test]
    fn second_neighborhood_window_case_every_position() {
        // exactly one disagreeing window pair, at each possible position
        for k in 5..=11 {
            let span = 2 * k - 4;
            for j in 0..k {
                let mut pattern = vec![0usize; span];
                pattern[j + k - 4] = 1;
                let (g, helper) = planted_second(k, &pattern);
                let path: Vec<usize> = (1..=span).collect();
                let cycle = cycle_from_second_neighborhood(&g, 0, k, &path).unwrap();
                let mut expected = vec![0, helper[0]];
                expected.extend_from_slice(&path[j..=j + k - 4]);
                expected.push(helper[1]);
                assert_eq!(cycle, expected, "k={k} j={j}");
                assert!(is_red_cycle(&g, &cycle));
            }
        }
    }

    #[test]
    fn second_neighborhood_two_hub_case() {
        // hubs repeat with period k-4 and the first two differ; the
        // period makes every window pair agree, so the scan falls through
        for k in [7usize, 9, 11] {
            let span = 2 * k - 4;
            let pattern: Vec<usize> = (0..span).map(|i| i % (k - 4)).collect();
            let (g, helper) = planted_second(k, &pattern);
            let path: Vec<usize> = (1..=span).collect();
            let cycle = cycle_from_second_neighborhood(&g, 0, k, &path).unwrap();
            let mut expected = vec![helper[0], path[0], path[1], helper[1]];
            expected.extend_from_slice(&path[k - 3..=2 * k - 8]);
            assert_eq!(cycle, expected, "k={k}");
            assert!(is_red_cycle(&g, &cycle));
            assert!(!cycle.contains(&0), "hub-avoiding case must skip vertex 0");
        }
    }

    #[test]
    fn second_neighborhood_shifted_two_hub_case() {
        // first two hubs agree, second and third differ
        for k in [7usize, 9, 11] {
            let span = 2 * k - 4;
            let base: Vec<usize> = (0..k - 4).map(|i| if i < 2 { 0 } else { 1 }).collect();
            let pattern: Vec<usize> = (0..span).map(|i| base[i % (k - 4)]).collect();
            let (g, helper) = planted_second(k, &pattern);
            let path: Vec<usize> = (1..=span).collect();
            let cycle = cycle_from_second_neighborhood(&g, 0, k, &path).unwrap();
            let mut expected = vec![helper[0], path[1], path[2], helper[1]];
            expected.extend_from_slice(&path[k - 2..=2 * k - 7]);
            assert_eq!(cycle, expected, "k={k}");
            assert!(is_red_cycle(&g, &cycle));
        }
    }

    #[test]
    fn second_neighborhood_single_hub_case() {
        // one helper serves the whole path; the cycle closes the prefix
        for k in 5..=11 {
            let span = 2 * k - 4;
            let pattern = vec![0usize; span];
            let (g, helper) = planted_second(k, &pattern);
            let path: Vec<usize> = (1..=span).collect();
            let cycle = cycle_from_second_neighborhood(&g, 0, k, &path).unwrap();
            let mut expected = vec![helper[0]];
            expected.extend_from_slice(&path[..k - 1]);
            assert_eq!(cycle, expected, "k={k}");
            assert!(is_red_cycle(&g, &cycle));
        }
    }

    #[test]
    fn five_cycle_skips_the_two_hub_cases() {
        // for k = 5 the period is 1, so a uniform window scan forces all
        // hubs equal: the two-hub constructions can never fire
        let k = 5;
        let span = 2 * k - 4;
        for seed_pattern in 0..16u32 {
            // arbitrary period-1 pattern is just "all equal"; instead
            // check that *any* pattern either trips the window scan or is
            // constant on the first three hubs
            let pattern: Vec<usize> = (0..span)
                .map(|i| (seed_pattern >> (i % 4) & 1) as usize)
                .collect();
            let (g, _) = planted_second(k, &pattern);
            let path: Vec<usize> = (1..=span).collect();
            let cycle = cycle_from_second_neighborhood(&g, 0, k, &path).unwrap();
            assert!(is_red_cycle(&g, &cycle));
            let windows_agree = (0..k).all(|j| pattern[j] == pattern[j + k - 4]);
            if windows_agree {
                // the only remaining construction starts at the hub and
                // walks the prefix, so the cycle must avoid none of it
                assert_eq!(&cycle[1..], &path[..k - 1]);
            } else {
                assert_eq!(cycle[0], 0, "window case passes through the hub");
            }
        }
    }

    #[test]
    fn second_neighborhood_rejects_bad_input() {
        let k = 5;
        let span = 2 * k - 4;
        let pattern = vec![0usize; span];
        let (g, _) = planted_second(k, &pattern);
        let path: Vec<usize> = (1..=span).collect();

        assert!(cycle_from_second_neighborhood(&g, 0, 4, &path).is_err());
        assert!(matches!(
            cycle_from_second_neighborhood(&g, 0, k, &path[..span - 1]),
            Err(Error::TooSmall { .. })
        ));

        // a path vertex adjacent to the hub breaks the distance-two claim
        let mut near = g.clone();
        near.add_edge(0, 1);
        assert!(cycle_from_second_neighborhood(&near, 0, k, &path).is_err());

        // a path vertex with no shared neighbour breaks extraction
        let mut orphan = g.clone();
        let helper = 1 + span;
        orphan.remove_edge(helper, 3);
        assert!(cycle_from_second_neighborhood(&orphan, 0, k, &path).is_err());
    }
}
