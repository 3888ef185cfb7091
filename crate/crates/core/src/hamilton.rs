//! Hamilton cycles in graphs meeting the half-order degree bound.
//!
//! When every degree is at least `n/2`, a Hamilton cycle always exists, and
//! the classical argument is already an algorithm: grow a path until both
//! endpoints only see the path, close it into a cycle through a crossing
//! pair of endpoint neighbours, and while the cycle misses vertices, splice
//! an outside vertex in and grow again.  Each round covers at least one new
//! vertex, so at most `n` rounds run; no backtracking ever happens.

use crate::error::Error;
use crate::graph::Graph;

/// Finds a Hamilton cycle of `g`, which must have order at least 3 and
/// minimum degree at least half its order (checked; rejected otherwise,
/// never searched heuristically).
///
/// Returns the cycle as an ordered vertex list.  Deterministic: every choice
/// takes the lowest available vertex.
pub fn hamiltonian_cycle_dirac(g: &Graph) -> Result<Vec<usize>, Error> {
    let n = g.order();
    if n < 3 {
        return Err(Error::TooSmall {
            context: "hamiltonian cycle",
            needed: 3,
            have: n,
        });
    }
    let min_deg = g.min_degree().unwrap_or(0);
    if 2 * min_deg < n {
        return Err(Error::DegreeCondition {
            order: n,
            required: n.div_ceil(2),
            found: min_deg,
        });
    }

    let mut on_path = vec![false; n];
    let mut path: Vec<usize> = vec![0];
    on_path[0] = true;

    loop {
        extend_both_ends(g, &mut path, &mut on_path);
        let cycle = close_into_cycle(g, &path)?;
        if cycle.len() == n {
            return Ok(cycle);
        }
        // splice in an outside vertex adjacent to the cycle (one exists:
        // a half-order degree bound forces connectivity)
        let (outside, at) = find_attachment(g, &cycle, &on_path).ok_or_else(|| {
            Error::contract(
                "hamiltonian cycle",
                "no outside vertex attaches to the cycle in a half-order-degree graph",
            )
        })?;
        path.clear();
        path.push(outside);
        on_path[outside] = true;
        path.extend(cycle[at..].iter().copied());
        path.extend(cycle[..at].iter().copied());
    }
}

/// Greedily extends both endpoints with the lowest unused neighbour until
/// all endpoint neighbours lie on the path.
fn extend_both_ends(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool]) {
    loop {
        let tip = *path.last().unwrap();
        if let Some(u) = g.neighbors(tip).find(|&u| !on_path[u]) {
            path.push(u);
            on_path[u] = true;
            continue;
        }
        let head = path[0];
        if let Some(u) = g.neighbors(head).find(|&u| !on_path[u]) {
            path.reverse();
            path.push(u);
            on_path[u] = true;
            continue;
        }
        return;
    }
}

/// Closes a maximal path `p_0 .. p_t` into a cycle on the same vertex set:
/// directly when the ends are adjacent, otherwise through the lowest
/// crossing index `i` with `p_i ~ p_t` and `p_{i+1} ~ p_0`, whose existence
/// the degree bound guarantees by counting.
fn close_into_cycle(g: &Graph, path: &[usize]) -> Result<Vec<usize>, Error> {
    let t = path.len() - 1;
    if g.has_edge(path[0], path[t]) {
        return Ok(path.to_vec());
    }
    for i in 0..t {
        if g.has_edge(path[i], path[t]) && g.has_edge(path[i + 1], path[0]) {
            let mut cycle = Vec::with_capacity(path.len());
            cycle.extend_from_slice(&path[..=i]);
            cycle.extend(path[i + 1..].iter().rev());
            return Ok(cycle);
        }
    }
    Err(Error::contract(
        "hamiltonian cycle",
        "maximal path admits no crossing pair despite the degree bound",
    ))
}

/// Lowest outside vertex adjacent to the cycle, with the index of one of
/// its cycle neighbours.
fn find_attachment(g: &Graph, cycle: &[usize], on_path: &[bool]) -> Option<(usize, usize)> {
    for (outside, &covered) in on_path.iter().enumerate() {
        if covered {
            continue;
        }
        if let Some(at) = (0..cycle.len()).find(|&i| g.has_edge(outside, cycle[i])) {
            return Some((outside, at));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn assert_hamilton_cycle(g: &Graph, cycle: &[usize]) {
        let n = g.order();
        assert_eq!(cycle.len(), n, "cycle must cover every vertex");
        let mut seen = vec![false; n];
        for &v in cycle {
            assert!(!seen[v], "vertex {v} repeated");
            seen[v] = true;
        }
        for i in 0..n {
            let (u, v) = (cycle[i], cycle[(i + 1) % n]);
            assert!(g.has_edge(u, v), "cycle pair {u}-{v} is not an edge");
        }
    }

    #[test]
    fn small_named_graphs() {
        for g in [
            Graph::complete(4),
            Graph::complete_multipartite(&[2, 2, 1]),
            Graph::complete_multipartite(&[3, 2, 2]),
            Graph::cycle(3),
        ] {
            let cycle = hamiltonian_cycle_dirac(&g).unwrap();
            assert_hamilton_cycle(&g, &cycle);
        }
    }

    #[test]
    fn rejects_below_threshold() {
        assert!(matches!(
            hamiltonian_cycle_dirac(&Graph::complete(2)),
            Err(Error::TooSmall { .. })
        ));
        // C_5 has min degree 2 < 5/2; rejected even though hamiltonian
        assert!(matches!(
            hamiltonian_cycle_dirac(&Graph::cycle(5)),
            Err(Error::DegreeCondition { .. })
        ));
        assert!(hamiltonian_cycle_dirac(&Graph::cycle(4)).is_ok());
    }

    #[test]
    fn thousand_random_dirac_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xD12AC);
        for round in 0..1000 {
            let n = rng.random_range(5..=40);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.55) {
                        g.add_edge(u, v);
                    }
                }
            }
            // lift every deficient vertex up to the degree bound
            let need = n.div_ceil(2);
            for v in 0..n {
                while g.degree(v) < need {
                    let mut u = rng.random_range(0..n);
                    while u == v || g.has_edge(u, v) {
                        u = rng.random_range(0..n);
                    }
                    g.add_edge(u, v);
                }
            }
            let cycle = hamiltonian_cycle_dirac(&g)
                .unwrap_or_else(|e| panic!("round {round}: {e}"));
            assert_hamilton_cycle(&g, &cycle);
        }
    }

    #[test]
    fn tight_threshold_graphs() {
        // K_{m,m} has min degree exactly n/2: the bound is met with equality
        for m in 2..=8usize {
            let mut g = Graph::new(2 * m);
            for u in 0..m {
                for v in m..2 * m {
                    g.add_edge(u, v);
                }
            }
            let cycle = hamiltonian_cycle_dirac(&g).unwrap();
            assert_hamilton_cycle(&g, &cycle);
        }
    }
}
