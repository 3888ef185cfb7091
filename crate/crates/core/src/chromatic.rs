//! Exact chromatic number with a witnessing proper colouring.
//!
//! Edgeless and bipartite graphs are recognised directly (one BFS), at
//! any order.  Everything else goes through branch-and-bound over the
//! number of colours: vertices are ordered by descending degree, each
//! vertex may only open one colour beyond those already in use (breaking
//! colour-permutation symmetry), and a greedily grown clique provides the
//! lower bound that lets dense instances close early.  Exact and
//! deterministic; the branch-and-bound refuses graphs larger than a
//! configurable limit because its worst case is exponential.

use crate::error::Error;
use crate::graph::Graph;

/// Default order cap for exact chromatic computation.
pub const DEFAULT_CHROMATIC_LIMIT: usize = 32;

/// Chromatic number of `g` (order at most [`DEFAULT_CHROMATIC_LIMIT`]).
pub fn chromatic_number(g: &Graph) -> Result<usize, Error> {
    chromatic_number_with_limit(g, DEFAULT_CHROMATIC_LIMIT)
}

/// Chromatic number of `g` with an explicit order cap.
pub fn chromatic_number_with_limit(g: &Graph, limit: usize) -> Result<usize, Error> {
    Ok(coloring_with_limit(g, limit)?.len())
}

/// One optimal proper colouring of `g` as colour classes (sorted vertex
/// lists, in the order the colours were first opened).  The classes
/// partition the vertex set; their count is the chromatic number.
pub fn optimal_coloring(g: &Graph) -> Result<Vec<Vec<usize>>, Error> {
    coloring_with_limit(g, DEFAULT_CHROMATIC_LIMIT)
}

/// [`optimal_coloring`] with an explicit order cap.
pub fn coloring_with_limit(g: &Graph, limit: usize) -> Result<Vec<Vec<usize>>, Error> {
    let n = g.order();
    if n == 0 {
        return Err(Error::invalid("chromatic number needs at least one vertex"));
    }
    if g.edge_count() == 0 {
        return Ok(vec![(0..n).collect()]);
    }
    if let Some(classes) = two_coloring(g) {
        return Ok(classes);
    }
    if n > limit {
        return Err(Error::SizeLimit { order: n, limit });
    }

    // Vertex order: degree descending, index ascending, so the constrained
    // vertices are coloured first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));

    let lower = greedy_clique_size(g);
    let mut assignment = vec![usize::MAX; n];
    for k in lower..=n {
        if try_color(g, &order, &mut assignment, 0, k, 0) {
            let mut classes = vec![Vec::new(); k];
            for v in 0..n {
                classes[assignment[v]].push(v);
            }
            // Re-index classes by first use so the output is deterministic
            // in vertex terms rather than in search-order terms.
            classes.retain(|c| !c.is_empty());
            for c in &mut classes {
                c.sort_unstable();
            }
            classes.sort_by_key(|c| c[0]);
            return Ok(classes);
        }
        assignment.fill(usize::MAX);
    }
    unreachable!("n colours always suffice for n vertices")
}

fn try_color(
    g: &Graph,
    order: &[usize],
    assignment: &mut [usize],
    pos: usize,
    k: usize,
    used: usize,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    // allow one fresh colour at most: colours are interchangeable
    let cap = k.min(used + 1);
    'colors: for c in 0..cap {
        for u in g.neighbors(v) {
            if assignment[u] == c {
                continue 'colors;
            }
        }
        assignment[v] = c;
        if try_color(g, order, assignment, pos + 1, k, used.max(c + 1)) {
            return true;
        }
        assignment[v] = usize::MAX;
    }
    false
}

/// Proper 2-colouring of `g` as colour classes, if one exists.  Linear
/// time, so large bipartite targets stay exact without the search.  The
/// classes carry the same determinism contract as the search output:
/// sorted within, ordered by smallest vertex.
fn two_coloring(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for u in g.neighbors(v) {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push(u);
                } else if color[u] == color[v] {
                    return None;
                }
            }
        }
    }
    let mut classes = vec![Vec::new(), Vec::new()];
    for v in 0..n {
        classes[color[v] as usize].push(v);
    }
    classes.retain(|c| !c.is_empty());
    classes.sort_by_key(|c| c[0]);
    Some(classes)
}

/// Size of a greedily grown clique: a valid lower bound for the chromatic
/// number that prunes the colour loop.
fn greedy_clique_size(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 1.min(n);
    for start in 0..n {
        let mut clique = vec![start];
        for v in 0..n {
            if v != start && clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference implementation: try every assignment of `k` colours in
    /// lexicographic order, for `k = 1, 2, ...` — no pruning whatsoever.
    fn naive_chromatic_number(g: &Graph) -> usize {
        let n = g.order();
        for k in 1..=n {
            if naive_colorable(g, k) {
                return k;
            }
        }
        unreachable!()
    }

    fn naive_colorable(g: &Graph, k: usize) -> bool {
        let n = g.order();
        let mut a = vec![0usize; n];
        loop {
            if g.edges().all(|(u, v)| a[u] != a[v]) {
                return true;
            }
            let mut i = 0;
            while i < n {
                a[i] += 1;
                if a[i] < k {
                    break;
                }
                a[i] = 0;
                i += 1;
            }
            if i == n {
                return false;
            }
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(chromatic_number(&Graph::new(4)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::path(5)).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::cycle(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::complete(7)).unwrap(), 7);
        assert_eq!(chromatic_number(&Graph::matching(4)).unwrap(), 2);
    }

    #[test]
    fn classes_are_proper_and_partition() {
        let g = Graph::cycle(7);
        let classes = optimal_coloring(&g).unwrap();
        assert_eq!(classes.len(), 3);
        let mut seen = [false; 7];
        for class in &classes {
            for &v in class {
                assert!(!seen[v]);
                seen[v] = true;
            }
            for (i, &u) in class.iter().enumerate() {
                for &v in &class[i + 1..] {
                    assert!(!g.has_edge(u, v), "class contains edge {u}-{v}");
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn size_limit_enforced() {
        // an odd cycle needs the search; edgeless and bipartite graphs
        // are recognised in linear time at any order
        let g = Graph::cycle(33);
        assert!(matches!(
            chromatic_number(&g),
            Err(Error::SizeLimit { order: 33, limit: 32 })
        ));
        assert_eq!(chromatic_number_with_limit(&g, 40).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::new(33)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::matching(40)).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::cycle(40)).unwrap(), 2);
    }

    #[test]
    fn empty_graph_rejected() {
        assert!(chromatic_number(&Graph::new(0)).is_err());
    }

    #[test]
    fn agrees_with_exhaustive_small() {
        // every graph on up to 5 vertices, plus a seeded batch on 6..7
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let mut g = Graph::new(n);
                for (b, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                assert_eq!(
                    chromatic_number(&g).unwrap(),
                    naive_chromatic_number(&g),
                    "disagreement on n={n} mask={mask}"
                );
            }
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC0105);
        for _ in 0..200 {
            let n = rng.random_range(6..=7);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(chromatic_number(&g).unwrap(), naive_chromatic_number(&g));
        }
    }
}
