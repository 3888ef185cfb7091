//! Complete searches for paths, cycles, and subgraph embeddings.
//!
//! Everything here is exact: a `None` answer is a proof of absence, never a
//! heuristic give-up.  Pruning only ever discards branches that provably
//! cannot contain a solution (component too small, bipartite component for
//! an odd cycle, BFS distance too large to close a cycle, interchangeable
//! single-edge components of a pattern).  All searches try candidates in
//! ascending vertex order, so results are deterministic for fixed inputs.

use crate::graph::Graph;

/// An injective map from the vertices of a pattern graph into a host graph
/// such that every pattern edge lands on a host edge.
///
/// `map()[p]` is the host vertex carrying pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    /// Wraps a raw vertex map; callers are responsible for validity.
    pub fn from_map(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    /// The vertex map, indexed by pattern vertex.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Number of mapped pattern vertices.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    /// True iff the map is empty.
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// True iff the map is injective, in range, and carries every pattern
    /// edge to a host edge.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        let mut seen = vec![false; host.order()];
        for &h in &self.map {
            if h >= host.order() || seen[h] {
                return false;
            }
            seen[h] = true;
        }
        pattern
            .edges()
            .all(|(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

// ====================================================================
// Paths
// ====================================================================

/// Finds a path on exactly `k` vertices in `g`, as an ordered vertex list,
/// or proves none exists.
///
/// Complete backtracking; components smaller than `k` are skipped.  The
/// first path in the lowest-index-first search order is returned.
pub fn find_path(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.order();
    if k == 0 || k > n {
        return None;
    }
    if k == 1 {
        return Some(vec![0]);
    }
    let mut comp_size = vec![0usize; n];
    for comp in g.components() {
        for &v in &comp {
            comp_size[v] = comp.len();
        }
    }
    let mut path = Vec::with_capacity(k);
    let mut used = vec![false; n];
    for start in 0..n {
        if comp_size[start] < k {
            continue;
        }
        path.push(start);
        used[start] = true;
        if extend_path(g, k, &mut path, &mut used) {
            return Some(path);
        }
        used[start] = false;
        path.pop();
    }
    None
}

fn extend_path(g: &Graph, k: usize, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if path.len() == k {
        return true;
    }
    let tip = *path.last().unwrap();
    for u in g.neighbors(tip) {
        if used[u] {
            continue;
        }
        path.push(u);
        used[u] = true;
        if extend_path(g, k, path, used) {
            return true;
        }
        used[u] = false;
        path.pop();
    }
    false
}

// ====================================================================
// Cycles
// ====================================================================

/// Finds a cycle on exactly `k` vertices in `g`, as an ordered vertex list
/// (consecutive entries and the wrap-around pair are edges), or proves none
/// exists.
///
/// Cycles are searched anchor by anchor: only cycles whose smallest vertex
/// is the current anchor are considered, which removes rotational and
/// starting-point duplicates.  For odd `k`, bipartite components are
/// discarded outright, and every branch is pruned by the BFS distance needed
/// to return to the anchor.
pub fn find_cycle(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.order();
    if k < 3 || k > n {
        return None;
    }
    let mut dist = vec![usize::MAX; n];
    let mut path = Vec::with_capacity(k);
    let mut used = vec![false; n];
    let mut queue = Vec::with_capacity(n);
    for comp in g.components() {
        if comp.len() < k {
            continue;
        }
        if k % 2 == 1 && g.is_bipartite_on(&comp) {
            continue; // bipartite graphs have no odd cycles
        }
        for (i, &anchor) in comp.iter().enumerate() {
            if comp.len() - i < k {
                break; // not enough vertices above the anchor
            }
            // BFS distances to the anchor, restricted to vertices >= anchor
            // in this component.
            for &v in &comp {
                dist[v] = usize::MAX;
            }
            dist[anchor] = 0;
            queue.clear();
            queue.push(anchor);
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for u in g.neighbors(v) {
                    if u > anchor && dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        queue.push(u);
                    }
                }
            }
            path.push(anchor);
            used[anchor] = true;
            if extend_cycle(g, k, anchor, &dist, &mut path, &mut used) {
                return Some(path);
            }
            used[anchor] = false;
            path.pop();
        }
    }
    None
}

fn extend_cycle(
    g: &Graph,
    k: usize,
    anchor: usize,
    dist: &[usize],
    path: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let tip = *path.last().unwrap();
    if path.len() == k {
        return g.has_edge(tip, anchor);
    }
    let remaining = k - path.len(); // edges left before the closing edge
    for u in g.neighbors(tip) {
        if u <= anchor || used[u] || dist[u] > remaining {
            continue;
        }
        path.push(u);
        used[u] = true;
        if extend_cycle(g, k, anchor, dist, path, used) {
            return true;
        }
        used[u] = false;
        path.pop();
    }
    false
}

// ====================================================================
// Embeddings
// ====================================================================

/// Finds an embedding of `pattern` into `host` (injective, edges preserved;
/// host may have extra edges), or proves none exists.
///
/// Complete backtracking over injections, with three sound prunings: host
/// candidates must have degree at least the pattern vertex's degree; each
/// vertex is matched against the intersection of its already-placed pattern
/// neighbours' host rows; and interchangeable single-edge components of the
/// pattern are forced into canonical order, which collapses the `m!`-fold
/// symmetry of matching patterns.
pub fn find_embedding(pattern: &Graph, host: &Graph) -> Option<Embedding> {
    let p = pattern.order();
    if p > host.order() {
        return None;
    }
    if p == 0 {
        return Some(Embedding::from_map(Vec::new()));
    }

    let plan = EmbedPlan::build(pattern);
    let mut map = vec![usize::MAX; p];
    let mut placed = vec![usize::MAX; p]; // images in search order
    let mut used = vec![false; host.order()];
    if embed_step(&plan, pattern, host, 0, &mut map, &mut placed, &mut used) {
        Some(Embedding::from_map(map))
    } else {
        None
    }
}

/// Static search order and symmetry data for one pattern.
struct EmbedPlan {
    /// Pattern vertices in search order: component by component, within a
    /// component most-constrained first.
    order: Vec<usize>,
    /// For each position, the earlier positions holding pattern neighbours.
    earlier_neighbors: Vec<Vec<usize>>,
    /// For each position, a position whose image must be strictly smaller
    /// (single-edge component canonicalisation), or `usize::MAX`.
    min_after: Vec<usize>,
}

impl EmbedPlan {
    fn build(pattern: &Graph) -> Self {
        let comps = pattern.components();
        let mut order = Vec::with_capacity(pattern.order());
        let mut min_after = Vec::with_capacity(pattern.order());
        let mut prev_k2_start_pos = usize::MAX;
        for comp in &comps {
            let is_k2 = comp.len() == 2 && pattern.has_edge(comp[0], comp[1]);
            let start_pos = order.len();
            if is_k2 {
                // chain interchangeable edge components and orient each one
                order.push(comp[0]);
                min_after.push(prev_k2_start_pos);
                order.push(comp[1]);
                min_after.push(start_pos);
                prev_k2_start_pos = start_pos;
                continue;
            }
            prev_k2_start_pos = usize::MAX;
            // most-constrained-first order inside the component
            let mut remaining: Vec<usize> = comp.clone();
            let first = *remaining
                .iter()
                .max_by_key(|&&v| (pattern.degree(v), usize::MAX - v))
                .unwrap();
            remaining.retain(|&v| v != first);
            order.push(first);
            min_after.push(usize::MAX);
            let mut in_order = vec![first];
            while !remaining.is_empty() {
                let next = *remaining
                    .iter()
                    .max_by_key(|&&v| {
                        let anchored = in_order
                            .iter()
                            .filter(|&&u| pattern.has_edge(u, v))
                            .count();
                        (anchored, pattern.degree(v), usize::MAX - v)
                    })
                    .unwrap();
                remaining.retain(|&v| v != next);
                in_order.push(next);
                order.push(next);
                min_after.push(usize::MAX);
            }
        }
        let earlier_neighbors = (0..order.len())
            .map(|i| {
                (0..i)
                    .filter(|&j| pattern.has_edge(order[j], order[i]))
                    .collect()
            })
            .collect();
        EmbedPlan {
            order,
            earlier_neighbors,
            min_after,
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn embed_step(
    plan: &EmbedPlan,
    pattern: &Graph,
    host: &Graph,
    pos: usize,
    map: &mut [usize],
    placed: &mut [usize],
    used: &mut [bool],
) -> bool {
    if pos == plan.order.len() {
        return true;
    }
    let pv = plan.order[pos];
    let need_degree = pattern.degree(pv);
    let floor = match plan.min_after[pos] {
        usize::MAX => 0,
        earlier_pos => placed[earlier_pos] + 1,
    };
    let neighbors = &plan.earlier_neighbors[pos];
    for hv in floor..host.order() {
        if used[hv] || host.degree(hv) < need_degree {
            continue;
        }
        if !neighbors.iter().all(|&j| host.has_edge(placed[j], hv)) {
            continue;
        }
        map[pv] = hv;
        placed[pos] = hv;
        used[hv] = true;
        if embed_step(plan, pattern, host, pos + 1, map, placed, used) {
            return true;
        }
        used[hv] = false;
        map[pv] = usize::MAX;
    }
    false
}
