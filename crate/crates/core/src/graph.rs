//! Simple undirected graphs over vertex set `0..n`, stored as bitset
//! adjacency rows.
//!
//! One row per vertex, `ceil(n/64)` machine words each.  No self-loops, all
//! edges symmetric.  The row representation makes the neighbourhood
//! intersections that dominate the searches in this crate single AND
//! instructions for every graph of order at most 64, which covers the whole
//! exhaustively testable range.

use crate::error::Error;

const WORD_BITS: usize = 64;

/// An undirected simple graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Creates the empty graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let stride = n.div_ceil(WORD_BITS).max(1);
        Graph {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    /// Creates a graph on `n` vertices from an edge list.
    ///
    /// Panics if an endpoint is out of range or an edge is a self-loop.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The path `P_n` on vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// The cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// The star `K_{1,t}` with centre `0` and `t` leaves.
    pub fn star(t: usize) -> Self {
        let mut g = Graph::new(t + 1);
        for leaf in 1..=t {
            g.add_edge(0, leaf);
        }
        g
    }

    /// The matching `m K_2`: `m` disjoint edges `(0,1), (2,3), ...`.
    pub fn matching(m: usize) -> Self {
        let mut g = Graph::new(2 * m);
        for i in 0..m {
            g.add_edge(2 * i, 2 * i + 1);
        }
        g
    }

    /// The complete multipartite graph with the given part sizes; vertices
    /// are numbered part by part.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut g = Graph::new(n);
        let mut starts = Vec::with_capacity(parts.len() + 1);
        let mut acc = 0;
        for &p in parts {
            starts.push(acc);
            acc += p;
        }
        starts.push(acc);
        for a in 0..parts.len() {
            for b in (a + 1)..parts.len() {
                for u in starts[a]..starts[a + 1] {
                    for v in starts[b]..starts[b + 1] {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        g
    }

    /// Number of vertices.
    #[inline(always)]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        let total: u32 = self.bits.iter().map(|w| w.count_ones()).sum();
        (total as usize) / 2
    }

    #[inline(always)]
    fn check_vertex(&self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
    }

    /// Adds the edge `{u, v}`.  Panics on self-loops or out-of-range
    /// endpoints; adding an existing edge is a no-op.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.check_vertex(u);
        self.check_vertex(v);
        assert!(u != v, "self-loop at vertex {u}");
        self.bits[u * self.stride + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.bits[v * self.stride + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    /// Removes the edge `{u, v}` if present.
    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.check_vertex(u);
        self.check_vertex(v);
        self.bits[u * self.stride + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.bits[v * self.stride + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
    }

    /// Flips the edge `{u, v}`.
    #[inline]
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        self.check_vertex(u);
        self.check_vertex(v);
        assert!(u != v, "self-loop at vertex {u}");
        self.bits[u * self.stride + v / WORD_BITS] ^= 1 << (v % WORD_BITS);
        self.bits[v * self.stride + u / WORD_BITS] ^= 1 << (u % WORD_BITS);
    }

    /// True iff `{u, v}` is an edge.
    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.stride + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// The adjacency row of `v` as a word slice.
    #[inline(always)]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    /// Degree of `v`.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Smallest degree over all vertices; `None` on the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Iterates over the neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> BitIter<'_> {
        BitIter::new(self.row(v))
    }

    /// Iterates over all edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Lowest-index common neighbour of `u` and `v`, if any.
    pub fn first_common_neighbor(&self, u: usize, v: usize) -> Option<usize> {
        for (i, (a, b)) in self.row(u).iter().zip(self.row(v)).enumerate() {
            let both = a & b;
            if both != 0 {
                return Some(i * WORD_BITS + both.trailing_zeros() as usize);
            }
        }
        None
    }

    /// The complement graph (no self-loops).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for v in 0..self.n {
            let row = v * self.stride;
            for w in 0..self.stride {
                g.bits[row + w] = !self.bits[row + w];
            }
            // clear the self-loop bit and the padding beyond vertex n-1
            g.bits[row + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
            let tail = self.n % WORD_BITS;
            if tail != 0 {
                g.bits[row + self.stride - 1] &= (1u64 << tail) - 1;
            }
            for w in self.n.div_ceil(WORD_BITS)..self.stride {
                g.bits[row + w] = 0;
            }
        }
        g
    }

    /// The subgraph induced by `vertices` (which must be distinct and in
    /// range).  Local vertex `i` of the result corresponds to
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            self.check_vertex(u);
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                debug_assert!(u != v, "duplicate vertex {u} in induced set");
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by their
    /// smallest vertex.  The lists partition `0..n`.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components of the graph with the flagged vertices deleted,
    /// as sorted vertex lists ordered by smallest vertex.
    pub fn components_excluding(&self, excluded: &[bool]) -> Vec<Vec<usize>> {
        assert_eq!(excluded.len(), self.n);
        let mut seen = excluded.to_vec();
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff the graph restricted to `vertices` is bipartite (used to
    /// rule out odd cycles wholesale).
    pub(crate) fn is_bipartite_on(&self, vertices: &[usize]) -> bool {
        let mut color = vec![u8::MAX; self.n];
        let mut in_set = vec![false; self.n];
        for &v in vertices {
            in_set[v] = true;
        }
        for &start in vertices {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for u in self.neighbors(v) {
                    if !in_set[u] {
                        continue;
                    }
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Ascending iterator over the set bits of a word slice.
pub struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            word_idx: 0,
            current: if words.is_empty() { 0 } else { words[0] },
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

// ====================================================================
// Target graphs
// ====================================================================

/// A target graph `H`: the pattern whose monochromatic copy the certificates
/// exhibit.  Wraps a [`Graph`] that has no isolated vertices, together with
/// the statistics the size bounds need.
#[derive(Clone, Debug)]
pub struct TargetGraph {
    graph: Graph,
    chi: usize,
    color_classes: Vec<Vec<usize>>,
}

impl TargetGraph {
    /// Validates and wraps `graph`.  Fails if the graph is empty, has an
    /// isolated vertex, or is too large for exact chromatic computation.
    pub fn new(graph: Graph) -> Result<Self, Error> {
        if graph.order() == 0 {
            return Err(Error::invalid("target graph must have at least one vertex"));
        }
        for v in 0..graph.order() {
            if graph.degree(v) == 0 {
                return Err(Error::invalid(format!(
                    "target graph has isolated vertex {v}"
                )));
            }
        }
        let color_classes = crate::chromatic::optimal_coloring(&graph)?;
        let chi = color_classes.len();
        // chi(H) proper colourings force at least C(chi, 2) edges.
        debug_assert!(graph.edge_count() >= chi * (chi - 1) / 2);
        Ok(TargetGraph {
            graph,
            chi,
            color_classes,
        })
    }

    /// The underlying graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of vertices `n`.
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Number of edges `m`.
    pub fn size(&self) -> usize {
        self.graph.edge_count()
    }

    /// Chromatic number.
    pub fn chromatic_number(&self) -> usize {
        self.chi
    }

    /// Average degree `2m / n` as an exact fraction `(numerator, denominator)`.
    pub fn average_degree(&self) -> (usize, usize) {
        (2 * self.size(), self.order())
    }

    /// The colour classes of one optimal proper colouring (the first one the
    /// exact colourer finds), as sorted vertex lists.
    pub fn color_classes(&self) -> &[Vec<usize>] {
        &self.color_classes
    }

    /// True iff every component is a single edge, i.e. `H = m K_2`.
    pub fn is_perfect_matching(&self) -> bool {
        (0..self.graph.order()).all(|v| self.graph.degree(v) == 1)
    }
}
