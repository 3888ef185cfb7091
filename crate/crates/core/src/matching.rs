//! Maximum matching in general graphs, with the dual certificate that
//! pins its size exactly.
//!
//! The matcher is the classic alternating-forest search with blossom
//! contraction, O(V³).  On top of it, [`tutte_berge_witness`] produces a
//! vertex set `S` achieving
//!
//! ```text
//! |M| = (N - odd(G - S) + |S|) / 2
//! ```
//!
//! where `odd` counts odd-order components.  The formula's `≤` direction
//! holds for every `S` (each odd component of `G - S` strands at least one
//! vertex unless matched into `S`), so exhibiting one `S` with equality
//! proves the matching maximum.  The witness set is found the standard way:
//! re-run the alternating-forest search from each unmatched vertex of a
//! maximum matching, take `D` = all vertices reachable at even depth (these
//! are exactly the vertices some maximum matching misses), and let `S` be
//! the neighbourhood of `D` outside `D`.

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A maximum matching together with a Tutte–Berge set certifying it.
#[derive(Clone, Debug)]
pub struct MatchingCertificate {
    /// Maximum matching as `(u, v)` pairs with `u < v`, sorted.
    pub matching: Vec<(usize, usize)>,
    /// Vertex set `S` achieving the Tutte–Berge minimum, sorted.
    pub witness_set: Vec<usize>,
    /// Number of odd-order components of `G - S`.
    pub odd_components: usize,
}

/// Computes a maximum matching of `g` as `(u, v)` pairs with `u < v`,
/// sorted.  Deterministic for a fixed input.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut m = Matcher::new(g);
    m.run();
    m.pairs()
}

/// Computes a maximum matching plus the witness set `S` for which the
/// Tutte–Berge formula holds with equality.
///
/// The equality is asserted before returning; a failure would be a bug in
/// the matcher, not bad input.
pub fn tutte_berge_witness(g: &Graph) -> MatchingCertificate {
    let n = g.order();
    let mut m = Matcher::new(g);
    m.run();

    // D: vertices some maximum matching misses = vertices reachable at even
    // depth from an unmatched root, across all roots.
    let mut in_d = vec![false; n];
    for root in 0..n {
        if m.mate[root] != NONE {
            continue;
        }
        let augmented = m.search(root, false);
        assert!(
            !augmented,
            "augmenting path from {root} found after the matching was maximum"
        );
        for (flag, &outer) in in_d.iter_mut().zip(&m.outer) {
            if outer {
                *flag = true;
            }
        }
    }

    // S = N(D) \ D
    let mut in_s = vec![false; n];
    for v in 0..n {
        if !in_d[v] {
            continue;
        }
        for u in g.neighbors(v) {
            if !in_d[u] {
                in_s[u] = true;
            }
        }
    }
    let witness_set: Vec<usize> = (0..n).filter(|&v| in_s[v]).collect();

    let odd_components = g
        .components_excluding(&in_s)
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count();

    let matching = m.pairs();
    assert!(
        2 * matching.len() == n - odd_components + witness_set.len(),
        "Tutte-Berge equality failed: 2*{} != {} - {} + {}",
        matching.len(),
        n,
        odd_components,
        witness_set.len()
    );

    MatchingCertificate {
        matching,
        witness_set,
        odd_components,
    }
}

// ====================================================================
// The blossom matcher
// ====================================================================

struct Matcher<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    outer: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Matcher {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            outer: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn run(&mut self) {
        let n = self.g.order();
        // greedy seed, then one alternating-forest search per exposed vertex
        for v in 0..n {
            if self.mate[v] != NONE {
                continue;
            }
            for u in self.g.neighbors(v) {
                if self.mate[u] == NONE {
                    self.mate[v] = u;
                    self.mate[u] = v;
                    break;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                self.search(root, true);
            }
        }
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.g.order())
            .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
            .map(|v| (v, self.mate[v]))
            .collect()
    }

    /// Grows an alternating forest from `root`.  With `augment` set, flips
    /// the matching along the first augmenting path found and returns true.
    /// Either way, `outer` afterwards flags every vertex reachable from
    /// `root` at even depth (blossom vertices all count as even).
    fn search(&mut self, root: usize, augment: bool) -> bool {
        let n = self.g.order();
        self.parent.fill(NONE);
        self.outer.fill(false);
        for v in 0..n {
            self.base[v] = v;
        }
        self.outer[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for u in self.g.neighbors(v) {
                if self.base[v] == self.base[u] || self.mate[v] == u {
                    continue;
                }
                if u == root || (self.mate[u] != NONE && self.parent[self.mate[u]] != NONE) {
                    // v and u are both even: their tree paths close a blossom
                    let anchor = self.lca(v, u);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(v, anchor, u, &mut in_blossom);
                    self.mark_path(u, anchor, v, &mut in_blossom);
                    for w in 0..n {
                        if in_blossom[self.base[w]] {
                            self.base[w] = anchor;
                            if !self.outer[w] {
                                self.outer[w] = true;
                                self.queue.push(w);
                            }
                        }
                    }
                } else if self.parent[u] == NONE {
                    self.parent[u] = v;
                    if self.mate[u] == NONE {
                        if augment {
                            self.flip_along(u);
                            return true;
                        }
                        // the caller asserts maximality; fall through so the
                        // forest keeps growing and `outer` stays complete
                    } else {
                        let mu = self.mate[u];
                        if !self.outer[mu] {
                            self.outer[mu] = true;
                            self.queue.push(mu);
                        }
                    }
                }
            }
        }
        false
    }

    /// Lowest common ancestor of the tree paths of `a` and `b`, in terms of
    /// blossom bases.
    fn lca(&self, a: usize, b: usize) -> usize {
        let mut on_path = vec![false; self.g.order()];
        let mut x = a;
        loop {
            x = self.base[x];
            on_path[x] = true;
            if self.mate[x] == NONE {
                break; // reached the root
            }
            x = self.parent[self.mate[x]];
        }
        let mut y = b;
        loop {
            y = self.base[y];
            if on_path[y] {
                return y;
            }
            y = self.parent[self.mate[y]];
        }
    }

    /// Walks from `v` up to the blossom base `anchor`, flagging the bases on
    /// the way and re-rooting parent pointers so a later augmentation can
    /// traverse the blossom in either direction.
    fn mark_path(&mut self, mut v: usize, anchor: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != anchor {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Flips matched/unmatched along the alternating path ending at the
    /// exposed vertex `u`.
    fn flip_along(&mut self, mut u: usize) {
        while u != NONE {
            let pv = self.parent[u];
            let ppv = self.mate[pv];
            self.mate[u] = pv;
            self.mate[pv] = u;
            u = ppv;
        }
    }
}
