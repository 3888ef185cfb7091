//! Red/blue edge colourings of complete graphs.
//!
//! Only the red graph is stored; blue is its complement.  Restriction to a
//! vertex subset relabels vertices to `0..size` and hands back the table
//! needed to translate certificates found in the restriction to the
//! original vertex names.

use rand::Rng;

use crate::graph::Graph;

/// A 2-colouring of the edges of the complete graph `K_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredComplete {
    red: Graph,
}

impl ColoredComplete {
    /// Wraps a graph as "the red edges"; everything else is blue.
    pub fn from_red(red: Graph) -> Self {
        ColoredComplete { red }
    }

    /// The all-red colouring of `K_n`.
    pub fn all_red(n: usize) -> Self {
        ColoredComplete {
            red: Graph::complete(n),
        }
    }

    /// The all-blue colouring of `K_n`.
    pub fn all_blue(n: usize) -> Self {
        ColoredComplete { red: Graph::new(n) }
    }

    /// A uniformly random colouring: every edge red with probability 1/2.
    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let mut red = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.5) {
                    red.add_edge(u, v);
                }
            }
        }
        ColoredComplete { red }
    }

    /// Number of vertices `N`.
    pub fn order(&self) -> usize {
        self.red.order()
    }

    /// The red graph.
    pub fn red(&self) -> &Graph {
        &self.red
    }

    /// The blue graph (complement of red), materialised.
    pub fn blue(&self) -> Graph {
        self.red.complement()
    }

    /// True iff the edge `{u, v}` is red.
    #[inline(always)]
    pub fn is_red(&self, u: usize, v: usize) -> bool {
        self.red.has_edge(u, v)
    }

    /// True iff the edge `{u, v}` is blue (`u != v` required).
    #[inline(always)]
    pub fn is_blue(&self, u: usize, v: usize) -> bool {
        debug_assert!(u != v, "no edge between {u} and itself");
        !self.red.has_edge(u, v)
    }

    /// Number of red edges.
    pub fn red_edge_count(&self) -> usize {
        self.red.edge_count()
    }

    /// Flips the colour of the pair `{u, v}`.
    pub fn toggle(&mut self, u: usize, v: usize) {
        self.red.toggle_edge(u, v);
    }

    /// The colouring induced on `vertices`, together with the table mapping
    /// local vertex `i` back to `vertices[i]`.
    pub fn restrict(&self, vertices: &[usize]) -> (ColoredComplete, Vec<usize>) {
        let red = self.red.induced(vertices);
        (ColoredComplete { red }, vertices.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn red_blue_partition_edges() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let c = ColoredComplete::random(9, &mut rng);
        let blue = c.blue();
        for u in 0..9 {
            for v in (u + 1)..9 {
                assert_eq!(c.is_red(u, v), !blue.has_edge(u, v));
                assert_ne!(c.is_red(u, v), c.is_blue(u, v));
            }
        }
        assert_eq!(c.red_edge_count() + blue.edge_count(), 9 * 8 / 2);
    }

    #[test]
    fn extremes() {
        assert_eq!(ColoredComplete::all_red(5).red_edge_count(), 10);
        assert_eq!(ColoredComplete::all_blue(5).red_edge_count(), 0);
        assert_eq!(ColoredComplete::all_blue(5).blue().edge_count(), 10);
    }

    #[test]
    fn restriction_preserves_colors() {
        let mut red = Graph::new(6);
        red.add_edge(1, 4);
        red.add_edge(4, 5);
        let c = ColoredComplete::from_red(red);
        let (sub, back) = c.restrict(&[1, 4, 5]);
        assert_eq!(back, vec![1, 4, 5]);
        assert_eq!(sub.order(), 3);
        assert!(sub.is_red(0, 1)); // 1-4
        assert!(sub.is_red(1, 2)); // 4-5
        assert!(sub.is_blue(0, 2)); // 1-5
    }
}
