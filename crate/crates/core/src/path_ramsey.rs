//! Red paths versus blue multipartite targets, and the size bounds the
//! construction certifies.
//!
//! The workhorse takes a colouring of `K_N` and a complete multipartite
//! shape `K_{n_1,...,n_t}` and produces a red path on `k` vertices or a
//! blue copy of the shape, provided `N >= k(t-1) + sum n_i`.  The recursion
//! merges the first two parts plus `k` spare vertices into one oversized
//! part, solves the smaller shape, and then splits the oversized part with
//! the two-part base case, which is realised as a pair of complete
//! searches (that a solution exists inside the base case at order
//! `k + n_1 + n_2 - 2` is a classical fact; failing to find one is reported
//! as an internal contract violation, never as user error).
//!
//! Everything here measures sizes in exact integer arithmetic: the square
//! roots in the bounds are ceilings computed by comparing squares.

use crate::colored::ColoredComplete;
use crate::error::Error;
use crate::graph::TargetGraph;
use crate::search::{find_path, Embedding};

/// Smallest integer `c >= sqrt(x)`.
pub fn ceil_sqrt(x: u64) -> u64 {
    let r = x.isqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// Order bound for a red `k`-path or a blue graph of chromatic number
/// `chi` on `n` vertices: `n + k(chi - 1)`.
pub fn bound_chi(k: usize, n: usize, chi: usize) -> usize {
    assert!(chi >= 1, "chromatic number is at least 1");
    n + k * (chi - 1)
}

/// Order bound for a red `k`-path or a blue copy of a graph with `n`
/// vertices and `m` edges: `n + ceil(k * sqrt(2m))`, computed exactly as
/// the smallest `c` with `c^2 >= 2 m k^2`.
pub fn bound_sqrt(k: usize, n: usize, m: usize) -> usize {
    let c = ceil_sqrt(2 * (m as u64) * (k as u64) * (k as u64));
    n + c as usize
}

/// A complete multipartite shape `K_{n_1, ..., n_t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipartiteSpec {
    sizes: Vec<usize>,
}

impl MultipartiteSpec {
    /// Validates part sizes: at least one part, every part nonempty.
    pub fn new(sizes: Vec<usize>) -> Result<Self, Error> {
        if sizes.is_empty() {
            return Err(Error::invalid("multipartite shape needs at least one part"));
        }
        if sizes.contains(&0) {
            return Err(Error::invalid("multipartite parts must be nonempty"));
        }
        Ok(MultipartiteSpec { sizes })
    }

    /// The part sizes.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of parts `t`.
    pub fn parts(&self) -> usize {
        self.sizes.len()
    }

    /// Total number of vertices.
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// The order needed by [`red_path_or_blue_multipartite`]:
    /// `k(t-1) + sum n_i`.
    pub fn required_order(&self, k: usize) -> usize {
        k * (self.parts() - 1) + self.total()
    }
}

/// Outcome of the multipartite extraction: one of the two guaranteed
/// structures, as explicit vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathOrPartite {
    /// A red path on exactly `k` vertices, in path order.
    RedPath(Vec<usize>),
    /// Disjoint vertex sets realising the shape: part `i` has size `n_i`
    /// and every pair crossing two different parts is blue.
    BluePartite(Vec<Vec<usize>>),
}

/// Outcome of the target-graph extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathOrCopy {
    /// A red path on exactly `k` vertices, in path order.
    RedPath(Vec<usize>),
    /// An embedding of the target graph with every edge blue.
    BlueCopy(Embedding),
}

/// Two-part base case: a red path on `k` vertices or a blue
/// `K_{n1, n2}`, given `N >= k + n1 + n2 - 2`.
///
/// The path search runs first; if it proves absence, the complete
/// two-sided search must succeed, and a miss is an internal contract
/// violation.
pub fn base_bipartite(
    coloring: &ColoredComplete,
    k: usize,
    n1: usize,
    n2: usize,
) -> Result<PathOrPartite, Error> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::invalid("bipartite parts must be nonempty"));
    }
    if k == 0 {
        return Err(Error::invalid("path length k must be positive"));
    }
    let needed = k + n1 + n2 - 2;
    if coloring.order() < needed {
        return Err(Error::TooSmall {
            context: "red path or blue bipartite",
            needed,
            have: coloring.order(),
        });
    }
    if let Some(path) = find_path(coloring.red(), k) {
        return Ok(PathOrPartite::RedPath(path));
    }
    match find_blue_bipartite(coloring, n1, n2) {
        Some((a1, a2)) => Ok(PathOrPartite::BluePartite(vec![a1, a2])),
        None => Err(Error::contract(
            "red path or blue bipartite",
            format!(
                "no red {k}-path and no blue K_{{{n1},{n2}}} at order {} (bound {needed})",
                coloring.order()
            ),
        )),
    }
}

/// Complete search for disjoint sets `A` (size `n1`) and `B` (size `n2`)
/// with every `A`-`B` pair blue.  Enumerates candidate sets on the smaller
/// side in ascending order, pruning by the shrinking common blue
/// neighbourhood, and takes the lowest-index vertices for the other side.
fn find_blue_bipartite(
    coloring: &ColoredComplete,
    n1: usize,
    n2: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = coloring.order();
    if n1 + n2 > n {
        return None;
    }
    let blue = coloring.blue();
    let (small, large, swapped) = if n1 <= n2 {
        (n1, n2, false)
    } else {
        (n2, n1, true)
    };

    let words = n.div_ceil(64);
    let mut full = vec![u64::MAX; words];
    if !n.is_multiple_of(64) {
        full[words - 1] = (1u64 << (n % 64)) - 1;
    }

    fn recurse(
        blue: &crate::graph::Graph,
        small: usize,
        large: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        common: &[u64],
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = blue.order();
        if chosen.len() == small {
            let mut other = Vec::with_capacity(large);
            'bits: for (w, &word) in common.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let v = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if !chosen.contains(&v) {
                        other.push(v);
                        if other.len() == large {
                            break 'bits;
                        }
                    }
                }
            }
            if other.len() == large {
                return Some((chosen.clone(), other));
            }
            return None;
        }
        let slots_left = small - chosen.len();
        for v in start..n {
            if n - v < slots_left {
                break;
            }
            let mut next: Vec<u64> = common
                .iter()
                .zip(blue.row(v))
                .map(|(a, b)| a & b)
                .collect();
            // the common pool must keep room for the other side, not
            // counting vertices that will sit on this side
            let mut pool: usize = next.iter().map(|w| w.count_ones() as usize).sum();
            for &c in chosen.iter() {
                if next[c / 64] >> (c % 64) & 1 == 1 {
                    pool -= 1;
                }
            }
            if pool < large {
                continue;
            }
            chosen.push(v);
            // v itself may appear in later intersections; mask it out of
            // the pool by clearing its bit
            next[v / 64] &= !(1u64 << (v % 64));
            if let Some(found) = recurse(blue, small, large, v + 1, chosen, &next) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    let found = recurse(&blue, small, large, 0, &mut Vec::new(), &full)?;
    let (x, y) = found;
    Some(if swapped { (y, x) } else { (x, y) })
}

/// Red path on `k` vertices or a blue complete multipartite copy of
/// `shape`, given `N >= k(t-1) + sum n_i`.
///
/// Recursive on the number of parts: parts one and two are merged (plus `k`
/// spare vertices) into a single oversized part, the smaller shape is
/// solved, and the oversized part is split by [`base_bipartite`] applied to
/// the colouring it induces.
pub fn red_path_or_blue_multipartite(
    coloring: &ColoredComplete,
    k: usize,
    shape: &MultipartiteSpec,
) -> Result<PathOrPartite, Error> {
    let needed = shape.required_order(k);
    if coloring.order() < needed {
        return Err(Error::TooSmall {
            context: "red path or blue multipartite",
            needed,
            have: coloring.order(),
        });
    }
    let sizes = shape.sizes();
    match sizes.len() {
        1 => Ok(PathOrPartite::BluePartite(vec![(0..sizes[0]).collect()])),
        2 => base_bipartite(coloring, k, sizes[0], sizes[1]),
        _ => {
            let mut merged_sizes = Vec::with_capacity(sizes.len() - 1);
            merged_sizes.push(sizes[0] + sizes[1] + k);
            merged_sizes.extend_from_slice(&sizes[2..]);
            let merged = MultipartiteSpec::new(merged_sizes)?;
            match red_path_or_blue_multipartite(coloring, k, &merged)? {
                PathOrPartite::RedPath(p) => Ok(PathOrPartite::RedPath(p)),
                PathOrPartite::BluePartite(mut parts) => {
                    let oversized = parts.remove(0);
                    let (sub, table) = coloring.restrict(&oversized);
                    match base_bipartite(&sub, k, sizes[0], sizes[1])? {
                        PathOrPartite::RedPath(p) => Ok(PathOrPartite::RedPath(
                            p.into_iter().map(|v| table[v]).collect(),
                        )),
                        PathOrPartite::BluePartite(split) => {
                            let mut out: Vec<Vec<usize>> = split
                                .into_iter()
                                .map(|part| part.into_iter().map(|v| table[v]).collect())
                                .collect();
                            out.append(&mut parts);
                            Ok(PathOrPartite::BluePartite(out))
                        }
                    }
                }
            }
        }
    }
}

/// Red path on `k` vertices or a blue copy of the target graph `h`, given
/// `N >= n + k(chi - 1)`.
///
/// An optimal proper colouring of `h` turns its copy into a multipartite
/// problem: the colour classes are independent, so mapping class `i` into
/// part `i` of a blue multipartite structure sends every edge of `h`
/// across parts, where all pairs are blue.
pub fn red_path_or_blue_h(
    coloring: &ColoredComplete,
    k: usize,
    h: &TargetGraph,
) -> Result<PathOrCopy, Error> {
    let needed = bound_chi(k, h.order(), h.chromatic_number());
    if coloring.order() < needed {
        return Err(Error::TooSmall {
            context: "red path or blue target copy",
            needed,
            have: coloring.order(),
        });
    }
    let classes = h.color_classes();
    let shape = MultipartiteSpec::new(classes.iter().map(|c| c.len()).collect())?;
    match red_path_or_blue_multipartite(coloring, k, &shape)? {
        PathOrPartite::RedPath(p) => Ok(PathOrCopy::RedPath(p)),
        PathOrPartite::BluePartite(parts) => {
            debug_assert_eq!(parts.len(), classes.len());
            let mut map = vec![usize::MAX; h.order()];
            for (class, part) in classes.iter().zip(&parts) {
                debug_assert_eq!(class.len(), part.len());
                for (&hv, &gv) in class.iter().zip(part) {
                    map[hv] = gv;
                }
            }
            Ok(PathOrCopy::BlueCopy(Embedding::from_map(map)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ceil_sqrt_exact() {
        assert_eq!(ceil_sqrt(0), 0);
        assert_eq!(ceil_sqrt(1), 1);
        assert_eq!(ceil_sqrt(2), 2);
        assert_eq!(ceil_sqrt(4), 2);
        assert_eq!(ceil_sqrt(250), 16); // 15^2 = 225 < 250 <= 256 = 16^2
        assert_eq!(ceil_sqrt(784), 28);
        for x in 0..2000u64 {
            let c = ceil_sqrt(x);
            assert!(c * c >= x);
            assert!(c == 0 || (c - 1) * (c - 1) < x);
        }
    }

    #[test]
    fn bound_values() {
        assert_eq!(bound_chi(5, 3, 3), 13);
        assert_eq!(bound_chi(9, 4, 1), 4); // one colour class: no edges to force
        assert_eq!(bound_chi(3, 2, 2), 5);
        assert_eq!(bound_sqrt(1, 4, 2), 6); // ceil(sqrt(4)) = 2
        assert_eq!(bound_sqrt(7, 10, 8), 38); // 2*8*49 = 784 = 28^2
        assert_eq!(bound_sqrt(5, 6, 5), 22); // smallest c with c^2 >= 250 is 16
    }

    #[test]
    fn chi_bound_never_exceeds_sqrt_bound() {
        // with m >= C(chi, 2) forced by any proper colouring,
        // k(chi-1) <= ceil(k sqrt(2m))
        for chi in 1..=8usize {
            for extra in 0..5usize {
                let m = chi * (chi - 1) / 2 + extra;
                if m == 0 {
                    continue;
                }
                for k in 1..=9usize {
                    for n in chi..=10 {
                        assert!(bound_chi(k, n, chi) <= bound_sqrt(k, n, m));
                    }
                }
            }
        }
    }

    fn validate_outcome(
        coloring: &ColoredComplete,
        k: usize,
        shape: &MultipartiteSpec,
        outcome: &PathOrPartite,
    ) {
        match outcome {
            PathOrPartite::RedPath(p) => {
                assert_eq!(p.len(), k);
                let mut sorted = p.clone();
                sorted.sort_unstable();
                sorted.dedup();
                assert_eq!(sorted.len(), k);
                for w in p.windows(2) {
                    assert!(coloring.is_red(w[0], w[1]), "path pair not red");
                }
            }
            PathOrPartite::BluePartite(parts) => {
                assert_eq!(parts.len(), shape.parts());
                let mut all: Vec<usize> = parts.iter().flatten().copied().collect();
                let total = all.len();
                all.sort_unstable();
                all.dedup();
                assert_eq!(all.len(), total, "parts overlap");
                for (part, &want) in parts.iter().zip(shape.sizes()) {
                    assert_eq!(part.len(), want);
                }
                for i in 0..parts.len() {
                    for j in (i + 1)..parts.len() {
                        for &u in &parts[i] {
                            for &v in &parts[j] {
                                assert!(coloring.is_blue(u, v), "cross pair {u}-{v} not blue");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn base_case_exhaustive_small() {
        // all colourings at exactly the base-case order for a few shapes
        for (k, n1, n2) in [(3, 1, 1), (3, 2, 1), (3, 2, 2), (4, 2, 1), (5, 1, 1)] {
            let n = k + n1 + n2 - 2;
            let bits = n * (n - 1) / 2;
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u64..(1u64 << bits) {
                let mut red = Graph::new(n);
                for (b, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        red.add_edge(u, v);
                    }
                }
                let coloring = ColoredComplete::from_red(red);
                let shape = MultipartiteSpec::new(vec![n1, n2]).unwrap();
                let outcome = base_bipartite(&coloring, k, n1, n2)
                    .unwrap_or_else(|e| panic!("k={k} n1={n1} n2={n2} mask={mask}: {e}"));
                validate_outcome(&coloring, k, &shape, &outcome);
            }
        }
    }

    #[test]
    fn base_case_too_small_rejected() {
        let coloring = ColoredComplete::all_red(4);
        assert!(matches!(
            base_bipartite(&coloring, 3, 2, 2),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn multipartite_random_at_exact_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x947B);
        let shapes: Vec<Vec<usize>> = vec![
            vec![3],
            vec![2, 2],
            vec![1, 1, 1],
            vec![2, 2, 1],
            vec![2, 1, 1, 1],
            vec![3, 2, 2],
        ];
        for sizes in shapes {
            let shape = MultipartiteSpec::new(sizes).unwrap();
            for k in [3usize, 5, 7] {
                let n = shape.required_order(k);
                for _ in 0..60 {
                    let coloring = ColoredComplete::random(n, &mut rng);
                    let outcome = red_path_or_blue_multipartite(&coloring, k, &shape).unwrap();
                    validate_outcome(&coloring, k, &shape, &outcome);
                }
            }
        }
    }

    #[test]
    fn multipartite_extremes() {
        // all-red forces the path; all-blue forces the partite structure
        let shape = MultipartiteSpec::new(vec![2, 2, 2]).unwrap();
        let n = shape.required_order(5);
        match red_path_or_blue_multipartite(&ColoredComplete::all_red(n), 5, &shape).unwrap() {
            PathOrPartite::RedPath(p) => assert_eq!(p, vec![0, 1, 2, 3, 4]),
            other => panic!("expected red path, got {other:?}"),
        }
        let coloring = ColoredComplete::all_blue(n);
        let outcome = red_path_or_blue_multipartite(&coloring, 5, &shape).unwrap();
        validate_outcome(&coloring, 5, &shape, &outcome);
    }

    #[test]
    fn target_copy_maps_classes_to_parts() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC09E);
        let h = TargetGraph::new(Graph::cycle(5)).unwrap();
        assert_eq!(h.chromatic_number(), 3);
        let n = bound_chi(5, 5, 3);
        for _ in 0..120 {
            let coloring = ColoredComplete::random(n, &mut rng);
            match red_path_or_blue_h(&coloring, 5, &h).unwrap() {
                PathOrCopy::RedPath(p) => {
                    assert_eq!(p.len(), 5);
                    for w in p.windows(2) {
                        assert!(coloring.is_red(w[0], w[1]));
                    }
                }
                PathOrCopy::BlueCopy(e) => {
                    assert!(e.is_valid(h.graph(), &coloring.blue()));
                }
            }
        }
    }

    #[test]
    fn target_copy_too_small_rejected() {
        let h = TargetGraph::new(Graph::cycle(5)).unwrap();
        let coloring = ColoredComplete::all_blue(bound_chi(5, 5, 3) - 1);
        assert!(matches!(
            red_path_or_blue_h(&coloring, 5, &h),
            Err(Error::TooSmall { .. })
        ));
    }
}
