//! The staged extraction pipeline: given a coloured complete graph and a
//! target graph `H`, produce a red `k`-cycle or a blue copy of `H`.
//!
//! The pipeline runs by induction on the edge count of `H`:
//!
//! 1. **Base**: tiny targets or small boards go straight to the exact
//!    brute-force search.
//! 2. **Disconnected targets**: a perfect matching is delegated to the
//!    dedicated matching extractor; otherwise one component is embedded
//!    and the rest recurses on the remaining vertices.
//! 3. **Density guards**: outside the window `n^3 >= m^2` and
//!    `n (20k)^2 <= m ((20k)^2 - 1)` the inductive machinery does not
//!    apply; fall back to brute force where feasible.
//! 4. **Minimum degree**: embed `H - v` for a minimum-degree vertex `v`
//!    recursively, then either extend it directly to `H` or pigeonhole a
//!    hub vertex `u` with many red neighbours among the uncovered
//!    vertices.
//! 5. **First neighbourhood**: a red path on `k - 1` vertices inside the
//!    red neighbourhood `U1` of `u` closes a red cycle through `u`;
//!    failing that, a large `U1` hosts a blue `H` outright.
//! 6. **Second neighbourhood**: a red path on `2k` vertices at red
//!    distance two closes a red cycle by the hub-chain analysis; a large
//!    second neighbourhood hosts a blue `H`.
//! 7. **Partition**: split `H` into a part embedded inside `U1` and a
//!    remainder recursed on the untouched vertices `U2`; every `U1`-`U2`
//!    pair is blue, so the two partial copies join into a full blue `H`.
//!
//! The guaranteed regime of the underlying argument needs constants far
//! beyond any feasible computation (the base threshold exceeds `2^63`),
//! so [`Config`] exposes them as small tunables: every witness returned is
//! still validated — only completeness degrades, surfacing as
//! [`Exhausted`] with the stage and the size check that failed.

use crate::colored::ColoredComplete;
use crate::cycle_extract::{cycle_from_first_neighborhood, cycle_from_second_neighborhood};
use crate::error::Error;
use crate::graph::{Graph, TargetGraph};
use crate::matching_case::matching_witness;
use crate::oracle::{brute_force_witness, check_witness};
use crate::path_ramsey::{bound_sqrt, ceil_sqrt, red_path_or_blue_h, PathOrCopy};
use crate::search::{find_path, Embedding};
use crate::witness::Witness;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest board the brute-force fallback will accept.
const FALLBACK_ORDER_LIMIT: usize = 64;

/// How many uniform samples [`partition_H`] tries before switching to
/// local improvement and then to the derandomized construction.
const PARTITION_SAMPLES: usize = 200;

/// Pipeline constants, all small at desk scale.
///
/// In the guaranteed regime the additive constant is `(2 m0)^3` with
/// `m0 >= 2^63 k^18` — unreachable for any real computation, which is why
/// these are configurable.  Any positive values are accepted; soundness
/// never depends on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    k: usize,
    m0: usize,
    b: usize,
    fallback_limit: usize,
}

impl Config {
    /// Validates `k` (odd, at least 3) and stores the thresholds.
    ///
    /// Cycle lengths 5 and up exercise every stage; `k = 3` is accepted
    /// because the matching delegation and the first-neighbourhood closure
    /// are meaningful there too (the second-neighbourhood closure needs
    /// `k >= 5` and is skipped below that).
    pub fn new(k: usize, m0: usize, b: usize, fallback_limit: usize) -> Result<Self, Error> {
        if k < 3 || k.is_multiple_of(2) {
            return Err(Error::invalid("cycle length k must be odd and at least 3"));
        }
        Ok(Config {
            k,
            m0,
            b,
            fallback_limit,
        })
    }

    /// Cycle length `k`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Base-case threshold: targets with at most this many edges go to
    /// the exact search.
    pub fn m0(&self) -> usize {
        self.m0
    }

    /// Additive constant `B` in the order bound.
    pub fn additive_constant(&self) -> usize {
        self.b
    }

    /// Boards of at most this order go to the exact search.
    pub fn fallback_limit(&self) -> usize {
        self.fallback_limit
    }

    /// The order at which extraction is guaranteed in the full regime:
    /// `2m + max(B - ceil(sqrt(m)), floor(k/2))`, exact integers.
    pub fn ramsey_bound_target(&self, m: usize) -> usize {
        assert!(m >= 1, "target graph has at least one edge");
        let adjusted = self.b as i64 - ceil_sqrt(m as u64) as i64;
        2 * m + adjusted.max((self.k / 2) as i64) as usize
    }

    /// Whether the constants sit in the regime where extraction is a
    /// theorem rather than best effort: `B = (2 m0)^3` and
    /// `m0 >= 2^63 k^18`.  Unreachable on real hardware; reported for
    /// diagnostics only.
    pub fn guaranteed_regime(&self) -> bool {
        let m0 = self.m0 as u128;
        let b_wanted = (2 * m0).checked_pow(3);
        if b_wanted != Some(self.b as u128) {
            return false;
        }
        (self.k as u128)
            .checked_pow(18)
            .and_then(|p| p.checked_mul(1u128 << 63))
            .is_some_and(|threshold| m0 >= threshold)
    }
}

/// Pipeline stages, used to tag an exhausted extraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    BaseCase,
    Disconnected,
    DensityGuard,
    MinDegree,
    FirstNeighborhood,
    SecondNeighborhood,
    Partition,
}

impl std::fmt::Display for Stage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Stage::BaseCase => "base-case",
            Stage::Disconnected => "disconnected",
            Stage::DensityGuard => "density-guard",
            Stage::MinDegree => "min-degree",
            Stage::FirstNeighborhood => "first-neighborhood",
            Stage::SecondNeighborhood => "second-neighborhood",
            Stage::Partition => "partition",
        };
        f.write_str(name)
    }
}

/// Best-effort outcome: the stage that gave up and the size check that
/// failed there.  Never produced when a witness was found.
#[derive(Clone, Debug)]
pub struct Exhausted {
    /// Stage that could not proceed.
    pub stage: Stage,
    /// Human-readable description of the failed check.
    pub check: String,
}

/// Result of an extraction attempt: a validated witness, or a diagnosis
/// of where the desk-scale pipeline ran out of guarantees.
#[derive(Clone, Debug)]
pub enum Extraction {
    Witness(Witness),
    Exhausted(Exhausted),
}

/// The geometry around the hub vertex after the minimum-degree stage.
///
/// `hub`, `red_nbhd`, `second_red_nbhd`, and `rest` partition the vertex
/// set, and every pair between `red_nbhd` and `rest` is blue — a red edge
/// there would put the far endpoint at red distance two, inside
/// `second_red_nbhd`.
#[derive(Clone, Debug)]
pub struct ExtractionState {
    /// Minimum-degree vertex of `H` whose removal drove the recursion.
    pub min_deg_vertex: usize,
    /// Degree of `min_deg_vertex` in `H`.
    pub delta: usize,
    /// Images of the neighbours of `min_deg_vertex` in the embedded copy.
    pub images: Vec<usize>,
    /// Vertices outside the embedded copy of `H - v`.
    pub uncovered: Vec<usize>,
    /// The hub `u`: the image with the most red neighbours among
    /// `uncovered`.
    pub hub: usize,
    /// Red neighbourhood `U1` of the hub.
    pub red_nbhd: Vec<usize>,
    /// Vertices at red distance exactly two from the hub.
    pub second_red_nbhd: Vec<usize>,
    /// Everything else: red distance three or more from the hub.
    pub rest: Vec<usize>,
}

impl ExtractionState {
    fn check_partition(&self, coloring: &ColoredComplete) -> Result<(), Error> {
        let n = coloring.order();
        let total = 1 + self.red_nbhd.len() + self.second_red_nbhd.len() + self.rest.len();
        if total != n {
            return Err(Error::contract(
                "extraction state",
                format!("hub/U1/second/rest cover {total} of {n} vertices"),
            ));
        }
        for &a in &self.red_nbhd {
            for &b in &self.rest {
                if coloring.is_red(a, b) {
                    return Err(Error::contract(
                        "extraction state",
                        format!("pair {a}-{b} between U1 and the rest is red"),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A split of the target's vertices: `v1` of prescribed size carries few
/// enough of the edges that `v2`'s induced subgraph stays below the
/// quadratic density bound `e(H[V2]) * n^2 <= m * (n - |v1|)^2`.
#[derive(Clone, Debug)]
pub struct PartitionResult {
    /// Vertices chosen for the first side, ascending.
    pub v1: Vec<usize>,
    /// The complement, ascending.
    pub v2: Vec<usize>,
    /// `H[V2]` with its isolated vertices removed.
    pub h2: Graph,
    /// Original vertices of `h2`, ascending: local `i` is `h2_vertices[i]`.
    pub h2_vertices: Vec<usize>,
}

fn edges_within(g: &Graph, set: &[usize]) -> usize {
    let mut count = 0;
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                count += 1;
            }
        }
    }
    count
}

/// Splits the vertices of `h` into `v1` of size exactly `s` and its
/// complement `v2` such that `e(H[V2]) * n^2 <= m * (n - s)^2` holds in
/// exact integer arithmetic.
///
/// Tries uniform samples first, then steepest local swaps, then a
/// derandomized greedy pass that realises the expectation argument
/// directly — the average of `e(H[V2])` over all `s`-subsets is below the
/// bound, so branch-wise minimisation of the conditional expectation
/// always lands on a valid split.  Total: never fails.
pub fn partition_h(h: &TargetGraph, s: usize, seed: u64) -> PartitionResult {
    let g = h.graph();
    let n = h.order();
    let m = h.size();
    assert!(s <= n, "requested side exceeds the vertex count");
    let bound_holds = |v2: &[usize]| {
        let e2 = edges_within(g, v2) as u128;
        e2 * (n as u128) * (n as u128) <= (m as u128) * ((n - s) as u128) * ((n - s) as u128)
    };
    let finish = |v1: Vec<usize>| -> PartitionResult {
        let v2: Vec<usize> = (0..n).filter(|v| !v1.contains(v)).collect();
        debug_assert!(bound_holds(&v2));
        let h2_vertices: Vec<usize> = v2
            .iter()
            .copied()
            .filter(|&v| v2.iter().any(|&w| w != v && g.has_edge(v, w)))
            .collect();
        let h2 = g.induced(&h2_vertices);
        PartitionResult {
            v1,
            v2,
            h2,
            h2_vertices,
        }
    };

    if s == 0 || s == n {
        return finish((0..s).collect());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v1: Vec<usize> = Vec::new();
    for _ in 0..PARTITION_SAMPLES {
        v1 = sample(&mut rng, n, s).into_vec();
        v1.sort_unstable();
        let v2: Vec<usize> = (0..n).filter(|v| !v1.contains(v)).collect();
        if bound_holds(&v2) {
            return finish(v1);
        }
    }

    // steepest swaps: pull the heaviest vertex out of V2, push the
    // lightest out of V1; keep going only while the inside edge count
    // strictly drops
    let mut v2: Vec<usize> = (0..n).filter(|v| !v1.contains(v)).collect();
    let mut inside = edges_within(g, &v2);
    for _ in 0..(4 * n * n) {
        if bound_holds(&v2) {
            return finish(v1);
        }
        let deg_in = |set: &[usize], x: usize| set.iter().filter(|&&w| g.has_edge(x, w)).count();
        let &heavy = v2
            .iter()
            .max_by_key(|&&x| (deg_in(&v2, x), std::cmp::Reverse(x)))
            .expect("v2 nonempty");
        let &light = v1
            .iter()
            .min_by_key(|&&y| (deg_in(&v1, y), y))
            .expect("v1 nonempty");
        let mut next_v1: Vec<usize> = v1.iter().copied().filter(|&y| y != light).collect();
        next_v1.push(heavy);
        next_v1.sort_unstable();
        let next_v2: Vec<usize> = (0..n).filter(|v| !next_v1.contains(v)).collect();
        let next_inside = edges_within(g, &next_v2);
        if next_inside >= inside {
            break;
        }
        v1 = next_v1;
        v2 = next_v2;
        inside = next_inside;
    }

    finish(derandomized_side(g, s))
}

/// Chooses an `s`-subset whose complement meets the density bound by
/// walking the vertices in order and sending each one to the side that
/// minimises the conditional expectation of the inside edge count over a
/// uniform completion.  The starting expectation is below the bound, so
/// the minimum branch never rises above it.
fn derandomized_side(g: &Graph, s: usize) -> Vec<usize> {
    let n = g.order();
    // 0 = undecided, 1 = first side, 2 = second side
    let mut side = vec![0u8; n];
    let mut slots = s;

    // expectation of the second side's inside edge count, as an exact
    // fraction (numerator, denominator)
    let expectation = |side: &[u8], slots: usize| -> (i128, i128) {
        let undecided: Vec<usize> = (0..n).filter(|&v| side[v] == 0).collect();
        let decided2: Vec<usize> = (0..n).filter(|&v| side[v] == 2).collect();
        let p = undecided.len() as i128;
        let q = p - slots as i128; // undecided vertices bound for side two
        let e_dd = edges_within(g, &decided2) as i128;
        let mut e_dp = 0i128;
        for &d in &decided2 {
            for &u in &undecided {
                if g.has_edge(d, u) {
                    e_dp += 1;
                }
            }
        }
        let e_pp = edges_within(g, &undecided) as i128;
        match p {
            0 => (e_dd, 1),
            1 => (e_dd + if q == 1 { e_dp } else { 0 }, 1),
            _ => (
                e_dd * p * (p - 1) + e_dp * q * (p - 1) + e_pp * q * (q - 1),
                p * (p - 1),
            ),
        }
    };

    for v in 0..n {
        let undecided_left = side.iter().filter(|&&x| x == 0).count();
        let must_take = slots == undecided_left;
        let may_take = slots > 0;
        side[v] = if must_take {
            1
        } else if !may_take {
            2
        } else {
            side[v] = 1;
            let (n1, d1) = expectation(&side, slots - 1);
            side[v] = 2;
            let (n2, d2) = expectation(&side, slots);
            // prefer the first side on ties: it shrinks the second side
            if n1 * d2 <= n2 * d1 {
                1
            } else {
                2
            }
        };
        if side[v] == 1 {
            slots -= 1;
        }
    }
    (0..n).filter(|&v| side[v] == 1).collect()
}

/// Wraps a found witness, re-validating it against the colouring before
/// anything escapes the pipeline.
fn certified(
    coloring: &ColoredComplete,
    k: usize,
    h: &TargetGraph,
    witness: Witness,
) -> Result<Extraction, Error> {
    if check_witness(coloring, k, h, &witness) {
        Ok(Extraction::Witness(witness))
    } else {
        Err(Error::contract(
            "extraction",
            format!("constructed witness failed validation: {witness:?}"),
        ))
    }
}

fn exhausted(stage: Stage, check: impl Into<String>) -> Extraction {
    Extraction::Exhausted(Exhausted {
        stage,
        check: check.into(),
    })
}

/// Exact search with the configured order cap, mapped into the pipeline's
/// outcome: absence and over-budget both surface as [`Exhausted`] tagged
/// with the calling stage.
fn fallback(
    coloring: &ColoredComplete,
    cfg: &Config,
    h: &TargetGraph,
    stage: Stage,
) -> Result<Extraction, Error> {
    match brute_force_witness(coloring, cfg.k, h, FALLBACK_ORDER_LIMIT) {
        Ok(Some(w)) => certified(coloring, cfg.k, h, w),
        Ok(None) => Ok(exhausted(
            stage,
            format!("complete search found no witness at order {}", coloring.order()),
        )),
        Err(Error::SizeLimit { order, limit }) => Ok(exhausted(
            stage,
            format!("order {order} exceeds the exact-search limit {limit}"),
        )),
        Err(e) => Err(e),
    }
}

/// Runs the staged pipeline on `coloring` against target `h`.
///
/// Returns a validated red `k`-cycle or blue copy of `h`, or [`Exhausted`]
/// describing where the desk-scale configuration ran out of guarantees.
/// `seed` drives only the partition sampling in stage 7; every other step
/// is deterministic.
pub fn extract_witness(
    coloring: &ColoredComplete,
    cfg: &Config,
    h: &TargetGraph,
    seed: u64,
) -> Result<Extraction, Error> {
    let k = cfg.k;
    let n = h.order();
    let m = h.size();
    let board = coloring.order();

    // stage 1: base case
    if m <= cfg.m0 || board <= cfg.fallback_limit {
        return fallback(coloring, cfg, h, Stage::BaseCase);
    }

    // stage 2: disconnected targets
    if h.is_perfect_matching() {
        let pairs = n / 2;
        if pairs >= k && board >= 2 * pairs + (k - 1) / 2 {
            let witness = matching_witness(coloring, k, pairs)?;
            return certified(coloring, k, h, witness);
        }
        return fallback(coloring, cfg, h, Stage::Disconnected);
    }
    let components = h.graph().components();
    if components.len() > 1 {
        return extract_disconnected(coloring, cfg, h, &components, seed);
    }

    // stage 3: density guards
    let (n_, m_, kk) = (n as u128, m as u128, (20 * k * 20 * k) as u128);
    if n_ * n_ * n_ < m_ * m_ {
        return fallback(coloring, cfg, h, Stage::DensityGuard);
    }
    if n_ * kk > m_ * (kk - 1) {
        return fallback(coloring, cfg, h, Stage::DensityGuard);
    }

    // stage 4: minimum-degree recursion and hub selection
    let state = match minimum_degree_stage(coloring, cfg, h, seed)? {
        StageFour::Done(outcome) => return Ok(outcome),
        StageFour::Hub(state) => state,
    };
    state.check_partition(coloring)?;

    // stage 5: the hub's red neighbourhood
    let u1 = &state.red_nbhd;
    let (sub1, table1) = coloring.restrict(u1);
    if let Some(path) = find_path(sub1.red(), k - 1) {
        let global: Vec<usize> = path.into_iter().map(|v| table1[v]).collect();
        let cycle = cycle_from_first_neighborhood(coloring.red(), state.hub, &global)?;
        return certified(coloring, k, h, Witness::RedCycle(cycle));
    }
    if u1.len() >= bound_sqrt(k, n, m) {
        return match red_path_or_blue_h(&sub1, k, h)? {
            PathOrCopy::RedPath(_) => Err(Error::contract(
                "extraction",
                "red path found in U1 after exhaustive path search failed",
            )),
            PathOrCopy::BlueCopy(e) => {
                let map = e.map().iter().map(|&v| table1[v]).collect();
                certified(coloring, k, h, Witness::BlueCopy(Embedding::from_map(map)))
            }
        };
    }
    debug_assert!(u1.len() < bound_sqrt(k, n, m));

    // stage 6: the second red neighbourhood
    let pi = &state.second_red_nbhd;
    let (sub2, table2) = coloring.restrict(pi);
    if k >= 5 {
        if let Some(path) = find_path(sub2.red(), 2 * k) {
            let global: Vec<usize> = path.into_iter().map(|v| table2[v]).collect();
            let cycle = cycle_from_second_neighborhood(coloring.red(), state.hub, k, &global)?;
            return certified(coloring, k, h, Witness::RedCycle(cycle));
        }
    }
    if pi.len() >= bound_sqrt(2 * k, n, m) {
        return match red_path_or_blue_h(&sub2, 2 * k, h)? {
            PathOrCopy::RedPath(_) => Err(Error::contract(
                "extraction",
                "red path found in the second neighbourhood after search failed",
            )),
            PathOrCopy::BlueCopy(e) => {
                let map = e.map().iter().map(|&v| table2[v]).collect();
                certified(coloring, k, h, Witness::BlueCopy(Embedding::from_map(map)))
            }
        };
    }
    debug_assert!(pi.len() < bound_sqrt(2 * k, n, m));

    // stage 7: partition H across U1 and the untouched rest
    partition_stage(coloring, cfg, h, &state, seed)
}

enum StageFour {
    Done(Extraction),
    Hub(ExtractionState),
}

/// Stage 4: recursively embed `H - v` for a minimum-degree `v`, try the
/// direct extension, otherwise pick the hub.
fn minimum_degree_stage(
    coloring: &ColoredComplete,
    cfg: &Config,
    h: &TargetGraph,
    seed: u64,
) -> Result<StageFour, Error> {
    let g = h.graph();
    let n = h.order();
    let board = coloring.order();
    let v = (0..n)
        .min_by_key(|&w| (g.degree(w), w))
        .expect("target graph is nonempty");
    let delta = g.degree(v);

    // H - v, split into its non-isolated core and the vertices that lose
    // their last edge when v goes (all of them neighbours of v)
    let core_vertices: Vec<usize> = (0..n)
        .filter(|&w| w != v && (g.degree(w) > 1 || !g.has_edge(v, w)))
        .collect();
    let dropped: Vec<usize> = (0..n)
        .filter(|&w| w != v && !core_vertices.contains(&w))
        .collect();

    if board < n - 1 {
        return Ok(StageFour::Done(exhausted(
            Stage::MinDegree,
            format!("board of order {board} cannot hold the {}-vertex core", n - 1),
        )));
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; board];
    if !core_vertices.is_empty() {
        let core = TargetGraph::new(g.induced(&core_vertices))?;
        match extract_witness(coloring, cfg, &core, seed)? {
            Extraction::Witness(Witness::RedCycle(c)) => {
                return Ok(StageFour::Done(Extraction::Witness(Witness::RedCycle(c))));
            }
            Extraction::Witness(Witness::BlueCopy(e)) => {
                for (local, &hv) in core_vertices.iter().enumerate() {
                    image[hv] = e.map()[local];
                    used[e.map()[local]] = true;
                }
            }
            Extraction::Exhausted(x) => return Ok(StageFour::Done(Extraction::Exhausted(x))),
        }
    }
    // vertices isolated by v's removal have no edges to honour inside
    // H - v: park them on the lowest unused board vertices
    for &hv in &dropped {
        let spot = (0..board).find(|&b| !used[b]).expect("room checked above");
        image[hv] = spot;
        used[spot] = true;
    }

    let uncovered: Vec<usize> = (0..board).filter(|&b| !used[b]).collect();
    if uncovered.len() != board - (n - 1) {
        return Err(Error::contract(
            "extraction",
            format!(
                "{} uncovered vertices, expected {}",
                uncovered.len(),
                board - (n - 1)
            ),
        ));
    }
    if uncovered.is_empty() {
        return Ok(StageFour::Done(exhausted(
            Stage::MinDegree,
            "no vertex left outside the embedded core".to_string(),
        )));
    }

    let images: Vec<usize> = g.neighbors(v).map(|w| image[w]).collect();
    // direct extension: a vertex blue to every image of v's neighbours
    // completes the copy
    for &s in &uncovered {
        if images.iter().all(|&t| coloring.is_blue(s, t)) {
            let mut full = image;
            full[v] = s;
            let witness = Witness::BlueCopy(Embedding::from_map(full));
            return certified(coloring, cfg.k, h, witness).map(StageFour::Done);
        }
    }

    // every uncovered vertex has a red neighbour among the images, so one
    // image sees at least |uncovered| / delta of them
    let (hub, best) = images
        .iter()
        .map(|&t| {
            (
                t,
                uncovered.iter().filter(|&&s| coloring.is_red(s, t)).count(),
            )
        })
        .max_by_key(|&(t, count)| (count, std::cmp::Reverse(t)))
        .expect("v has at least one neighbour");
    if best * delta < uncovered.len() {
        return Err(Error::contract(
            "extraction",
            format!(
                "pigeonhole failed: best hub sees {best} of {} uncovered vertices with delta {delta}",
                uncovered.len()
            ),
        ));
    }

    let red = coloring.red();
    let red_nbhd: Vec<usize> = red.neighbors(hub).collect();
    let mut near = vec![false; board];
    near[hub] = true;
    for &x in &red_nbhd {
        near[x] = true;
    }
    let mut second: Vec<usize> = Vec::new();
    for &x in &red_nbhd {
        for w in red.neighbors(x) {
            if !near[w] {
                near[w] = true;
                second.push(w);
            }
        }
    }
    second.sort_unstable();
    let rest: Vec<usize> = (0..board).filter(|&w| !near[w]).collect();

    Ok(StageFour::Hub(ExtractionState {
        min_deg_vertex: v,
        delta,
        images,
        uncovered,
        hub,
        red_nbhd,
        second_red_nbhd: second,
        rest,
    }))
}

/// Stage 2 for a disconnected target that is not a perfect matching:
/// embed one multi-edge component, then recurse for the rest on the
/// untouched vertices.
fn extract_disconnected(
    coloring: &ColoredComplete,
    cfg: &Config,
    h: &TargetGraph,
    components: &[Vec<usize>],
    seed: u64,
) -> Result<Extraction, Error> {
    let g = h.graph();
    let m = h.size();
    let chosen = components
        .iter()
        .position(|c| {
            let e = edges_within(g, c);
            e >= 2 && e < m
        })
        .ok_or_else(|| {
            Error::contract(
                "extraction",
                "disconnected non-matching target has no component with 2..m edges",
            )
        })?;

    let part = TargetGraph::new(g.induced(&components[chosen]))?;
    let first = match extract_witness(coloring, cfg, &part, seed)? {
        Extraction::Witness(Witness::RedCycle(c)) => {
            return certified(coloring, cfg.k, h, Witness::RedCycle(c));
        }
        Extraction::Witness(Witness::BlueCopy(e)) => e,
        Extraction::Exhausted(x) => return Ok(Extraction::Exhausted(x)),
    };

    let taken: Vec<usize> = first.map().to_vec();
    let remaining: Vec<usize> = (0..coloring.order())
        .filter(|b| !taken.contains(b))
        .collect();
    let rest_vertices: Vec<usize> = components
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != chosen)
        .flat_map(|(_, c)| c.iter().copied())
        .collect();
    let mut rest_sorted = rest_vertices.clone();
    rest_sorted.sort_unstable();
    let rest_target = TargetGraph::new(g.induced(&rest_sorted))?;
    let (sub, table) = coloring.restrict(&remaining);

    match extract_witness(&sub, cfg, &rest_target, seed)? {
        Extraction::Witness(Witness::RedCycle(c)) => {
            let global: Vec<usize> = c.into_iter().map(|v| table[v]).collect();
            certified(coloring, cfg.k, h, Witness::RedCycle(global))
        }
        Extraction::Witness(Witness::BlueCopy(e)) => {
            let mut image = vec![usize::MAX; h.order()];
            for (local, &hv) in components[chosen].iter().enumerate() {
                image[hv] = first.map()[local];
            }
            for (local, &hv) in rest_sorted.iter().enumerate() {
                image[hv] = table[e.map()[local]];
            }
            certified(coloring, cfg.k, h, Witness::BlueCopy(Embedding::from_map(image)))
        }
        Extraction::Exhausted(x) => Ok(Extraction::Exhausted(x)),
    }
}

/// Stage 7: place a slice of `H` inside the hub's red neighbourhood and
/// recurse for the remainder on the untouched vertices; all pairs between
/// the two zones are blue, so the halves concatenate.
fn partition_stage(
    coloring: &ColoredComplete,
    cfg: &Config,
    h: &TargetGraph,
    state: &ExtractionState,
    seed: u64,
) -> Result<Extraction, Error> {
    let k = cfg.k;
    let g = h.graph();
    let n = h.order();
    let m = h.size();
    let u1 = &state.red_nbhd;
    let u2 = &state.rest;

    let spread = ceil_sqrt(2 * (m as u64) * (k as u64) * (k as u64)) as usize;
    let s = u1.len().saturating_sub(spread).min(n);
    let partition = partition_h(h, s, seed);

    let mut image = vec![usize::MAX; n];
    let mut used_u1 = vec![false; u1.len()];

    // the V1 slice goes inside U1: its non-isolated part through the
    // path-or-copy machinery (a red path on k-1 vertices inside U1 was
    // ruled out in stage 5), its isolated part on any leftovers
    let core1: Vec<usize> = partition
        .v1
        .iter()
        .copied()
        .filter(|&v| partition.v1.iter().any(|&w| w != v && g.has_edge(v, w)))
        .collect();
    if !core1.is_empty() {
        let target1 = TargetGraph::new(g.induced(&core1))?;
        let (sub1, table1) = coloring.restrict(u1);
        match red_path_or_blue_h(&sub1, k - 1, &target1) {
            Err(Error::TooSmall { needed, have, .. }) => {
                return Ok(exhausted(
                    Stage::Partition,
                    format!("U1 has {have} vertices, the V1 slice needs {needed}"),
                ));
            }
            Err(e) => return Err(e),
            Ok(PathOrCopy::RedPath(_)) => {
                return Err(Error::contract(
                    "extraction",
                    "red path found in U1 during partition after stage 5 ruled it out",
                ));
            }
            Ok(PathOrCopy::BlueCopy(e)) => {
                for (local, &hv) in core1.iter().enumerate() {
                    let spot = e.map()[local];
                    image[hv] = table1[spot];
                    used_u1[spot] = true;
                }
            }
        }
    }
    for &hv in partition.v1.iter().filter(|v| !core1.contains(v)) {
        match used_u1.iter().position(|&u| !u) {
            Some(spot) => {
                image[hv] = u1[spot];
                used_u1[spot] = true;
            }
            None => {
                return Ok(exhausted(
                    Stage::Partition,
                    format!("U1 of size {} cannot hold the V1 slice", u1.len()),
                ));
            }
        }
    }

    // the V2 slice goes onto the untouched rest: its core recursively,
    // its isolated-in-H[V2] vertices on the leftovers
    let mut used_u2 = vec![false; u2.len()];
    if !partition.h2_vertices.is_empty() {
        let target2 = TargetGraph::new(partition.h2.clone())?;
        let (sub2, table2) = coloring.restrict(u2);
        match extract_witness(&sub2, cfg, &target2, seed)? {
            Extraction::Witness(Witness::RedCycle(c)) => {
                let global: Vec<usize> = c.into_iter().map(|v| table2[v]).collect();
                return certified(coloring, k, h, Witness::RedCycle(global));
            }
            Extraction::Witness(Witness::BlueCopy(e)) => {
                for (local, &hv) in partition.h2_vertices.iter().enumerate() {
                    let spot = e.map()[local];
                    image[hv] = table2[spot];
                    used_u2[spot] = true;
                }
            }
            Extraction::Exhausted(x) => return Ok(Extraction::Exhausted(x)),
        }
    }
    for &hv in partition
        .v2
        .iter()
        .filter(|v| !partition.h2_vertices.contains(v))
    {
        match used_u2.iter().position(|&u| !u) {
            Some(spot) => {
                image[hv] = u2[spot];
                used_u2[spot] = true;
            }
            None => {
                return Ok(exhausted(
                    Stage::Partition,
                    format!("rest of size {} cannot hold the V2 slice", u2.len()),
                ));
            }
        }
    }

    certified(coloring, k, h, Witness::BlueCopy(Embedding::from_map(image)))
}
