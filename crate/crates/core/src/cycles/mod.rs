//! Girth, girth-cycle enumeration and the counting quantities built on it:
//! per-edge girth-cycle counts, vertex signatures, r-multisets, and the two
//! exact counting identities used to bound signatures.

mod cuts;

pub use cuts::{cycle_separating_cut_below, CutSearch, DEFAULT_CUT_BUDGET};

use std::collections::VecDeque;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, SimpleGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("graph has no cycles")]
    AcyclicGraph,
    #[error("edge {0} is out of range")]
    EdgeOutOfRange(EdgeId),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NonCubicVertex { vertex: usize, degree: usize },
    #[error(
        "vertex {first} has signature {first_signature} but vertex {second} has {second_signature}"
    )]
    NotGirthRegular {
        first: usize,
        first_signature: Signature,
        second: usize,
        second_signature: Signature,
    },
    #[error("edges in the set lie on different numbers of girth cycles ({0} and {1})")]
    NonUniformOrbit(usize, usize),
    #[error("vertices {0} and {1} have different r-multisets")]
    NonHomogeneous(usize, usize),
    #[error("the edge set is empty")]
    EmptyEdgeSet,
    #[error("girth is {0:?}, expected 7")]
    GirthNot7(Option<usize>),
    #[error("graph has {0} vertices; at least 28 are needed")]
    TooSmall(usize),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("cut search needs {needed} subsets but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
}

/// A cycle stored as its lexicographically least rotation/reflection:
/// the smallest vertex first, followed by its smaller cycle-neighbor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Canonicalizes a closed vertex sequence (without repeating the start).
    ///
    /// Panics on fewer than three vertices.
    pub fn new(mut vertices: Vec<usize>) -> Cycle {
        assert!(vertices.len() >= 3, "a cycle needs at least three vertices");
        let start = (0..vertices.len())
            .min_by_key(|&i| vertices[i])
            .unwrap_or(0);
        vertices.rotate_left(start);
        if vertices[vertices.len() - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        Cycle(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// Consecutive vertex pairs, closing the cycle.
    pub fn vertex_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    /// The edges of the cycle in `g`, or `None` if it is not a cycle of `g`.
    pub fn edges_in(&self, g: &SimpleGraph) -> Option<Vec<EdgeId>> {
        let mut seen = vec![false; g.order()];
        for &v in &self.0 {
            if v >= g.order() || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        self.vertex_pairs()
            .map(|(u, v)| g.edge_between(u, v))
            .collect()
    }

    /// Image under a vertex map, re-canonicalized.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Cycle {
        Cycle::new(self.0.iter().map(|&v| f(v)).collect())
    }
}

/// Sorted triple of girth-cycle counts over the edges at a cubic vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature(pub [usize; 3]);

impl Signature {
    pub fn new(a: usize, b: usize, c: usize) -> Signature {
        let mut t = [a, b, c];
        t.sort_unstable();
        Signature(t)
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Girth cycles through a vertex with this signature.
    pub fn cycles_per_vertex(&self) -> usize {
        self.sum() / 2
    }

    pub fn is_constant(&self) -> bool {
        self.0[0] == self.0[2]
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a},{b},{c})")
    }
}

/// Multiset (sorted) of per-cycle counts of edges from a fixed edge set,
/// over the girth cycles through one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RMultiset(pub Vec<usize>);

impl RMultiset {
    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// All girth cycles of a graph with incidence indices.
#[derive(Clone, Debug)]
pub struct CycleSet {
    girth: usize,
    cycles: Vec<Cycle>,
    cycle_edges: Vec<Vec<EdgeId>>,
    by_edge: Vec<Vec<usize>>,
    by_vertex: Vec<Vec<usize>>,
}

impl CycleSet {
    /// Indexes an arbitrary set of cycles of `g` (not necessarily girth cycles).
    ///
    /// Panics if some entry is not a cycle of `g`.
    pub fn from_cycles(g: &SimpleGraph, girth: usize, mut cycles: Vec<Cycle>) -> CycleSet {
        cycles.sort();
        cycles.dedup();
        let mut by_edge = vec![Vec::new(); g.size()];
        let mut by_vertex = vec![Vec::new(); g.order()];
        let mut cycle_edges = Vec::with_capacity(cycles.len());
        for (i, c) in cycles.iter().enumerate() {
            let edges = c.edges_in(g).expect("cycle must belong to the graph");
            for e in &edges {
                by_edge[e.0].push(i);
            }
            for &v in c.vertices() {
                by_vertex[v].push(i);
            }
            cycle_edges.push(edges);
        }
        CycleSet {
            girth,
            cycles,
            cycle_edges,
            by_edge,
            by_vertex,
        }
    }

    pub fn girth(&self) -> usize {
        self.girth
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycle_edges(&self, index: usize) -> &[EdgeId] {
        &self.cycle_edges[index]
    }

    /// Indices of the cycles containing `e`.
    pub fn through_edge(&self, e: EdgeId) -> &[usize] {
        &self.by_edge[e.0]
    }

    pub fn through_vertex(&self, v: usize) -> &[usize] {
        &self.by_vertex[v]
    }

    /// Girth-cycle count of every edge, indexed by edge id.
    pub fn epsilon_all(&self) -> Vec<usize> {
        self.by_edge.iter().map(Vec::len).collect()
    }
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Enumerates every cycle of length `girth(g)` exactly once.
pub fn girth_cycles(g: &SimpleGraph) -> Result<CycleSet, CycleError> {
    let girth = girth(g).ok_or(CycleError::AcyclicGraph)?;
    Ok(cycles_of_length(g, girth))
}

/// All cycles of length exactly `len`, by rooted DFS from each cycle's
/// smallest vertex.
pub fn cycles_of_length(g: &SimpleGraph, len: usize) -> CycleSet {
    let per_root: Vec<Vec<Cycle>> = (0..g.order())
        .into_par_iter()
        .map(|root| rooted_cycles(g, root, len))
        .collect();
    let cycles = per_root.into_iter().flatten().collect();
    CycleSet::from_cycles(g, len, cycles)
}

fn rooted_cycles(g: &SimpleGraph, root: usize, len: usize) -> Vec<Cycle> {
    let dist = g.distances_from(root);
    let mut found = Vec::new();
    let mut path = vec![root];
    let mut on_path = vec![false; g.order()];
    on_path[root] = true;

    fn extend(
        g: &SimpleGraph,
        root: usize,
        len: usize,
        dist: &[Option<usize>],
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        found: &mut Vec<Cycle>,
    ) {
        let last = *path.last().unwrap_or(&root);
        if path.len() == len {
            if g.has_edge(last, root) && path[1] < path[len - 1] {
                found.push(Cycle(path.clone()));
            }
            return;
        }
        let remaining = len - path.len();
        for &w in g.neighbors(last) {
            if w <= root || on_path[w] {
                continue;
            }
            // w sits at path position path.len(); it must get back within `remaining` steps
            if dist[w].is_none_or(|d| d > remaining) {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            extend(g, root, len, dist, path, on_path, found);
            on_path[w] = false;
            path.pop();
        }
    }

    if len >= 3 {
        extend(g, root, len, &dist, &mut path, &mut on_path, &mut found);
    }
    found
}

/// Number of girth cycles through `e`.
pub fn epsilon(g: &SimpleGraph, cycles: &CycleSet, e: EdgeId) -> Result<usize, CycleError> {
    if e.0 >= g.size() {
        return Err(CycleError::EdgeOutOfRange(e));
    }
    Ok(cycles.through_edge(e).len())
}

pub fn vertex_signature(
    g: &SimpleGraph,
    cycles: &CycleSet,
    v: usize,
) -> Result<Signature, CycleError> {
    let incident = g.incident_edges(v);
    if incident.len() != 3 {
        return Err(CycleError::NonCubicVertex {
            vertex: v,
            degree: incident.len(),
        });
    }
    let eps: Vec<usize> = incident
        .iter()
        .map(|&e| cycles.through_edge(e).len())
        .collect();
    Ok(Signature::new(eps[0], eps[1], eps[2]))
}

/// Common signature of all vertices of a cubic graph with a cycle.
pub fn girth_regular_signature(g: &SimpleGraph) -> Result<Signature, CycleError> {
    let cycles = girth_cycles(g)?;
    common_signature(g, &cycles)
}

pub fn common_signature(g: &SimpleGraph, cycles: &CycleSet) -> Result<Signature, CycleError> {
    if g.order() == 0 {
        return Err(CycleError::AcyclicGraph);
    }
    let first = vertex_signature(g, cycles, 0)?;
    for v in 1..g.order() {
        let s = vertex_signature(g, cycles, v)?;
        if s != first {
            return Err(CycleError::NotGirthRegular {
                first: 0,
                first_signature: first,
                second: v,
                second_signature: s,
            });
        }
    }
    Ok(first)
}

fn edge_mask(g: &SimpleGraph, edges: &[EdgeId]) -> Result<Vec<bool>, CycleError> {
    let mut mask = vec![false; g.size()];
    for &e in edges {
        if e.0 >= g.size() {
            return Err(CycleError::EdgeOutOfRange(e));
        }
        mask[e.0] = true;
    }
    Ok(mask)
}

/// For each girth cycle through `v`, how many of its edges lie in `edge_set`.
pub fn r_multiset(
    g: &SimpleGraph,
    cycles: &CycleSet,
    edge_set: &[EdgeId],
    v: usize,
) -> Result<RMultiset, CycleError> {
    let mask = edge_mask(g, edge_set)?;
    Ok(r_multiset_masked(cycles, &mask, v))
}

fn r_multiset_masked(cycles: &CycleSet, mask: &[bool], v: usize) -> RMultiset {
    let mut counts: Vec<usize> = cycles
        .through_vertex(v)
        .iter()
        .map(|&c| cycles.cycle_edges(c).iter().filter(|e| mask[e.0]).count())
        .collect();
    counts.sort_unstable();
    RMultiset(counts)
}

/// Both sides of the double-counting identity for an edge orbit `O`:
/// the sum of the common r-multiset, and `|O| * eps(O) * girth / |V|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSum {
    pub multiset: RMultiset,
    pub lhs: usize,
    pub rhs: Ratio<u64>,
    pub epsilon: usize,
}

impl OrbitSum {
    pub fn holds(&self) -> bool {
        Ratio::from_integer(self.lhs as u64) == self.rhs
    }
}

pub fn orbit_sum_identity(
    g: &SimpleGraph,
    cycles: &CycleSet,
    orbit: &[EdgeId],
) -> Result<OrbitSum, CycleError> {
    let mask = edge_mask(g, orbit)?;
    let first = *orbit.first().ok_or(CycleError::EmptyEdgeSet)?;
    let eps = cycles.through_edge(first).len();
    for &e in orbit {
        let other = cycles.through_edge(e).len();
        if other != eps {
            return Err(CycleError::NonUniformOrbit(eps, other));
        }
    }
    if g.order() == 0 {
        return Err(CycleError::EmptyEdgeSet);
    }
    let multiset = r_multiset_masked(cycles, &mask, 0);
    for v in 1..g.order() {
        if r_multiset_masked(cycles, &mask, v) != multiset {
            return Err(CycleError::NonHomogeneous(0, v));
        }
    }
    let size = mask.iter().filter(|&&b| b).count() as u64;
    let rhs = Ratio::new(size * eps as u64 * cycles.girth() as u64, g.order() as u64);
    Ok(OrbitSum {
        lhs: multiset.sum(),
        multiset,
        rhs,
        epsilon: eps,
    })
}

/// Ball of radius 3 around a vertex of a cubic girth-7 graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BallCut {
    /// Vertices at distance at most 3.
    pub ball_size: usize,
    /// Edges with exactly one end in the ball.
    pub boundary: usize,
    /// Edges joining two vertices at distance exactly 3.
    pub sphere_edges: usize,
    /// Edges from the distance-3 sphere back into the ball interior.
    pub inward_edges: usize,
}

impl BallCut {
    /// Degree sum over the distance-3 sphere: boundary + 2 * sphere edges + inward edges.
    pub fn sphere_degree_sum(&self) -> usize {
        self.boundary + 2 * self.sphere_edges + self.inward_edges
    }
}

pub fn ball_cut_identity(g: &SimpleGraph, v: usize) -> Result<BallCut, CycleError> {
    if !g.is_cubic() {
        return Err(CycleError::NotCubic);
    }
    let gi = girth(g);
    if gi != Some(7) {
        return Err(CycleError::GirthNot7(gi));
    }
    if g.order() < 28 {
        return Err(CycleError::TooSmall(g.order()));
    }
    let dist = g.distances_from(v);
    let within = |w: usize, r: usize| dist[w].is_some_and(|d| d <= r);
    let ball_size = (0..g.order()).filter(|&w| within(w, 3)).count();
    let mut boundary = 0;
    let mut sphere_edges = 0;
    let mut inward_edges = 0;
    for &(a, b) in g.edges() {
        match (dist[a], dist[b]) {
            (Some(3), Some(3)) => sphere_edges += 1,
            (Some(3), Some(2)) | (Some(2), Some(3)) => inward_edges += 1,
            _ => {}
        }
        if within(a, 3) != within(b, 3) {
            boundary += 1;
        }
    }
    Ok(BallCut {
        ball_size,
        boundary,
        sphere_edges,
        inward_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{a_graph, coxeter, cycle_graph, gen_petersen, path_graph};

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(girth(&cycle_graph(7)), Some(7));
        let k4 = SimpleGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(girth(&k4), Some(3));
        assert_eq!(girth(&path_graph(5)), None);
        assert_eq!(girth(&a_graph(8).unwrap()), Some(7));
        assert_eq!(girth(&gen_petersen(5, 2).unwrap()), Some(5));
    }

    #[test]
    fn cycle_canonical_form() {
        let c = Cycle::new(vec![4, 2, 9, 1, 7]);
        assert_eq!(c.vertices(), &[1, 7, 4, 2, 9]);
        assert_eq!(Cycle::new(vec![1, 9, 2, 4, 7]), c);
        assert_eq!(Cycle::new(vec![2, 9, 1, 7, 4]), c);
    }

    #[test]
    fn seven_cycle_has_one_girth_cycle() {
        let g = cycle_graph(7);
        let cs = girth_cycles(&g).unwrap();
        assert_eq!(cs.len(), 1);
        for e in g.edge_ids() {
            assert_eq!(epsilon(&g, &cs, e).unwrap(), 1);
        }
        assert_eq!(
            epsilon(&g, &cs, EdgeId(7)),
            Err(CycleError::EdgeOutOfRange(EdgeId(7)))
        );
        let all: Vec<EdgeId> = g.edge_ids().collect();
        assert_eq!(r_multiset(&g, &cs, &all, 3).unwrap(), RMultiset(vec![7]));
        let sum = orbit_sum_identity(&g, &cs, &all).unwrap();
        assert_eq!(sum.lhs, 7);
        assert!(sum.holds());
    }

    #[test]
    fn acyclic_graph_has_no_girth_cycles() {
        assert_eq!(
            girth_cycles(&path_graph(5)).unwrap_err(),
            CycleError::AcyclicGraph
        );
    }

    #[test]
    fn non_cubic_vertex_signature() {
        let g = cycle_graph(7);
        let cs = girth_cycles(&g).unwrap();
        assert!(matches!(
            vertex_signature(&g, &cs, 0),
            Err(CycleError::NonCubicVertex {
                vertex: 0,
                degree: 2
            })
        ));
    }

    #[test]
    fn epsilon_on_a9() {
        let n = 9;
        let g = a_graph(n).unwrap();
        let cs = girth_cycles(&g).unwrap();
        for i in 0..n {
            let xy = g.edge_between(i, n + i).unwrap();
            let xx = g.edge_between(i, (i + 1) % n).unwrap();
            assert_eq!(epsilon(&g, &cs, xy).unwrap(), 6);
            assert_eq!(epsilon(&g, &cs, xx).unwrap(), 4);
        }
    }

    #[test]
    fn a9_red_edges_give_constant_three() {
        let g = a_graph(9).unwrap();
        let cs = girth_cycles(&g).unwrap();
        let eps = cs.epsilon_all();
        let red: Vec<EdgeId> = g.edge_ids().filter(|e| eps[e.0] == 6).collect();
        assert_eq!(red.len(), 18);
        for v in 0..g.order() {
            assert_eq!(r_multiset(&g, &cs, &red, v).unwrap(), RMultiset(vec![3; 7]));
        }
        let sum = orbit_sum_identity(&g, &cs, &red).unwrap();
        assert_eq!(sum.lhs, 21);
        assert_eq!(sum.rhs, Ratio::from_integer(21));
    }

    #[test]
    fn non_uniform_and_non_homogeneous_sets() {
        let g = a_graph(9).unwrap();
        let cs = girth_cycles(&g).unwrap();
        let xy = g.edge_between(0, 9).unwrap();
        let xx = g.edge_between(0, 1).unwrap();
        assert_eq!(
            orbit_sum_identity(&g, &cs, &[xy, xx]),
            Err(CycleError::NonUniformOrbit(6, 4))
        );
        assert!(matches!(
            orbit_sum_identity(&g, &cs, &[xx]),
            Err(CycleError::NonHomogeneous(0, _))
        ));
    }

    #[test]
    fn coxeter_ball() {
        let g = coxeter();
        let cut = ball_cut_identity(&g, 0).unwrap();
        assert_eq!(cut.ball_size, 22);
        assert_eq!(cut.boundary, 12);
        assert_eq!(2 * cut.sphere_edges, 12);
        assert_eq!(cut.inward_edges, 12);
        assert_eq!(cut.sphere_degree_sum(), 36);
    }

    #[test]
    fn ball_preconditions() {
        assert_eq!(
            ball_cut_identity(&gen_petersen(13, 5).unwrap(), 0),
            Err(CycleError::TooSmall(26))
        );
        assert_eq!(
            ball_cut_identity(&gen_petersen(5, 2).unwrap(), 0),
            Err(CycleError::GirthNot7(Some(5)))
        );
        assert_eq!(
            ball_cut_identity(&cycle_graph(7), 0),
            Err(CycleError::NotCubic)
        );
    }

    #[test]
    fn girth_regularity_failure_names_two_vertices() {
        // prism over a triangle glued to a cube corner: cubic, not girth-regular
        let g = SimpleGraph::new(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(
            girth_regular_signature(&g).unwrap(),
            Signature::new(0, 1, 1)
        );
        let h = SimpleGraph::new(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (0, 3),
                (1, 4),
                (2, 5),
                (3, 6),
                (4, 6),
                (5, 7),
                (3, 7),
                (4, 7),
                (5, 6),
            ],
        )
        .unwrap();
        assert!(h.is_cubic());
        assert!(matches!(
            girth_regular_signature(&h),
            Err(CycleError::NotGirthRegular { .. })
        ));
    }
}
