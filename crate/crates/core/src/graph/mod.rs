//! Exact graph structures: simple graphs with a canonical edge numbering,
//! loop-free multigraphs, arcs, and the graph6 / JSON file formats.

mod graph6;
mod json;
mod multigraph;

pub use graph6::{parse_graph6, write_graph6};
pub use json::{parse_multigraph_json, write_multigraph_json, MultigraphDocument};
pub use multigraph::MultiGraph;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0} rejected")]
    LoopRejected(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),
    #[error("multigraph JSON does not match the schema: {0}")]
    SchemaViolation(String),
    #[error("scheme references arc {arc}, but the multigraph only has {arcs} arcs")]
    DanglingArcReference { arc: usize, arcs: usize },
}

/// Index into the canonical edge enumeration of a graph.
///
/// For a [`SimpleGraph`] edges are numbered by their sorted endpoint pair, so
/// the numbering survives copies and graph6 round trips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An edge traversed in one direction.
///
/// Arc ids are `2 * edge + direction`; direction 0 begins at the first
/// endpoint of the edge as stored by the owning graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub edge: EdgeId,
    pub reversed: bool,
}

impl Arc {
    pub fn from_id(id: usize) -> Self {
        Arc {
            edge: EdgeId(id / 2),
            reversed: id % 2 == 1,
        }
    }

    pub fn id(self) -> usize {
        2 * self.edge.0 + usize::from(self.reversed)
    }

    pub fn reverse(self) -> Self {
        Arc {
            edge: self.edge,
            reversed: !self.reversed,
        }
    }

    /// Beginning and end vertex, given the endpoints of the underlying edge.
    pub fn ends(self, endpoints: (usize, usize)) -> (usize, usize) {
        if self.reversed {
            (endpoints.1, endpoints.0)
        } else {
            endpoints
        }
    }
}

/// Undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are sorted ascending and edges are kept as sorted pairs
/// `(u, v)` with `u < v`, in lexicographic order. A graph is immutable once
/// built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
    incident: Vec<Vec<EdgeId>>,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Repeated pairs collapse into one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopRejected(u));
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut adjacency = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            adjacency[u].push((v, EdgeId(i)));
            adjacency[v].push((u, EdgeId(i)));
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
        }
        for (v, list) in adjacency.iter().enumerate() {
            incident[v] = list.iter().map(|&(_, e)| e).collect();
        }
        let adjacency = adjacency
            .into_iter()
            .map(|list| list.into_iter().map(|(w, _)| w).collect())
            .collect();
        Ok(SimpleGraph {
            adjacency,
            incident,
            edges: pairs,
        })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adjacency: vec![Vec::new(); n],
            incident: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Edge ids incident to `v`, parallel to [`SimpleGraph::neighbors`].
    pub fn incident_edges(&self, v: usize) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.order() || v >= self.order() {
            return None;
        }
        self.adjacency[u]
            .binary_search(&v)
            .ok()
            .map(|i| self.incident[u][i])
    }

    /// The vertex at the other end of `e` from `v`.
    pub fn opposite(&self, e: EdgeId, v: usize) -> usize {
        let (a, b) = self.edges[e.0];
        if a == v {
            b
        } else {
            a
        }
    }

    /// All arcs, ordered by id.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        (0..2 * self.edges.len()).map(Arc::from_id)
    }

    pub fn arc_ends(&self, arc: Arc) -> (usize, usize) {
        arc.ends(self.edges[arc.edge.0])
    }

    /// The arc beginning at `tail` and ending at `head`, if they are adjacent.
    pub fn arc_between(&self, tail: usize, head: usize) -> Option<Arc> {
        self.edge_between(tail, head).map(|e| Arc {
            edge: e,
            reversed: tail > head,
        })
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adjacency.iter().all(|list| list.len() == k)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// Connectivity by traversal from vertex 0. The empty graph is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or_default();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Relabels vertex `v` as `labels[v]`. `labels` must be a permutation.
    pub fn relabel(&self, labels: &[usize]) -> SimpleGraph {
        assert_eq!(labels.len(), self.order(), "labeling has wrong length");
        SimpleGraph::new(
            self.order(),
            self.edges.iter().map(|&(u, v)| (labels[u], labels[v])),
        )
        .expect("relabeling by a permutation keeps the graph simple")
    }

    /// Vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.order();
        SimpleGraph::new(
            shift + other.order(),
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
        .expect("disjoint union of simple graphs is simple")
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        SimpleGraph::new(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// Adds edges, returning a new graph.
    pub fn with_edges<I>(&self, extra: I) -> Result<SimpleGraph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        SimpleGraph::new(self.order(), self.edges.iter().copied().chain(extra))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn seven_cycle() {
        let g =
            SimpleGraph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)]).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.size(), 7);
        assert!(g.is_regular(2));
        assert!(!g.is_cubic());
        assert!(g.is_connected());
    }

    #[test]
    fn complete_graph_on_four() {
        let edges = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)));
        let g = SimpleGraph::new(4, edges).unwrap();
        assert_eq!(g.degree_sequence(), vec![3, 3, 3, 3]);
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = SimpleGraph::new(2, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn loops_and_range_are_rejected() {
        assert!(matches!(
            SimpleGraph::new(3, [(1, 1)]),
            Err(GraphError::LoopRejected(1))
        ));
        assert!(matches!(
            SimpleGraph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn disjoint_cycles_are_disconnected() {
        let g = cycle(7).disjoint_union(&cycle(7));
        assert!(g.is_regular(2));
        assert!(!g.is_connected());
        assert!(SimpleGraph::empty(0).is_connected());
    }

    #[test]
    fn edge_enumeration_is_sorted_and_stable() {
        let g = SimpleGraph::new(4, [(3, 2), (0, 3), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.edge_between(3, 0), Some(EdgeId(1)));
        assert_eq!(g.clone().edges(), g.edges());
    }

    #[test]
    fn arcs_partition_by_beginning_vertex() {
        let g = cycle(5).with_edges([(0, 2)]).unwrap();
        let mut begins = vec![0; g.order()];
        for arc in g.arcs() {
            begins[g.arc_ends(arc).0] += 1;
            assert_eq!(Arc::from_id(arc.id()), arc);
            let (t, h) = g.arc_ends(arc);
            assert_eq!(g.arc_between(t, h), Some(arc));
        }
        assert_eq!(g.arcs().count(), 2 * g.size());
        let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        assert_eq!(begins, degrees);
    }
}
