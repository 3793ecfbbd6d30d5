use super::{Arc, EdgeId, GraphError, SimpleGraph};

/// Loop-free multigraph; parallel edges keep distinct, dense edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopRejected(u));
            }
        }
        Ok(MultiGraph { n, edges })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn arc_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn arc_ends(&self, arc: Arc) -> (usize, usize) {
        arc.ends(self.edges[arc.edge.0])
    }

    pub fn tail(&self, arc: Arc) -> usize {
        self.arc_ends(arc).0
    }

    /// Arcs beginning at each vertex, in arc-id order.
    pub fn arcs_by_tail(&self) -> Vec<Vec<Arc>> {
        let mut out = vec![Vec::new(); self.n];
        for id in 0..self.arc_count() {
            let arc = Arc::from_id(id);
            out[self.tail(arc)].push(arc);
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().iter().all(|&x| x == d)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut pairs: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).any(|w| w[0] == w[1])
    }

    /// The underlying simple graph, when there are no parallel edges.
    pub fn to_simple(&self) -> Option<SimpleGraph> {
        if self.has_parallel_edges() {
            return None;
        }
        SimpleGraph::new(self.n, self.edges.iter().copied()).ok()
    }
}

impl From<&SimpleGraph> for MultiGraph {
    fn from(g: &SimpleGraph) -> Self {
        MultiGraph {
            n: g.order(),
            edges: g.edges().to_vec(),
        }
    }
}
