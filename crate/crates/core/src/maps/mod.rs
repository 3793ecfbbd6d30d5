//! Trivalent maps given as a cubic skeleton plus a set of face cycles
//! covering every edge twice.

mod klein;

pub use klein::{klein_map, psl27, KleinGenerators};

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::{girth_cycles, Cycle, CycleError};
use crate::graph::{parse_graph6, write_graph6, EdgeId, GraphError, SimpleGraph};
use crate::symmetry::{group_of, ColoredGraph, Permutation, PermutationGroup};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("skeleton is not cubic")]
    NotCubic,
    #[error("face {0} is not a cycle of the skeleton")]
    InvalidFace(usize),
    #[error("edge {edge} lies on {count} faces, expected 2")]
    NotTwoPerEdge { edge: EdgeId, count: usize },
    #[error("generator search failed: {0}")]
    SearchFailed(String),
    #[error("malformed map document: {0}")]
    Malformed(String),
    #[error(transparent)]
    Cycles(#[from] CycleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Incident (vertex, edge, face) triple; `face` indexes [`TrivalentMap::faces`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Flag {
    pub vertex: usize,
    pub edge: EdgeId,
    pub face: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MapType {
    /// All faces have length `k`: type {k,3}.
    Uniform(usize),
    Mixed,
}

impl fmt::Display for MapType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapType::Uniform(k) => write!(f, "{{{k},3}}"),
            MapType::Mixed => write!(f, "mixed"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivalentMap {
    skeleton: SimpleGraph,
    faces: Vec<Cycle>,
    face_edges: Vec<Vec<EdgeId>>,
}

impl TrivalentMap {
    pub fn new(skeleton: SimpleGraph, mut faces: Vec<Cycle>) -> Result<Self, MapError> {
        if !skeleton.is_cubic() {
            return Err(MapError::NotCubic);
        }
        faces.sort();
        let mut face_edges = Vec::with_capacity(faces.len());
        let mut count = vec![0; skeleton.size()];
        for (i, f) in faces.iter().enumerate() {
            let edges = f.edges_in(&skeleton).ok_or(MapError::InvalidFace(i))?;
            for e in &edges {
                count[e.0] += 1;
            }
            face_edges.push(edges);
        }
        if let Some(e) = count.iter().position(|&c| c != 2) {
            return Err(MapError::NotTwoPerEdge {
                edge: EdgeId(e),
                count: count[e],
            });
        }
        Ok(TrivalentMap {
            skeleton,
            faces,
            face_edges,
        })
    }

    pub fn skeleton(&self) -> &SimpleGraph {
        &self.skeleton
    }

    pub fn faces(&self) -> &[Cycle] {
        &self.faces
    }

    pub fn face_edges(&self, face: usize) -> &[EdgeId] {
        &self.face_edges[face]
    }

    pub fn vertex_count(&self) -> usize {
        self.skeleton.order()
    }

    pub fn edge_count(&self) -> usize {
        self.skeleton.size()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn to_json(&self) -> String {
        let doc = MapDocument {
            graph6: write_graph6(&self.skeleton),
            faces: self.faces.iter().map(|f| f.vertices().to_vec()).collect(),
        };
        serde_json::to_string(&doc).expect("map document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, MapError> {
        let doc: MapDocument =
            serde_json::from_str(text).map_err(|e| MapError::Malformed(e.to_string()))?;
        let skeleton = parse_graph6(&doc.graph6)?;
        let mut faces = Vec::with_capacity(doc.faces.len());
        for (i, f) in doc.faces.into_iter().enumerate() {
            if f.len() < 3 {
                return Err(MapError::InvalidFace(i));
            }
            faces.push(Cycle::new(f));
        }
        TrivalentMap::new(skeleton, faces)
    }
}

/// On-disk form of a map: skeleton as graph6 plus face vertex cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub graph6: String,
    pub faces: Vec<Vec<usize>>,
}

/// The map whose faces are the girth cycles of `g`.
pub fn map_from_girth_cycles(g: &SimpleGraph) -> Result<TrivalentMap, MapError> {
    if !g.is_cubic() {
        return Err(MapError::NotCubic);
    }
    let cycles = girth_cycles(g)?;
    for e in g.edge_ids() {
        let count = cycles.through_edge(e).len();
        if count != 2 {
            return Err(MapError::NotTwoPerEdge { edge: e, count });
        }
    }
    TrivalentMap::new(g.clone(), cycles.cycles().to_vec())
}

pub fn flags(m: &TrivalentMap) -> Vec<Flag> {
    let mut out = Vec::with_capacity(4 * m.edge_count());
    for (face, edges) in m.face_edges.iter().enumerate() {
        for &edge in edges {
            let (u, v) = m.skeleton.endpoints(edge);
            out.push(Flag {
                vertex: u,
                edge,
                face,
            });
            out.push(Flag {
                vertex: v,
                edge,
                face,
            });
        }
    }
    out.sort();
    out
}

pub fn euler_characteristic(m: &TrivalentMap) -> i64 {
    m.vertex_count() as i64 - m.edge_count() as i64 + m.face_count() as i64
}

/// `n (3/g - 1/2)`: the Euler characteristic of a {g,3} map on `n` vertices.
pub fn euler_formula(n: usize, g: usize) -> Ratio<i64> {
    Ratio::from_integer(n as i64) * (Ratio::new(3, g as i64) - Ratio::new(1, 2))
}

pub fn map_type(m: &TrivalentMap) -> MapType {
    let k = m.faces.first().map_or(0, Cycle::len);
    if m.faces.iter().all(|f| f.len() == k) {
        MapType::Uniform(k)
    } else {
        MapType::Mixed
    }
}

/// Vertex–face incidence structure: skeleton vertices `0..n` (color 0),
/// face nodes `n..n+F` (color 1); skeleton edges color 0, incidences color 1.
fn incidence_graph(m: &TrivalentMap, marked: Option<usize>) -> ColoredGraph {
    let n = m.vertex_count();
    let mut edges: Vec<(usize, usize)> = m.skeleton.edges().to_vec();
    let mut edge_colors = vec![0; edges.len()];
    for (f, face) in m.faces.iter().enumerate() {
        for &v in face.vertices() {
            edges.push((v, n + f));
            edge_colors.push(1);
        }
    }
    let total = n + m.face_count();
    let g = SimpleGraph::new(total, edges.iter().copied()).expect("incidence edges are valid");
    // SimpleGraph sorts its edges; recover colors by endpoint
    let colors: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(_, v)| usize::from(v >= n))
        .collect();
    let mut vertex_colors: Vec<usize> = (0..total).map(|v| usize::from(v >= n)).collect();
    if let Some(x) = marked {
        vertex_colors[x] = 2;
    }
    ColoredGraph::new(&g, Some(&vertex_colors), Some(&colors)).expect("colorings match")
}

/// Map automorphisms acting on vertices and faces: points `0..n` are
/// skeleton vertices, `n + f` is face `f`.
pub fn map_automorphisms_with_faces(m: &TrivalentMap) -> PermutationGroup {
    group_of(&incidence_graph(m, None))
}

/// Skeleton automorphisms that preserve the face set.
pub fn map_automorphisms(m: &TrivalentMap) -> PermutationGroup {
    let n = m.vertex_count();
    let full = map_automorphisms_with_faces(m);
    let restricted = full
        .generators()
        .iter()
        .map(|p| {
            Permutation::from_images(p.images()[..n].to_vec()).expect("vertices map to vertices")
        })
        .collect();
    PermutationGroup::new(n, restricted)
}

/// Orbits of the map automorphism group on flags.
pub fn flag_orbits(m: &TrivalentMap) -> Vec<Vec<Flag>> {
    let n = m.vertex_count();
    let group = map_automorphisms_with_faces(m);
    group.orbits_on(&flags(m), |p, flag| {
        let (u, v) = m.skeleton.endpoints(flag.edge);
        Flag {
            vertex: p.apply(flag.vertex),
            edge: m
                .skeleton
                .edge_between(p.apply(u), p.apply(v))
                .expect("automorphism preserves edges"),
            face: p.apply(n + flag.face) - n,
        }
    })
}

pub fn is_regular_map(m: &TrivalentMap) -> bool {
    flag_orbits(m).len() == 1
}

/// Each vertex admits an automorphism fixing it and cycling its three
/// neighbors, and each face one rotating its boundary one step.
pub fn is_rotary(m: &TrivalentMap) -> bool {
    let n = m.vertex_count();
    let group = map_automorphisms_with_faces(m);
    let orbits = group.vertex_orbits();
    for orbit in &orbits {
        let rep = orbit[0];
        let stabilizer = group_of(&incidence_graph(m, Some(rep)));
        let ok = if rep < n {
            rotates_vertex(m, rep, stabilizer.generators())
        } else {
            rotates_face(m, rep - n, stabilizer.generators())
        };
        if !ok {
            return false;
        }
    }
    true
}

fn rotates_vertex(m: &TrivalentMap, v: usize, generators: &[Permutation]) -> bool {
    let nbrs = m.skeleton.neighbors(v);
    let local: Vec<Permutation> = generators
        .iter()
        .map(|p| {
            let images = nbrs
                .iter()
                .map(|&w| {
                    nbrs.iter()
                        .position(|&x| x == p.apply(w))
                        .expect("neighbors map to neighbors")
                })
                .collect();
            Permutation::from_images(images).expect("bijection on neighbors")
        })
        .collect();
    PermutationGroup::new(nbrs.len(), local).order() % 3u32 == 0u32.into()
}

fn rotates_face(m: &TrivalentMap, f: usize, generators: &[Permutation]) -> bool {
    let face = m.faces[f].vertices();
    let k = face.len();
    let local: Vec<Permutation> = generators
        .iter()
        .map(|p| {
            let images = face
                .iter()
                .map(|&w| {
                    face.iter()
                        .position(|&x| x == p.apply(w))
                        .expect("face maps to itself")
                })
                .collect();
            Permutation::from_images(images).expect("bijection on the face")
        })
        .collect();
    // the stabilizer acts on the boundary as a subgroup of the dihedral group
    let step = Permutation::from_images((0..k).map(|i| (i + 1) % k).collect()).expect("rotation");
    let mut elements = vec![Permutation::identity(k)];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in &local {
            let y = x.then(g);
            if !elements.contains(&y) {
                elements.push(y);
            }
        }
    }
    elements.contains(&step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{coxeter, dodecahedron};

    #[test]
    fn dodecahedron_map() {
        let m = map_from_girth_cycles(&dodecahedron()).unwrap();
        assert_eq!(map_type(&m), MapType::Uniform(5));
        assert_eq!(m.face_count(), 12);
        assert_eq!(flags(&m).len(), 120);
        assert_eq!(euler_characteristic(&m), 2);
        assert_eq!(euler_formula(20, 5), Ratio::from_integer(2));
        assert!(is_regular_map(&m));
        assert!(is_rotary(&m));
        assert_eq!(map_automorphisms(&m).order(), &120u32.into());
    }

    #[test]
    fn coxeter_has_four_cycles_per_edge() {
        assert!(matches!(
            map_from_girth_cycles(&coxeter()),
            Err(MapError::NotTwoPerEdge { count: 4, .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let m = map_from_girth_cycles(&dodecahedron()).unwrap();
        let back = TrivalentMap::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn prism_map_is_not_rotary() {
        // the triangular prism with its two triangles and three squares
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
        let faces = vec![
            Cycle::new(vec![0, 1, 2]),
            Cycle::new(vec![3, 4, 5]),
            Cycle::new(vec![0, 1, 4, 3]),
            Cycle::new(vec![1, 2, 5, 4]),
            Cycle::new(vec![2, 0, 3, 5]),
        ];
        let m = TrivalentMap::new(g, faces).unwrap();
        assert_eq!(map_type(&m), MapType::Mixed);
        assert_eq!(euler_characteristic(&m), 2);
        assert!(!is_rotary(&m));
        assert!(!is_regular_map(&m));
    }
}
