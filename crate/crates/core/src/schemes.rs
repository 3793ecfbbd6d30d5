//! Dihedral schemes on multigraphs, truncation, and recovery of the base
//! graph from a cubic graph of signature (0,1,1).

use thiserror::Error;

use crate::cycles::{common_signature, girth_cycles, CycleError, Signature};
use crate::families::complete_bipartite;
use crate::graph::{Arc, MultiGraph, SimpleGraph};
use crate::symmetry::{are_isomorphic_colored, group_of, ColoredGraph, Permutation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchemeError {
    #[error("invalid scheme: {0}")]
    InvalidScheme(String),
    #[error("vertex {vertex} has degree {degree}; truncation needs degree at least 3")]
    DegenerateDegree { vertex: usize, degree: usize },
    #[error("expected signature (0,1,1), found {0}")]
    WrongSignature(Signature),
    #[error("girth cycles do not decompose the graph: {0}")]
    CoverageFailure(String),
    #[error("graph is not cubic")]
    NotCubic,
    #[error(transparent)]
    Cycles(#[from] CycleError),
}

/// For every vertex, a cyclic order of the arc ids beginning there.
/// Two schemes are equal when each cyclic order agrees up to rotation and
/// reflection.
#[derive(Clone, Debug)]
pub struct DihedralScheme {
    rotations: Vec<Vec<usize>>,
}

impl DihedralScheme {
    pub fn new(base: &MultiGraph, rotations: Vec<Vec<usize>>) -> Result<Self, SchemeError> {
        if rotations.len() != base.order() {
            return Err(SchemeError::InvalidScheme(format!(
                "{} rotations for {} vertices",
                rotations.len(),
                base.order()
            )));
        }
        let mut seen = vec![false; base.arc_count()];
        for (v, rotation) in rotations.iter().enumerate() {
            for &id in rotation {
                if id >= base.arc_count() {
                    return Err(SchemeError::InvalidScheme(format!(
                        "arc {id} does not exist"
                    )));
                }
                if std::mem::replace(&mut seen[id], true) {
                    return Err(SchemeError::InvalidScheme(format!("arc {id} listed twice")));
                }
                if base.tail(Arc::from_id(id)) != v {
                    return Err(SchemeError::InvalidScheme(format!(
                        "arc {id} does not begin at vertex {v}"
                    )));
                }
            }
        }
        if let Some(id) = seen.iter().position(|&s| !s) {
            return Err(SchemeError::InvalidScheme(format!("arc {id} is missing")));
        }
        Ok(DihedralScheme { rotations })
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }
}

impl PartialEq for DihedralScheme {
    fn eq(&self, other: &Self) -> bool {
        self.rotations.len() == other.rotations.len()
            && self
                .rotations
                .iter()
                .zip(&other.rotations)
                .all(|(a, b)| same_dihedral_order(a, b))
    }
}

impl Eq for DihedralScheme {}

/// Equality of cyclic sequences up to rotation and reflection.
pub fn same_dihedral_order(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let Some(shift) = b.iter().position(|&x| x == a[0]) else {
        return false;
    };
    let n = a.len();
    let forward = (0..n).all(|i| a[i] == b[(shift + i) % n]);
    let backward = (0..n).all(|i| a[i] == b[(shift + n - i) % n]);
    forward || backward
}

/// A base multigraph with scheme whose truncation is identified with a
/// cubic graph: `arc_vertex[arc id]` is the corresponding vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationWitness {
    pub base: MultiGraph,
    pub scheme: DihedralScheme,
    pub arc_vertex: Vec<usize>,
}

impl TruncationWitness {
    /// Checks that `arc_vertex` is an isomorphism from the truncation onto `g`.
    pub fn verify(&self, g: &SimpleGraph) -> Result<bool, SchemeError> {
        let (t, _) = truncate(&self.base, &self.scheme)?;
        if t.order() != g.order() || t.size() != g.size() {
            return Ok(false);
        }
        let Ok(p) = Permutation::from_images(self.arc_vertex.clone()) else {
            return Ok(false);
        };
        Ok(t.edges()
            .iter()
            .all(|&(u, v)| g.has_edge(p.apply(u), p.apply(v))))
    }
}

/// Colors of the truncation's edges: 0 for scheme edges, 1 for edges
/// joining the two arcs of one base edge.
pub fn truncation_edge_colors(t: &SimpleGraph) -> Vec<usize> {
    t.edges()
        .iter()
        .map(|&(u, v)| usize::from(u / 2 == v / 2 && u ^ 1 == v))
        .collect()
}

/// Truncation of `base`: vertices are arc ids; scheme-consecutive arcs and
/// the two arcs of each edge are adjacent.
pub fn truncate(
    base: &MultiGraph,
    scheme: &DihedralScheme,
) -> Result<(SimpleGraph, TruncationWitness), SchemeError> {
    let scheme = DihedralScheme::new(base, scheme.rotations.clone())?;
    for (vertex, degree) in base.degrees().into_iter().enumerate() {
        if degree < 3 {
            return Err(SchemeError::DegenerateDegree { vertex, degree });
        }
    }
    let mut edges = Vec::with_capacity(2 * base.arc_count());
    for rotation in &scheme.rotations {
        let d = rotation.len();
        for j in 0..d {
            edges.push((rotation[j], rotation[(j + 1) % d]));
        }
    }
    for e in 0..base.size() {
        edges.push((2 * e, 2 * e + 1));
    }
    let g = SimpleGraph::new(base.arc_count(), edges).expect("truncation edges are valid");
    let witness = TruncationWitness {
        base: base.clone(),
        scheme,
        arc_vertex: (0..base.arc_count()).collect(),
    };
    Ok((g, witness))
}

/// Contracts the girth cycles of a cubic graph of signature (0,1,1) to
/// recover the base graph and scheme it truncates.
pub fn recover_truncation(g: &SimpleGraph) -> Result<TruncationWitness, SchemeError> {
    if !g.is_cubic() {
        return Err(SchemeError::NotCubic);
    }
    let cycles = girth_cycles(g)?;
    let expected = Signature::new(0, 1, 1);
    match common_signature(g, &cycles) {
        Ok(s) if s == expected => {}
        Ok(s) => return Err(SchemeError::WrongSignature(s)),
        Err(CycleError::NotGirthRegular {
            first_signature,
            second_signature,
            ..
        }) => {
            let off = if first_signature == expected {
                second_signature
            } else {
                first_signature
            };
            return Err(SchemeError::WrongSignature(off));
        }
        Err(e) => return Err(e.into()),
    }

    let mut block = vec![usize::MAX; g.order()];
    for (c, cycle) in cycles.cycles().iter().enumerate() {
        for &v in cycle.vertices() {
            if block[v] != usize::MAX {
                return Err(SchemeError::CoverageFailure(format!(
                    "vertex {v} lies on two girth cycles"
                )));
            }
            block[v] = c;
        }
    }
    if let Some(v) = block.iter().position(|&b| b == usize::MAX) {
        return Err(SchemeError::CoverageFailure(format!(
            "vertex {v} lies on no girth cycle"
        )));
    }

    let eps = cycles.epsilon_all();
    let mut base_edges = Vec::new();
    let mut arc_vertex = Vec::new();
    let mut arc_at = vec![usize::MAX; g.order()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if eps[e] != 0 {
            continue;
        }
        if block[u] == block[v] {
            return Err(SchemeError::CoverageFailure(format!(
                "edge {u}-{v} would contract to a loop"
            )));
        }
        let id = base_edges.len();
        base_edges.push((block[u], block[v]));
        arc_at[u] = 2 * id;
        arc_at[v] = 2 * id + 1;
        arc_vertex.push(u);
        arc_vertex.push(v);
    }
    let base = MultiGraph::new(cycles.len(), base_edges)
        .map_err(|e| SchemeError::CoverageFailure(e.to_string()))?;
    let rotations = cycles
        .cycles()
        .iter()
        .map(|c| c.vertices().iter().map(|&v| arc_at[v]).collect())
        .collect();
    let scheme = DihedralScheme::new(&base, rotations)?;
    Ok(TruncationWitness {
        base,
        scheme,
        arc_vertex,
    })
}

fn colored_truncation(
    base: &MultiGraph,
    scheme: &DihedralScheme,
) -> Result<ColoredGraph, SchemeError> {
    let (t, _) = truncate(base, scheme)?;
    let colors = truncation_edge_colors(&t);
    Ok(ColoredGraph::new(&t, None, Some(&colors)).expect("one color per edge"))
}

/// Whether the automorphisms of `base` preserving the scheme act
/// transitively on arcs.
pub fn is_arc_transitive_scheme(
    base: &MultiGraph,
    scheme: &DihedralScheme,
) -> Result<bool, SchemeError> {
    Ok(group_of(&colored_truncation(base, scheme)?).is_transitive())
}

/// An isomorphism between two based schemes, as a bijection of arc ids.
pub fn schemes_isomorphic(
    base1: &MultiGraph,
    scheme1: &DihedralScheme,
    base2: &MultiGraph,
    scheme2: &DihedralScheme,
) -> Result<Option<Permutation>, SchemeError> {
    Ok(are_isomorphic_colored(
        &colored_truncation(base1, scheme1)?,
        &colored_truncation(base2, scheme2)?,
    ))
}

/// K_{7,7} with the scheme ordering arcs at `i` by `(j - i) mod 7` and at
/// right vertex `j` by `(i - j) mod 7`.
pub fn k77_cyclic_scheme() -> (MultiGraph, DihedralScheme) {
    let base = MultiGraph::from(&complete_bipartite(7, 7));
    let arc = |i: usize, j: usize, from_right: bool| 2 * (7 * i + j) + usize::from(from_right);
    let mut rotations = Vec::with_capacity(14);
    for i in 0..7 {
        rotations.push((0..7).map(|k| arc(i, (i + k) % 7, false)).collect());
    }
    for j in 0..7 {
        rotations.push((0..7).map(|k| arc((j + k) % 7, j, true)).collect());
    }
    let scheme = DihedralScheme::new(&base, rotations).expect("cyclic scheme is valid");
    (base, scheme)
}

/// The base graph of a truncation as a simple graph, when it has no parallel edges.
pub fn simple_base(w: &TruncationWitness) -> Option<SimpleGraph> {
    w.base.to_simple()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{girth, girth_regular_signature};
    use crate::families::{complete_graph, coxeter, cycle_graph};
    use crate::symmetry::{are_isomorphic, is_vertex_transitive};

    fn k4_scheme() -> (MultiGraph, DihedralScheme) {
        let base = MultiGraph::from(&complete_graph(4));
        let rotations = base
            .arcs_by_tail()
            .into_iter()
            .map(|arcs| arcs.iter().map(|a| a.id()).collect())
            .collect();
        let scheme = DihedralScheme::new(&base, rotations).unwrap();
        (base, scheme)
    }

    #[test]
    fn truncated_tetrahedron() {
        let (base, scheme) = k4_scheme();
        let (t, witness) = truncate(&base, &scheme).unwrap();
        assert_eq!(t.order(), 12);
        assert!(t.is_cubic());
        assert_eq!(girth(&t), Some(3));
        assert!(witness.verify(&t).unwrap());
        assert!(is_vertex_transitive(&t));
        assert!(is_arc_transitive_scheme(&base, &scheme).unwrap());

        let recovered = recover_truncation(&t).unwrap();
        assert!(recovered.verify(&t).unwrap());
        let k4 = recovered.base.to_simple().unwrap();
        assert!(are_isomorphic(&k4, &complete_graph(4)).is_some());
    }

    #[test]
    fn degenerate_degree() {
        let base = MultiGraph::from(&cycle_graph(5));
        let rotations = base
            .arcs_by_tail()
            .into_iter()
            .map(|arcs| arcs.iter().map(|a| a.id()).collect())
            .collect();
        let scheme = DihedralScheme::new(&base, rotations).unwrap();
        assert_eq!(
            truncate(&base, &scheme).unwrap_err(),
            SchemeError::DegenerateDegree {
                vertex: 0,
                degree: 2
            }
        );
    }

    #[test]
    fn dihedral_equality() {
        assert!(same_dihedral_order(&[1, 2, 3, 4], &[3, 4, 1, 2]));
        assert!(same_dihedral_order(&[1, 2, 3, 4], &[2, 1, 4, 3]));
        assert!(!same_dihedral_order(&[1, 2, 3, 4], &[1, 3, 2, 4]));
    }

    #[test]
    fn invalid_schemes() {
        let base = MultiGraph::from(&complete_graph(4));
        assert!(DihedralScheme::new(&base, vec![vec![]; 3]).is_err());
        let mut rotations: Vec<Vec<usize>> = base
            .arcs_by_tail()
            .into_iter()
            .map(|arcs| arcs.iter().map(|a| a.id()).collect())
            .collect();
        rotations.swap(0, 1);
        assert!(matches!(
            DihedralScheme::new(&base, rotations),
            Err(SchemeError::InvalidScheme(_))
        ));
    }

    #[test]
    fn k77_truncation_shape() {
        let (base, scheme) = k77_cyclic_scheme();
        let (t, _) = truncate(&base, &scheme).unwrap();
        assert_eq!(t.order(), 98);
        assert!(t.is_cubic() && t.is_connected());
        assert_eq!(girth(&t), Some(7));
        assert_eq!(
            girth_regular_signature(&t).unwrap(),
            Signature::new(0, 1, 1)
        );
    }

    #[test]
    fn coxeter_is_not_a_truncation() {
        assert_eq!(
            recover_truncation(&coxeter()).unwrap_err(),
            SchemeError::WrongSignature(Signature::new(4, 4, 4))
        );
    }
}
