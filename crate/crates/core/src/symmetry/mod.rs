//! Automorphism groups, orbits, transitivity, canonical labeling and
//! isomorphism of (optionally colored) simple graphs.

mod group;
mod perm;
mod search;

pub use group::{PermutationGroup, StabilizerChain};
pub use perm::Permutation;
pub use search::{automorphism_search, canonical_search, Certificate, ColoredGraph, SearchOutcome};

use thiserror::Error;

use crate::graph::SimpleGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("image array is not a permutation")]
    NotAPermutation,
    #[error("coloring has {found} entries, expected {expected}")]
    ColoringLength { expected: usize, found: usize },
}

/// Full automorphism group of `g`.
pub fn automorphism_group(g: &SimpleGraph) -> PermutationGroup {
    group_of(&ColoredGraph::plain(g))
}

/// Automorphisms preserving the given vertex colors and edge colors
/// (indexed by vertex id and edge id).
pub fn automorphism_group_colored(
    g: &SimpleGraph,
    vertex_colors: Option<&[usize]>,
    edge_colors: Option<&[usize]>,
) -> Result<PermutationGroup, SymmetryError> {
    Ok(group_of(&ColoredGraph::new(g, vertex_colors, edge_colors)?))
}

pub fn group_of(g: &ColoredGraph) -> PermutationGroup {
    let outcome = automorphism_search(g);
    PermutationGroup::with_order(g.order(), outcome.generators, outcome.order)
}

pub fn is_vertex_transitive(g: &SimpleGraph) -> bool {
    automorphism_group(g).is_transitive()
}

pub fn is_edge_transitive(g: &SimpleGraph) -> bool {
    g.size() > 0 && automorphism_group(g).edge_orbits(g).len() == 1
}

pub fn is_arc_transitive(g: &SimpleGraph) -> bool {
    g.size() > 0 && automorphism_group(g).arc_orbits(g).len() == 1
}

/// Canonical labeling and the edge list of the canonically relabeled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `labeling.apply(v)` is the canonical index of vertex `v`.
    pub labeling: Permutation,
    pub edges: Vec<(usize, usize)>,
}

pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    let (labeling, certificate) = canonical_form_colored(&ColoredGraph::plain(g));
    CanonicalForm {
        labeling,
        edges: certificate.edges.iter().map(|&(u, v, _)| (u, v)).collect(),
    }
}

/// Canonical labeling of a colored graph. If the graph already carries its
/// canonical labeling, the identity is returned.
pub fn canonical_form_colored(g: &ColoredGraph) -> (Permutation, Certificate) {
    let outcome = automorphism_search(g);
    let (labels, certificate) = canonical_search(g, &outcome.generators);
    let identity = Permutation::identity(g.order());
    if g.relabeled_certificate(identity.images()) == certificate {
        return (identity, certificate);
    }
    (Permutation::from_images_unchecked(labels), certificate)
}

/// An explicit isomorphism `g1 -> g2`, verified before it is returned.
pub fn are_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Option<Permutation> {
    are_isomorphic_colored(&ColoredGraph::plain(g1), &ColoredGraph::plain(g2))
}

pub fn are_isomorphic_colored(g1: &ColoredGraph, g2: &ColoredGraph) -> Option<Permutation> {
    if g1.order() != g2.order() {
        return None;
    }
    let (l1, c1) = canonical_form_colored(g1);
    let (l2, c2) = canonical_form_colored(g2);
    if c1 != c2 {
        return None;
    }
    let iso = l1.then(&l2.inverse());
    (g1.relabeled_certificate(iso.images())
        == g2.relabeled_certificate(Permutation::identity(g2.order()).images()))
    .then_some(iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{a_graph, coxeter, cycle_graph, gen_petersen};
    use num_bigint::BigUint;

    #[test]
    fn c7_symmetry() {
        let g = cycle_graph(7);
        let group = automorphism_group(&g);
        assert_eq!(group.order(), &BigUint::from(14u32));
        assert_eq!(group.arc_orbits(&g).len(), 1);
        assert_eq!(group.arc_orbits(&g)[0].len(), 14);
        assert!(is_arc_transitive(&g));
    }

    #[test]
    fn coxeter_order_matches_schreier_sims() {
        let g = coxeter();
        let group = automorphism_group(&g);
        assert_eq!(group.order(), &BigUint::from(336u32));
        assert_eq!(group.stabilizer_chain().order(), BigUint::from(336u32));
        assert_eq!(group.edge_orbits(&g).len(), 1);
        for p in group.generators() {
            assert!(p.is_automorphism_of(&g));
        }
    }

    #[test]
    fn a_family_transitivity() {
        assert!(!is_vertex_transitive(&a_graph(8).unwrap()));
        let g = a_graph(9).unwrap();
        let group = automorphism_group(&g);
        assert!(group.is_transitive());
        let sizes: Vec<usize> = group.edge_orbits(&g).iter().map(Vec::len).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![18, 36]);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant_and_idempotent() {
        let g = gen_petersen(13, 5).unwrap();
        let n = g.order();
        let labels: Vec<usize> = (0..n).map(|v| (7 * v + 3) % n).collect();
        let h = g.relabel(&labels);
        let cg = canonical_form(&g);
        let ch = canonical_form(&h);
        assert_eq!(cg.edges, ch.edges);
        let canon = g.relabel(cg.labeling.images());
        assert!(canonical_form(&canon).labeling.is_identity());
    }

    #[test]
    fn isomorphism_is_explicit() {
        let g = gen_petersen(7, 2).unwrap();
        let h = gen_petersen(7, 3).unwrap();
        let iso = are_isomorphic(&g, &h).unwrap();
        for &(u, v) in g.edges() {
            assert!(h.has_edge(iso.apply(u), iso.apply(v)));
        }
        assert!(
            are_isomorphic(&gen_petersen(13, 5).unwrap(), &gen_petersen(15, 4).unwrap()).is_none()
        );
        assert!(
            are_isomorphic(&gen_petersen(8, 1).unwrap(), &gen_petersen(8, 3).unwrap()).is_none()
        );
    }
}
