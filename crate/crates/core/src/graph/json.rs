use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{GraphError, MultiGraph};
use crate::schemes::DihedralScheme;

/// On-disk form of a multigraph with an optional dihedral scheme.
///
/// `scheme` maps a vertex (as a JSON object key) to the cyclic order of the
/// arc ids beginning there; arc id = 2 * edge index + direction bit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultigraphDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<BTreeMap<usize, Vec<usize>>>,
}

pub fn parse_multigraph_json(
    text: &str,
) -> Result<(MultiGraph, Option<DihedralScheme>), GraphError> {
    let doc: MultigraphDocument =
        serde_json::from_str(text).map_err(|e| GraphError::SchemaViolation(e.to_string()))?;
    let graph = MultiGraph::new(doc.n, doc.edges.iter().map(|&[u, v]| (u, v)).collect())?;
    let Some(map) = doc.scheme else {
        return Ok((graph, None));
    };

    let arcs = graph.arc_count();
    let mut rotations = vec![Vec::new(); graph.order()];
    for (vertex, order) in map {
        if vertex >= graph.order() {
            return Err(GraphError::SchemaViolation(format!(
                "scheme entry for vertex {vertex} outside 0..{}",
                graph.order()
            )));
        }
        if let Some(&arc) = order.iter().find(|&&a| a >= arcs) {
            return Err(GraphError::DanglingArcReference { arc, arcs });
        }
        rotations[vertex] = order;
    }
    let scheme = DihedralScheme::new(&graph, rotations)
        .map_err(|e| GraphError::SchemaViolation(e.to_string()))?;
    Ok((graph, Some(scheme)))
}

pub fn write_multigraph_json(graph: &MultiGraph, scheme: Option<&DihedralScheme>) -> String {
    let doc = MultigraphDocument {
        n: graph.order(),
        edges: graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
        scheme: scheme.map(|s| {
            (0..graph.order())
                .map(|v| (v, s.rotation(v).to_vec()))
                .collect()
        }),
    };
    serde_json::to_string(&doc).expect("multigraph document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k77() -> MultiGraph {
        let edges = (0..7)
            .flat_map(|i| (0..7).map(move |j| (i, 7 + j)))
            .collect();
        MultiGraph::new(14, edges).unwrap()
    }

    #[test]
    fn k77_round_trip() {
        let g = k77();
        let text = write_multigraph_json(&g, None);
        let (back, scheme) = parse_multigraph_json(&text).unwrap();
        assert_eq!(back.size(), 49);
        assert_eq!(back, g);
        assert!(scheme.is_none());
    }

    #[test]
    fn dipole_with_scheme_round_trip() {
        let g = MultiGraph::new(2, vec![(0, 1); 7]).unwrap();
        let rotations = vec![
            (0..7).map(|e| 2 * e).collect(),
            (0..7).rev().map(|e| 2 * e + 1).collect(),
        ];
        let scheme = DihedralScheme::new(&g, rotations).unwrap();
        let text = write_multigraph_json(&g, Some(&scheme));
        let (back, back_scheme) = parse_multigraph_json(&text).unwrap();
        assert_eq!(back.size(), 7);
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back_scheme.unwrap().rotation(1), scheme.rotation(1));
    }

    #[test]
    fn dangling_arc_is_reported() {
        let text =
            r#"{"n": 2, "edges": [[0,1],[0,1],[0,1]], "scheme": {"0": [0,2,4], "1": [1,3,7]}}"#;
        assert!(matches!(
            parse_multigraph_json(text),
            Err(GraphError::DanglingArcReference { arc: 7, arcs: 6 })
        ));
    }

    #[test]
    fn schema_violations() {
        for text in [
            r#"{"n": 2}"#,
            r#"{"n": 2, "edges": [[0,1,2]]}"#,
            r#"{"n": 2, "edges": [[0,1]], "extra": 1}"#,
            r#"{"n": 2, "edges": [[0,1],[0,1],[0,1]], "scheme": {"0": [0,2,4], "1": [1,3]}}"#,
        ] {
            assert!(matches!(
                parse_multigraph_json(text),
                Err(GraphError::SchemaViolation(_))
            ));
        }
    }
}
