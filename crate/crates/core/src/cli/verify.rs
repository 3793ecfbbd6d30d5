//! Bundled verification suites for the `verify` subcommand.

use clap::ValueEnum;
use serde::Serialize;

use crate::classify::{
    candidate_signatures, classify, condition_satisfiable,
    edge_girth_regular_implies_arc_transitive, realizable_signatures, ArcTransitivityOutcome,
    CaseTag, Witness, PETERSEN_CASES,
};
use crate::cycles::{girth, girth_cycles, girth_regular_signature, CutSearch, Signature};
use crate::families::{
    a_graph, a_shift, a_tau, cayley_446, coxeter, dodecahedron, gen_petersen, group_446, Element446,
};
use crate::graph::SimpleGraph;
use crate::maps::{
    euler_characteristic, euler_formula, is_regular_map, is_rotary, klein_map,
    map_from_girth_cycles,
};
use crate::symmetry::{are_isomorphic, automorphism_group, is_arc_transitive, PermutationGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    #[value(name = "a-family", alias = "lemma41")]
    AFamily,
    #[value(alias = "theorem44")]
    Cayley,
    #[value(alias = "prop52")]
    Coxeter,
    #[value(alias = "lemma55")]
    Petersen,
    #[value(alias = "theorem32")]
    Maps,
    Condition,
    Cuts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: String::new(),
        }
    }

    fn detailed(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub n: Option<usize>,
    pub i: Option<usize>,
    pub k: Option<usize>,
    pub graph: Option<(String, SimpleGraph)>,
    pub budget: Option<u64>,
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Vec<Check> {
    match suite {
        Suite::AFamily => a_family(opts),
        Suite::Cayley => cayley_family(opts),
        Suite::Coxeter => coxeter_checks(),
        Suite::Petersen => petersen_checks(),
        Suite::Maps => map_checks(),
        Suite::Condition => condition_checks(),
        Suite::Cuts => cut_checks(opts),
    }
}

fn a_family(opts: &SuiteOptions) -> Vec<Check> {
    let range: Vec<usize> = match opts.n {
        Some(n) => vec![n],
        None => (8..=24).collect(),
    };
    let mut out = Vec::new();
    for n in range {
        let g = match a_graph(n) {
            Ok(g) => g,
            Err(e) => {
                out.push(Check::detailed(
                    format!("A({n}) constructs"),
                    false,
                    e.to_string(),
                ));
                continue;
            }
        };
        out.push(Check::new(
            format!("A({n}) has girth 7"),
            girth(&g) == Some(7),
        ));
        let sig = girth_regular_signature(&g);
        out.push(Check::detailed(
            format!("A({n}) has signature (4,4,6)"),
            sig.as_ref().ok() == Some(&Signature::new(4, 4, 6)),
            match &sig {
                Ok(s) => s.to_string(),
                Err(e) => e.to_string(),
            },
        ));
        let group = automorphism_group(&g);
        out.push(Check::detailed(
            format!("A({n}) vertex-transitive iff 3 | n"),
            group.is_transitive() == (n % 3 == 0),
            format!("|Aut| = {}", group.order()),
        ));
        let shift = a_shift(n).expect("n >= 8");
        out.push(Check::new(
            format!("A({n}) shift is an automorphism"),
            shift.is_automorphism_of(&g),
        ));
        match a_tau(n) {
            Ok(tau) => {
                out.push(Check::new(
                    format!("A({n}) tau is an automorphism"),
                    tau.is_automorphism_of(&g),
                ));
                let sub = PermutationGroup::new(g.order(), vec![shift, tau]);
                out.push(Check::new(
                    format!("A({n}) <shift, tau> is transitive"),
                    sub.is_transitive(),
                ));
            }
            Err(_) => out.push(Check::new(
                format!("A({n}) tau undefined for 3 ∤ n"),
                n % 3 != 0,
            )),
        }
    }
    out
}

/// The radius-3 ball around the identity of the (4,4,6) Cayley graph:
/// root 0, its neighbors 1..=3, second layer 4..=9, third layer 10..=21,
/// and the seven edges inside the third layer.
pub fn reference_ball_446() -> SimpleGraph {
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    for (parent, first) in [(1, 4), (2, 6), (3, 8)] {
        edges.push((parent, first));
        edges.push((parent, first + 1));
    }
    for (k, parent) in (4..=9).enumerate() {
        edges.push((parent, 10 + 2 * k));
        edges.push((parent, 11 + 2 * k));
    }
    edges.extend([
        (11, 15),
        (12, 14),
        (13, 16),
        (20, 16),
        (19, 17),
        (18, 15),
        (13, 18),
    ]);
    SimpleGraph::new(22, edges).expect("reference ball edges are valid")
}

fn ball(g: &SimpleGraph, v: usize, radius: usize) -> SimpleGraph {
    let dist = g.distances_from(v);
    let inside: Vec<usize> = (0..g.order())
        .filter(|&w| dist[w].is_some_and(|d| d <= radius))
        .collect();
    g.induced_subgraph(&inside)
}

fn cayley_family(opts: &SuiteOptions) -> Vec<Check> {
    let range: Vec<usize> = match opts.i {
        Some(i) => vec![i],
        None => vec![3, 4, 5],
    };
    let mut out = Vec::new();
    for i in range {
        let g = match cayley_446(i) {
            Ok(g) => g,
            Err(e) => {
                out.push(Check::detailed(
                    format!("Cayley graph for i = {i} constructs"),
                    false,
                    e.to_string(),
                ));
                continue;
            }
        };
        let a = a_graph(3 * i).expect("3i >= 9");
        let iso = are_isomorphic(&g, &a);
        let verified = iso.as_ref().is_some_and(|p| {
            g.edges()
                .iter()
                .all(|&(u, v)| a.has_edge(p.apply(u), p.apply(v)))
        });
        out.push(Check::new(
            format!("Cay(i = {i}) is isomorphic to A({})", 3 * i),
            verified,
        ));

        let root = Element446::new(0, 0, 0, i).index();
        let b = ball(&g, root, 3);
        out.push(Check::detailed(
            format!("Cay(i = {i}) radius-3 ball matches the reference drawing"),
            b.order() == 22
                && b.size() == 28
                && are_isomorphic(&b, &reference_ball_446()).is_some(),
            format!("{} vertices, {} edges", b.order(), b.size()),
        ));
        let cycles = girth_cycles(&g).expect("graph has cycles");
        let through_root = cycles.through_vertex(root).len();
        out.push(Check::detailed(
            format!("Cay(i = {i}) has 7 girth cycles through the identity"),
            cycles.girth() == 7 && through_root == 7,
            format!("girth {}, {through_root} cycles", cycles.girth()),
        ));
        let involution = Element446::new(1, 1, 0, i).index();
        let eps_ok = g.incident_edges(root).iter().all(|&e| {
            let other = g.opposite(e, root);
            let expected = if other == involution { 6 } else { 4 };
            cycles.through_edge(e).len() == expected
        });
        out.push(Check::new(
            format!("Cay(i = {i}) involution edge on 6 girth cycles, others on 4"),
            eps_ok,
        ));
        let (group, _) = group_446(i).expect("i >= 3");
        let (x, y) = (involution, Element446::new(0, 0, 1, i).index());
        let yi = group.inverse(y);
        out.push(Check::new(
            format!("group for i = {i} satisfies a^2, b^(3i), b a b^-1 a b^-1 a b"),
            group.pow(x, 2) == group.identity()
                && group.element_order(y) == 3 * i
                && group.product(&[y, x, yi, x, yi, x, y]) == group.identity(),
        ));
    }
    out
}

fn coxeter_checks() -> Vec<Check> {
    let g = coxeter();
    let group = automorphism_group(&g);
    let chain_order = group.stabilizer_chain().order();
    let report = classify(&g);
    vec![
        Check::new("Coxeter graph has girth 7", girth(&g) == Some(7)),
        Check::new(
            "Coxeter graph has signature (4,4,4)",
            girth_regular_signature(&g).ok() == Some(Signature::new(4, 4, 4)),
        ),
        Check::new(
            "Coxeter graph has 24 girth cycles",
            girth_cycles(&g).map(|c| c.len()).ok() == Some(24),
        ),
        Check::new("Coxeter graph is arc-transitive", is_arc_transitive(&g)),
        Check::detailed(
            "Coxeter automorphism group order is 336 by search and by Schreier-Sims",
            group.order() == &chain_order && chain_order == 336u32.into(),
            format!("search {}, chain {}", group.order(), chain_order),
        ),
        Check::new(
            "Coxeter graph classifies as case 3",
            report.as_ref().is_ok_and(|r| r.case == CaseTag::Coxeter),
        ),
        Check::new(
            "Coxeter graph: constant signature implies arc-transitive",
            edge_girth_regular_implies_arc_transitive(&g) == Ok(ArcTransitivityOutcome::Holds),
        ),
    ]
}

fn petersen_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for (n, k) in PETERSEN_CASES {
        let g = gen_petersen(n, k).expect("valid parameters");
        out.push(Check::new(
            format!("Pet({n},{k}) has girth 7 and signature (4,5,5)"),
            girth(&g) == Some(7)
                && girth_regular_signature(&g).ok() == Some(Signature::new(4, 5, 5)),
        ));
        out.push(Check::new(
            format!("Pet({n},{k}) is vertex-transitive"),
            automorphism_group(&g).is_transitive(),
        ));
        let ok = classify(&g).is_ok_and(|r| {
            r.case == CaseTag::Petersen
                && matches!(r.witness, Witness::Petersen { n: wn, k: wk, .. } if (wn, wk) == (n, k))
        });
        out.push(Check::new(format!("Pet({n},{k}) classifies as case 5"), ok));
    }
    for n in (9..=20).filter(|n| *n != 15 && *n != 17) {
        let g = gen_petersen(n, 4).expect("valid parameters");
        let outcome = classify(&g);
        let detail = match &outcome {
            Ok(r) => format!("case {}", r.case),
            Err(e) => e.to_string(),
        };
        out.push(Check::detailed(
            format!("Pet({n},4) does not classify as case 5"),
            !outcome.is_ok_and(|r| r.case == CaseTag::Petersen),
            detail,
        ));
    }
    out
}

fn map_checks() -> Vec<Check> {
    let mut out = Vec::new();
    match map_from_girth_cycles(&dodecahedron()) {
        Ok(m) => {
            out.push(Check::new(
                "dodecahedron girth-cycle map is regular",
                is_regular_map(&m),
            ));
            out.push(Check::new(
                "dodecahedron map has Euler characteristic 2 = 20(3/5 - 1/2)",
                euler_characteristic(&m) == 2 && euler_formula(20, 5) == 2.into(),
            ));
        }
        Err(e) => out.push(Check::detailed(
            "dodecahedron girth-cycle map",
            false,
            e.to_string(),
        )),
    }
    match klein_map() {
        Ok(m) => {
            out.push(Check::new(
                "{7,3} coset map has 56 vertices, 84 edges, 24 faces",
                (m.vertex_count(), m.edge_count(), m.face_count()) == (56, 84, 24),
            ));
            out.push(Check::new(
                "{7,3} coset map has Euler characteristic -4 = 56(3/7 - 1/2)",
                euler_characteristic(&m) == -4 && euler_formula(56, 7) == (-4).into(),
            ));
            out.push(Check::new("{7,3} coset map is rotary", is_rotary(&m)));
            let sk = m.skeleton();
            out.push(Check::new(
                "{7,3} skeleton has girth 7 and signature (2,2,2)",
                girth(sk) == Some(7)
                    && girth_regular_signature(sk).ok() == Some(Signature::new(2, 2, 2)),
            ));
            out.push(Check::new(
                "{7,3} skeleton classifies as case 2",
                classify(sk).is_ok_and(|r| r.case == CaseTag::RotaryMap),
            ));
            out.push(Check::new(
                "{7,3} skeleton: constant signature implies arc-transitive",
                edge_girth_regular_implies_arc_transitive(sk) == Ok(ArcTransitivityOutcome::Holds),
            ));
        }
        Err(e) => out.push(Check::detailed(
            "{7,3} coset map constructs",
            false,
            e.to_string(),
        )),
    }
    out
}

fn condition_checks() -> Vec<Check> {
    let expected: Vec<Signature> = [
        (0, 1, 1),
        (2, 2, 2),
        (4, 4, 4),
        (4, 4, 6),
        (4, 5, 5),
        (4, 6, 6),
        (5, 5, 6),
    ]
    .iter()
    .map(|&(a, b, c)| Signature::new(a, b, c))
    .collect();
    let candidates = candidate_signatures();
    let realizable = realizable_signatures();
    let witness = |ell: usize, eps: usize| condition_satisfiable(ell, eps).map(|w| w.0);
    let with_zero = |value: usize| {
        let mut v = vec![0];
        v.extend([value; 7]);
        v
    };
    vec![
        Check::detailed(
            "candidate signatures are exactly the seven survivors",
            candidates == expected,
            format!("{candidates:?}"),
        ),
        Check::new(
            "realizable signatures are the five cases",
            realizable == expected[..5].to_vec(),
        ),
        Check::new(
            "condition (7, 6) gives 3^7",
            witness(7, 6) == Some(vec![3; 7]),
        ),
        Check::new(
            "condition (8, 4) gives 0 2^7",
            witness(8, 4) == Some(with_zero(2)),
        ),
        Check::new(
            "condition (8, 6) gives 0 3^7",
            witness(8, 6) == Some(with_zero(3)),
        ),
        Check::new(
            "condition fails for (4,2), (5,2), (6,2), (5,4)",
            [(4, 2), (5, 2), (6, 2), (5, 4)]
                .iter()
                .all(|&(l, e)| witness(l, e).is_none()),
        ),
    ]
}

fn cut_checks(opts: &SuiteOptions) -> Vec<Check> {
    let (name, g) = opts
        .graph
        .clone()
        .unwrap_or_else(|| ("coxeter".into(), coxeter()));
    let k = opts.k.unwrap_or(6);
    let search = CutSearch {
        budget: opts.budget.unwrap_or_else(|| CutSearch::from_env().budget),
    };
    let result = search.search(&g, k + 1);
    let (passed, detail) = match &result {
        Ok(None) => (true, "no cut found".to_string()),
        Ok(Some(cut)) => (false, format!("cut {cut:?}")),
        Err(e) => (false, e.to_string()),
    };
    vec![Check::detailed(
        format!("{name} has no cycle-separating cut of size <= {k}"),
        passed,
        detail,
    )]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_ball_shape() {
        let b = reference_ball_446();
        assert_eq!((b.order(), b.size()), (22, 28));
        assert!(b.is_connected());
        assert_eq!(b.degree(0), 3);
        assert_eq!(b.degree(10), 1);
        assert_eq!(b.degree(21), 1);
        assert_eq!(b.degree(16), 3);
    }

    #[test]
    fn condition_suite_passes() {
        assert!(run_suite(Suite::Condition, &SuiteOptions::default())
            .iter()
            .all(|c| c.passed));
    }
}
