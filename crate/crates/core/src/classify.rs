//! Signature filters for cubic vertex-transitive graphs of girth 7 and the
//! five-way classification with constructive witnesses.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cycles::{common_signature, girth, girth_cycles, CycleError, Signature};
use crate::families::{a_graph, coxeter, gen_petersen};
use crate::graph::{MultigraphDocument, SimpleGraph};
use crate::maps::{
    euler_characteristic, euler_formula, is_rotary, map_from_girth_cycles, map_type,
};
use crate::schemes::{is_arc_transitive_scheme, recover_truncation};
use crate::symmetry::{are_isomorphic, automorphism_group, is_arc_transitive, PermutationGroup};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("triple ({0},{1},{2}) is not sorted")]
    Unsorted(usize, usize, usize),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not connected")]
    NotConnected,
    #[error("girth is {}, expected 7", .0.map_or("infinite".to_string(), |g| g.to_string()))]
    GirthNot7(Option<usize>),
    #[error("graph is not vertex-transitive")]
    NotVertexTransitive,
    #[error("graph is not girth-regular: {0}")]
    NotGirthRegular(CycleError),
    #[error("classification invariant violated (implementation bug): {0}")]
    InvariantViolation(String),
}

fn check_sorted(a: usize, b: usize, c: usize) -> Result<(), ClassifyError> {
    if a <= b && b <= c {
        Ok(())
    } else {
        Err(ClassifyError::Unsorted(a, b, c))
    }
}

/// Even sum; `a = 0` forces (0,1,1); otherwise `a + b > c`, `a + 4 >= c`
/// and `a + 8 >= b + c`.
pub fn local_shape_filter(a: usize, b: usize, c: usize) -> Result<bool, ClassifyError> {
    check_sorted(a, b, c)?;
    if (a + b + c) % 2 == 1 {
        return Ok(false);
    }
    if a == 0 {
        return Ok((b, c) == (1, 1));
    }
    Ok(a + b > c && a + 4 >= c && a + 8 >= b + c)
}

pub fn sum_bound(a: usize, b: usize, c: usize) -> bool {
    a + b + c <= 17
}

/// Every odd value present occurs exactly twice.
pub fn odd_twice_rule(a: usize, b: usize, c: usize) -> bool {
    let t = [a, b, c];
    t.iter()
        .filter(|&&x| x % 2 == 1)
        .all(|&x| t.iter().filter(|&&y| y == x).count() == 2)
}

/// Multiset `r_1 <= ... <= r_ell` over {0,1,2,3}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ConditionWitness(pub Vec<usize>);

/// Searches multisets of size `ell` over {0,1,2,3} with sum `7 eps / 2`,
/// at most one zero, and every nonzero value used at least four times.
/// Returns the first in lexicographic order of the value counts.
pub fn condition_satisfiable(ell: usize, eps: usize) -> Option<ConditionWitness> {
    if (7 * eps) % 2 == 1 {
        return None;
    }
    let target = 7 * eps / 2;
    let allowed = |k: usize| k == 0 || k >= 4;
    for zeros in 0..=ell.min(1) {
        for ones in 0..=ell - zeros {
            for twos in 0..=ell - zeros - ones {
                let threes = ell - zeros - ones - twos;
                if !(allowed(ones) && allowed(twos) && allowed(threes)) {
                    continue;
                }
                if ones + 2 * twos + 3 * threes != target {
                    continue;
                }
                let mut r = vec![0; zeros];
                r.extend(std::iter::repeat_n(1, ones));
                r.extend(std::iter::repeat_n(2, twos));
                r.extend(std::iter::repeat_n(3, threes));
                return Some(ConditionWitness(r));
            }
        }
    }
    None
}

/// Sorted triples surviving all filters; the condition search is applied to
/// each value that occurs exactly once.
pub fn candidate_signatures() -> Vec<Signature> {
    let mut out = Vec::new();
    for a in 0..=17 {
        for b in a..=17 {
            for c in b..=17 {
                if !sum_bound(a, b, c)
                    || !local_shape_filter(a, b, c).unwrap_or(false)
                    || !odd_twice_rule(a, b, c)
                {
                    continue;
                }
                let t = [a, b, c];
                let ell = (a + b + c) / 2;
                let condition_ok = t
                    .iter()
                    .filter(|&&x| t.iter().filter(|&&y| y == x).count() == 1)
                    .all(|&eps| condition_satisfiable(ell, eps).is_some());
                if condition_ok {
                    out.push(Signature::new(a, b, c));
                }
            }
        }
    }
    out
}

/// Candidates that some graph realizes.
pub fn realizable_signatures() -> Vec<Signature> {
    candidate_signatures()
        .into_iter()
        .filter(|s| CaseTag::for_signature(*s).is_some())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    Truncation,
    RotaryMap,
    Coxeter,
    AFamily,
    Petersen,
}

impl CaseTag {
    /// The only way a case tag is produced from a signature; (4,6,6) and
    /// (5,5,6) have no tag.
    pub fn for_signature(s: Signature) -> Option<CaseTag> {
        match s.0 {
            [0, 1, 1] => Some(CaseTag::Truncation),
            [2, 2, 2] => Some(CaseTag::RotaryMap),
            [4, 4, 4] => Some(CaseTag::Coxeter),
            [4, 4, 6] => Some(CaseTag::AFamily),
            [4, 5, 5] => Some(CaseTag::Petersen),
            _ => None,
        }
    }

    pub fn signature(self) -> Signature {
        match self {
            CaseTag::Truncation => Signature::new(0, 1, 1),
            CaseTag::RotaryMap => Signature::new(2, 2, 2),
            CaseTag::Coxeter => Signature::new(4, 4, 4),
            CaseTag::AFamily => Signature::new(4, 4, 6),
            CaseTag::Petersen => Signature::new(4, 5, 5),
        }
    }

    /// Position 1..=5 in the list of cases.
    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::Truncation => "truncation",
            CaseTag::RotaryMap => "rotary-map",
            CaseTag::Coxeter => "coxeter",
            CaseTag::AFamily => "a-family",
            CaseTag::Petersen => "petersen",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Truncation {
        base: MultigraphDocument,
        /// Vertex of the input graph for each base arc id.
        arc_vertex: Vec<usize>,
        arc_transitive: bool,
    },
    RotaryMap {
        faces: Vec<Vec<usize>>,
        map_type: String,
        euler_characteristic: i64,
        rotary: bool,
    },
    Coxeter {
        isomorphism: Vec<usize>,
    },
    AFamily {
        n: usize,
        isomorphism: Vec<usize>,
    },
    Petersen {
        n: usize,
        k: usize,
        isomorphism: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub vertices: usize,
    pub edges: usize,
    pub girth_cycles: usize,
    /// Decimal string; the order can exceed 64 bits for large inputs.
    pub automorphism_group_order: String,
    pub vertex_orbits: usize,
    pub edge_orbit_sizes: Vec<usize>,
    /// Edge count per girth-cycle count.
    pub epsilon_histogram: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub case: CaseTag,
    pub signature: Signature,
    pub girth: usize,
    pub witness: Witness,
    pub diagnostics: Diagnostics,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs all preconditions and returns the case with its witness.
pub fn classify(g: &SimpleGraph) -> Result<ClassificationReport, ClassifyError> {
    if !g.is_cubic() {
        return Err(ClassifyError::NotCubic);
    }
    if !g.is_connected() {
        return Err(ClassifyError::NotConnected);
    }
    let gi = girth(g);
    if gi != Some(7) {
        return Err(ClassifyError::GirthNot7(gi));
    }
    let group = automorphism_group(g);
    if !group.is_transitive() {
        return Err(ClassifyError::NotVertexTransitive);
    }
    let cycles = girth_cycles(g).map_err(ClassifyError::NotGirthRegular)?;
    let signature = common_signature(g, &cycles).map_err(ClassifyError::NotGirthRegular)?;
    let case = CaseTag::for_signature(signature).ok_or_else(|| {
        ClassifyError::InvariantViolation(format!(
            "vertex-transitive girth-7 graph with unrealizable signature {signature}"
        ))
    })?;

    let mut epsilon_histogram = BTreeMap::new();
    for eps in cycles.epsilon_all() {
        *epsilon_histogram.entry(eps).or_insert(0) += 1;
    }
    let diagnostics = Diagnostics {
        vertices: g.order(),
        edges: g.size(),
        girth_cycles: cycles.len(),
        automorphism_group_order: group.order().to_string(),
        vertex_orbits: group.orbit_count(),
        edge_orbit_sizes: group.edge_orbits(g).iter().map(Vec::len).collect(),
        epsilon_histogram,
    };
    let witness = build_witness(g, case, &group)?;
    Ok(ClassificationReport {
        case,
        signature,
        girth: 7,
        witness,
        diagnostics,
    })
}

fn violation(msg: impl Into<String>) -> ClassifyError {
    ClassifyError::InvariantViolation(msg.into())
}

fn build_witness(
    g: &SimpleGraph,
    case: CaseTag,
    _group: &PermutationGroup,
) -> Result<Witness, ClassifyError> {
    let n = g.order();
    match case {
        CaseTag::Truncation => {
            let w = recover_truncation(g)
                .map_err(|e| violation(format!("base recovery failed: {e}")))?;
            if !w.verify(g).unwrap_or(false) {
                return Err(violation("recovered base does not truncate to the input"));
            }
            let arc_transitive = is_arc_transitive_scheme(&w.base, &w.scheme)
                .map_err(|e| violation(e.to_string()))?;
            if !arc_transitive {
                return Err(violation("recovered dihedral scheme is not arc-transitive"));
            }
            let base = MultigraphDocument {
                n: w.base.order(),
                edges: w.base.edges().iter().map(|&(u, v)| [u, v]).collect(),
                scheme: Some(
                    w.scheme
                        .rotations()
                        .iter()
                        .enumerate()
                        .map(|(v, r)| (v, r.clone()))
                        .collect(),
                ),
            };
            Ok(Witness::Truncation {
                base,
                arc_vertex: w.arc_vertex,
                arc_transitive,
            })
        }
        CaseTag::RotaryMap => {
            let m = map_from_girth_cycles(g).map_err(|e| violation(e.to_string()))?;
            let chi = euler_characteristic(&m);
            if num_rational::Ratio::from_integer(chi) != euler_formula(n, 7) {
                return Err(violation(format!(
                    "Euler characteristic {chi} disagrees with the face count formula"
                )));
            }
            if !is_rotary(&m) {
                return Err(violation("girth-cycle map is not rotary"));
            }
            Ok(Witness::RotaryMap {
                faces: m.faces().iter().map(|f| f.vertices().to_vec()).collect(),
                map_type: map_type(&m).to_string(),
                euler_characteristic: chi,
                rotary: true,
            })
        }
        CaseTag::Coxeter => {
            let iso = are_isomorphic(g, &coxeter())
                .ok_or_else(|| violation("not isomorphic to the Coxeter graph"))?;
            Ok(Witness::Coxeter {
                isomorphism: iso.images().to_vec(),
            })
        }
        CaseTag::AFamily => {
            if !n.is_multiple_of(12) {
                return Err(violation(format!("order {n} is not divisible by 12")));
            }
            let target = a_graph(n / 4).map_err(|e| violation(e.to_string()))?;
            let iso = are_isomorphic(g, &target)
                .ok_or_else(|| violation(format!("not isomorphic to A({})", n / 4)))?;
            Ok(Witness::AFamily {
                n: n / 4,
                isomorphism: iso.images().to_vec(),
            })
        }
        CaseTag::Petersen => {
            for (pn, pk) in PETERSEN_CASES {
                if 2 * pn != n {
                    continue;
                }
                let target = gen_petersen(pn, pk).map_err(|e| violation(e.to_string()))?;
                if let Some(iso) = are_isomorphic(g, &target) {
                    return Ok(Witness::Petersen {
                        n: pn,
                        k: pk,
                        isomorphism: iso.images().to_vec(),
                    });
                }
            }
            Err(violation("no matching generalized Petersen graph"))
        }
    }
}

/// The three generalized Petersen graphs of girth 7 with signature (4,5,5).
pub const PETERSEN_CASES: [(usize, usize); 3] = [(13, 5), (15, 4), (17, 4)];

/// Re-checks a report's witness against the graph it was computed from.
pub fn verify_report(g: &SimpleGraph, report: &ClassificationReport) -> bool {
    let maps_edges = |target: &SimpleGraph, iso: &[usize]| {
        iso.len() == g.order()
            && target.order() == g.order()
            && target.size() == g.size()
            && g.edges()
                .iter()
                .all(|&(u, v)| target.has_edge(iso[u], iso[v]))
    };
    match &report.witness {
        Witness::Coxeter { isomorphism } => maps_edges(&coxeter(), isomorphism),
        Witness::AFamily { n, isomorphism } => {
            a_graph(*n).is_ok_and(|t| maps_edges(&t, isomorphism))
        }
        Witness::Petersen { n, k, isomorphism } => {
            gen_petersen(*n, *k).is_ok_and(|t| maps_edges(&t, isomorphism))
        }
        Witness::RotaryMap { faces, .. } => {
            let faces = faces
                .iter()
                .map(|f| crate::cycles::Cycle::new(f.clone()))
                .collect();
            crate::maps::TrivalentMap::new(g.clone(), faces).is_ok_and(|m| is_rotary(&m))
        }
        Witness::Truncation {
            base, arc_vertex, ..
        } => {
            let text = serde_json::to_string(base).expect("document serializes");
            match crate::graph::parse_multigraph_json(&text) {
                Ok((b, Some(scheme))) => crate::schemes::TruncationWitness {
                    base: b,
                    scheme,
                    arc_vertex: arc_vertex.clone(),
                }
                .verify(g)
                .unwrap_or(false),
                _ => false,
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArcTransitivityOutcome {
    /// Constant signature and arc-transitive.
    Holds,
    /// Signature not constant; nothing to check.
    Vacuous,
    /// Constant signature but not arc-transitive.
    Violated,
}

impl ArcTransitivityOutcome {
    pub fn passed(self) -> bool {
        self != ArcTransitivityOutcome::Violated
    }
}

/// For a cubic vertex-transitive girth-7 graph whose edges all lie on the
/// same number of girth cycles, checks arc-transitivity.
pub fn edge_girth_regular_implies_arc_transitive(
    g: &SimpleGraph,
) -> Result<ArcTransitivityOutcome, ClassifyError> {
    if !g.is_cubic() {
        return Err(ClassifyError::NotCubic);
    }
    let gi = girth(g);
    if gi != Some(7) {
        return Err(ClassifyError::GirthNot7(gi));
    }
    if !automorphism_group(g).is_transitive() {
        return Err(ClassifyError::NotVertexTransitive);
    }
    let cycles = girth_cycles(g).map_err(ClassifyError::NotGirthRegular)?;
    let signature = common_signature(g, &cycles).map_err(ClassifyError::NotGirthRegular)?;
    if !signature.is_constant() {
        return Ok(ArcTransitivityOutcome::Vacuous);
    }
    Ok(if is_arc_transitive(g) {
        ArcTransitivityOutcome::Holds
    } else {
        ArcTransitivityOutcome::Violated
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::petersen;

    #[test]
    fn p1_filter_examples() {
        assert!(local_shape_filter(0, 1, 1).unwrap());
        assert!(!local_shape_filter(1, 1, 2).unwrap());
        assert!(!local_shape_filter(2, 2, 8).unwrap());
        assert_eq!(
            local_shape_filter(3, 2, 1),
            Err(ClassifyError::Unsorted(3, 2, 1))
        );
    }

    #[test]
    fn sum_and_parity_rules() {
        assert!(sum_bound(4, 6, 6));
        assert!(!sum_bound(6, 6, 6));
        assert!(sum_bound(5, 5, 6));
        assert!(odd_twice_rule(4, 5, 5));
        assert!(!odd_twice_rule(3, 4, 5));
        assert!(odd_twice_rule(3, 3, 4));
    }

    #[test]
    fn condition_witnesses() {
        assert_eq!(
            condition_satisfiable(7, 6),
            Some(ConditionWitness(vec![3; 7]))
        );
        let mut expected = vec![0];
        expected.extend([2; 7]);
        assert_eq!(
            condition_satisfiable(8, 4),
            Some(ConditionWitness(expected))
        );
        assert_eq!(condition_satisfiable(4, 2), None);
        assert_eq!(condition_satisfiable(5, 3), None);
        for eps in (1..20).step_by(2) {
            for ell in 1..12 {
                assert_eq!(condition_satisfiable(ell, eps), None);
            }
        }
    }

    #[test]
    fn candidate_and_realizable_lists() {
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
        assert_eq!(candidate_signatures(), expected);
        let realizable = realizable_signatures();
        assert_eq!(realizable.len(), 5);
        assert!(!realizable.contains(&Signature::new(4, 6, 6)));
        assert!(!realizable.contains(&Signature::new(5, 5, 6)));
    }

    #[test]
    fn case_tags_round_trip_signatures() {
        for tag in [
            CaseTag::Truncation,
            CaseTag::RotaryMap,
            CaseTag::Coxeter,
            CaseTag::AFamily,
            CaseTag::Petersen,
        ] {
            assert_eq!(CaseTag::for_signature(tag.signature()), Some(tag));
        }
        assert_eq!(CaseTag::Petersen.number(), 5);
    }

    #[test]
    fn petersen_graph_has_girth_five() {
        assert_eq!(
            classify(&petersen()),
            Err(ClassifyError::GirthNot7(Some(5)))
        );
    }
}
