//! Exhaustive search for small cycle-separating edge cuts.

use rayon::prelude::*;

use super::CycleError;
use crate::graph::{EdgeId, SimpleGraph};

pub const DEFAULT_CUT_BUDGET: u64 = 100_000_000;

/// Subset-count cap for [`cycle_separating_cut_below`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutSearch {
    pub budget: u64,
}

impl Default for CutSearch {
    fn default() -> Self {
        CutSearch {
            budget: DEFAULT_CUT_BUDGET,
        }
    }
}

impl CutSearch {
    /// Reads the budget from `G7_BUDGET`, falling back to the default.
    pub fn from_env() -> Self {
        let budget = std::env::var("G7_BUDGET")
            .ok()
            .and_then(|s| s.trim().replace('_', "").parse().ok())
            .unwrap_or(DEFAULT_CUT_BUDGET);
        CutSearch { budget }
    }

    /// Number of subsets of size `1..k` of `m` edges.
    pub fn subsets_needed(m: usize, k: usize) -> u128 {
        (1..k).map(|j| binomial(m as u128, j as u128)).sum()
    }

    /// Smallest edge set of size `< k` (colex-first among the smallest)
    /// whose removal leaves at least two components containing cycles.
    pub fn search(&self, g: &SimpleGraph, k: usize) -> Result<Option<Vec<EdgeId>>, CycleError> {
        let m = g.size();
        let needed = Self::subsets_needed(m, k);
        if needed > u128::from(self.budget) {
            return Err(CycleError::BudgetExceeded {
                needed,
                budget: self.budget,
            });
        }
        for size in 1..k.min(m + 1) {
            let found = (size - 1..m)
                .into_par_iter()
                .map_init(
                    || Scratch::new(g),
                    |scratch, top| scratch.search_with_top(g, size, top),
                )
                .find_first(Option::is_some)
                .flatten();
            if let Some(cut) = found {
                return Ok(Some(cut.into_iter().map(EdgeId).collect()));
            }
        }
        Ok(None)
    }
}

/// [`CutSearch::search`] with an explicit budget.
pub fn cycle_separating_cut_below(
    g: &SimpleGraph,
    k: usize,
    budget: u64,
) -> Result<Option<Vec<EdgeId>>, CycleError> {
    CutSearch { budget }.search(g, k)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

struct Scratch {
    removed: Vec<bool>,
    parent: Vec<usize>,
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Scratch {
    fn new(g: &SimpleGraph) -> Self {
        Scratch {
            removed: vec![false; g.size()],
            parent: vec![0; g.order()],
            vertices: vec![0; g.order()],
            edges: vec![0; g.order()],
        }
    }

    /// Subsets of the given size whose largest element is `top`, in colex order.
    fn search_with_top(&mut self, g: &SimpleGraph, size: usize, top: usize) -> Option<Vec<usize>> {
        let r = size - 1;
        let mut combo: Vec<usize> = (0..r).collect();
        loop {
            for &e in &combo {
                self.removed[e] = true;
            }
            self.removed[top] = true;
            let separates = self.separates(g);
            for &e in &combo {
                self.removed[e] = false;
            }
            self.removed[top] = false;
            if separates {
                let mut cut = combo.clone();
                cut.push(top);
                return Some(cut);
            }
            if !next_colex(&mut combo, top) {
                return None;
            }
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn separates(&mut self, g: &SimpleGraph) -> bool {
        for v in 0..g.order() {
            self.parent[v] = v;
            self.vertices[v] = 0;
            self.edges[v] = 0;
        }
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if self.removed[e] {
                continue;
            }
            let (ru, rv) = (self.find(u), self.find(v));
            if ru != rv {
                self.parent[ru] = rv;
            }
        }
        for v in 0..g.order() {
            let r = self.find(v);
            self.vertices[r] += 1;
        }
        for (e, &(u, _)) in g.edges().iter().enumerate() {
            if !self.removed[e] {
                let r = self.find(u);
                self.edges[r] += 1;
            }
        }
        let cyclic = (0..g.order())
            .filter(|&v| self.parent[v] == v && self.edges[v] >= self.vertices[v])
            .count();
        cyclic >= 2
    }
}

/// Advances a sorted combination over `0..limit` to its colex successor.
fn next_colex(combo: &mut [usize], limit: usize) -> bool {
    let r = combo.len();
    for i in 0..r {
        let bound = if i + 1 < r { combo[i + 1] } else { limit };
        if combo[i] + 1 < bound {
            combo[i] += 1;
            for (j, c) in combo.iter_mut().enumerate().take(i) {
                *c = j;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_enumerates_all_combinations() {
        let mut combo = vec![0, 1];
        let mut seen = vec![combo.clone()];
        while next_colex(&mut combo, 5) {
            seen.push(combo.clone());
        }
        assert_eq!(seen.len(), 10);
        assert_eq!(seen[..4], [vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3]]);
        let mut empty: Vec<usize> = Vec::new();
        assert!(!next_colex(&mut empty, 3));
    }

    #[test]
    fn bridge_between_two_heptagons() {
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.extend((0..7).map(|i| (7 + i, 7 + (i + 1) % 7)));
        edges.push((0, 7));
        let g = SimpleGraph::new(14, edges).unwrap();
        let bridge = g.edge_between(0, 7).unwrap();
        let cut = CutSearch::default().search(&g, 2).unwrap();
        assert_eq!(cut, Some(vec![bridge]));
        assert_eq!(CutSearch::default().search(&g, 1).unwrap(), None);
    }

    #[test]
    fn budget_is_enforced() {
        let edges: Vec<(usize, usize)> = (0..30).map(|i| (i, (i + 1) % 30)).collect();
        let g = SimpleGraph::new(30, edges).unwrap();
        let err = cycle_separating_cut_below(&g, 4, 100).unwrap_err();
        assert_eq!(
            err,
            CycleError::BudgetExceeded {
                needed: 30 + 435 + 4060,
                budget: 100
            }
        );
    }
}
