//! Individualization-refinement search: automorphism generators along the
//! first path of the search tree, and a canonical leaf under a total order
//! on (refinement trace, relabeled edge list).

use std::cmp::Ordering;
use std::collections::VecDeque;

use num_bigint::BigUint;

use super::{Permutation, SymmetryError};
use crate::graph::SimpleGraph;

/// Undirected graph with vertex colors and edge colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    adjacency: Vec<Vec<(usize, u32)>>,
    vertex_colors: Vec<u32>,
    edges: Vec<(usize, usize, u32)>,
    edge_color_count: usize,
}

impl ColoredGraph {
    pub fn new(
        g: &SimpleGraph,
        vertex_colors: Option<&[usize]>,
        edge_colors: Option<&[usize]>,
    ) -> Result<Self, SymmetryError> {
        if let Some(c) = vertex_colors {
            if c.len() != g.order() {
                return Err(SymmetryError::ColoringLength {
                    expected: g.order(),
                    found: c.len(),
                });
            }
        }
        if let Some(c) = edge_colors {
            if c.len() != g.size() {
                return Err(SymmetryError::ColoringLength {
                    expected: g.size(),
                    found: c.len(),
                });
            }
        }
        let vcol: Vec<u32> = match vertex_colors {
            Some(c) => c.iter().map(|&x| x as u32).collect(),
            None => vec![0; g.order()],
        };
        let edges: Vec<(usize, usize, u32)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, edge_colors.map_or(0, |c| c[i] as u32)))
            .collect();
        Ok(Self::from_parts(g.order(), vcol, edges))
    }

    pub fn plain(g: &SimpleGraph) -> Self {
        Self::new(g, None, None).expect("uncolored graph")
    }

    fn from_parts(n: usize, vertex_colors: Vec<u32>, edges: Vec<(usize, usize, u32)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_color_count = 1;
        for &(u, v, c) in &edges {
            adjacency[u].push((v, c));
            adjacency[v].push((u, c));
            edge_color_count = edge_color_count.max(c as usize + 1);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        ColoredGraph {
            n,
            adjacency,
            vertex_colors,
            edges,
            edge_color_count,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn edge_color(&self, u: usize, v: usize) -> Option<u32> {
        let list = &self.adjacency[u];
        let i = list.partition_point(|&(w, _)| w < v);
        list.get(i).filter(|&&(w, _)| w == v).map(|&(_, c)| c)
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.n
            && (0..self.n).all(|v| self.vertex_colors[p.apply(v)] == self.vertex_colors[v])
            && self
                .edges
                .iter()
                .all(|&(u, v, c)| self.edge_color(p.apply(u), p.apply(v)) == Some(c))
    }

    /// Colored edge list and vertex colors after sending `v` to `labels[v]`.
    pub fn relabeled_certificate(&self, labels: &[usize]) -> Certificate {
        let mut colors = vec![0; self.n];
        for v in 0..self.n {
            colors[labels[v]] = self.vertex_colors[v];
        }
        let mut edges: Vec<(usize, usize, u32)> = self
            .edges
            .iter()
            .map(|&(u, v, c)| {
                let (a, b) = (labels[u], labels[v]);
                (a.min(b), a.max(b), c)
            })
            .collect();
        edges.sort_unstable();
        Certificate { colors, edges }
    }
}

/// Label-dependent description of a colored graph; equal certificates
/// mean identical labeled colored graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    pub colors: Vec<u32>,
    pub edges: Vec<(usize, usize, u32)>,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(FNV_PRIME)
}

/// Ordered partition of the vertex set into cells of consecutive positions.
#[derive(Clone, Debug)]
struct Partition {
    lab: Vec<usize>,
    pos: Vec<usize>,
    cell_of: Vec<usize>,
    len: Vec<usize>,
    cells: usize,
}

struct Refiner {
    counts: Vec<u32>,
    touched: Vec<bool>,
    touched_list: Vec<usize>,
    in_queue: Vec<bool>,
    queue: VecDeque<usize>,
    colors: usize,
}

impl Refiner {
    fn new(g: &ColoredGraph) -> Self {
        Refiner {
            counts: vec![0; g.n * g.edge_color_count],
            touched: vec![false; g.n],
            touched_list: Vec::new(),
            in_queue: vec![false; g.n],
            queue: VecDeque::new(),
            colors: g.edge_color_count,
        }
    }

    fn enqueue(&mut self, start: usize) {
        if !self.in_queue[start] {
            self.in_queue[start] = true;
            self.queue.push_back(start);
        }
    }

    /// Refines to the coarsest equitable refinement, returning a trace of
    /// the splits performed.
    fn refine(&mut self, g: &ColoredGraph, p: &mut Partition) -> Vec<u64> {
        let mut trace = Vec::new();
        let c = self.colors;
        while let Some(s) = self.queue.pop_front() {
            self.in_queue[s] = false;
            if p.cells == g.n {
                continue;
            }
            let splitter: Vec<usize> = p.lab[s..s + p.len[s]].to_vec();
            for &v in &splitter {
                for &(u, col) in &g.adjacency[v] {
                    self.counts[u * c + col as usize] += 1;
                    if !self.touched[u] {
                        self.touched[u] = true;
                        self.touched_list.push(u);
                    }
                }
            }
            let mut targets: Vec<usize> = self.touched_list.iter().map(|&u| p.cell_of[u]).collect();
            targets.sort_unstable();
            targets.dedup();
            for t in targets {
                let l = p.len[t];
                if l == 1 {
                    continue;
                }
                let counts = &self.counts;
                let key = |v: usize| &counts[v * c..(v + 1) * c];
                p.lab[t..t + l].sort_by(|&a, &b| key(a).cmp(key(b)));
                for i in t..t + l {
                    p.pos[p.lab[i]] = i;
                }
                let mut starts = vec![t];
                for i in t + 1..t + l {
                    if key(p.lab[i]) != key(p.lab[i - 1]) {
                        starts.push(i);
                    }
                }
                if starts.len() == 1 {
                    continue;
                }
                let mut event = mix(mix(FNV_OFFSET, s as u64), t as u64);
                starts.push(t + l);
                for w in starts.windows(2) {
                    let (a, b) = (w[0], w[1]);
                    event = mix(event, (b - a) as u64);
                    for &k in key(p.lab[a]) {
                        event = mix(event, u64::from(k));
                    }
                    p.len[a] = b - a;
                    for i in a..b {
                        let v = p.lab[i];
                        p.pos[v] = i;
                        p.cell_of[v] = a;
                    }
                }
                p.cells += starts.len() - 2;
                trace.push(event);
                for &a in &starts[..starts.len() - 1] {
                    self.enqueue(a);
                }
            }
            for &u in &self.touched_list {
                self.touched[u] = false;
                for k in 0..c {
                    self.counts[u * c + k] = 0;
                }
            }
            self.touched_list.clear();
        }
        trace.push(p.cells as u64);
        trace
    }

    fn root(&mut self, g: &ColoredGraph) -> (Partition, Vec<u64>) {
        let mut lab: Vec<usize> = (0..g.n).collect();
        lab.sort_by_key(|&v| (g.vertex_colors[v], v));
        let mut p = Partition {
            pos: vec![0; g.n],
            cell_of: vec![0; g.n],
            len: vec![0; g.n],
            lab,
            cells: 0,
        };
        let mut start = 0;
        let mut color_trace = Vec::new();
        while start < g.n {
            let color = g.vertex_colors[p.lab[start]];
            let mut end = start;
            while end < g.n && g.vertex_colors[p.lab[end]] == color {
                end += 1;
            }
            p.len[start] = end - start;
            for i in start..end {
                p.pos[p.lab[i]] = i;
                p.cell_of[p.lab[i]] = start;
            }
            p.cells += 1;
            color_trace.push(mix(u64::from(color), (end - start) as u64));
            self.enqueue(start);
            start = end;
        }
        let mut trace = color_trace;
        trace.extend(self.refine(g, &mut p));
        (p, trace)
    }

    fn individualize(
        &mut self,
        g: &ColoredGraph,
        p: &Partition,
        v: usize,
    ) -> (Partition, Vec<u64>) {
        let mut q = p.clone();
        let t = q.cell_of[v];
        let l = q.len[t];
        let i = q.pos[v];
        let first = q.lab[t];
        q.lab.swap(t, i);
        q.pos[first] = i;
        q.pos[v] = t;
        q.len[t] = 1;
        q.len[t + 1] = l - 1;
        for k in t + 1..t + l {
            let w = q.lab[k];
            q.cell_of[w] = t + 1;
        }
        q.cells += 1;
        self.enqueue(t);
        self.enqueue(t + 1);
        let trace = self.refine(g, &mut q);
        (q, trace)
    }
}

impl Partition {
    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// Start of the first largest cell.
    fn target_cell(&self) -> usize {
        let mut best = (0, 0);
        let mut t = 0;
        while t < self.lab.len() {
            if self.len[t] > best.1 {
                best = (t, self.len[t]);
            }
            t += self.len[t];
        }
        best.0
    }

    fn cell_members(&self, t: usize) -> Vec<usize> {
        let mut m = self.lab[t..t + self.len[t]].to_vec();
        m.sort_unstable();
        m
    }
}

/// Output of the automorphism search.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
    /// Vertices individualized along the first path.
    pub base: Vec<usize>,
    /// Orbit length of each base vertex under the stabilizer of the previous ones.
    pub orbit_lengths: Vec<usize>,
}

struct PathNode {
    partition: Partition,
    trace: Vec<u64>,
    target: usize,
}

/// Generators of the color-preserving automorphism group plus its order.
pub fn automorphism_search(g: &ColoredGraph) -> SearchOutcome {
    let mut refiner = Refiner::new(g);
    if g.n == 0 {
        return SearchOutcome {
            generators: Vec::new(),
            order: BigUint::from(1u32),
            base: Vec::new(),
            orbit_lengths: Vec::new(),
        };
    }
    let (root, root_trace) = refiner.root(g);
    let mut path = vec![PathNode {
        target: root.target_cell(),
        partition: root,
        trace: root_trace,
    }];
    let mut base = Vec::new();
    while !path.last().expect("nonempty path").partition.is_discrete() {
        let node = path.last().expect("nonempty path");
        let v = node.partition.cell_members(node.target)[0];
        let (child, trace) = refiner.individualize(g, &node.partition, v);
        base.push(v);
        path.push(PathNode {
            target: child.target_cell(),
            partition: child,
            trace,
        });
    }
    let leaf = path.last().expect("nonempty path").partition.lab.clone();
    let depth = base.len();

    let mut generators: Vec<Permutation> = Vec::new();
    let mut orbit_lengths = vec![1; depth];
    for level in (0..depth).rev() {
        let node = &path[level];
        let members = node.partition.cell_members(node.target);
        let mut orbit = orbit_of(base[level], g.n, &generators);
        for &w in &members {
            if orbit[w] {
                continue;
            }
            let (child, trace) = refiner.individualize(g, &node.partition, w);
            if trace != path[level + 1].trace {
                continue;
            }
            if let Some(gamma) =
                find_leaf_automorphism(g, &mut refiner, &child, &path, level + 1, &leaf)
            {
                generators.push(gamma);
                orbit = orbit_of(base[level], g.n, &generators);
            }
        }
        orbit_lengths[level] = orbit.iter().filter(|&&b| b).count();
    }
    let order = orbit_lengths
        .iter()
        .fold(BigUint::from(1u32), |acc, &k| acc * BigUint::from(k));
    SearchOutcome {
        generators,
        order,
        base,
        orbit_lengths,
    }
}

fn orbit_of(v: usize, n: usize, generators: &[Permutation]) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for g in generators {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Depth-first search below `node` (at depth `level`) for a leaf equivalent
/// to the first-path leaf.
fn find_leaf_automorphism(
    g: &ColoredGraph,
    refiner: &mut Refiner,
    node: &Partition,
    path: &[PathNode],
    level: usize,
    leaf: &[usize],
) -> Option<Permutation> {
    if node.is_discrete() {
        let mut images = vec![0; g.n];
        for (i, &v) in leaf.iter().enumerate() {
            images[v] = node.lab[i];
        }
        let gamma = Permutation::from_images_unchecked(images);
        return g.is_automorphism(&gamma).then_some(gamma);
    }
    let reference = path.get(level)?;
    let t = node.target_cell();
    if t != reference.target || node.len[t] != reference.partition.len[t] {
        return None;
    }
    for w in node.cell_members(t) {
        let (child, trace) = refiner.individualize(g, node, w);
        if path.get(level + 1).is_none_or(|next| next.trace != trace) {
            continue;
        }
        if let Some(gamma) = find_leaf_automorphism(g, refiner, &child, path, level + 1, leaf) {
            return Some(gamma);
        }
    }
    None
}

/// Canonical labeling (`labels[v]` = canonical index of `v`) and the
/// certificate of the canonically relabeled graph.
pub fn canonical_search(g: &ColoredGraph, generators: &[Permutation]) -> (Vec<usize>, Certificate) {
    let mut refiner = Refiner::new(g);
    let (root, root_trace) = refiner.root(g);
    let mut state = CanonState {
        best: None,
        traces: vec![root_trace],
        prefix: Vec::new(),
    };
    canon_dfs(g, &mut refiner, &root, generators, &mut state);
    let best = state.best.expect("search reaches at least one leaf");
    (best.labels, best.certificate)
}

struct Best {
    traces: Vec<Vec<u64>>,
    labels: Vec<usize>,
    certificate: Certificate,
}

struct CanonState {
    best: Option<Best>,
    traces: Vec<Vec<u64>>,
    prefix: Vec<usize>,
}

impl CanonState {
    fn compare_prefix(&self) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some(best) => {
                let d = self.traces.len();
                let other = &best.traces[..d.min(best.traces.len())];
                self.traces.as_slice().cmp(other)
            }
        }
    }
}

fn canon_dfs(
    g: &ColoredGraph,
    refiner: &mut Refiner,
    node: &Partition,
    generators: &[Permutation],
    state: &mut CanonState,
) {
    let cmp = state.compare_prefix();
    if cmp == Ordering::Greater {
        return;
    }
    if node.is_discrete() {
        let certificate = g.relabeled_certificate(&node.pos);
        let better = match &state.best {
            None => true,
            Some(best) => cmp == Ordering::Less || certificate < best.certificate,
        };
        if better {
            state.best = Some(Best {
                traces: state.traces.clone(),
                labels: node.pos.clone(),
                certificate,
            });
        }
        return;
    }
    let t = node.target_cell();
    let members = node.cell_members(t);
    let fixing: Vec<&Permutation> = generators
        .iter()
        .filter(|p| state.prefix.iter().all(|&v| p.apply(v) == v))
        .collect();
    let mut covered = vec![false; g.n];
    for w in members {
        if covered[w] {
            continue;
        }
        let mut stack = vec![w];
        covered[w] = true;
        while let Some(x) = stack.pop() {
            for p in &fixing {
                let y = p.apply(x);
                if !covered[y] {
                    covered[y] = true;
                    stack.push(y);
                }
            }
        }
        let (child, trace) = refiner.individualize(g, node, w);
        state.traces.push(trace);
        state.prefix.push(w);
        canon_dfs(g, refiner, &child, generators, state);
        state.prefix.pop();
        state.traces.pop();
    }
}
