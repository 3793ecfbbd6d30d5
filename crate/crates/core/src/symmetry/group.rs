use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigUint;

use super::Permutation;
use crate::graph::{Arc, EdgeId, SimpleGraph};

/// A group given by generators, with exact order and cached point orbits.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    order: BigUint,
    orbit_id: Vec<usize>,
}

impl PermutationGroup {
    /// Order computed with a Schreier–Sims stabilizer chain.
    ///
    /// Panics if a generator has the wrong degree.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Self {
        let order = StabilizerChain::new(degree, &generators).order();
        Self::with_order(degree, generators, order)
    }

    pub(crate) fn with_order(degree: usize, generators: Vec<Permutation>, order: BigUint) -> Self {
        assert!(
            generators.iter().all(|g| g.degree() == degree),
            "generator degree mismatch"
        );
        let orbit_id = point_orbit_ids(degree, &generators);
        PermutationGroup {
            degree,
            generators,
            order,
            orbit_id,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn stabilizer_chain(&self) -> StabilizerChain {
        StabilizerChain::new(self.degree, &self.generators)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.stabilizer_chain().contains(p)
    }

    /// Point orbits, each sorted, ordered by least element.
    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut index = HashMap::new();
        for v in 0..self.degree {
            let id = *index.entry(self.orbit_id[v]).or_insert_with(|| {
                orbits.push(Vec::new());
                orbits.len() - 1
            });
            orbits[id].push(v);
        }
        orbits
    }

    pub fn orbit_count(&self) -> usize {
        self.vertex_orbits().len()
    }

    pub fn orbit_of(&self, v: usize) -> Vec<usize> {
        (0..self.degree)
            .filter(|&w| self.orbit_id[w] == self.orbit_id[v])
            .collect()
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbit_id[u] == self.orbit_id[v]
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbit_id.iter().all(|&id| id == self.orbit_id[0])
    }

    pub fn stabilizer_order(&self, v: usize) -> BigUint {
        &self.order / BigUint::from(self.orbit_of(v).len())
    }

    /// Orbits of the induced action on `items`; each orbit sorted, orbits
    /// ordered by least element.
    pub fn orbits_on<T, F>(&self, items: &[T], act: F) -> Vec<Vec<T>>
    where
        T: Clone + Eq + Hash + Ord,
        F: Fn(&Permutation, &T) -> T,
    {
        let mut sorted = items.to_vec();
        sorted.sort();
        sorted.dedup();
        let index: HashMap<&T, usize> = sorted.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut parent: Vec<usize> = (0..sorted.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.generators {
            for (i, t) in sorted.iter().enumerate() {
                let image = act(g, t);
                let j = *index
                    .get(&image)
                    .expect("item set must be closed under the group action");
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<T>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for (i, item) in sorted.iter().enumerate() {
            let root = find(&mut parent, i);
            let k = *slot.entry(root).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[k].push(item.clone());
        }
        groups
    }

    pub fn edge_orbits(&self, g: &SimpleGraph) -> Vec<Vec<EdgeId>> {
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        self.orbits_on(&edges, |p, &e| {
            let (u, v) = g.endpoints(e);
            g.edge_between(p.apply(u), p.apply(v))
                .expect("generator is a graph automorphism")
        })
    }

    pub fn arc_orbits(&self, g: &SimpleGraph) -> Vec<Vec<Arc>> {
        let arcs: Vec<Arc> = g.arcs().collect();
        self.orbits_on(&arcs, |p, &a| {
            let (u, v) = g.arc_ends(a);
            g.arc_between(p.apply(u), p.apply(v))
                .expect("generator is a graph automorphism")
        })
    }

    /// Orbits on 2-arcs `(u, v, w)` with `u ~ v ~ w` and `u != w`.
    pub fn two_arc_orbits(&self, g: &SimpleGraph) -> Vec<Vec<(usize, usize, usize)>> {
        let two_arcs: Vec<_> = (0..g.order())
            .flat_map(|v| {
                g.neighbors(v).iter().flat_map(move |&u| {
                    g.neighbors(v)
                        .iter()
                        .filter(move |&&w| w != u)
                        .map(move |&w| (u, v, w))
                })
            })
            .collect();
        self.orbits_on(&two_arcs, |p, &(u, v, w)| {
            (p.apply(u), p.apply(v), p.apply(w))
        })
    }
}

fn point_orbit_ids(degree: usize, generators: &[Permutation]) -> Vec<usize> {
    let mut id = vec![usize::MAX; degree];
    for start in 0..degree {
        if id[start] != usize::MAX {
            continue;
        }
        id[start] = start;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for g in generators {
                let y = g.apply(x);
                if id[y] == usize::MAX {
                    id[y] = start;
                    stack.push(y);
                }
            }
        }
    }
    id
}

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Strong generators first stored at this level (they fix earlier base points).
    generators: Vec<Permutation>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Permutation>>,
}

/// Base and strong generating set built by deterministic Schreier–Sims.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            chain.insert(g.clone());
        }
        chain.close();
        chain
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Basic orbit lengths along the base.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels
            .iter()
            .map(|l| l.transversal.iter().flatten().count())
            .collect()
    }

    pub fn order(&self) -> BigUint {
        self.orbit_lengths()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.sift(p.clone(), 0).0.is_identity()
    }

    /// Strips `p` through levels from `start`; returns the residue and the
    /// level where stripping stopped.
    fn sift(&self, mut p: Permutation, start: usize) -> (Permutation, usize) {
        for (k, level) in self.levels.iter().enumerate().skip(start) {
            let image = p.apply(level.base_point);
            match &level.transversal[image] {
                Some(u) => p = p.then(&u.inverse()),
                None => return (p, k),
            }
        }
        let depth = self.levels.len();
        (p, depth)
    }

    fn insert(&mut self, g: Permutation) {
        let (residue, k) = self.sift(g, 0);
        if residue.is_identity() {
            return;
        }
        self.add_at(residue, k);
    }

    fn add_at(&mut self, p: Permutation, k: usize) {
        if k == self.levels.len() {
            let base_point = p.first_moved_point().expect("residue is not the identity");
            self.levels.push(Level {
                base_point,
                generators: Vec::new(),
                transversal: Vec::new(),
            });
        }
        self.levels[k].generators.push(p);
        for j in 0..=k {
            self.rebuild(j);
        }
    }

    fn rebuild(&mut self, j: usize) {
        let gens: Vec<Permutation> = self.levels[j..]
            .iter()
            .flat_map(|l| l.generators.iter().cloned())
            .collect();
        let b = self.levels[j].base_point;
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[b] = Some(Permutation::identity(self.degree));
        let mut queue = vec![b];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for s in &gens {
                let y = s.apply(x);
                if transversal[y].is_none() {
                    let u = transversal[x].as_ref().map(|t| t.then(s));
                    transversal[y] = u;
                    queue.push(y);
                }
            }
        }
        self.levels[j].transversal = transversal;
    }

    /// Sifts Schreier generators until every one strips to the identity.
    fn close(&mut self) {
        loop {
            let mut changed = false;
            for j in (0..self.levels.len()).rev() {
                let gens: Vec<Permutation> = self.levels[j..]
                    .iter()
                    .flat_map(|l| l.generators.iter().cloned())
                    .collect();
                let points: Vec<usize> = (0..self.degree)
                    .filter(|&p| self.levels[j].transversal[p].is_some())
                    .collect();
                'points: for p in points {
                    for s in &gens {
                        let up = self.levels[j].transversal[p].clone().expect("orbit point");
                        let q = s.apply(p);
                        let uq = self.levels[j].transversal[q]
                            .clone()
                            .expect("orbit is closed");
                        let schreier = up.then(s).then(&uq.inverse());
                        let (residue, k) = self.sift(schreier, j + 1);
                        if !residue.is_identity() {
                            self.add_at(residue, k);
                            changed = true;
                            break 'points;
                        }
                    }
                }
                if changed {
                    break;
                }
            }
            if !changed {
                return;
            }
        }
    }
}
