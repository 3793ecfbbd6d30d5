//! The {7,3} map with 56 vertices built from cosets in PSL(2,7).

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;

use super::{MapError, TrivalentMap};
use crate::cycles::Cycle;
use crate::graph::SimpleGraph;
use crate::symmetry::{Permutation, StabilizerChain};

const INFINITY: usize = 7;

fn inverse_mod7(z: usize) -> usize {
    (1..7)
        .find(|&w| (z * w) % 7 == 1)
        .expect("nonzero residues are invertible")
}

/// PSL(2,7) acting on the projective line `{0..6, ∞ = 7}`, generated by
/// `z -> z + 1` and `z -> -1/z`; elements sorted by image array.
pub fn psl27() -> Result<Vec<Permutation>, MapError> {
    let translate: Vec<usize> = (0..8)
        .map(|z| if z == INFINITY { z } else { (z + 1) % 7 })
        .collect();
    let invert: Vec<usize> = (0..8)
        .map(|z| match z {
            0 => INFINITY,
            INFINITY => 0,
            _ => (7 - inverse_mod7(z)) % 7,
        })
        .collect();
    let gens = [
        Permutation::from_images(translate).expect("translation is a bijection"),
        Permutation::from_images(invert).expect("inversion is a bijection"),
    ];
    let chain_order = StabilizerChain::new(8, &gens).order();
    let mut elements = BTreeSet::from([Permutation::identity(8)]);
    let mut frontier = vec![Permutation::identity(8)];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = x.then(g);
            if elements.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    if elements.len() != 168 || chain_order != BigUint::from(168u32) {
        return Err(MapError::SearchFailed(format!(
            "group has {} elements, chain order {chain_order}",
            elements.len()
        )));
    }
    Ok(elements.into_iter().collect())
}

/// Generators with `R` of order 7, `S` of order 3 and `RS` of order 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleinGenerators {
    pub r: Permutation,
    pub s: Permutation,
}

/// Least `(R, S)` in lexicographic order of image arrays that generates the group.
fn find_generators(elements: &[Permutation]) -> Result<KleinGenerators, MapError> {
    let of_order = |k: u64| elements.iter().filter(move |p| p.order() == k);
    for r in of_order(7) {
        for s in of_order(3) {
            if r.then(s).order() != 2 {
                continue;
            }
            let order = StabilizerChain::new(8, &[r.clone(), s.clone()]).order();
            if order == BigUint::from(elements.len()) {
                return Ok(KleinGenerators {
                    r: r.clone(),
                    s: s.clone(),
                });
            }
        }
    }
    Err(MapError::SearchFailed("no (7,3,2) generating pair".into()))
}

/// Left cosets `g<h>` as a dense index per element, numbered by first
/// appearance in element order.
fn coset_index(
    elements: &[Permutation],
    index: &HashMap<&Permutation, usize>,
    h: &Permutation,
) -> Vec<usize> {
    let mut coset = vec![usize::MAX; elements.len()];
    let mut next = 0;
    for (i, g) in elements.iter().enumerate() {
        if coset[i] != usize::MAX {
            continue;
        }
        let mut x = g.clone();
        loop {
            coset[index[&x]] = next;
            x = x.then(h);
            if x == *g {
                break;
            }
        }
        next += 1;
    }
    coset
}

/// The rotary {7,3} map: vertices, edges and faces are the cosets of
/// `<S>`, `<RS>` and `<R>`, with incidence given by intersection.
pub fn klein_map() -> Result<TrivalentMap, MapError> {
    let elements = psl27()?;
    let KleinGenerators { r, s } = find_generators(&elements)?;
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let rs = r.then(&s);
    let vertex = coset_index(&elements, &index, &s);
    let edge = coset_index(&elements, &index, &rs);

    let vertex_count = vertex.iter().max().map_or(0, |&m| m + 1);
    let edge_count = edge.iter().max().map_or(0, |&m| m + 1);
    let mut ends: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); edge_count];
    for i in 0..elements.len() {
        ends[edge[i]].insert(vertex[i]);
    }
    let mut pairs = Vec::with_capacity(edge_count);
    for e in &ends {
        let v: Vec<usize> = e.iter().copied().collect();
        if v.len() != 2 {
            return Err(MapError::SearchFailed(
                "edge coset meets one vertex coset".into(),
            ));
        }
        pairs.push((v[0], v[1]));
    }
    let skeleton = SimpleGraph::new(vertex_count, pairs)?;
    if skeleton.size() != edge_count {
        return Err(MapError::SearchFailed(
            "parallel edges in the skeleton".into(),
        ));
    }

    let mut seen = vec![false; elements.len()];
    let mut faces = Vec::new();
    for (i, g) in elements.iter().enumerate() {
        if seen[i] {
            continue;
        }
        let mut boundary = Vec::new();
        let mut x = g.clone();
        loop {
            let j = index[&x];
            seen[j] = true;
            boundary.push(vertex[j]);
            x = x.then(&r);
            if x == *g {
                break;
            }
        }
        faces.push(Cycle::new(boundary));
    }
    TrivalentMap::new(skeleton, faces)
}
