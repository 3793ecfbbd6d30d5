//! Constructors for the named graph families and a few generic ones.

mod groups;
mod random;

pub use groups::{
    cayley, cayley_446, cyclic_group, group_446, ConnectionSet, Element446, GroupTable,
};
pub use random::{random_cubic_graph, random_regular_multigraph, random_rotation_scheme};

use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::symmetry::Permutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter {value} is below the minimum {min}")]
    NTooSmall { value: usize, min: usize },
    #[error("{0} is not divisible by 3")]
    NotDivisibleBy3(usize),
    #[error("jump {k} is invalid for n = {n}: need 1 <= k and 2k < n")]
    BadJump { n: usize, k: usize },
    #[error("connection set is not closed under inverses (element {0})")]
    NotInverseClosed(usize),
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("group element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("index {0} is below the minimum 3")]
    ITooSmall(usize),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("a {degree}-regular graph on {n} vertices does not exist")]
    OddDegreeSum { n: usize, degree: usize },
}

pub fn cycle_graph(n: usize) -> SimpleGraph {
    SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

pub fn path_graph(n: usize) -> SimpleGraph {
    SimpleGraph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

pub fn complete_graph(n: usize) -> SimpleGraph {
    SimpleGraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        .expect("complete graph edges are valid")
}

/// Left part `0..p`, right part `p..p+q`; edge `(i, p + j)` has index `q*i + j`.
pub fn complete_bipartite(p: usize, q: usize) -> SimpleGraph {
    SimpleGraph::new(p + q, (0..p).flat_map(|i| (0..q).map(move |j| (i, p + j))))
        .expect("bipartite edges are valid")
}

/// The graph A(n) on `x_i = i`, `y_i = n+i`, `a_i = 2n+i`, `b_i = 3n+i`.
pub fn a_graph(n: usize) -> Result<SimpleGraph, FamilyError> {
    if n < 8 {
        return Err(FamilyError::NTooSmall { value: n, min: 8 });
    }
    let (x, y, a, b) = a_names(n);
    let mut edges = Vec::with_capacity(6 * n);
    for i in 0..n {
        edges.push((x(i), x(i + 1)));
        edges.push((x(i), y(i)));
        edges.push((y(i), a(i)));
        edges.push((a(i), b(i)));
        edges.push((b(i), y(i + 2)));
        edges.push((a(i), b(i + 1)));
    }
    Ok(SimpleGraph::new(4 * n, edges).expect("A(n) edges are valid"))
}

type Namer = Box<dyn Fn(usize) -> usize>;

fn a_names(n: usize) -> (Namer, Namer, Namer, Namer) {
    (
        Box::new(move |i| i % n),
        Box::new(move |i| n + i % n),
        Box::new(move |i| 2 * n + i % n),
        Box::new(move |i| 3 * n + i % n),
    )
}

/// The rotation `s_i -> s_{i+1}` of A(n).
pub fn a_shift(n: usize) -> Result<Permutation, FamilyError> {
    if n < 8 {
        return Err(FamilyError::NTooSmall { value: n, min: 8 });
    }
    let images = (0..4 * n).map(|v| (v / n) * n + (v % n + 1) % n).collect();
    Ok(Permutation::from_images(images).expect("shift is a bijection"))
}

/// The automorphism of A(n), `3 | n`, that mixes the four vertex classes.
pub fn a_tau(n: usize) -> Result<Permutation, FamilyError> {
    if n < 8 {
        return Err(FamilyError::NTooSmall { value: n, min: 8 });
    }
    if !n.is_multiple_of(3) {
        return Err(FamilyError::NotDivisibleBy3(n));
    }
    let (x, y, a, b) = a_names(n);
    let prev = |i: usize| i + n - 1;
    let mut images = vec![0; 4 * n];
    for i in 0..n {
        let (tx, ty, ta, tb) = match i % 3 {
            0 => (b(prev(i)), a(prev(i)), b(i), a(i)),
            1 => (y(i), x(i), x(i + 1), y(i + 1)),
            _ => (a(prev(i)), b(prev(i)), y(i + 1), x(i + 1)),
        };
        images[x(i)] = tx;
        images[y(i)] = ty;
        images[a(i)] = ta;
        images[b(i)] = tb;
    }
    Ok(Permutation::from_images(images).expect("tau is a bijection"))
}

/// Generalized Petersen graph: outer `i`, inner `n+i`, edges `i ~ i+1`,
/// `i ~ n+i`, `n+i ~ n+i+k`.
pub fn gen_petersen(n: usize, k: usize) -> Result<SimpleGraph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::NTooSmall { value: n, min: 3 });
    }
    if k == 0 || 2 * k >= n {
        return Err(FamilyError::BadJump { n, k });
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Ok(SimpleGraph::new(2 * n, edges).expect("Petersen edges are valid"))
}

pub fn petersen() -> SimpleGraph {
    gen_petersen(5, 2).expect("valid parameters")
}

pub fn dodecahedron() -> SimpleGraph {
    gen_petersen(10, 2).expect("valid parameters")
}

/// The Coxeter graph: hubs `h_i = i` joined to three 7-cycles with steps
/// 1, 2 and 3 (`r1_i = 7+i`, `r2_i = 14+i`, `r3_i = 21+i`).
pub fn coxeter() -> SimpleGraph {
    let mut edges = Vec::with_capacity(42);
    for i in 0..7 {
        for (ring, step) in [(1, 1), (2, 2), (3, 3)] {
            let r = |j: usize| 7 * ring + j % 7;
            edges.push((i, r(i)));
            edges.push((r(i), r(i + step)));
        }
    }
    SimpleGraph::new(28, edges).expect("Coxeter edges are valid")
}
