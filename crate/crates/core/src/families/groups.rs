use std::fmt;

use super::FamilyError;
use crate::graph::SimpleGraph;
use crate::symmetry::Permutation;

/// Finite group as a dense multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, identity and inverses; associativity is checked
    /// exhaustively up to order 200.
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self, FamilyError> {
        if order == 0 || table.len() != order * order {
            return Err(FamilyError::NotAGroup("table size mismatch".into()));
        }
        if let Some(&x) = table.iter().find(|&&x| x >= order) {
            return Err(FamilyError::ElementOutOfRange(x));
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| FamilyError::NotAGroup("no identity".into()))?;
        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| FamilyError::NotAGroup(format!("element {a} has no inverse")))?;
            inverse.push(inv);
        }
        if order <= 200 {
            for a in 0..order {
                for b in 0..order {
                    let ab = mul(a, b);
                    for c in 0..order {
                        if mul(ab, c) != mul(a, mul(b, c)) {
                            return Err(FamilyError::NotAGroup(format!(
                                "({a}*{b})*{c} != {a}*({b}*{c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(GroupTable {
            order,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The product of a word of elements, left to right.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    /// `x -> h x`, an automorphism of every Cayley graph on this group.
    pub fn left_multiplication(&self, h: usize) -> Permutation {
        Permutation::from_images((0..self.order).map(|x| self.mul(h, x)).collect())
            .expect("left multiplication is a bijection")
    }
}

/// Inverse-closed, identity-free subset of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet(Vec<usize>);

impl ConnectionSet {
    pub fn new(group: &GroupTable, elements: &[usize]) -> Result<Self, FamilyError> {
        let mut set = elements.to_vec();
        set.sort_unstable();
        set.dedup();
        for &s in &set {
            if s >= group.order() {
                return Err(FamilyError::ElementOutOfRange(s));
            }
            if s == group.identity() {
                return Err(FamilyError::ContainsIdentity);
            }
            if set.binary_search(&group.inverse(s)).is_err() {
                return Err(FamilyError::NotInverseClosed(s));
            }
        }
        Ok(ConnectionSet(set))
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }
}

/// Cayley graph: `g ~ g s` for `s` in the connection set.
pub fn cayley(group: &GroupTable, connection: &ConnectionSet) -> SimpleGraph {
    let edges =
        (0..group.order()).flat_map(|g| connection.0.iter().map(move |&s| (g, group.mul(g, s))));
    SimpleGraph::new(group.order(), edges).expect("Cayley edges are valid")
}

pub fn cyclic_group(n: usize) -> GroupTable {
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a + b) % n))
        .collect();
    GroupTable::new(n, table).expect("cyclic group table is valid")
}

/// Element `((u, v), t)` of `(Z2 x Z2) ⋊ Z_{3i}`, indexed `4t + 2u + v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element446 {
    pub u: u8,
    pub v: u8,
    pub t: usize,
}

impl Element446 {
    /// `t` is taken modulo `3i`, so negative exponents can be passed as `3i - k`.
    pub fn new(u: u8, v: u8, t: usize, i: usize) -> Self {
        Element446 {
            u: u & 1,
            v: v & 1,
            t: t % (3 * i),
        }
    }

    pub fn index(self) -> usize {
        4 * self.t + 2 * usize::from(self.u) + usize::from(self.v)
    }

    pub fn from_index(index: usize) -> Self {
        Element446 {
            u: ((index >> 1) & 1) as u8,
            v: (index & 1) as u8,
            t: index / 4,
        }
    }
}

impl fmt::Display for Element446 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),{})", self.u, self.v, self.t)
    }
}

/// `M^t (u, v)` for `M = [[1,1],[1,0]]` over GF(2); `M` has order 3.
fn twist(t: usize, (u, v): (u8, u8)) -> (u8, u8) {
    (0..t % 3).fold((u, v), |(a, b), _| ((a + b) & 1, a))
}

/// The group `(Z2 x Z2) ⋊ Z_{3i}` with `t` acting by `M^t`, and
/// `S = {((0,0),1), ((0,0),-1), ((1,1),0)}`.
pub fn group_446(i: usize) -> Result<(GroupTable, ConnectionSet), FamilyError> {
    if i < 3 {
        return Err(FamilyError::ITooSmall(i));
    }
    let m = 3 * i;
    let order = 4 * m;
    let mut table = vec![0; order * order];
    for x in 0..order {
        let a = Element446::from_index(x);
        for y in 0..order {
            let b = Element446::from_index(y);
            let (tu, tv) = twist(a.t, (b.u, b.v));
            let c = Element446::new(a.u ^ tu, a.v ^ tv, a.t + b.t, i);
            table[x * order + y] = c.index();
        }
    }
    let group = GroupTable::new(order, table)?;
    let s = [
        Element446::new(0, 0, 1, i).index(),
        Element446::new(0, 0, m - 1, i).index(),
        Element446::new(1, 1, 0, i).index(),
    ];
    let connection = ConnectionSet::new(&group, &s)?;
    Ok((group, connection))
}

/// Cubic Cayley graph on `group_446(i)`; vertex ids are [`Element446::index`].
pub fn cayley_446(i: usize) -> Result<SimpleGraph, FamilyError> {
    let (group, connection) = group_446(i)?;
    Ok(cayley(&group, &connection))
}
