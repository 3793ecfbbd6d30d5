#![allow(dead_code)]

use girth7::graph::MultiGraph;
use girth7::schemes::DihedralScheme;
use rand::seq::SliceRandom;
use rand::Rng;

/// Arc of edge `e` leaving `v`.
fn arc_at(g: &MultiGraph, e: usize, v: usize) -> usize {
    if g.edges()[e].0 == v {
        2 * e
    } else {
        2 * e + 1
    }
}

/// Closed base walks of length 2 and 3 (digons and triangles) as
/// `(vertex, arc in, arc out)` turns.
pub fn short_base_cycles(g: &MultiGraph) -> Vec<Vec<(usize, usize, usize)>> {
    let m = g.size();
    let ends = g.edges();
    let mut out = Vec::new();
    for e in 0..m {
        for f in e + 1..m {
            let (u, v) = ends[e];
            if ends[f] == (u, v) || ends[f] == (v, u) {
                out.push(vec![
                    (u, arc_at(g, e, u), arc_at(g, f, u)),
                    (v, arc_at(g, e, v), arc_at(g, f, v)),
                ]);
            }
        }
    }
    let other = |e: usize, x: usize| if ends[e].0 == x { ends[e].1 } else { ends[e].0 };
    for (e1, &(p, q)) in ends.iter().enumerate() {
        for (u, v) in [(p, q), (q, p)] {
            for e2 in 0..m {
                if e2 == e1 || !(ends[e2].0 == v || ends[e2].1 == v) {
                    continue;
                }
                let w = other(e2, v);
                if w == u || w == v {
                    continue;
                }
                for (e3, &(a, b)) in ends.iter().enumerate() {
                    if e3 == e1 || e3 == e2 || !(a == w || b == w) || other(e3, w) != u {
                        continue;
                    }
                    // Each triangle once: e1 least, e2 < e3 fixes the direction.
                    if e1 < e2 && e1 < e3 && e2 < e3 {
                        out.push(vec![
                            (v, arc_at(g, e1, v), arc_at(g, e2, v)),
                            (w, arc_at(g, e2, w), arc_at(g, e3, w)),
                            (u, arc_at(g, e3, u), arc_at(g, e1, u)),
                        ]);
                    }
                }
            }
        }
    }
    out
}

/// Number of short base cycles whose truncation cycle has length below 8.
fn cost(walks: &[Vec<(usize, usize, usize)>], pos: &[usize], degree: &[usize]) -> usize {
    walks
        .iter()
        .filter(|walk| {
            let turns: usize = walk
                .iter()
                .map(|&(v, a, b)| {
                    let d = pos[a].abs_diff(pos[b]);
                    d.min(degree[v] - d)
                })
                .sum();
            walk.len() + turns < 8
        })
        .count()
}

/// Local search over rotation schemes for one whose truncation has no
/// cycle of length at most 7 other than the vertex cycles.
pub fn tuned_scheme<R: Rng + ?Sized>(
    g: &MultiGraph,
    rng: &mut R,
    steps: usize,
) -> Option<DihedralScheme> {
    let walks = short_base_cycles(g);
    let degree = g.degrees();
    let mut rotations: Vec<Vec<usize>> = g
        .arcs_by_tail()
        .into_iter()
        .map(|arcs| {
            let mut ids: Vec<usize> = arcs.iter().map(|a| a.id()).collect();
            ids.shuffle(rng);
            ids
        })
        .collect();
    let mut pos = vec![0; g.arc_count()];
    for r in &rotations {
        for (i, &a) in r.iter().enumerate() {
            pos[a] = i;
        }
    }
    let mut current = cost(&walks, &pos, &degree);
    for _ in 0..steps {
        if current == 0 {
            break;
        }
        let v = rng.gen_range(0..g.order());
        let d = rotations[v].len();
        let (i, j) = (rng.gen_range(0..d), rng.gen_range(0..d));
        if i == j {
            continue;
        }
        rotations[v].swap(i, j);
        pos[rotations[v][i]] = i;
        pos[rotations[v][j]] = j;
        let next = cost(&walks, &pos, &degree);
        if next <= current {
            current = next;
        } else {
            rotations[v].swap(i, j);
            pos[rotations[v][i]] = i;
            pos[rotations[v][j]] = j;
        }
    }
    (current == 0).then(|| DihedralScheme::new(g, rotations).expect("permuted arcs form a scheme"))
}

/// A random loop-free 7-valent base on 8 or 10 vertices with a tuned
/// scheme, resampling the base until the scheme search succeeds.
pub fn tuned_instance(seed: u64) -> Option<(MultiGraph, DihedralScheme)> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = if seed.is_multiple_of(2) { 8 } else { 10 };
    (0..60).find_map(|_| {
        let base = girth7::families::random_regular_multigraph(n, 7, &mut rng).ok()?;
        let scheme = tuned_scheme(&base, &mut rng, 20_000)?;
        Some((base, scheme))
    })
}
