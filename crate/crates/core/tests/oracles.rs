//! Library results against slow, independent reference computations.

use std::collections::BTreeSet;

use girth7::cycles::{ball_cut_identity, girth, girth_cycles, girth_regular_signature};
use girth7::families::{
    a_graph, coxeter, dodecahedron, gen_petersen, petersen, random_cubic_graph,
};
use girth7::graph::SimpleGraph;
use girth7::maps::klein_map;
use girth7::symmetry::automorphism_group;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn adjacency(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Girth as the minimum over edges uv of 1 + dist(u, v) in g - uv.
fn girth_by_edge_deletion(g: &SimpleGraph) -> Option<usize> {
    let adj = adjacency(g);
    let n = g.order();
    let mut best: Option<usize> = None;
    for &(s, t) in g.edges() {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                if adj[x][y] && (x, y) != (s, t) && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[t] != usize::MAX {
            let len = dist[t] + 1;
            best = Some(best.map_or(len, |b| b.min(len)));
        }
    }
    best
}

/// All cycles of length `len` as vertex sets plus their edge sets, found by
/// extending paths from the least vertex.
fn brute_cycles(g: &SimpleGraph, len: usize) -> BTreeSet<BTreeSet<(usize, usize)>> {
    let adj = adjacency(g);
    let n = g.order();
    let mut found = BTreeSet::new();
    fn extend(
        adj: &[Vec<bool>],
        path: &mut Vec<usize>,
        len: usize,
        found: &mut BTreeSet<BTreeSet<(usize, usize)>>,
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() == len {
            if adj[last][start] {
                let mut edges: BTreeSet<(usize, usize)> = path
                    .windows(2)
                    .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                    .collect();
                edges.insert((start.min(last), start.max(last)));
                found.insert(edges);
            }
            return;
        }
        for next in start + 1..adj.len() {
            if adj[last][next] && !path.contains(&next) {
                path.push(next);
                extend(adj, path, len, found);
                path.pop();
            }
        }
    }
    for s in 0..n {
        extend(&adj, &mut vec![s], len, &mut found);
    }
    found
}

fn library_cycles(g: &SimpleGraph) -> BTreeSet<BTreeSet<(usize, usize)>> {
    let set = girth_cycles(g).unwrap();
    set.cycles()
        .iter()
        .map(|c| {
            let v = c.vertices();
            (0..v.len())
                .map(|i| {
                    let (a, b) = (v[i], v[(i + 1) % v.len()]);
                    (a.min(b), a.max(b))
                })
                .collect()
        })
        .collect()
}

/// Counts automorphisms by assigning images vertex by vertex in BFS order,
/// checking adjacency against every earlier assignment.
fn brute_automorphism_count(g: &SimpleGraph) -> u64 {
    let adj = adjacency(g);
    let n = g.order();
    let dist = g.distances_from(0);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (dist[v], v));
    fn assign(
        adj: &[Vec<bool>],
        order: &[usize],
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        depth: usize,
    ) -> u64 {
        if depth == order.len() {
            return 1;
        }
        let v = order[depth];
        let mut total = 0;
        for w in 0..adj.len() {
            if used[w] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                let iu = image[u].unwrap();
                adj[v][u] == adj[w][iu]
            });
            if consistent {
                image[v] = Some(w);
                used[w] = true;
                total += assign(adj, order, image, used, depth + 1);
                used[w] = false;
                image[v] = None;
            }
        }
        total
    }
    assign(&adj, &order, &mut vec![None; n], &mut vec![false; n], 0)
}

fn corpus() -> Vec<(String, SimpleGraph)> {
    let mut out = vec![
        ("petersen".to_string(), petersen()),
        ("dodecahedron".to_string(), dodecahedron()),
        ("coxeter".to_string(), coxeter()),
        ("Pet(13,5)".to_string(), gen_petersen(13, 5).unwrap()),
    ];
    for n in 8..=12 {
        out.push((format!("A({n})"), a_graph(n).unwrap()));
    }
    out
}

#[test]
fn girth_matches_edge_deletion() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs = corpus();
    for n in (10..=60).step_by(10) {
        graphs.push((
            format!("random {n}"),
            random_cubic_graph(n, &mut rng).unwrap(),
        ));
    }
    for (name, g) in graphs {
        assert_eq!(girth(&g), girth_by_edge_deletion(&g), "{name}");
    }
}

#[test]
fn girth_cycles_match_exhaustive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut graphs = corpus();
    for n in [20, 30, 40, 60] {
        graphs.push((
            format!("random {n}"),
            random_cubic_graph(n, &mut rng).unwrap(),
        ));
    }
    for (name, g) in graphs {
        let gi = girth(&g).unwrap();
        assert_eq!(library_cycles(&g), brute_cycles(&g, gi), "{name}");
    }
}

#[test]
fn known_girth_cycle_counts() {
    // Petersen: 12 pentagons; dodecahedron: 12 faces; Coxeter: 24 heptagons.
    assert_eq!(girth_cycles(&petersen()).unwrap().len(), 12);
    assert_eq!(girth_cycles(&dodecahedron()).unwrap().len(), 12);
    assert_eq!(brute_cycles(&coxeter(), 7).len(), 24);
}

#[test]
fn automorphism_orders_match_backtracking() {
    for (name, g) in corpus() {
        let brute = brute_automorphism_count(&g);
        let group = automorphism_group(&g);
        assert_eq!(group.order(), &brute.into(), "{name}");
        assert_eq!(group.stabilizer_chain().order(), brute.into(), "{name}");
    }
    assert_eq!(brute_automorphism_count(&coxeter()), 336);
    assert_eq!(brute_automorphism_count(&petersen()), 120);
}

#[test]
fn ball_identity_matches_bfs() {
    let mut graphs = vec![coxeter(), klein_map().unwrap().skeleton().clone()];
    graphs.extend((9..=15).map(|n| a_graph(n).unwrap()));
    for g in graphs {
        let sig = girth_regular_signature(&g).unwrap();
        for v in 0..g.order() {
            let dist = g.distances_from(v);
            let inside: Vec<bool> = dist.iter().map(|d| d.is_some_and(|d| d <= 3)).collect();
            let size = inside.iter().filter(|&&b| b).count();
            let boundary = g
                .edges()
                .iter()
                .filter(|&&(a, b)| inside[a] != inside[b])
                .count();
            let cut = ball_cut_identity(&g, v).unwrap();
            assert_eq!(cut.ball_size, size);
            assert_eq!(size, 22);
            assert_eq!(cut.boundary, boundary);
            assert_eq!(36, boundary + sig.sum() + 12);
            assert_eq!(cut.sphere_degree_sum(), 36);
        }
    }
}
