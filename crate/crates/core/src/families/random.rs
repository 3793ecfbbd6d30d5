use rand::seq::SliceRandom;
use rand::Rng;

use super::FamilyError;
use crate::graph::{MultiGraph, SimpleGraph};

/// Uniform random cubic simple graph on `n` vertices via the pairing model
/// with rejection of loops and parallel edges.
pub fn random_cubic_graph<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<SimpleGraph, FamilyError> {
    if n % 2 == 1 {
        return Err(FamilyError::OddDegreeSum { n, degree: 3 });
    }
    if n < 4 {
        return Err(FamilyError::NTooSmall { value: n, min: 4 });
    }
    loop {
        let pairs = random_pairing(n, 3, rng);
        let mut sorted: Vec<(usize, usize)> =
            pairs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        sorted.sort_unstable();
        let simple = sorted.iter().all(|&(u, v)| u != v) && sorted.windows(2).all(|w| w[0] != w[1]);
        if simple {
            return Ok(SimpleGraph::new(n, sorted).expect("pairing produced a simple graph"));
        }
    }
}

/// Random loop-free `degree`-regular multigraph (pairing model, loops rejected).
pub fn random_regular_multigraph<R: Rng + ?Sized>(
    n: usize,
    degree: usize,
    rng: &mut R,
) -> Result<MultiGraph, FamilyError> {
    if (n * degree) % 2 == 1 {
        return Err(FamilyError::OddDegreeSum { n, degree });
    }
    if n < 2 {
        return Err(FamilyError::NTooSmall { value: n, min: 2 });
    }
    loop {
        let pairs = random_pairing(n, degree, rng);
        if pairs.iter().all(|&(u, v)| u != v) {
            return Ok(MultiGraph::new(n, pairs).expect("loop-free pairing"));
        }
    }
}

/// A uniformly random cyclic order of the arcs at each vertex.
pub fn random_rotation_scheme<R: Rng + ?Sized>(g: &MultiGraph, rng: &mut R) -> Vec<Vec<usize>> {
    g.arcs_by_tail()
        .into_iter()
        .map(|arcs| {
            let mut ids: Vec<usize> = arcs.iter().map(|a| a.id()).collect();
            ids.shuffle(rng);
            ids
        })
        .collect()
}

fn random_pairing<R: Rng + ?Sized>(n: usize, degree: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let mut points: Vec<usize> = (0..n)
        .flat_map(|v| std::iter::repeat_n(v, degree))
        .collect();
    points.shuffle(rng);
    points.chunks(2).map(|c| (c[0], c[1])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_cubic_is_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in (4..40).step_by(2) {
            let g = random_cubic_graph(n, &mut rng).unwrap();
            assert!(g.is_cubic());
        }
        assert!(random_cubic_graph(9, &mut rng).is_err());
    }

    #[test]
    fn random_multigraph_is_regular() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = random_regular_multigraph(6, 7, &mut rng).unwrap();
        assert!(g.is_regular(7));
        let scheme = random_rotation_scheme(&g, &mut rng);
        assert!(scheme.iter().all(|r| r.len() == 7));
    }
}
