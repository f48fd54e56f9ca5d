//! Seeded graph generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha
//! 0.3, rand 0.8 sampling), which produces the same stream on every platform.

use super::{Graph, Vertex};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi `G(n, p)`. Pairs `(u, v)`, `u < v`, are visited in
/// lexicographic order and each is kept when a uniform `f64` in `[0, 1)`
/// falls below `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(n, p, &mut rng)
}

pub(crate) fn random_graph_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Uniform labeled tree: a Prüfer sequence of length `n - 2` with entries
/// drawn by `gen_range(0..n)`, then decoded.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

pub(crate) fn random_tree_with<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    match n {
        0 => Err(Error::EmptyGraph),
        1 => Ok(Graph::empty(1)),
        _ => {
            let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &seq)
        }
    }
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` into its tree.
pub fn prufer_decode(n: usize, seq: &[Vertex]) -> Result<Graph> {
    if n < 2 {
        return if n == 1 && seq.is_empty() {
            Ok(Graph::empty(1))
        } else {
            Err(Error::EmptyGraph)
        };
    }
    if seq.len() != n - 2 {
        return Err(Error::InvalidFamily(format!(
            "Prüfer sequence for {n} vertices must have length {}",
            n - 2
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange {
            vertex: bad,
            order: n,
        });
    }

    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    // Linear-time decoding: `ptr` scans for the smallest leaf, `leaf` may
    // drop below it when a sequence entry turns into a leaf.
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_probabilities() {
        assert_eq!(random_graph(5, 0.0, 3).unwrap(), Graph::empty(5));
        let k5 = random_graph(5, 1.0, 3).unwrap();
        assert_eq!(k5.size(), 10);
        assert!(random_graph(5, 1.5, 0).is_err());
        assert!(random_graph(5, f64::NAN, 0).is_err());
    }

    #[test]
    fn small_trees() {
        assert_eq!(random_tree(1, 9).unwrap(), Graph::empty(1));
        assert_eq!(random_tree(2, 9).unwrap(), Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(random_tree(0, 9), Err(Error::EmptyGraph));
    }

    #[test]
    fn prufer_known_sequence() {
        // Classic textbook example: [3, 3, 3, 4] on 6 vertices.
        let t = prufer_decode(6, &[3, 3, 3, 4]).unwrap();
        assert_eq!(t.edges(), &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn prufer_rejects_bad_input() {
        assert!(prufer_decode(4, &[0]).is_err());
        assert!(prufer_decode(4, &[0, 4]).is_err());
    }
}
