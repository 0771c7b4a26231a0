use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Uniform labelled tree on `n` vertices decoded from a seeded Prüfer
/// sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

pub(crate) fn random_tree_with<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|i| (0, i)));
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut leaves: VertexSet = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = leaves.first().expect("a Prüfer decode always has a leaf");
        leaves.remove(leaf);
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let last: Vec<usize> = leaves.iter().collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, edges)
}

/// A random tree plus one uniformly chosen non-edge: exactly one cycle.
pub fn random_unicyclic(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_unicyclic_with(n, &mut rng)
}

pub(crate) fn random_unicyclic_with<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "unicyclic graph needs n >= 3, got {n}"
        )));
    }
    let tree = random_tree_with(n, rng)?;
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    let (u, v) = non_edges[rng.gen_range(0..non_edges.len())];
    Graph::from_edges(n, tree.edges().chain([(u, v)]))
}
