use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::families::{self, clique_sum, complete, path, vertex_sum};
use crate::graph::{subsets_of_size, Graph, VertexSet};
use crate::zero_forcing::{is_forcing_set, Rule};

/// A random tree on `n` vertices plus each remaining pair with probability
/// drawn uniformly from `[0, 0.5)`.
pub fn random_connected_graph(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_connected_with(n, &mut rng)
}

fn random_connected_with<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    let tree = families::random_tree_with(n, rng)?;
    let p: f64 = rng.gen_range(0.0..0.5);
    let extra: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, tree.edges().chain(extra))
}

/// A random minimal PSD forcing set: vertices are added in random order
/// until the set forces, then dropped in another random order while it
/// still forces.
pub fn random_psd_set<R: Rng>(g: &Graph, rng: &mut R) -> VertexSet {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut s = VertexSet::empty();
    for &v in &order {
        if is_forcing_set(g, s, Rule::Psd) {
            break;
        }
        s.insert(v);
    }
    order.shuffle(rng);
    for &v in &order {
        if s.contains(v) && s.len() > 1 && is_forcing_set(g, s.without(v), Rule::Psd) {
            s.remove(v);
        }
    }
    s
}

/// A random subtree of `t` made by deleting random leaves; returns the
/// subtree relabelled to `0..m`.
pub fn random_subtree<R: Rng>(t: &Graph, rng: &mut R) -> Graph {
    let mut keep = t.vertices();
    let removals = rng.gen_range(0..t.n().max(1));
    for _ in 0..removals {
        let (sub, _) = t.induced_subgraph(keep);
        let leaves: Vec<usize> = keep
            .iter()
            .zip(0..)
            .filter(|&(_, i)| sub.degree(i) <= 1)
            .map(|(v, _)| v)
            .collect();
        if keep.len() <= 1 {
            break;
        }
        keep.remove(*leaves.choose(rng).expect("a tree with two vertices has leaves"));
    }
    t.induced_subgraph(keep).0
}

/// Two summands, the identified cliques (`k1[i]` with `k2[i]`) and the sum.
#[derive(Debug, Clone)]
pub struct CliqueSumInstance {
    pub g1: Graph,
    pub k1: Vec<usize>,
    pub g2: Graph,
    pub k2: Vec<usize>,
    pub sum: Graph,
}

impl CliqueSumInstance {
    pub fn new(g1: Graph, k1: Vec<usize>, g2: Graph, k2: Vec<usize>) -> Result<Self> {
        let sum = clique_sum(&g1, &k1, &g2, &k2)?;
        Ok(CliqueSumInstance { g1, k1, g2, k2, sum })
    }
}

fn cliques(g: &Graph, m: usize) -> Vec<Vec<usize>> {
    subsets_of_size(g.n(), m)
        .filter(|&s| s.iter().all(|u| (s - g.closed_neighbors(u)).is_empty()))
        .map(|s| s.to_vec())
        .collect()
}

/// Clique sum of two random connected graphs on 3..=6 vertices along a
/// common clique of size 1..=3.
pub fn random_clique_sum(seed: u64) -> Result<CliqueSumInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g1 = random_connected_with(rng.gen_range(3..=6), &mut rng)?;
    let g2 = random_connected_with(rng.gen_range(3..=6), &mut rng)?;
    let max_m = 3.min(g1.n() - 1).min(g2.n() - 1);
    let mut m = rng.gen_range(1..=max_m);
    loop {
        let (c1, c2) = (cliques(&g1, m), cliques(&g2, m));
        if !c1.is_empty() && !c2.is_empty() {
            let k1 = c1.choose(&mut rng).unwrap().clone();
            let mut k2 = c2.choose(&mut rng).unwrap().clone();
            k2.shuffle(&mut rng);
            return CliqueSumInstance::new(g1, k1, g2, k2);
        }
        m -= 1;
    }
}

/// The two extremal clique sums on `K_m`:
/// - two copies of `K_m` with a `P_4` leaf identified to clique vertex 0,
///   summed along the clique (throttling number 4);
/// - two copies of `K_m` with a leaf on clique vertex 0, summed so the two
///   degree-`m` vertices coincide (throttling number 2).
pub fn threshold_gadgets(m: usize) -> Result<(CliqueSumInstance, CliqueSumInstance)> {
    let clique: Vec<usize> = (0..m).collect();
    let tail = vertex_sum(&complete(m)?, 0, &path(4)?, 0)?;
    let upper = CliqueSumInstance::new(tail.clone(), clique.clone(), tail, clique.clone())?;
    let leaf = vertex_sum(&complete(m)?, 0, &path(2)?, 0)?;
    let lower = CliqueSumInstance::new(leaf.clone(), clique.clone(), leaf, clique)?;
    Ok((upper, lower))
}

/// Named graphs for the inequality suite: the families at small parameters
/// and `random` seeded connected graphs on 2..=10 vertices.
pub fn default_corpus(random: usize, seed: u64) -> Result<Vec<(String, Graph)>> {
    use crate::families::*;
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut add = |name: String, g: Graph| out.push((name, g));
    for n in 1..=10 {
        add(format!("path n={n}"), path(n)?);
    }
    for n in 3..=10 {
        add(format!("cycle n={n}"), cycle(n)?);
    }
    for n in 1..=6 {
        add(format!("complete n={n}"), complete(n)?);
    }
    for n in 1..=4 {
        add(format!("empty n={n}"), empty(n)?);
    }
    for k in 2..=6 {
        add(format!("star k={k}"), star(k)?);
    }
    for m in 3..=6 {
        add(format!("wheel m={m}"), wheel(m)?);
    }
    for m in 3..=5 {
        add(format!("stellated_wheel m={m}"), stellated_wheel(m)?);
    }
    for h in 1..=3 {
        add(format!("full_binary_tree h={h}"), full_binary_tree(h)?);
    }
    for (a, b) in [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4)] {
        add(format!("grid a={a} b={b}"), grid(a, b)?);
    }
    for m in 1..=3 {
        add(format!("hypercube m={m}"), hypercube(m)?);
    }
    add("petersen".into(), petersen());
    add("projective_incidence q=2".into(), projective_incidence(2)?);
    for n in 7..=9 {
        add(format!("max_capture_hn n={n}"), max_capture_hn(n)?);
    }
    add("fig2_tree".into(), fixtures::fig2_tree());
    add("fig3_unicyclic".into(), fixtures::fig3_unicyclic());
    add("fig4_tree".into(), fixtures::fig4_tree());
    for i in 0..random {
        let s = seed.wrapping_add(i as u64);
        let n = 2 + (s % 9) as usize;
        add(format!("random_connected n={n} seed={s}"), random_connected_graph(n, s)?);
    }
    Ok(out)
}
