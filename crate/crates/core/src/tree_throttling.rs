//! Throttling on trees and unicyclic graphs: the `⌊√n⌋` forcing-set
//! construction, its variant with vertices known to be blue, the exact
//! `min_k (k + rad_k)` formula, and the cycle-then-tree strategy for
//! unicyclic graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extended::{Extended, Finite};
use crate::graph::{distances, k_radius_with, shortest_cycle, Graph, VertexSet};
use crate::pursuit::{CaptBound, CopConfig, KCapture, ThrottleResult};
use crate::zero_forcing::{propagation_time_only, Rule};

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Distances inside a subtree where vertices of `known` are free: the
/// distance from `a` to `b` is the number of vertices outside `known` on the
/// path, not counting `a`. That is the time for `b` to turn blue when `a`
/// is blue. With `known` empty this is the hop distance.
struct Subtree<'a> {
    t: &'a Graph,
    known: VertexSet,
}

impl Subtree<'_> {
    /// Distances from `src` to every vertex of `within`, with BFS parents.
    fn from(&self, within: VertexSet, src: usize) -> (Vec<u32>, Vec<usize>) {
        let n = self.t.n();
        let mut count = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        count[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for w in (self.t.neighbors(u) & within).iter() {
                if count[w] == u32::MAX {
                    count[w] = count[u] + u32::from(!self.known.contains(w));
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        (count, parent)
    }

    /// Lowest-index center of `within` and its eccentricity.
    fn center(&self, within: VertexSet) -> (usize, u32) {
        within
            .iter()
            .map(|c| {
                let (d, _) = self.from(within, c);
                (c, within.iter().map(|v| d[v]).max().unwrap_or(0))
            })
            .min_by_key(|&(c, e)| (e, c))
            .expect("subtree is nonempty")
    }

    fn run(&self) -> VertexSet {
        let n_prime = self.t.n() - self.known.len();
        let t = isqrt(n_prime) as u32;
        let mut s = self.known;
        let mut within = self.t.vertices();
        let (mut c, mut r) = self.center(within);
        while r > t {
            let (d, parent) = self.from(within, c);
            let v = within.iter().find(|&v| d[v] == r).expect("eccentric vertex");
            // Walk from v toward c as far as distance t allows.
            let mut u = v;
            let mut cost = 0;
            while cost + u32::from(!self.known.contains(u)) <= t {
                cost += u32::from(!self.known.contains(u));
                u = parent[u];
            }
            s.insert(u);
            within = self.t.reachable_within(c, within.without(u));
            (c, r) = self.center(within);
        }
        s.insert(c);
        s
    }
}

fn check_tree(t: &Graph) -> Result<()> {
    if t.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(())
}

/// A PSD forcing set `S` of a tree with `|S| <= ⌊√n⌋` and
/// `pt_+(T; S) <= ⌊√n⌋`. Ties pick the lowest index.
pub fn algorithm1(t: &Graph) -> Result<VertexSet> {
    algorithm1_modified(t, VertexSet::empty())
}

/// The construction above when the vertices of `x` are already blue:
/// distances ignore `x` and `n' = n - |x|`. Returns `S ⊇ x` with
/// `|S| <= |x| + ⌊√n'⌋` and `pt_+(T; S) <= ⌊√n'⌋`.
pub fn algorithm1_modified(t: &Graph, x: VertexSet) -> Result<VertexSet> {
    check_tree(t)?;
    if !x.is_subset(t.vertices()) {
        return Err(Error::InvalidParameter("known-blue set has vertices outside the tree".into()));
    }
    Ok(Subtree { t, known: x }.run())
}

/// `th_c(T) = min_k (k + rad_k(T))`, which equals `th_+(T)` on trees.
pub fn tree_cop_throttle(t: &Graph) -> Result<ThrottleResult> {
    check_tree(t)?;
    let n = t.n();
    let dist = distances(t);
    let mut best: Option<(u32, usize, u32, VertexSet)> = None;
    let mut table = Vec::new();
    for k in 1..=n {
        if best.as_ref().is_some_and(|b| k as u32 >= b.0) {
            break;
        }
        let (rad, center) = k_radius_with(t, &dist, k)?;
        let Finite(r) = rad else { unreachable!("trees are connected") };
        table.push(KCapture { k, capt: CaptBound::Exact(rad) });
        if best.as_ref().is_none_or(|b| k as u32 + r < b.0) {
            best = Some((k as u32 + r, k, r, center));
        }
    }
    let (thc, k, capture_time, witness) = best.expect("k = 1 always runs");
    Ok(ThrottleResult {
        thc,
        k,
        capture_time,
        witness: CopConfig::from_set(witness),
        table,
    })
}

/// Evenly spaced blue set on `C_k` minimizing `|S| + pt_+`, for vertices
/// `0..k` in cycle order.
pub fn cycle_throttle_set(k: usize) -> Result<(u32, VertexSet)> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs k >= 3, got {k}")));
    }
    let mut best = (k as u32, VertexSet::full(k));
    for s in 2..k {
        let gap = (k - s).div_ceil(s);
        let th = (s + gap.div_ceil(2)) as u32;
        if th < best.0 {
            best = (th, (0..s).map(|i| i * k / s).collect());
        }
    }
    Ok(best)
}

/// The cycle-first forcing strategy on a unicyclic graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnicyclicPlan {
    /// The cycle, in order.
    pub cycle: Vec<usize>,
    /// Blue vertices chosen on the cycle.
    pub cycle_set: VertexSet,
    /// Forcing time of the cycle alone.
    pub cycle_time: u32,
    /// Blue vertices chosen off the cycle by the modified tree construction
    /// on the graph with the cycle contracted.
    pub tree_set: VertexSet,
    /// Forcing time bound of the contracted tree from its set.
    pub tree_time: u32,
    /// Time to finish from the blue cycle plus `tree_set`, simulated on `G`.
    pub finish_time: u32,
    pub set: VertexSet,
    /// `|set| + cycle_time + finish_time`: the throttling value achieved by
    /// forcing the cycle first.
    pub staged_throttle: u32,
    /// `|set| + pt_+(G; set)` with all forces allowed from the start.
    pub direct_throttle: Extended,
}

/// Forces the cycle with an optimal evenly spaced set, then the rest from
/// the modified tree construction run with the contracted cycle known blue.
pub fn unicyclic_strategy(g: &Graph) -> Result<UnicyclicPlan> {
    if !g.is_connected() || g.n() == 0 || g.edge_count() != g.n() {
        return Err(Error::InvalidParameter("graph is not unicyclic".into()));
    }
    let cycle = shortest_cycle(g).expect("n edges on n connected vertices");
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    let k = cycle.len();
    let (_, spaced) = cycle_throttle_set(k)?;
    let cycle_set: VertexSet = spaced.iter().map(|i| cycle[i]).collect();
    let cycle_graph = crate::families::cycle(k)?;
    let Finite(cycle_time) = propagation_time_only(&cycle_graph, spaced, Rule::Psd) else {
        unreachable!("two or more spaced vertices force a cycle")
    };

    // Contract the cycle to vertex 0; other vertices keep their order.
    let rest: Vec<usize> = (g.vertices() - on_cycle).iter().collect();
    let mut index = vec![0usize; g.n()];
    for (i, &v) in rest.iter().enumerate() {
        index[v] = i + 1;
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        match (on_cycle.contains(u), on_cycle.contains(v)) {
            (true, true) => {}
            _ => edges.push((index[u], index[v])),
        }
    }
    let tree = Graph::from_edges(rest.len() + 1, edges)?;
    let st = algorithm1_modified(&tree, VertexSet::singleton(0))?;
    let Finite(tree_time) = propagation_time_only(&tree, st, Rule::Psd) else {
        unreachable!("the construction returns a forcing set")
    };
    let tree_set: VertexSet = st.without(0).iter().map(|i| rest[i - 1]).collect();
    let set = cycle_set | tree_set;
    let Finite(finish_time) = propagation_time_only(g, on_cycle | tree_set, Rule::Psd) else {
        unreachable!("a blue cycle plus a tree forcing set forces G")
    };
    Ok(UnicyclicPlan {
        cycle,
        cycle_set,
        cycle_time,
        tree_set,
        tree_time,
        finish_time,
        set,
        staged_throttle: set.len() as u32 + cycle_time + finish_time,
        direct_throttle: propagation_time_only(g, set, Rule::Psd) + set.len() as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::zero_forcing::throttle;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn worked_path_example() {
        // Path vertices 1..9 are 0..8 here.
        let p9 = path(9).unwrap();
        let s = algorithm1(&p9).unwrap();
        assert_eq!(propagation_time_only(&p9, s, Rule::Psd), Finite(3));
        assert!(s.len() <= 3);
        assert_eq!(algorithm1_modified(&p9, set(&[3])).unwrap(), set(&[2, 3, 6]));
        assert_eq!(propagation_time_only(&p9, set(&[2, 3, 6]), Rule::Psd), Finite(2));
    }

    #[test]
    fn small_trees() {
        assert_eq!(algorithm1(&path(1).unwrap()).unwrap(), set(&[0]));
        assert!(matches!(algorithm1(&cycle(4).unwrap()), Err(Error::NotATree)));
        assert!(matches!(algorithm1(&Graph::empty(0).unwrap()), Err(Error::EmptyGraph)));
        assert_eq!(algorithm1(&star(8).unwrap()).unwrap(), set(&[0]));
    }

    #[test]
    fn postconditions_on_random_trees() {
        for seed in 0..100 {
            let n = 1 + (seed as usize * 7) % 60;
            let t = random_tree(n, seed).unwrap();
            let s = algorithm1(&t).unwrap();
            let r = isqrt(n) as u32;
            assert!(s.len() as u32 <= r, "seed={seed}");
            assert!(propagation_time_only(&t, s, Rule::Psd) <= Finite(r), "seed={seed}");
            let x = VertexSet::singleton(seed as usize % n);
            let s = algorithm1_modified(&t, x).unwrap();
            let r = isqrt(n - 1) as u32;
            assert!(x.is_subset(s));
            assert!(s.len() as u32 <= 1 + r, "seed={seed}");
            assert!(propagation_time_only(&t, s, Rule::Psd) <= Finite(r), "seed={seed}");
        }
    }

    #[test]
    fn tree_throttle_examples() {
        assert_eq!(tree_cop_throttle(&path(10).unwrap()).unwrap().thc, 4);
        for h in 1..=4 {
            assert_eq!(tree_cop_throttle(&full_binary_tree(h).unwrap()).unwrap().thc, h as u32 + 1);
        }
        for seed in 0..20 {
            let t = random_tree(10, seed).unwrap();
            assert_eq!(tree_cop_throttle(&t).unwrap().thc, throttle(&t, Rule::Psd).unwrap().th);
        }
    }

    #[test]
    fn spaced_cycle_sets_are_optimal() {
        for k in 3..=12 {
            let (th, s) = cycle_throttle_set(k).unwrap();
            let c = cycle(k).unwrap();
            assert_eq!(propagation_time_only(&c, s, Rule::Psd) + s.len() as u32, Finite(th));
            assert_eq!(throttle(&c, Rule::Psd).unwrap().th, th, "C_{k}");
        }
    }

    #[test]
    fn unicyclic_plan_is_consistent() {
        for seed in 0..40 {
            let g = random_unicyclic(5 + seed as usize, seed).unwrap();
            let plan = unicyclic_strategy(&g).unwrap();
            assert!(plan.finish_time <= plan.tree_time);
            assert!(plan.direct_throttle <= Finite(plan.staged_throttle));
            assert_eq!(plan.set, plan.cycle_set | plan.tree_set);
        }
        let c = cycle(9).unwrap();
        let plan = unicyclic_strategy(&c).unwrap();
        assert_eq!(plan.staged_throttle, 4);
        assert!(unicyclic_strategy(&path(4).unwrap()).is_err());
    }
}
