use std::collections::VecDeque;

use serde::Serialize;

use super::{subsets_of_size, Graph, VertexSet};
use crate::error::{Error, Result};
use crate::extended::{Extended, Finite, Infinite};

/// All-pairs hop distances. Pairs in different components are `Infinite`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<Extended>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Extended {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Extended] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// `dist(v, S)`; infinite for empty `S`.
    pub fn to_set(&self, v: usize, s: VertexSet) -> Extended {
        s.iter().map(|u| self.get(u, v)).min().unwrap_or(Infinite)
    }

    /// `max_v dist(v, S)`.
    pub fn cover_radius(&self, s: VertexSet) -> Extended {
        (0..self.n).map(|v| self.to_set(v, s)).max().unwrap_or(Finite(0))
    }

    pub fn eccentricity(&self, v: usize) -> Extended {
        self.row(v).iter().copied().max().unwrap_or(Finite(0))
    }

    /// Minimum eccentricity; infinite for disconnected graphs, 0 for `n = 0`.
    pub fn radius(&self) -> Extended {
        (0..self.n).map(|v| self.eccentricity(v)).min().unwrap_or(Finite(0))
    }

    pub fn diameter(&self) -> Extended {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(Finite(0))
    }

    /// Vertices of minimum eccentricity.
    pub fn center(&self) -> VertexSet {
        let r = self.radius();
        (0..self.n).filter(|&v| self.eccentricity(v) == r).collect()
    }

    /// Vertices within distance `r` of `v`.
    pub fn ball(&self, v: usize, r: u32) -> VertexSet {
        (0..self.n).filter(|&u| self.get(v, u) <= Finite(r)).collect()
    }
}

/// BFS distances from every vertex.
pub fn distances(g: &Graph) -> DistanceTable {
    let n = g.n();
    let mut d = vec![Infinite; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = Finite(0);
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        let mut layer = 0;
        while !frontier.is_empty() {
            layer += 1;
            let next = g.closed_neighbors_of_set(frontier) - seen;
            for v in next {
                row[v] = Finite(layer);
            }
            seen |= next;
            frontier = next;
        }
    }
    DistanceTable { n, d }
}

/// Length of a shortest cycle; `Infinite` for forests.
pub fn girth(g: &Graph) -> Extended {
    let n = g.n();
    let mut best = Infinite;
    let mut depth = vec![0u32; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        let mut seen = VertexSet::singleton(root);
        depth[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if Finite(2 * depth[u] + 1) >= best {
                break;
            }
            for w in g.neighbors(u) {
                if !seen.contains(w) {
                    seen.insert(w);
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(Finite(depth[u] + depth[w] + 1));
                }
            }
        }
    }
    best
}

/// A cycle of length `girth(g)`, as vertices in cyclic order, or `None` for
/// forests. Among shortest cycles the one through the lexicographically
/// smallest edge is returned.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for (u, v) in g.edges() {
        let h = g.without_edge(u, v);
        let Some(path) = shortest_path(&h, u, v) else {
            continue;
        };
        if best.as_ref().is_none_or(|b| path.len() < b.len()) {
            best = Some(path);
        }
    }
    best
}

/// Vertex sequence of a shortest `from`-`to` path, BFS with lowest-index
/// parents.
pub(crate) fn shortest_path(g: &Graph, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u) - seen {
            seen.insert(w);
            parent[w] = u;
            queue.push_back(w);
        }
    }
    None
}

/// `γ(G)` with a minimum dominating set.
///
/// Iterative deepening on the size bound; each level branches on which
/// member of `N[u]` dominates the lowest undominated vertex `u`, so every
/// dominating set of the bound's size is reachable.
pub fn domination_number(g: &Graph) -> (usize, VertexSet) {
    let all = g.vertices();
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();

    fn search(
        closed: &[VertexSet],
        all: VertexSet,
        chosen: VertexSet,
        dominated: VertexSet,
        left: usize,
    ) -> Option<VertexSet> {
        let Some(u) = (all - dominated).first() else {
            return Some(chosen);
        };
        if left == 0 {
            return None;
        }
        for w in closed[u] {
            if let Some(found) = search(closed, all, chosen.with(w), dominated | closed[w], left - 1) {
                return Some(found);
            }
        }
        None
    }

    for size in 0..=g.n() {
        if let Some(d) = search(&closed, all, VertexSet::empty(), VertexSet::empty(), size) {
            return (d.len(), d);
        }
    }
    unreachable!("the whole vertex set dominates")
}

/// `rad_k(G) = min_{|S|=k} max_v dist(v, S)` with a witness `S`.
pub fn k_radius(g: &Graph, k: usize) -> Result<(Extended, VertexSet)> {
    k_radius_with(g, &distances(g), k)
}

pub(crate) fn k_radius_with(
    g: &Graph,
    dist: &DistanceTable,
    k: usize,
) -> Result<(Extended, VertexSet)> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "k-radius needs 1 <= k <= n, got k={k} for n={n}"
        )));
    }
    let mut best = Infinite;
    let mut witness = VertexSet::full(k);
    'sets: for s in subsets_of_size(n, k) {
        let mut worst = Finite(0);
        for v in 0..n {
            let d = dist.to_set(v, s);
            if d > worst {
                worst = d;
                if worst >= best {
                    continue 'sets;
                }
            }
        }
        best = worst;
        witness = s;
        if best == Finite(0) {
            break;
        }
    }
    Ok((best, witness))
}

/// Outcome of greedy corner deletion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CopWinCertificate {
    pub cop_win: bool,
    /// `(corner, dominating vertex)` in deletion order.
    pub deletions: Vec<(usize, usize)>,
    /// Vertices left when no corner remained (a single vertex iff cop-win).
    pub remaining: VertexSet,
}

impl CopWinCertificate {
    /// The dismantling order: deleted corners followed by the survivor.
    pub fn order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.deletions.iter().map(|&(u, _)| u).collect();
        if self.cop_win {
            order.extend(self.remaining.iter());
        }
        order
    }
}

/// Dismantlability test, deleting the lowest-index corner first.
pub fn is_cop_win(g: &Graph) -> CopWinCertificate {
    let mut alive = g.vertices();
    let mut deletions = Vec::new();
    while alive.len() > 1 {
        let corner = alive.iter().find_map(|u| {
            let nu = g.closed_neighbors(u) & alive;
            (alive.without(u))
                .iter()
                .find(|&v| nu.is_subset(g.closed_neighbors(v)))
                .map(|v| (u, v))
        });
        match corner {
            Some((u, v)) => {
                deletions.push((u, v));
                alive.remove(u);
            }
            None => break,
        }
    }
    CopWinCertificate {
        cop_win: alive.len() == 1,
        deletions,
        remaining: alive,
    }
}

/// Connected components of `G - blue`, each as a vertex set, ordered by
/// their lowest vertex.
pub fn components_avoiding(g: &Graph, blue: VertexSet) -> Vec<VertexSet> {
    let mut white = g.vertices() - blue;
    let mut out = Vec::new();
    while let Some(v) = white.first() {
        let comp = g.reachable_within(v, white);
        white -= comp;
        out.push(comp);
    }
    out
}
