//! Simple undirected graphs on at most 64 vertices, their text formats and
//! the baseline invariants every other module builds on.

mod format;
mod invariants;
mod vertex_set;

pub use format::{encode_graph6, parse_edge_list, parse_graph6, to_edge_list};
pub use invariants::{
    components_avoiding, distances, domination_number, girth, is_cop_win, k_radius,
    shortest_cycle, CopWinCertificate, DistanceTable,
};
pub use vertex_set::{subsets_of_size, VertexSet, MAX_VERTICES};

pub(crate) use invariants::k_radius_with;

use crate::error::{Error, Result};

/// Immutable simple graph on vertices `0..n`.
///
/// `adj[v]` never contains `v` and adjacency is symmetric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::empty(); n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds from per-vertex neighbor masks, validating every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        for (v, nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if let Some(u) = (*nb - all).first() {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            for u in nb.iter() {
                if !adj[u].contains(v) {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency not symmetric between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N[S]`, the union of closed neighborhoods.
    pub fn closed_neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `δ(G)`; zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Vertices reachable from `start` inside `within` (which must contain it).
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier {
                next |= self.adj[v];
            }
            next = (next & within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable_within(0, self.vertices()) == self.vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Induced subgraph on `keep`, relabelled `0..|keep|` in increasing
    /// order. The second component maps new labels to old ones.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|u| new_of[u]).collect())
            .collect();
        (Graph { n: old.len(), adj }, old)
    }

    /// The same graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n || perm.iter().collect::<std::collections::HashSet<_>>().len() != self.n {
            return Err(Error::InvalidParameter("relabelling is not a permutation".into()));
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Copy with the edge `uv` deleted.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g
    }

    /// Disjoint union, `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.n;
        Graph::from_edges(
            self.n + other.n,
            self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off))),
        )
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(Graph::empty(65), Err(Error::TooManyVertices(65)));
    }

    #[test]
    fn from_adjacency_checks_symmetry() {
        let adj = vec![VertexSet::singleton(1), VertexSet::empty()];
        assert!(Graph::from_adjacency(adj).is_err());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (h, map) = g.induced_subgraph([1, 2, 3].into_iter().collect());
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edges_are_sorted_pairs() {
        let g = Graph::from_edges(4, [(3, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(g.edge_count(), 3);
    }
}
