//! Deterministic generators for the named graph families, clique and vertex
//! sums, and seeded random trees and unicyclic graphs.
//!
//! Vertex numbering:
//! - `path(n)`: `0 - 1 - ... - n-1`.
//! - `cycle(n)`: `0 - 1 - ... - n-1 - 0`.
//! - `star(k)`: hub `0`, leaves `1..=k`.
//! - `wheel(m)` (order `m+1`): center `0`, cycle vertices `1..=m` in order.
//! - `stellated_wheel(m)` (order `2m+1`): as `wheel(m)`, plus stellation
//!   vertex `m+i` adjacent to cycle vertices `i` and `i % m + 1`.
//! - `full_binary_tree(h)`: heap order, root `0`, children of `i` are
//!   `2i+1` and `2i+2`.
//! - `grid(a, b)`: `(i, j)` with `0 <= i < a`, `0 <= j < b` is `i*b + j`.
//! - `hypercube(m)`: vertex `x` is the bit string of `x`.
//! - `projective_incidence(q)`: points `0..N`, lines `N..2N` with
//!   `N = q^2+q+1`, both in the order `(1,a,b)`, `(0,1,a)`, `(0,0,1)`
//!   (lexicographic in `a`, `b`).
//! - sums: the first summand keeps its labels, the second summand's
//!   non-identified vertices follow in increasing order.

pub mod fixtures;
mod random;
mod spec;

pub use random::{random_tree, random_unicyclic};
pub(crate) use random::random_tree_with;
pub use spec::{FamilySpec, FAMILY_NAMES};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn param_err(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param_err(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|v| (0..v).map(move |u| (u, v))))
}

pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

/// `K_{1,k}`.
pub fn star(k: usize) -> Result<Graph> {
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

/// `W_{m+1}`: a dominating center joined to `C_m`.
pub fn wheel(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(param_err(format!("wheel needs m >= 3, got {m}")));
    }
    let spokes = (1..=m).map(|i| (0, i));
    let rim = (1..=m).map(|i| (i, i % m + 1));
    Graph::from_edges(m + 1, spokes.chain(rim))
}

/// `SW_{2m+1}`: the wheel `W_{m+1}` with a degree-2 vertex over each rim edge.
pub fn stellated_wheel(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(param_err(format!("stellated wheel needs m >= 3, got {m}")));
    }
    let mut g = Graph::empty(2 * m + 1)?;
    for (u, v) in wheel(m)?.edges() {
        g.add_edge(u, v)?;
    }
    for i in 1..=m {
        g.add_edge(m + i, i)?;
        g.add_edge(m + i, i % m + 1)?;
    }
    Ok(g)
}

/// `T_B(h)`, order `2^{h+1} - 1`.
pub fn full_binary_tree(h: usize) -> Result<Graph> {
    if h < 1 {
        return Err(param_err("full binary tree needs h >= 1"));
    }
    let n = (1usize << (h + 1)) - 1;
    Graph::from_edges(n, (1..n).map(|i| ((i - 1) / 2, i)))
}

/// `P_a □ P_b`.
pub fn grid(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(param_err("grid sides must be positive"));
    }
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if i + 1 < a {
                edges.push((i * b + j, (i + 1) * b + j));
            }
            if j + 1 < b {
                edges.push((i * b + j, i * b + j + 1));
            }
        }
    }
    Graph::from_edges(a * b, edges)
}

/// `Q_m`.
pub fn hypercube(m: usize) -> Result<Graph> {
    if m > 6 {
        return Err(Error::TooManyVertices(1 << m));
    }
    let n = 1usize << m;
    Graph::from_edges(
        n,
        (0..n).flat_map(|x| (0..m).filter(move |&b| x >> b & 1 == 0).map(move |b| (x, x | 1 << b))),
    )
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid edges")
}

pub(crate) fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Normalized nonzero vectors of `GF(q)^3`: `(1,a,b)`, `(0,1,a)`, `(0,0,1)`.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for a in 0..q {
        pts.push([0, 1, a]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// Incidence graph of the projective plane over `GF(q)`, `q` prime.
pub fn projective_incidence(q: usize) -> Result<Graph> {
    if !is_prime(q) {
        return Err(param_err(format!("projective plane order must be prime, got {q}")));
    }
    let pts = projective_points(q);
    let n = pts.len();
    let mut edges = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0 {
                edges.push((i, n + j));
            }
        }
    }
    Graph::from_edges(2 * n, edges)
}

/// Order of `IG(P_q)`.
pub fn projective_order(q: usize) -> usize {
    2 * (q * q + q + 1)
}

/// The graph `G_n`: `IG(P_q)` for the largest prime `q` with
/// `2(q^2+q+1) <= n`, with a path vertex-summed at point `0` to reach order
/// `n`. Returns the graph and `q`.
pub fn meyniel_extremal(n: usize) -> Result<(Graph, usize)> {
    let q = (2..=n)
        .take_while(|&q| projective_order(q) <= n)
        .filter(|&q| is_prime(q))
        .last()
        .ok_or_else(|| param_err(format!("meyniel extremal graph needs n >= 14, got {n}")))?;
    let ig = projective_incidence(q)?;
    let k = n - ig.n() + 1;
    if k == 1 {
        return Ok((ig, q));
    }
    Ok((vertex_sum(&ig, 0, &path(k)?, 0)?, q))
}

/// `H_n`: the 7-vertex fixture with a path of order `n - 6` vertex-summed
/// at its attachment vertex. The path continues from that vertex with labels
/// `7..n`.
pub fn max_capture_hn(n: usize) -> Result<Graph> {
    if n < 7 {
        return Err(param_err(format!("H_n needs n >= 7, got {n}")));
    }
    let h7 = fixtures::h7();
    if n == 7 {
        return Ok(h7);
    }
    vertex_sum(&h7, fixtures::H7_ATTACH, &path(n - 6)?, 0)
}

/// Vertex sum of `g1` and `g2` identifying `v1` with `v2`.
pub fn vertex_sum(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    clique_sum(g1, &[v1], g2, &[v2])
}

/// Clique sum identifying `k1[i]` with `k2[i]`. Both lists must induce
/// cliques of the same size `m`, and each summand must have more than `m`
/// vertices.
pub fn clique_sum(g1: &Graph, k1: &[usize], g2: &Graph, k2: &[usize]) -> Result<Graph> {
    if k1.len() != k2.len() {
        return Err(param_err(format!(
            "clique sizes differ: {} vs {}",
            k1.len(),
            k2.len()
        )));
    }
    let m = k1.len();
    if m == 0 {
        return Err(param_err("clique sum needs a nonempty clique"));
    }
    for (g, k, side) in [(g1, k1, "first"), (g2, k2, "second")] {
        if g.n() <= m {
            return Err(param_err(format!("{side} summand has order <= clique size")));
        }
        for (i, &u) in k.iter().enumerate() {
            if u >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
            }
            for &v in &k[..i] {
                if u == v || !g.has_edge(u, v) {
                    return Err(Error::NotAClique(format!("{side} summand: {u}, {v}")));
                }
            }
        }
    }
    let n1 = g1.n();
    let mut map = vec![usize::MAX; g2.n()];
    for (&a, &b) in k1.iter().zip(k2) {
        map[b] = a;
    }
    for (slot, id) in map.iter_mut().filter(|s| **s == usize::MAX).zip(n1..) {
        *slot = id;
    }
    let mut g = Graph::empty(n1 + g2.n() - m)?;
    for (u, v) in g1.edges() {
        g.add_edge(u, v)?;
    }
    for (u, v) in g2.edges() {
        g.add_edge(map[u], map[v])?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extended::Finite;
    use crate::graph::{distances, domination_number, girth};

    fn assert_valid(g: &Graph) {
        assert!(Graph::from_adjacency(g.adjacency().to_vec()).is_ok());
    }

    #[test]
    fn stellated_wheel_shape() {
        for m in 3..=10 {
            let g = stellated_wheel(m).unwrap();
            assert_valid(&g);
            assert_eq!(g.n(), 2 * m + 1);
            assert_eq!(g.degree(0), m);
            assert!((1..=m).all(|i| g.degree(i) == 5));
            assert!((m + 1..=2 * m).all(|i| g.degree(i) == 2));
        }
        assert_eq!(domination_number(&stellated_wheel(10).unwrap()).0, 5);
        assert!(stellated_wheel(2).is_err());
    }

    #[test]
    fn binary_tree_shape() {
        assert_eq!(full_binary_tree(1).unwrap(), path(3).unwrap().relabel(&[1, 0, 2]).unwrap());
        let t = full_binary_tree(2).unwrap();
        assert_eq!((0..t.n()).filter(|&v| t.degree(v) == 1).count(), 4);
        let t3 = full_binary_tree(3).unwrap();
        assert_eq!(t3.n(), 15);
        assert!(t3.is_tree());
        assert_eq!(distances(&t3).eccentricity(0), Finite(3));
        assert_eq!(t3.degree(0), 2);
        assert!(full_binary_tree(0).is_err());
    }

    #[test]
    fn grid_and_hypercube_counts() {
        for a in 1..5 {
            for b in 1..5 {
                let g = grid(a, b).unwrap();
                assert_eq!(g.n(), a * b);
                assert_eq!(g.edge_count(), a * (b - 1) + b * (a - 1));
            }
        }
        for m in 0..=5 {
            let q = hypercube(m).unwrap();
            assert_eq!(q.n(), 1 << m);
            assert!((0..q.n()).all(|v| q.degree(v) == m));
        }
    }

    #[test]
    fn projective_planes() {
        let h = projective_incidence(2).unwrap();
        assert_eq!(h.n(), 14);
        assert!((0..14).all(|v| h.degree(v) == 3));
        assert_eq!(girth(&h), Finite(6));
        let p3 = projective_incidence(3).unwrap();
        assert_eq!(p3.n(), 26);
        assert!((0..26).all(|v| p3.degree(v) == 4));
        assert_eq!(girth(&p3), Finite(6));
        assert!(projective_incidence(4).is_err());
    }

    #[test]
    fn meyniel_extremal_order() {
        let (g, q) = meyniel_extremal(20).unwrap();
        assert_eq!((g.n(), q), (20, 2));
        assert!(g.is_connected());
        let (g, q) = meyniel_extremal(30).unwrap();
        assert_eq!((g.n(), q), (30, 3));
        assert_eq!(meyniel_extremal(14).unwrap().0, projective_incidence(2).unwrap());
        assert!(meyniel_extremal(13).is_err());
    }

    #[test]
    fn sums() {
        let p4 = path(4).unwrap();
        let g = vertex_sum(&p4, 3, &p4, 0).unwrap();
        assert_eq!(g, path(7).unwrap());

        let k3 = complete(3).unwrap();
        let mut pend = Graph::empty(4).unwrap();
        for (u, v) in k3.edges() {
            pend.add_edge(u, v).unwrap();
        }
        pend.add_edge(0, 3).unwrap();
        let g = clique_sum(&pend, &[0, 1, 2], &pend, &[0, 1, 2]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(0), 4);

        assert!(matches!(clique_sum(&p4, &[0, 2], &p4, &[0, 1]), Err(Error::NotAClique(_))));
        assert!(clique_sum(&p4, &[0], &p4, &[0, 1]).is_err());
        assert!(vertex_sum(&complete(1).unwrap(), 0, &p4, 0).is_err());
    }

    #[test]
    fn hn_orders() {
        for n in 7..=12 {
            let g = max_capture_hn(n).unwrap();
            assert_eq!(g.n(), n);
            assert!(g.is_connected());
        }
        assert!(max_capture_hn(6).is_err());
    }
}
