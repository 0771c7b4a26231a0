use crate::error::{Error, Result};
use crate::extended::Finite;
use crate::graph::{distances, girth, Graph};

/// For a shortest cycle `cycle` and any vertex `v`, a cycle vertex `x` with
/// `dist(x, u) <= dist(v, u)` for every cycle vertex `u`.
///
/// Take `y` on the cycle nearest to `v` (first in cycle order). If
/// `d = dist(v, y) < ⌊g/2⌋`, `x` is a cycle vertex at distance `d` from `y`;
/// otherwise any cycle vertex is tried. The domination property is checked
/// before returning.
pub fn girth_projection(g: &Graph, cycle: &[usize], v: usize) -> Result<usize> {
    validate_shortest_cycle(g, cycle)?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let dist = distances(g);
    let len = cycle.len();
    let (pos_y, d) = cycle
        .iter()
        .enumerate()
        .filter_map(|(i, &y)| dist.get(v, y).finite().map(|d| (i, d as usize)))
        .min_by_key(|&(i, d)| (d, i))
        .ok_or_else(|| Error::InvalidCycle(format!("vertex {v} cannot reach the cycle")))?;
    let candidates: Vec<usize> = if d < len / 2 {
        vec![cycle[(pos_y + d) % len], cycle[(pos_y + len - d % len) % len]]
    } else {
        cycle.to_vec()
    };
    candidates
        .into_iter()
        .find(|&x| cycle.iter().all(|&u| dist.get(x, u) <= dist.get(v, u)))
        .ok_or_else(|| Error::InvalidCycle(format!("no projection for vertex {v}")))
}

fn validate_shortest_cycle(g: &Graph, cycle: &[usize]) -> Result<()> {
    let len = cycle.len();
    if len < 3 {
        return Err(Error::InvalidCycle("fewer than 3 vertices".into()));
    }
    let mut seen = crate::graph::VertexSet::empty();
    for (i, &u) in cycle.iter().enumerate() {
        if u >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
        }
        if seen.contains(u) {
            return Err(Error::InvalidCycle(format!("vertex {u} repeated")));
        }
        seen.insert(u);
        let w = cycle[(i + 1) % len];
        if !g.has_edge(u, w) {
            return Err(Error::InvalidCycle(format!("{u} and {w} are not adjacent")));
        }
    }
    if girth(g) != Finite(len as u32) {
        return Err(Error::InvalidCycle(format!(
            "length {len} differs from the girth {}",
            girth(g)
        )));
    }
    Ok(())
}
