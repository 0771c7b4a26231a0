//! Graph burning.
//!
//! Step 1 ignites `seq[0]`. At step `t >= 2` fire spreads from every burned
//! vertex to its neighbors and `seq[t-1]` is ignited in the same step; the
//! ignited vertex must not have been burning at the end of step `t-1`. A
//! sequence burns the graph when every vertex is burning after its last
//! step. Under this timing a sequence is valid exactly when
//! `dist(seq[i], seq[j]) >= j - i` for `i < j`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BurnRun {
    /// Burning set after each completed step.
    pub trajectory: Vec<VertexSet>,
    /// Whether every ignition was legal.
    pub valid: bool,
    /// First illegal ignition, as `(step, vertex)`.
    pub invalid_at: Option<(usize, usize)>,
    pub success: bool,
}

/// Replays a burning sequence. Illegal ignitions end the run with
/// `valid = false` rather than an error.
pub fn burn_simulate(g: &Graph, seq: &[usize]) -> Result<BurnRun> {
    if let Some(&v) = seq.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut trajectory = Vec::with_capacity(seq.len());
    let mut burned = VertexSet::empty();
    for (i, &x) in seq.iter().enumerate() {
        if burned.contains(x) {
            return Ok(BurnRun {
                trajectory,
                valid: false,
                invalid_at: Some((i + 1, x)),
                success: false,
            });
        }
        burned = g.closed_neighbors_of_set(burned).with(x);
        trajectory.push(burned);
    }
    Ok(BurnRun {
        success: burned == g.vertices(),
        trajectory,
        valid: true,
        invalid_at: None,
    })
}

struct Search<'a> {
    g: &'a Graph,
    len: usize,
    failed: HashSet<(usize, VertexSet)>,
}

impl Search<'_> {
    fn extend(&mut self, seq: &mut Vec<usize>, burned: VertexSet) -> bool {
        let i = seq.len();
        if i == self.len {
            return burned == self.g.vertices();
        }
        if self.failed.contains(&(i, burned)) {
            return false;
        }
        let spread = self.g.closed_neighbors_of_set(burned);
        for x in (self.g.vertices() - burned).iter() {
            seq.push(x);
            if self.extend(seq, spread.with(x)) {
                return true;
            }
            seq.pop();
        }
        self.failed.insert((i, burned));
        false
    }
}

/// `b(G)` with a burning sequence attaining it. Lengths are tried upward from
/// 1, so no assumed upper bound can cut the search short.
pub fn burning_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    for len in 1..=g.n() {
        let mut search = Search { g, len, failed: HashSet::new() };
        let mut seq = Vec::with_capacity(len);
        if search.extend(&mut seq, VertexSet::empty()) {
            return Ok((len, seq));
        }
    }
    unreachable!("igniting every vertex in turn burns the graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn simulate_examples() {
        let p4 = path(4).unwrap();
        let run = burn_simulate(&p4, &[1, 3]).unwrap();
        assert!(run.valid && run.success);
        assert_eq!(run.trajectory.len(), 2);
        let k1 = complete(1).unwrap();
        assert!(burn_simulate(&k1, &[0]).unwrap().success);
        let run = burn_simulate(&p4, &[1, 1]).unwrap();
        assert!(!run.valid);
        assert_eq!(run.invalid_at, Some((2, 1)));
        assert!(burn_simulate(&p4, &[9]).is_err());
        let run = burn_simulate(&p4, &[0, 3]).unwrap();
        assert!(run.valid && !run.success);
    }

    #[test]
    fn burning_numbers() {
        assert_eq!(burning_number(&complete(1).unwrap()).unwrap().0, 1);
        for n in 2..7 {
            assert_eq!(burning_number(&complete(n).unwrap()).unwrap().0, 2);
        }
        assert_eq!(burning_number(&path(9).unwrap()).unwrap().0, 3);
        assert_eq!(burning_number(&path(2).unwrap()).unwrap().0, 2);
        assert_eq!(burning_number(&Graph::empty(3).unwrap()).unwrap().0, 3);
    }

    #[test]
    fn paths_need_ceiling_of_root() {
        for n in 1..=20usize {
            let want = (1..).find(|b| b * b >= n).unwrap();
            let (b, seq) = burning_number(&path(n).unwrap()).unwrap();
            assert_eq!(b, want, "P_{n}");
            assert!(burn_simulate(&path(n).unwrap(), &seq).unwrap().success);
        }
    }
}
