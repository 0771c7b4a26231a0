//! Cop strategy read off a PSD forcing chronology.
//!
//! Cops start on the initial blue set. At step `t` every force `v -> w`
//! whose target lies in the robber's current white component is played by
//! the cop on `v` moving to `w`; all other cops stay. The robber then plays
//! optimally against this fixed, position-aware strategy.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::extended::{Extended, Finite, Infinite};
use crate::graph::{Graph, VertexSet};
use crate::zero_forcing::{ForcingRecord, Rule};

struct Shadow<'a> {
    g: &'a Graph,
    record: &'a ForcingRecord,
    /// Blue set at the start of each step, `blue[t]` after `t` steps.
    blue: Vec<VertexSet>,
    memo: HashMap<(usize, usize), Extended>,
}

impl Shadow<'_> {
    /// White component of `G - blue[t]` containing `r`.
    fn component(&self, t: usize, r: usize) -> VertexSet {
        let allowed = self.g.vertices() - self.blue[t];
        let mut comp = VertexSet::singleton(r);
        loop {
            let next = (self.g.closed_neighbors_of_set(comp)) & allowed;
            if next == comp {
                return comp;
            }
            comp = next;
        }
    }

    /// Cop counts after the cop moves of rounds `1..=t+1`, for a robber that
    /// sits in the white component of `r` at every time up to `t`.
    fn cops_after(&self, t: usize, r: usize) -> Result<Vec<u32>> {
        let mut cops = vec![0u32; self.g.n()];
        for v in self.record.initial.iter() {
            cops[v] += 1;
        }
        for j in 0..=t {
            let Some(step) = self.record.steps.get(j) else { break };
            let comp = self.component(j, r);
            for f in step.forces.iter().filter(|f| comp.contains(f.forced)) {
                if cops[f.forcer] == 0 {
                    return Err(Error::InvalidForcingRecord(format!(
                        "no cop on {} to follow its force at step {}",
                        f.forcer, step.step
                    )));
                }
                cops[f.forcer] -= 1;
                cops[f.forced] += 1;
            }
        }
        Ok(cops)
    }

    /// Rounds to capture for a robber on white vertex `r` after `t` rounds.
    fn value(&mut self, t: usize, r: usize) -> Result<Extended> {
        if let Some(&v) = self.memo.get(&(t, r)) {
            return Ok(v);
        }
        let round = t as u32 + 1;
        let cops = self.cops_after(t, r)?;
        let v = if cops[r] > 0 {
            Finite(round)
        } else if t >= self.record.steps.len() {
            // The chronology is exhausted and the cops stop moving.
            Infinite
        } else {
            let mut best = Finite(round);
            for r2 in self.g.closed_neighbors(r).iter().filter(|&x| cops[x] == 0) {
                if self.blue[t + 1].contains(r2) {
                    return Err(Error::InvalidForcingRecord(format!(
                        "robber reaches unguarded blue vertex {r2} in round {round}"
                    )));
                }
                best = best.max(self.value(t + 1, r2)?);
            }
            best
        };
        self.memo.insert((t, r), v);
        Ok(v)
    }
}

/// Worst-case capture time of the cop strategy that shadows a valid PSD
/// forcing chronology for `s`. Never exceeds the chronology's length.
pub fn psd_shadow_capture(g: &Graph, s: VertexSet, record: &ForcingRecord) -> Result<Extended> {
    if record.rule != Rule::Psd {
        return Err(Error::InvalidForcingRecord("expected a PSD chronology".into()));
    }
    if record.initial != s {
        return Err(Error::InvalidForcingRecord("chronology starts from a different set".into()));
    }
    if s.is_empty() {
        return Err(Error::InvalidForcingRecord("no cops to place".into()));
    }
    record.validate(g)?;
    let blue = (0..=record.steps.len()).map(|t| record.blue_after(t)).collect();
    let mut shadow = Shadow { g, record, blue, memo: HashMap::new() };
    let mut worst = Finite(0);
    for r in (g.vertices() - s).iter() {
        worst = worst.max(shadow.value(0, r)?);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, random_tree};
    use crate::graph::distances;
    use crate::zero_forcing::propagation_time;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn shadow(g: &Graph, s: VertexSet) -> Extended {
        let (_, rec) = propagation_time(g, s, Rule::Psd);
        psd_shadow_capture(g, s, &rec).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(shadow(&path(9).unwrap(), set(&[3, 6])), Finite(3));
        assert_eq!(shadow(&cycle(6).unwrap(), set(&[0, 3])), Finite(1));
        assert_eq!(shadow(&cycle(6).unwrap(), set(&[0])), Infinite);
    }

    #[test]
    fn tree_center_within_radius() {
        for seed in 0..20 {
            let t = random_tree(20, seed).unwrap();
            let d = distances(&t);
            let c = d.center().first().unwrap();
            assert!(shadow(&t, set(&[c])) <= d.radius());
        }
    }

    #[test]
    fn rejects_foreign_records() {
        let g = path(5).unwrap();
        let (_, rec) = propagation_time(&g, set(&[2]), Rule::Psd);
        assert!(psd_shadow_capture(&g, set(&[1]), &rec).is_err());
        let (_, rec) = propagation_time(&g, set(&[2]), Rule::Standard);
        assert!(psd_shadow_capture(&g, set(&[2]), &rec).is_err());
    }
}
