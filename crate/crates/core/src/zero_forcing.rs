//! Standard and positive semidefinite (PSD) zero forcing: single color-change
//! steps, propagation times with force chronologies, minimum forcing sets and
//! throttling numbers.
//!
//! One time-step evaluates every force against the blue set (and, for PSD,
//! the white components) at the start of the step and applies them together.
//! Each newly forced vertex is recorded once, with its lowest-index forcer.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extended::{Extended, Finite, Infinite};
use crate::graph::{components_avoiding, distances, subsets_of_size, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    /// A blue vertex with exactly one white neighbor forces it.
    Standard,
    /// A blue vertex forces `w` when `w` is its only white neighbor inside
    /// the white component containing `w`.
    Psd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
    /// Index of the white component of the forced vertex (PSD only), in
    /// order of lowest vertex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingStep {
    pub step: u32,
    pub forces: Vec<Force>,
}

/// Time-stamped forces from an initial blue set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingRecord {
    pub rule: Rule,
    pub initial: VertexSet,
    pub steps: Vec<ForcingStep>,
}

impl ForcingRecord {
    /// Blue set after `t` steps.
    pub fn blue_after(&self, t: usize) -> VertexSet {
        self.steps
            .iter()
            .take(t)
            .flat_map(|s| s.forces.iter().map(|f| f.forced))
            .fold(self.initial, |b, w| b.with(w))
    }

    pub fn final_blue(&self) -> VertexSet {
        self.blue_after(self.steps.len())
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Checks that every recorded force is legal under the rule, given the
    /// blue set at the start of its step, and that no vertex is forced twice
    /// in one step. Forces may be a subset of those available.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if !self.initial.is_subset(g.vertices()) {
            return Err(Error::InvalidForcingRecord("initial set has vertices outside the graph".into()));
        }
        let mut blue = self.initial;
        for (i, step) in self.steps.iter().enumerate() {
            if step.step as usize != i + 1 {
                return Err(Error::InvalidForcingRecord(format!(
                    "step {} recorded at position {}",
                    step.step,
                    i + 1
                )));
            }
            let legal = rule_step(g, blue, self.rule);
            let mut forced = VertexSet::empty();
            for f in &step.forces {
                let ok = legal
                    .iter()
                    .any(|l| l.forcer == f.forcer && l.forced == f.forced)
                    || legal_alternate_forcer(g, blue, self.rule, f.forcer, f.forced);
                if !ok {
                    return Err(Error::InvalidForcingRecord(format!(
                        "{} cannot force {} at step {}",
                        f.forcer, f.forced, step.step
                    )));
                }
                if forced.contains(f.forced) {
                    return Err(Error::InvalidForcingRecord(format!(
                        "{} forced twice at step {}",
                        f.forced, step.step
                    )));
                }
                forced.insert(f.forced);
            }
            blue |= forced;
        }
        Ok(())
    }
}

/// `rule_step` keeps one forcer per vertex; this accepts any other legal one.
fn legal_alternate_forcer(g: &Graph, blue: VertexSet, rule: Rule, v: usize, w: usize) -> bool {
    if v >= g.n() || w >= g.n() || !blue.contains(v) || blue.contains(w) || !g.has_edge(v, w) {
        return false;
    }
    let white_nbrs = g.neighbors(v) - blue;
    match rule {
        Rule::Standard => white_nbrs.len() == 1,
        Rule::Psd => components_avoiding(g, blue)
            .into_iter()
            .find(|c| c.contains(w))
            .is_some_and(|c| (white_nbrs & c).len() == 1),
    }
}

/// All forces available from `blue` under the PSD rule.
pub fn psd_step(g: &Graph, blue: VertexSet) -> Vec<Force> {
    let comps = components_avoiding(g, blue);
    let mut forced = VertexSet::empty();
    let mut out = Vec::new();
    for v in blue.iter() {
        let white = g.neighbors(v) - blue;
        if white.is_empty() {
            continue;
        }
        for (ci, &comp) in comps.iter().enumerate() {
            let here = white & comp;
            if here.len() == 1 {
                let w = here.first().unwrap();
                if !forced.contains(w) {
                    forced.insert(w);
                    out.push(Force { forcer: v, forced: w, component: Some(ci) });
                }
            }
        }
    }
    out.sort_by_key(|f| f.forced);
    out
}

/// All forces available from `blue` under the standard rule.
pub fn standard_step(g: &Graph, blue: VertexSet) -> Vec<Force> {
    let mut forced = VertexSet::empty();
    let mut out = Vec::new();
    for v in blue.iter() {
        let white = g.neighbors(v) - blue;
        if white.len() == 1 {
            let w = white.first().unwrap();
            if !forced.contains(w) {
                forced.insert(w);
                out.push(Force { forcer: v, forced: w, component: None });
            }
        }
    }
    out.sort_by_key(|f| f.forced);
    out
}

pub fn rule_step(g: &Graph, blue: VertexSet, rule: Rule) -> Vec<Force> {
    match rule {
        Rule::Standard => standard_step(g, blue),
        Rule::Psd => psd_step(g, blue),
    }
}

/// `pt(G; S)` or `pt_+(G; S)` with the chronology of forces. Infinite when
/// the process stalls before everything is blue.
pub fn propagation_time(g: &Graph, s: VertexSet, rule: Rule) -> (Extended, ForcingRecord) {
    let mut record = ForcingRecord { rule, initial: s, steps: Vec::new() };
    let full = g.vertices();
    let mut blue = s & full;
    let mut t = 0;
    while blue != full {
        let forces = rule_step(g, blue, rule);
        if forces.is_empty() {
            return (Infinite, record);
        }
        t += 1;
        for f in &forces {
            blue.insert(f.forced);
        }
        record.steps.push(ForcingStep { step: t, forces });
    }
    (Finite(t), record)
}

/// Propagation time alone, without building a record.
pub fn propagation_time_only(g: &Graph, s: VertexSet, rule: Rule) -> Extended {
    let full = g.vertices();
    let mut blue = s & full;
    let mut t = 0;
    while blue != full {
        let next = match rule {
            Rule::Standard => {
                let mut b = blue;
                for v in blue.iter() {
                    let white = g.neighbors(v) - blue;
                    if white.len() == 1 {
                        b |= white;
                    }
                }
                b
            }
            Rule::Psd => {
                let mut b = blue;
                for comp in components_avoiding(g, blue) {
                    for v in blue.iter() {
                        let here = g.neighbors(v) & comp;
                        if here.len() == 1 {
                            b |= here;
                        }
                    }
                }
                b
            }
        };
        if next == blue {
            return Infinite;
        }
        blue = next;
        t += 1;
    }
    Finite(t)
}

pub fn is_forcing_set(g: &Graph, s: VertexSet, rule: Rule) -> bool {
    propagation_time_only(g, s, rule).is_finite()
}

/// `Z(G)` or `Z_+(G)` with the first forcing set found (by size, then
/// lexicographically).
pub fn forcing_number(g: &Graph, rule: Rule) -> (usize, VertexSet) {
    let n = g.n();
    for k in 0..=n {
        if let Some(s) = subsets_of_size(n, k).find(|&s| is_forcing_set(g, s, rule)) {
            return (k, s);
        }
    }
    unreachable!("the whole vertex set forces")
}

/// `th(G)` or `th_+(G)` with a witness set and its propagation time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcingThrottle {
    pub rule: Rule,
    pub th: u32,
    pub set: VertexSet,
    pub propagation_time: u32,
}

/// `min_S (|S| + pt(G; S))`.
///
/// A size is skipped once `|S| + 1` reaches the best value (only `S = V` has
/// time 0), and a set is skipped when `|S|` plus its largest distance to a
/// white vertex does (each step extends the blue set by at most one hop).
pub fn throttle(g: &Graph, rule: Rule) -> Result<ForcingThrottle> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let dist = distances(g);
    let mut best = ForcingThrottle {
        rule,
        th: n as u32,
        set: g.vertices(),
        propagation_time: 0,
    };
    for k in 1..n {
        if k as u32 + 1 >= best.th {
            break;
        }
        for s in subsets_of_size(n, k) {
            let lower = dist.cover_radius(s) + k as u32;
            if lower >= Finite(best.th) {
                continue;
            }
            if let Finite(t) = propagation_time_only(g, s, rule) {
                if k as u32 + t < best.th {
                    best.th = k as u32 + t;
                    best.set = s;
                    best.propagation_time = t;
                }
            }
        }
    }
    Ok(best)
}

/// `|S| + pt(G; S)`, infinite when `S` is not forcing.
pub fn throttle_of_set(g: &Graph, s: VertexSet, rule: Rule) -> Extended {
    propagation_time_only(g, s, rule) + s.len() as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn forced(fs: &[Force]) -> VertexSet {
        fs.iter().map(|f| f.forced).collect()
    }

    #[test]
    fn psd_step_examples() {
        let p5 = path(5).unwrap();
        assert_eq!(forced(&psd_step(&p5, set(&[2]))), set(&[1, 3]));
        let c6 = cycle(6).unwrap();
        assert!(psd_step(&c6, set(&[0])).is_empty());
        let fs = psd_step(&c6, set(&[0, 3]));
        assert_eq!(forced(&fs), set(&[1, 2, 4, 5]));
        let by: Vec<(usize, usize)> = fs.iter().map(|f| (f.forcer, f.forced)).collect();
        assert_eq!(by, vec![(0, 1), (3, 2), (3, 4), (0, 5)]);
    }

    #[test]
    fn standard_rule_differs_from_psd() {
        let star = star(3).unwrap();
        assert!(standard_step(&star, set(&[0])).is_empty());
        assert_eq!(forced(&psd_step(&star, set(&[0]))), set(&[1, 2, 3]));
        assert_eq!(forcing_number(&star, Rule::Standard).0, 2);
        assert_eq!(forcing_number(&path(7).unwrap(), Rule::Standard), (1, set(&[0])));
    }

    #[test]
    fn path_propagation_times() {
        // Vertices 1..9 of the worked example are 0..8 here.
        let p9 = path(9).unwrap();
        assert_eq!(propagation_time(&p9, set(&[3, 6]), Rule::Psd).0, Finite(3));
        assert_eq!(propagation_time(&p9, set(&[2, 3, 6]), Rule::Psd).0, Finite(2));
        assert_eq!(propagation_time(&p9, p9.vertices(), Rule::Psd).0, Finite(0));
        assert_eq!(propagation_time(&p9, VertexSet::empty(), Rule::Psd).0, Infinite);
    }

    #[test]
    fn tree_single_vertex_time_is_eccentricity() {
        for seed in 0..30 {
            let t = random_tree(15, seed).unwrap();
            let d = distances(&t);
            for v in 0..15 {
                assert_eq!(propagation_time_only(&t, set(&[v]), Rule::Psd), d.eccentricity(v));
            }
        }
    }

    #[test]
    fn records_replay_and_validate() {
        let g = petersen();
        let (t, rec) = propagation_time(&g, set(&[0, 1, 2, 3, 4]), Rule::Psd);
        assert_eq!(t, Finite(1));
        rec.validate(&g).unwrap();
        assert_eq!(rec.final_blue(), g.vertices());
        let mut bad = rec.clone();
        bad.steps[0].forces[0].forced = 9;
        bad.steps[0].forces[1].forced = 9;
        assert!(bad.validate(&g).is_err());
        let mut bad = rec;
        bad.steps[0].forces[0].forcer = 7;
        assert!(bad.validate(&g).is_err());
    }

    #[test]
    fn forcing_numbers() {
        for seed in 0..10 {
            assert_eq!(forcing_number(&random_tree(12, seed).unwrap(), Rule::Psd).0, 1);
        }
        for n in 3..10 {
            assert_eq!(forcing_number(&cycle(n).unwrap(), Rule::Psd).0, 2);
        }
        assert_eq!(forcing_number(&complete(5).unwrap(), Rule::Psd).0, 4);
        assert_eq!(forcing_number(&Graph::empty(3).unwrap(), Rule::Psd).0, 3);
    }

    #[test]
    fn throttling_numbers() {
        assert_eq!(throttle(&path(9).unwrap(), Rule::Psd).unwrap().th, 4);
        for (n, th) in [(4, 3), (5, 3), (6, 3), (7, 4), (8, 4), (11, 5)] {
            assert_eq!(throttle(&cycle(n).unwrap(), Rule::Psd).unwrap().th, th, "C_{n}");
        }
        let r = throttle(&path(9).unwrap(), Rule::Standard).unwrap();
        assert_eq!(throttle_of_set(&path(9).unwrap(), r.set, Rule::Standard), Finite(r.th));
        assert_eq!(throttle(&complete(1).unwrap(), Rule::Psd).unwrap().th, 1);
        assert!(throttle(&Graph::empty(0).unwrap(), Rule::Psd).is_err());
    }
}
