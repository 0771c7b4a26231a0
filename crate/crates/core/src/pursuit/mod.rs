//! Exact Cops and Robbers: capture times of placements, `capt_k`, the cop
//! number, the cop-throttling number and bounded "`k` cops within `p`
//! rounds" queries.
//!
//! A round is a cop turn (every cop stays or steps to a neighbor) followed by
//! a robber turn (stay or step). Capture is co-location, including the
//! robber stepping onto a cop. A robber placed on a cop is caught in 0
//! rounds. Several cops may share a vertex.

mod algorithm2;
mod shadow;
mod solver;
mod trace;

pub use algorithm2::algorithm2_two_in_two;
pub use shadow::psd_shadow_capture;
pub use solver::{CaptureSearch, GameValue};
pub use trace::{game_trace, GameTrace, TraceRound};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extended::{Extended, Finite, Infinite};
use crate::graph::{distances, domination_number, Graph, VertexSet};

/// Default cap on stored game states (`n^k * n`).
pub const DEFAULT_STATE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub state_budget: u64,
    /// Restrict initial placements to sets. A repeated vertex never beats the
    /// set it collapses to (the spare cop can shadow its twin), so this gives
    /// the same optimum with fewer candidates.
    pub sets_only: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            state_budget: DEFAULT_STATE_BUDGET,
            sets_only: false,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(state_budget: u64) -> Self {
        SolverConfig {
            state_budget,
            ..Self::default()
        }
    }
}

/// Sorted multiset of cop positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CopConfig(Vec<usize>);

impl CopConfig {
    pub fn new(mut cops: Vec<usize>) -> Self {
        cops.sort_unstable();
        CopConfig(cops)
    }

    pub(crate) fn from_sorted(cops: Vec<usize>) -> Self {
        debug_assert!(cops.windows(2).all(|w| w[0] <= w[1]));
        CopConfig(cops)
    }

    pub fn from_set(s: VertexSet) -> Self {
        CopConfig(s.to_vec())
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::InvalidParameter("cop placement is empty".into()));
        }
        match self.0.iter().find(|&&c| c >= g.n()) {
            Some(&c) => Err(Error::VertexOutOfRange { vertex: c, n: g.n() }),
            None => Ok(()),
        }
    }
}

/// `capt(G; S)`: rounds needed from placement `s` against the worst robber.
pub fn capture_time_of_set(g: &Graph, s: &CopConfig, cfg: &SolverConfig) -> Result<Extended> {
    s.validate(g)?;
    let set = s.to_set();
    if set == g.vertices() {
        return Ok(Finite(0));
    }
    // A dominating placement catches in one round whatever its size; this
    // keeps large placements away from the n^k state space.
    if !set.is_empty() && g.closed_neighbors_of_set(set) == g.vertices() {
        return Ok(Finite(1));
    }
    solver::capture_time_of_tuple(g, s.positions(), cfg.state_budget)
}

/// Placement used when `k >= n`: every vertex covered, spares on vertex 0.
fn covering_config(n: usize, k: usize) -> CopConfig {
    CopConfig::new((0..n).chain(std::iter::repeat_n(0, k - n)).collect())
}

/// `capt_k(G)` with an optimal placement (`None` when infinite).
pub fn k_capture_time(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<(Extended, Option<CopConfig>)> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if k >= g.n() {
        return Ok((Finite(0), Some(covering_config(g.n(), k))));
    }
    Ok(match solver::min_capture(g, k, None, cfg.state_budget, cfg.sets_only)? {
        CaptureSearch::Found(t, c) => (Finite(t), Some(c)),
        _ => (Infinite, None),
    })
}

/// Bounded query: is `capt_k(G) <= p`?
pub fn can_catch_within(g: &Graph, k: usize, p: u32, cfg: &SolverConfig) -> Result<bool> {
    Ok(catch_within_witness(g, k, p, cfg)?.is_some())
}

/// A placement of `k` cops that captures within `p` rounds, if any.
pub fn catch_within_witness(g: &Graph, k: usize, p: u32, cfg: &SolverConfig) -> Result<Option<CopConfig>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if k >= g.n() {
        return Ok(Some(covering_config(g.n(), k)));
    }
    Ok(match solver::min_capture(g, k, Some(p), cfg.state_budget, cfg.sets_only)? {
        CaptureSearch::Found(_, c) => Some(c),
        _ => None,
    })
}

/// `c(G)`: the fewest cops with finite capture time.
pub fn cop_number(g: &Graph, cfg: &SolverConfig) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (gamma, _) = domination_number(g);
    for k in 1..gamma {
        if let CaptureSearch::Found(..) = solver::min_capture(g, k, None, cfg.state_budget, cfg.sets_only)? {
            return Ok(k);
        }
    }
    Ok(gamma)
}

/// What is known about `capt_k` after a throttling search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum CaptBound {
    Exact(Extended),
    AtLeast(Extended),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KCapture {
    pub k: usize,
    pub capt: CaptBound,
}

/// `th_c(G)` with an optimal `(k, placement)` and the per-`k` evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThrottleResult {
    pub thc: u32,
    pub k: usize,
    pub capture_time: u32,
    pub witness: CopConfig,
    pub table: Vec<KCapture>,
}

/// `th_c(G) = min_k (k + capt_k(G))`.
///
/// Only `k < γ(G)` can beat the dominating-set candidate `γ + 1`; a `k` is
/// skipped outright when `k + rad_k(G)` already reaches the best value
/// (`capt_k >= rad_k`), otherwise its game is solved only as far as the
/// rounds that could still improve on the best.
pub fn cop_throttle(g: &Graph, cfg: &SolverConfig) -> Result<ThrottleResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let (gamma, dom) = domination_number(g);
    let dom_capt = if gamma == n { 0 } else { 1 };
    let mut best = ThrottleResult {
        thc: (gamma + dom_capt) as u32,
        k: gamma,
        capture_time: dom_capt as u32,
        witness: CopConfig::from_set(dom),
        table: Vec::new(),
    };
    let dist = distances(g);
    let mut table = Vec::with_capacity(gamma);
    for k in 1..gamma {
        let (rad, _) = crate::graph::k_radius_with(g, &dist, k)?;
        let lower = rad + k as u32;
        if lower >= Finite(best.thc) {
            table.push(KCapture { k, capt: CaptBound::AtLeast(rad) });
            continue;
        }
        let limit = best.thc - k as u32 - 1;
        let capt = match solver::min_capture(g, k, Some(limit), cfg.state_budget, cfg.sets_only)? {
            CaptureSearch::Found(t, c) => {
                best.thc = k as u32 + t;
                best.k = k;
                best.capture_time = t;
                best.witness = c;
                CaptBound::Exact(Finite(t))
            }
            CaptureSearch::AboveLimit => CaptBound::AtLeast(Finite(limit + 1)),
            CaptureSearch::Never => CaptBound::Exact(Infinite),
        };
        table.push(KCapture { k, capt });
    }
    table.push(KCapture {
        k: gamma,
        capt: CaptBound::Exact(Finite(dom_capt as u32)),
    });
    best.table = table;
    Ok(best)
}

/// `capt_k(G)` for `k = 1..=max_k`, each solved to completion.
pub fn capture_profile(g: &Graph, max_k: usize, cfg: &SolverConfig) -> Result<Vec<Extended>> {
    (1..=max_k).map(|k| k_capture_time(g, k, cfg).map(|(t, _)| t)).collect()
}
