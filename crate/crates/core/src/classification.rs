//! Deciding `th_c(G) <= 4` from structural characterizations, without
//! computing the throttling number directly.
//!
//! - `th_c = 1` iff `G = K_1`.
//! - `th_c = 2` iff `n >= 2` and (`γ = 1` or `G = 2K_1`).
//! - `th_c = 3` iff not above and (a vertex `z` as in [`z_witness`]
//!   exists, or `γ = 2`, or `G = 3K_1`).
//! - `th_c = 4` iff not above and (`γ = 3`, or `G = 4K_1`, or two cops catch
//!   within two rounds, or one cop catches within three rounds).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extended::Finite;
use crate::graph::{distances, domination_number, Graph};
use crate::pursuit::{algorithm2_two_in_two, can_catch_within, CopConfig, SolverConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Trigger {
    SingleVertex,
    DominatingVertex { vertex: usize },
    TwoIsolated,
    ZVertex { z: usize },
    DominationTwo,
    ThreeIsolated,
    DominationThree,
    FourIsolated,
    TwoCopsTwoRounds { cops: CopConfig },
    OneCopThreeRounds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// `th_c(G)` when at most 4, otherwise 5 meaning "at least 5".
    pub class: u32,
    /// First condition that fired for the reported class.
    pub trigger: Option<Trigger>,
    /// Every condition that fired for the reported class.
    pub fired: Vec<Trigger>,
}

impl Classification {
    pub fn at_least_five(&self) -> bool {
        self.class >= 5
    }

    pub fn label(&self) -> String {
        if self.at_least_five() { ">=5".to_string() } else { self.class.to_string() }
    }
}

/// Neighborhood containment used by the `z` criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Subset,
    ProperSubset,
}

/// The lowest `z` with every vertex within distance 2 of `z` such that each
/// `w` outside `N[z]` has some `u ∈ N[z]` with `N[w] ⊆ N[u]`.
pub fn z_witness(g: &Graph) -> Option<usize> {
    z_witness_with(g, Containment::Subset)
}

/// As [`z_witness`] with the containment reading made explicit. The
/// readings agree: `N[w] = N[u]` with `u ∈ N[z]` would put `w` in `N[z]`.
pub fn z_witness_with(g: &Graph, containment: Containment) -> Option<usize> {
    let dist = distances(g);
    (0..g.n()).find(|&z| {
        if dist.eccentricity(z) > Finite(2) {
            return false;
        }
        let nz = g.closed_neighbors(z);
        (g.vertices() - nz).iter().all(|w| {
            let nw = g.closed_neighbors(w);
            nz.iter().any(|u| {
                let nu = g.closed_neighbors(u);
                match containment {
                    Containment::Subset => nw.is_subset(nu),
                    Containment::ProperSubset => nw.is_subset(nu) && nw != nu,
                }
            })
        })
    })
}

fn is_edgeless(g: &Graph, n: usize) -> bool {
    g.n() == n && g.edge_count() == 0
}

/// Classifies `th_c(G)` into 1, 2, 3, 4 or "at least 5".
pub fn classify_low_throttle(g: &Graph, cfg: &SolverConfig) -> Result<Classification> {
    let n = g.n();
    let done = |class: u32, fired: Vec<Trigger>| Classification {
        class,
        trigger: fired.first().cloned(),
        fired,
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n == 1 {
        return Ok(done(1, vec![Trigger::SingleVertex]));
    }
    let (gamma, dom) = domination_number(g);

    let mut fired = Vec::new();
    if n >= 2 && gamma == 1 {
        fired.push(Trigger::DominatingVertex { vertex: dom.first().unwrap() });
    }
    if is_edgeless(g, 2) {
        fired.push(Trigger::TwoIsolated);
    }
    if !fired.is_empty() {
        return Ok(done(2, fired));
    }

    if let Some(z) = z_witness(g) {
        fired.push(Trigger::ZVertex { z });
    }
    if gamma == 2 {
        fired.push(Trigger::DominationTwo);
    }
    if is_edgeless(g, 3) {
        fired.push(Trigger::ThreeIsolated);
    }
    if !fired.is_empty() {
        return Ok(done(3, fired));
    }

    if gamma == 3 {
        fired.push(Trigger::DominationThree);
    }
    if is_edgeless(g, 4) {
        fired.push(Trigger::FourIsolated);
    }
    if let Some(cops) = algorithm2_two_in_two(g) {
        fired.push(Trigger::TwoCopsTwoRounds { cops });
    }
    if can_catch_within(g, 1, 3, cfg)? {
        fired.push(Trigger::OneCopThreeRounds);
    }
    if !fired.is_empty() {
        return Ok(done(4, fired));
    }
    Ok(done(5, fired))
}
