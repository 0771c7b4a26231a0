use serde::Serialize;

use super::solver::GameValue;
use super::CopConfig;
use crate::error::Result;
use crate::extended::{Extended, Finite, Infinite};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRound {
    pub round: u32,
    /// Ordered cop positions after the cop turn.
    pub cops: Vec<usize>,
    /// Robber position after the robber turn (or where it was caught).
    pub robber: usize,
    pub captured: bool,
}

/// One optimal play from a placement: worst robber start, then cops and
/// robber each pick a value-optimal move (lowest index on ties).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameTrace {
    pub cops: CopConfig,
    pub robber_start: usize,
    pub capture_time: Extended,
    pub rounds: Vec<TraceRound>,
}

fn joint_moves(g: &Graph, cops: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(cops.len())];
    for &c in cops {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                g.closed_neighbors(c).iter().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

/// Value for the cops of moving to `cops` against a robber on `r`.
fn after_cop_move(g: &Graph, gv: &GameValue, cops: &[usize], r: usize) -> (Extended, usize) {
    if cops.contains(&r) {
        return (Finite(0), r);
    }
    let mut best = (Finite(0), r);
    for r2 in g.closed_neighbors(r).iter() {
        let v = if cops.contains(&r2) { Finite(0) } else { gv.value(cops, r2) };
        if v > best.0 {
            best = (v, r2);
        }
    }
    best
}

/// Plays out the game from `cops`. An escaping robber is followed for `n`
/// rounds.
pub fn game_trace(g: &Graph, cops: &CopConfig, budget: u64) -> Result<GameTrace> {
    cops.validate(g)?;
    let gv = GameValue::solve(g, cops.len(), budget)?;
    let mut pos = cops.positions().to_vec();
    let (capture_time, robber_start) = (0..g.n())
        .map(|r| (gv.value(&pos, r), r))
        .fold((Finite(0), 0), |a, b| if b.0 > a.0 { b } else { a });
    let mut robber = robber_start;
    let mut rounds = Vec::new();
    let limit = match capture_time {
        Finite(t) => t,
        Infinite => g.n() as u32,
    };
    for round in 1..=limit {
        let (next, (_, reply)) = joint_moves(g, &pos)
            .into_iter()
            .map(|m| {
                let v = after_cop_move(g, &gv, &m, robber);
                (m, v)
            })
            .min_by_key(|(_, (v, _))| *v)
            .expect("staying put is always a move");
        pos = next;
        robber = reply;
        let captured = pos.contains(&robber);
        rounds.push(TraceRound { round, cops: pos.clone(), robber, captured });
        if captured {
            break;
        }
    }
    Ok(GameTrace { cops: cops.clone(), robber_start, capture_time, rounds })
}
