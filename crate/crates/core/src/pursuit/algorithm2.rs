use super::CopConfig;
use crate::graph::Graph;

/// Decides whether two cops can catch the robber within two rounds,
/// returning the first successful start `{c1, c2}` (`c1 <= c2`).
///
/// Robber starts inside `N[{c1, c2}]` are caught in the first round; every
/// other start `r` needs replies `c1' in N[c1]`, `c2' in N[c2]` with
/// `N[r] ⊆ N[{c1', c2'}]`.
pub fn algorithm2_two_in_two(g: &Graph) -> Option<CopConfig> {
    let n = g.n();
    for c1 in 0..n {
        for c2 in c1..n {
            let start = g.closed_neighbors(c1) | g.closed_neighbors(c2);
            let mut sum = 0;
            for r in (0..n).filter(|&r| !start.contains(r)) {
                let mut flag = 0;
                for c1p in g.closed_neighbors(c1).iter() {
                    for c2p in g.closed_neighbors(c2).iter() {
                        let guard = g.closed_neighbors(c1p) | g.closed_neighbors(c2p);
                        if g.closed_neighbors(r).is_subset(guard) {
                            flag = 1;
                        }
                    }
                }
                sum += flag;
            }
            if sum == n - start.len() {
                return Some(CopConfig::new(vec![c1, c2]));
            }
        }
    }
    None
}
