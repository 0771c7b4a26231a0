//! Slow, direct oracles that share nothing with the library beyond the
//! adjacency of a `Graph`.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use copthrottle::Graph;

pub fn adj(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| (0..g.n()).filter(|&u| g.has_edge(u, v)).collect()).collect()
}

fn closed(adj: &[Vec<usize>], v: usize) -> Vec<usize> {
    let mut out = vec![v];
    out.extend(&adj[v]);
    out
}

/// Cops and robbers by plain recursion with memoization on
/// `(sorted cops, robber, rounds left)`.
pub struct NaiveGame {
    adj: Vec<Vec<usize>>,
    memo: HashMap<(Vec<usize>, usize, u32), bool>,
}

impl NaiveGame {
    pub fn new(g: &Graph) -> Self {
        NaiveGame { adj: adj(g), memo: HashMap::new() }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    /// Cops to move, robber on `r`; can they catch within `t` rounds?
    fn cops_win(&mut self, cops: &[usize], r: usize, t: u32) -> bool {
        if t == 0 {
            return false;
        }
        let key = (cops.to_vec(), r, t);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut moves: Vec<Vec<usize>> = vec![vec![]];
        for &c in cops {
            let step = closed(&self.adj, c);
            moves = moves
                .into_iter()
                .flat_map(|m| {
                    step.iter().map(move |&x| {
                        let mut m = m.clone();
                        m.push(x);
                        m
                    })
                })
                .collect();
        }
        let mut win = false;
        for mut m in moves {
            m.sort_unstable();
            if m.contains(&r) {
                win = true;
                break;
            }
            let escapes = closed(&self.adj, r);
            if escapes.iter().filter(|x| !m.contains(x)).all(|&r2| self.cops_win(&m, r2, t - 1)) {
                win = true;
                break;
            }
        }
        self.memo.insert(key, win);
        win
    }

    /// Some placement of `k` cops catches every robber within `p` rounds.
    pub fn catch_within(&mut self, k: usize, p: u32) -> bool {
        multisets(self.n(), k).into_iter().any(|cops| self.placement_catches(&cops, p))
    }

    pub fn placement_catches(&mut self, cops: &[usize], p: u32) -> bool {
        let mut cops = cops.to_vec();
        cops.sort_unstable();
        (0..self.n()).filter(|r| !cops.contains(r)).all(|r| self.cops_win(&cops, r, p))
    }

    /// `min(th_c, cap)`, trying every `k + p < cap`.
    pub fn throttle_capped(&mut self, cap: u32) -> u32 {
        for total in 1..cap {
            for k in 1..=total as usize {
                if self.catch_within(k, total - k as u32) {
                    return total;
                }
            }
        }
        cap
    }
}

pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in multisets(n, k - 1) {
        let lo = rest.last().copied().unwrap_or(0);
        for v in lo..n {
            let mut m = rest.clone();
            m.push(v);
            out.push(m);
        }
    }
    out
}

/// PSD forcing from `blue`: returns the number of steps to turn everything
/// blue, or `None` if it stalls.
pub fn psd_time(g: &Graph, start: &[usize]) -> Option<u32> {
    let adj = adj(g);
    let n = adj.len();
    let mut blue = vec![false; n];
    for &s in start {
        blue[s] = true;
    }
    let mut t = 0;
    while blue.iter().any(|b| !b) {
        // Label the white components.
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if blue[s] || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in &adj[u] {
                    if !blue[w] && comp[w] == usize::MAX {
                        comp[w] = next;
                        q.push_back(w);
                    }
                }
            }
            next += 1;
        }
        let mut forced = Vec::new();
        for b in (0..n).filter(|&b| blue[b]) {
            for c in 0..next {
                let white: Vec<usize> = adj[b].iter().copied().filter(|&w| comp[w] == c).collect();
                if white.len() == 1 {
                    forced.push(white[0]);
                }
            }
        }
        if forced.is_empty() {
            return None;
        }
        for w in forced {
            blue[w] = true;
        }
        t += 1;
    }
    Some(t)
}

/// All-pairs hop distances by BFS; `u32::MAX` when unreachable.
pub fn bfs_distances(g: &Graph) -> Vec<Vec<u32>> {
    let adj = adj(g);
    let n = adj.len();
    (0..n)
        .map(|s| {
            let mut d = vec![u32::MAX; n];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in &adj[u] {
                    if d[w] == u32::MAX {
                        d[w] = d[u] + 1;
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

/// `rad_k` by trying every `k`-subset.
pub fn k_radius(g: &Graph, k: usize) -> u32 {
    let d = bfs_distances(g);
    let n = g.n();
    let mut best = u32::MAX;
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let r = (0..n).map(|v| subset.iter().map(|&c| d[c][v]).min().unwrap()).max().unwrap();
        best = best.min(r);
        // Next k-subset in lexicographic order.
        let mut i = k;
        while i > 0 && subset[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return best;
        }
        subset[i - 1] += 1;
        for j in i..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}
