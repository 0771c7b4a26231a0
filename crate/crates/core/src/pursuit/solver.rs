//! Retrograde solver for the `k`-cop game.
//!
//! States are ordered cop tuples `(c_0, .., c_{k-1})`, indexed as
//! `sum c_i n^i`, with the cops to move. For each tuple `T` and round bound
//! `t`, `W_t[T]` is the bit mask of robber positions from which the cops
//! capture within `t` rounds:
//!
//! - `W_0[T]` = the cop positions of `T`;
//! - a robber at `r` facing cops that just moved to `T'` is lost within `t`
//!   more rounds iff `N[r] ⊆ W_t[T']` (stepping onto a cop is capture);
//! - `W_{t+1}[T]` is the union over every joint move `T -> T'` of `T'`'s
//!   positions and those lost robber positions.
//!
//! The union over joint moves is a product over cops, so it is applied one
//! cop at a time (`k` passes of closed-neighborhood unions), which keeps an
//! iteration linear in the number of tuples. `W_t` only grows; once an
//! iteration changes nothing every unresolved state is a robber win.

use rayon::prelude::*;

use super::CopConfig;
use crate::error::{Error, Result};
use crate::extended::{Extended, Finite, Infinite};
use crate::graph::Graph;

const PAR_THRESHOLD: usize = 1 << 12;

pub(crate) struct Arena {
    n: usize,
    k: usize,
    closed: Vec<Vec<usize>>,
    closed_mask: Vec<u64>,
    pow: Vec<usize>,
    size: usize,
    full: u64,
}

/// Number of stored game states `n^k * n`, or `None` on overflow.
pub(crate) fn state_count(n: usize, k: usize) -> u128 {
    (n as u128).saturating_pow(k as u32).saturating_mul(n as u128)
}

impl Arena {
    pub(crate) fn new(g: &Graph, k: usize, budget: u64) -> Result<Self> {
        let n = g.n();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if k == 0 {
            return Err(Error::InvalidParameter("at least one cop is needed".into()));
        }
        let needed = state_count(n, k);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let pow: Vec<usize> = (0..k).map(|i| n.pow(i as u32)).collect();
        Ok(Arena {
            n,
            k,
            closed: (0..n).map(|v| g.closed_neighbors(v).to_vec()).collect(),
            closed_mask: (0..n).map(|v| g.closed_neighbors(v).bits()).collect(),
            size: n.pow(k as u32),
            pow,
            full: g.vertices().bits(),
        })
    }

    #[inline]
    fn digit(&self, idx: usize, j: usize) -> usize {
        idx / self.pow[j] % self.n
    }

    pub(crate) fn digits(&self, mut idx: usize) -> Vec<usize> {
        (0..self.k)
            .map(|_| {
                let d = idx % self.n;
                idx /= self.n;
                d
            })
            .collect()
    }

    pub(crate) fn index_of(&self, cops: &[usize]) -> usize {
        cops.iter().zip(&self.pow).map(|(&c, &p)| c * p).sum()
    }

    #[inline]
    fn cop_mask(&self, idx: usize) -> u64 {
        let mut m = 0u64;
        let mut rest = idx;
        for _ in 0..self.k {
            m |= 1u64 << (rest % self.n);
            rest /= self.n;
        }
        m
    }

    pub(crate) fn full(&self) -> u64 {
        self.full
    }

    fn fill(&self, out: &mut [u64], f: impl Fn(usize) -> u64 + Sync) {
        if out.len() >= PAR_THRESHOLD {
            out.par_iter_mut().enumerate().for_each(|(i, o)| *o = f(i));
        } else {
            out.iter_mut().enumerate().for_each(|(i, o)| *o = f(i));
        }
    }

    pub(crate) fn initial(&self) -> Vec<u64> {
        let mut w = vec![0u64; self.size];
        self.fill(&mut w, |i| self.cop_mask(i));
        w
    }

    /// `W_{t+1}` from `W_t`.
    pub(crate) fn step(&self, w: &[u64]) -> Vec<u64> {
        let mut cur = vec![0u64; self.size];
        self.fill(&mut cur, |i| {
            let wi = w[i];
            let mut lost = self.cop_mask(i);
            for (r, &nr) in self.closed_mask.iter().enumerate() {
                if nr & !wi == 0 {
                    lost |= 1u64 << r;
                }
            }
            lost
        });
        let mut next = vec![0u64; self.size];
        for j in 0..self.k {
            let p = self.pow[j];
            let src = &cur;
            self.fill(&mut next, |i| {
                let d = self.digit(i, j);
                let base = i - d * p;
                self.closed[d].iter().fold(0u64, |acc, &x| acc | src[base + x * p])
            });
            std::mem::swap(&mut cur, &mut next);
        }
        cur
    }

    /// Indices of sorted tuples; strictly increasing ones only when
    /// `sets_only` holds.
    pub(crate) fn canonical_indices(&self, sets_only: bool) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cops = vec![0usize; self.k];
        fn rec(a: &Arena, pos: usize, lo: usize, strict: bool, cops: &mut [usize], out: &mut Vec<usize>) {
            if pos == a.k {
                out.push(a.index_of(cops));
                return;
            }
            for c in lo..a.n {
                cops[pos] = c;
                rec(a, pos + 1, if strict { c + 1 } else { c }, strict, cops, out);
            }
        }
        rec(self, 0, 0, sets_only, &mut cops, &mut out);
        out
    }
}

/// Result of a bounded search for the best `k`-cop placement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaptureSearch {
    /// Optimal capture time and a placement achieving it.
    Found(u32, CopConfig),
    /// Every placement needs more rounds than the limit.
    AboveLimit,
    /// No placement captures the robber.
    Never,
}

/// Capture time of a fixed placement.
pub(crate) fn capture_time_of_tuple(g: &Graph, cops: &[usize], budget: u64) -> Result<Extended> {
    let arena = Arena::new(g, cops.len(), budget)?;
    let idx = arena.index_of(cops);
    let mut w = arena.initial();
    let mut t = 0;
    loop {
        if w[idx] == arena.full() {
            return Ok(Finite(t));
        }
        let next = arena.step(&w);
        if next[idx] == w[idx] && next == w {
            return Ok(Infinite);
        }
        w = next;
        t += 1;
    }
}

/// Minimum capture time over placements of `k` cops, giving up once `limit`
/// rounds have been ruled out.
pub(crate) fn min_capture(
    g: &Graph,
    k: usize,
    limit: Option<u32>,
    budget: u64,
    sets_only: bool,
) -> Result<CaptureSearch> {
    let arena = Arena::new(g, k, budget)?;
    let starts = arena.canonical_indices(sets_only);
    if starts.is_empty() {
        return Ok(CaptureSearch::Never);
    }
    let mut w = arena.initial();
    let mut t = 0u32;
    loop {
        if let Some(&idx) = starts.iter().find(|&&i| w[i] == arena.full()) {
            let mut cops = arena.digits(idx);
            cops.sort_unstable();
            return Ok(CaptureSearch::Found(t, CopConfig::from_sorted(cops)));
        }
        if limit.is_some_and(|l| t >= l) {
            return Ok(CaptureSearch::AboveLimit);
        }
        let next = arena.step(&w);
        if next == w {
            return Ok(CaptureSearch::Never);
        }
        w = next;
        t += 1;
    }
}

const UNRESOLVED: u16 = u16::MAX;

/// Exact value of every `(cop tuple, robber)` state with the cops to move:
/// the number of rounds to capture under optimal play, or `Infinite`.
#[derive(Debug, Clone)]
pub struct GameValue {
    n: usize,
    k: usize,
    values: Vec<u16>,
}

impl GameValue {
    pub fn solve(g: &Graph, k: usize, budget: u64) -> Result<Self> {
        let arena = Arena::new(g, k, budget)?;
        let n = arena.n;
        let mut values = vec![UNRESOLVED; arena.size * n];
        let mut w = arena.initial();
        let mut t: u16 = 0;
        loop {
            for (i, &mask) in w.iter().enumerate() {
                let row = &mut values[i * n..(i + 1) * n];
                for (r, slot) in row.iter_mut().enumerate() {
                    if *slot == UNRESOLVED && mask >> r & 1 == 1 {
                        *slot = t;
                    }
                }
            }
            let next = arena.step(&w);
            if next == w {
                break;
            }
            w = next;
            t += 1;
        }
        Ok(GameValue { n, k, values })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self, cops: &[usize]) -> usize {
        cops.iter().rev().fold(0, |acc, &c| acc * self.n + c)
    }

    /// Rounds to capture from `(cops, robber)` with the cops to move.
    pub fn value(&self, cops: &[usize], robber: usize) -> Extended {
        assert_eq!(cops.len(), self.k, "cop count mismatch");
        match self.values[self.index(cops) * self.n + robber] {
            UNRESOLVED => Infinite,
            v => Finite(v as u32),
        }
    }

    /// `capt(G; cops)`: the worst robber placement.
    pub fn capture_time(&self, cops: &[usize]) -> Extended {
        (0..self.n)
            .map(|r| self.value(cops, r))
            .max()
            .unwrap_or(Finite(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn budget_guard_reports_need() {
        let g = path(10).unwrap();
        match Arena::new(&g, 3, 100) {
            Err(Error::BudgetExceeded { needed, budget }) => {
                assert_eq!(needed, 10_000);
                assert_eq!(budget, 100);
            }
            _ => panic!("expected budget error"),
        }
    }

    #[test]
    fn tuple_indexing_round_trips() {
        let g = cycle(5).unwrap();
        let a = Arena::new(&g, 3, u64::MAX).unwrap();
        for idx in [0, 7, 42, 124] {
            assert_eq!(a.index_of(&a.digits(idx)), idx);
        }
        assert_eq!(a.canonical_indices(false).len(), 35);
        assert_eq!(a.canonical_indices(true).len(), 10);
    }

    #[test]
    fn game_values_on_path() {
        let g = path(5).unwrap();
        let gv = GameValue::solve(&g, 1, u64::MAX).unwrap();
        assert_eq!(gv.value(&[2], 2), Finite(0));
        assert_eq!(gv.value(&[2], 3), Finite(1));
        assert_eq!(gv.value(&[2], 4), Finite(2));
        assert_eq!(gv.value(&[0], 4), Finite(4));
        assert_eq!(gv.capture_time(&[2]), Finite(2));
    }

    #[test]
    fn robber_escapes_on_c4() {
        let gv = GameValue::solve(&cycle(4).unwrap(), 1, u64::MAX).unwrap();
        assert_eq!(gv.value(&[0], 2), Infinite);
        assert_eq!(gv.value(&[0], 1), Finite(1));
    }
}
