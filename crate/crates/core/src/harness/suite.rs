use std::cell::OnceCell;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::corpus::{random_psd_set, CliqueSumInstance};
use super::formulas::ceil_sqrt_2n_minus_half;
use super::{Relation, Report, Row};
use crate::burning::burning_number;
use crate::error::Result;
use crate::extended::{Extended, Finite};
use crate::graph::{distances, domination_number, girth, k_radius, subsets_of_size, Graph, VertexSet};
use crate::pursuit::{
    capture_time_of_set, cop_number, cop_throttle, k_capture_time, psd_shadow_capture, CopConfig,
    SolverConfig, ThrottleResult,
};
use crate::tree_throttling::tree_cop_throttle;
use crate::zero_forcing::{forcing_number, propagation_time, throttle, Rule};

/// Lazily computed values shared by the rows of one graph.
struct Facts<'a> {
    g: &'a Graph,
    cfg: &'a SolverConfig,
    thc: OnceCell<Result<ThrottleResult>>,
    thplus: OnceCell<Result<u32>>,
}

impl<'a> Facts<'a> {
    fn new(g: &'a Graph, cfg: &'a SolverConfig) -> Self {
        Facts { g, cfg, thc: OnceCell::new(), thplus: OnceCell::new() }
    }

    fn thc(&self) -> Result<u32> {
        self.thc
            .get_or_init(|| cop_throttle(self.g, self.cfg))
            .as_ref()
            .map(|r| r.thc)
            .map_err(Clone::clone)
    }

    fn thplus(&self) -> Result<u32> {
        self.thplus
            .get_or_init(|| throttle(self.g, Rule::Psd).map(|r| r.th))
            .clone()
    }
}

/// Every applicable inequality on one graph, with exact values on both
/// sides. `seed` drives the random PSD sets.
pub fn verify_inequality_suite(name: &str, g: &Graph, cfg: &SolverConfig, seed: u64) -> Report {
    let mut rows = Vec::new();
    if g.n() == 0 {
        return Report::new(rows);
    }
    let facts = Facts::new(g, cfg);
    let n = g.n();

    rows.push(Row::check(
        "throttling at most domination plus one",
        "th_c(G) <= gamma(G) + 1",
        name,
        Relation::Le,
        || Ok((facts.thc()?.into(), (domination_number(g).0 + 1).into())),
    ));
    rows.push(Row::check(
        "cop throttling at most PSD throttling",
        "th_c(G) <= th_+(G)",
        name,
        Relation::Le,
        || Ok((facts.thc()?.into(), facts.thplus()?.into())),
    ));
    rows.push(Row::check(
        "cop number at most PSD forcing number",
        "c(G) <= Z_+(G)",
        name,
        Relation::Le,
        || Ok((cop_number(g, cfg)?.into(), forcing_number(g, Rule::Psd).0.into())),
    ));
    for k in 1..=3.min(n) {
        rows.push(Row::check(
            &format!("capture time at least k-radius (k={k})"),
            "capt_k(G) >= rad_k(G)",
            name,
            Relation::Ge,
            || Ok((k_capture_time(g, k, cfg)?.0.into(), k_radius(g, k)?.0.into())),
        ));
    }

    let gir = girth(g);
    if let Finite(gv) = gir {
        rows.push(Row::check(
            "throttling at least girth bound",
            "th_c(G) >= ceil(sqrt(2g) - 1/2)",
            name,
            Relation::Ge,
            || Ok((facts.thc()?.into(), ceil_sqrt_2n_minus_half(gv as usize).into())),
        ));
    }
    if gir >= Finite(5) {
        rows.push(Row::check(
            "girth at least 5 gives throttling at least min degree",
            "g(G) >= 5 implies th_c(G) >= delta(G)",
            name,
            Relation::Ge,
            || Ok((facts.thc()?.into(), g.min_degree().into())),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..5 {
        let s = random_psd_set(g, &mut rng);
        let inst = format!("{name} S={s:?}");
        rows.push(Row::check(
            &format!("capture time at most PSD propagation time (set {i})"),
            "capt(G;S) <= pt_+(G;S)",
            &inst,
            Relation::Le,
            || {
                let capt = capture_time_of_set(g, &CopConfig::from_set(s), cfg)?;
                Ok((capt.into(), propagation_time(g, s, Rule::Psd).0.into()))
            },
        ));
        rows.push(Row::check(
            &format!("forcing-shadow strategy within propagation time (set {i})"),
            "capt(G;S) <= pt_+(G;S)",
            &inst,
            Relation::Le,
            || {
                let (pt, rec) = propagation_time(g, s, Rule::Psd);
                Ok((psd_shadow_capture(g, s, &rec)?.into(), pt.into()))
            },
        ));
    }

    if g.is_tree() {
        tree_rows(name, g, cfg, &facts, &mut rows);
    }
    Report::new(rows)
}

fn tree_rows(name: &str, g: &Graph, cfg: &SolverConfig, facts: &Facts, rows: &mut Vec<Row>) {
    let n = g.n();
    for k in 1..=3.min(n) {
        rows.push(Row::check(
            &format!("tree capture time equals k-radius (k={k})"),
            "capt_k(T) = rad_k(T)",
            name,
            Relation::Eq,
            || Ok((k_capture_time(g, k, cfg)?.0.into(), k_radius(g, k)?.0.into())),
        ));
    }
    rows.push(Row::check(
        "tree cop throttling equals PSD throttling",
        "th_c(T) = th_+(T)",
        name,
        Relation::Eq,
        || Ok((facts.thc()?.into(), facts.thplus()?.into())),
    ));
    rows.push(Row::check(
        "tree radius formula equals game value",
        "th_c(T) = min_k (k + rad_k(T))",
        name,
        Relation::Eq,
        || Ok((tree_cop_throttle(g)?.thc.into(), facts.thc()?.into())),
    ));
    rows.push(Row::check(
        "tree PSD throttling at most twice burning number minus one",
        "th_+(T) <= 2 b(T) - 1",
        name,
        Relation::Le,
        || Ok((facts.thplus()?.into(), (2 * burning_number(g)?.0 - 1).into())),
    ));
    if n >= 3 {
        rows.push(Row::check(
            "some optimal tree placement avoids leaves",
            "th_c(T) attained by a set without leaves",
            name,
            Relation::Eq,
            || Ok((leaf_free_throttle(g).into(), facts.thc()?.into())),
        ));
    }
    let dist = distances(g);
    let (r, diam) = (dist.radius().unwrap(), dist.diameter().unwrap());
    rows.push(Row::check(
        "tree throttling at most radius plus one",
        "th_c(T) <= rad(T) + 1",
        name,
        Relation::Le,
        || Ok((facts.thc()?.into(), (r + 1).into())),
    ));
    // A longest path has diam + 1 vertices; that is 2 rad + 1 only when the
    // center is a single vertex.
    let lower = Row::check(
        "tree throttling at least longest-path bound",
        "th_c(T) >= ceil(sqrt(2(diam + 1)) - 1/2)",
        name,
        Relation::Ge,
        || Ok((facts.thc()?.into(), ceil_sqrt_2n_minus_half(diam as usize + 1).into())),
    );
    rows.push(if diam + 1 < 2 * r + 1 {
        lower.with_note(format!(
            "diam = 2 rad - 1 here; the radius form ceil(sqrt(2(2 rad + 1)) - 1/2) = {} would not hold",
            ceil_sqrt_2n_minus_half(2 * r as usize + 1)
        ))
    } else {
        lower
    });
}

/// `min (|S| + max_v dist(v, S))` over nonempty sets of non-leaves.
fn leaf_free_throttle(t: &Graph) -> Extended {
    let dist = distances(t);
    let inner: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) > 1).collect();
    let mut best = Extended::Infinite;
    for k in 1..=inner.len() {
        if Finite(k as u32) >= best {
            break;
        }
        for sub in subsets_of_size(inner.len(), k) {
            let s: VertexSet = sub.iter().map(|i| inner[i]).collect();
            best = best.min(dist.cover_radius(s) + k as u32);
        }
    }
    best
}

/// Cop throttling of a tree is at least that of any subtree.
pub fn verify_subtree_pair(name: &str, t: &Graph, sub: &Graph) -> Report {
    Report::new(vec![Row::check(
        "subtree throttling is monotone",
        "th_c(T') <= th_c(T) for a subtree T'",
        name,
        Relation::Le,
        || Ok((tree_cop_throttle(sub)?.thc.into(), tree_cop_throttle(t)?.thc.into())),
    )])
}

/// Both sides of the clique-sum sandwich.
pub fn verify_clique_sum(name: &str, c: &CliqueSumInstance, cfg: &SolverConfig) -> Report {
    let th = |g: &Graph| -> Result<u32> { Ok(cop_throttle(g, cfg)?.thc) };
    let parts = OnceCell::new();
    let parts = || -> Result<(u32, u32, u32)> {
        parts
            .get_or_init(|| Ok((th(&c.g1)?, th(&c.g2)?, th(&c.sum)?)))
            .clone()
    };
    Report::new(vec![
        Row::check(
            "clique sum throttling at least each summand",
            "max(th_c(G1), th_c(G2)) <= th_c(G)",
            name,
            Relation::Le,
            || {
                let (a, b, s) = parts()?;
                Ok((a.max(b).into(), s.into()))
            },
        ),
        Row::check(
            "clique sum throttling at most the sum",
            "th_c(G) <= th_c(G1) + th_c(G2)",
            name,
            Relation::Le,
            || {
                let (a, b, s) = parts()?;
                Ok((s.into(), (a + b).into()))
            },
        ),
    ])
}
