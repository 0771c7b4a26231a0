use std::ops::RangeInclusive;

use super::{Relation, Report, Row};
use crate::error::Result;
use crate::extended::Finite;
use crate::families::*;
use crate::graph::{domination_number, girth, is_cop_win, Graph};
use crate::pursuit::{capture_time_of_set, cop_number, cop_throttle, k_capture_time, CopConfig, SolverConfig};
use crate::tree_throttling::tree_cop_throttle;
use crate::zero_forcing::{throttle, Rule};

/// `⌈√(2n) − 1/2⌉`, computed exactly as the least `m` with `(2m+1)² >= 8n`.
pub fn ceil_sqrt_2n_minus_half(n: usize) -> u32 {
    let mut m = ((2.0 * n as f64).sqrt() - 0.5).ceil().max(0.0) as u64;
    let n = n as u64;
    while m > 0 && (2 * m - 1).pow(2) >= 8 * n {
        m -= 1;
    }
    while (2 * m + 1).pow(2) < 8 * n {
        m += 1;
    }
    m as u32
}

/// Parameter ranges replayed by [`verify_formulas`].
#[derive(Debug, Clone)]
pub struct FormulaRange {
    pub paths: RangeInclusive<usize>,
    pub cycles: RangeInclusive<usize>,
    pub binary_heights: RangeInclusive<usize>,
    /// Heights also checked against the game solver.
    pub binary_game_max: usize,
    pub stellated_m: RangeInclusive<usize>,
    pub grid_sides: RangeInclusive<usize>,
    pub hypercube_m: Vec<usize>,
    pub hn: RangeInclusive<usize>,
    pub meyniel_n: Vec<usize>,
}

impl Default for FormulaRange {
    fn default() -> Self {
        FormulaRange {
            paths: 1..=12,
            cycles: 4..=11,
            binary_heights: 1..=4,
            binary_game_max: 3,
            stellated_m: 3..=8,
            grid_sides: 2..=4,
            hypercube_m: vec![3, 4],
            hn: 7..=10,
            meyniel_n: vec![20],
        }
    }
}

fn thc(g: &Graph, cfg: &SolverConfig) -> Result<u32> {
    Ok(cop_throttle(g, cfg)?.thc)
}

/// Exact values against the closed formulas for each family in `range`.
pub fn verify_formulas(range: &FormulaRange, cfg: &SolverConfig) -> Report {
    let mut rows = Vec::new();

    for n in range.paths.clone() {
        rows.push(Row::check(
            "path throttling formula",
            "th_c(P_n) = ceil(sqrt(2n) - 1/2)",
            &format!("path n={n}"),
            Relation::Eq,
            || Ok((thc(&path(n)?, cfg)?.into(), ceil_sqrt_2n_minus_half(n).into())),
        ));
    }

    for n in range.cycles.clone() {
        let inst = format!("cycle n={n}");
        rows.push(Row::check(
            "cycle throttling formula",
            "th_c(C_n) = ceil(sqrt(2n) - 1/2)",
            &inst,
            Relation::Eq,
            || Ok((thc(&cycle(n)?, cfg)?.into(), ceil_sqrt_2n_minus_half(n).into())),
        ));
        rows.push(Row::check(
            "cycle PSD throttling formula",
            "th_+(C_n) = ceil(sqrt(2n) - 1/2)",
            &inst,
            Relation::Eq,
            || Ok((throttle(&cycle(n)?, Rule::Psd)?.th.into(), ceil_sqrt_2n_minus_half(n).into())),
        ));
    }

    for h in range.binary_heights.clone() {
        let inst = format!("full_binary_tree h={h}");
        rows.push(Row::check(
            "full binary tree throttling",
            "th_c(T_B(h)) = h + 1",
            &inst,
            Relation::Eq,
            || Ok((tree_cop_throttle(&full_binary_tree(h)?)?.thc.into(), (h + 1).into())),
        ));
        if h <= range.binary_game_max {
            rows.push(Row::check(
                "full binary tree throttling by game solver",
                "th_c(T_B(h)) = h + 1",
                &inst,
                Relation::Eq,
                || Ok((thc(&full_binary_tree(h)?, cfg)?.into(), (h + 1).into())),
            ));
        }
    }

    for m in range.stellated_m.clone() {
        let inst = format!("stellated_wheel m={m}");
        rows.push(Row::check(
            "stellated wheel throttling",
            "th_c(SW_{2m+1}) = 3",
            &inst,
            Relation::Eq,
            || Ok((thc(&stellated_wheel(m)?, cfg)?.into(), 3u32.into())),
        ));
        rows.push(Row::check(
            "stellated wheel domination",
            "gamma(SW_{2m+1}) = ceil(m/2)",
            &inst,
            Relation::Eq,
            || Ok((domination_number(&stellated_wheel(m)?).0.into(), m.div_ceil(2).into())),
        ));
        rows.push(Row::check(
            "stellated wheel center cop",
            "capt(SW_{2m+1}; {center}) = 2",
            &inst,
            Relation::Eq,
            || {
                let g = stellated_wheel(m)?;
                Ok((capture_time_of_set(&g, &CopConfig::new(vec![0]), cfg)?.into(), 2u32.into()))
            },
        ));
    }

    for a in range.grid_sides.clone() {
        for b in range.grid_sides.clone().filter(|&b| b >= a) {
            rows.push(Row::check(
                "grid two-cop capture time",
                "capt_2(P_a x P_b) = floor((a+b)/2) - 1",
                &format!("grid a={a} b={b}"),
                Relation::Eq,
                || Ok((k_capture_time(&grid(a, b)?, 2, cfg)?.0.into(), ((a + b) / 2 - 1).into())),
            ));
        }
    }

    for &m in &range.hypercube_m {
        let row = Row::check(
            "hypercube cop number",
            "c(Q_m) = ceil((m+1)/2)",
            &format!("hypercube m={m}"),
            Relation::Eq,
            || Ok((cop_number(&hypercube(m)?, cfg)?.into(), (m / 2 + 1).into())),
        );
        rows.push(if m % 2 == 0 {
            row.with_note(format!("the floor form floor((m+1)/2) = {} is too small for even m", m / 2))
        } else {
            row
        });
    }

    let heawood = "projective_incidence q=2";
    rows.push(Row::holds(
        "incidence graph of the Fano plane is the Heawood graph",
        "IG(P_2): 14 vertices, 3-regular, girth 6",
        heawood,
        || {
            let g = projective_incidence(2)?;
            Ok(g.n() == 14 && g.min_degree() == 3 && g.max_degree() == 3 && girth(&g) == Finite(6))
        },
    ));
    rows.push(Row::check(
        "projective plane cop number",
        "c(IG(P_q)) = q + 1",
        heawood,
        Relation::Eq,
        || Ok((cop_number(&projective_incidence(2)?, cfg)?.into(), 3u32.into())),
    ));
    rows.push(Row::check(
        "projective plane capture in three rounds",
        "capt_{q+1}(IG(P_q)) <= 3",
        heawood,
        Relation::Le,
        || Ok((k_capture_time(&projective_incidence(2)?, 3, cfg)?.0.into(), 3u32.into())),
    ));

    for &n in &range.meyniel_n {
        rows.push(Row::check(
            "vertex sum with a path is subadditive",
            "th_c(G_n) <= th_c(P_k) + th_c(IG(P_q))",
            &format!("meyniel_extremal n={n}"),
            Relation::Le,
            || {
                let (g, q) = meyniel_extremal(n)?;
                let ig = projective_incidence(q)?;
                let k = n - ig.n() + 1;
                let bound = thc(&path(k)?, cfg)? + thc(&ig, cfg)?;
                Ok((thc(&g, cfg)?.into(), bound.into()))
            },
        ));
    }

    for n in range.hn.clone() {
        let inst = format!("max_capture_hn n={n}");
        rows.push(Row::holds("H_n is cop-win", "H_n is cop-win", &inst, || {
            Ok(is_cop_win(&max_capture_hn(n)?).cop_win)
        }));
        rows.push(Row::check(
            "H_n has the largest one-cop capture time",
            "capt_1(H_n) = n - 4",
            &inst,
            Relation::Eq,
            || Ok((k_capture_time(&max_capture_hn(n)?, 1, cfg)?.0.into(), (n - 4).into())),
        ));
    }
    if range.hn.contains(&7) {
        rows.push(Row::check(
            "H_7 throttling",
            "th_c(H_7) = 3",
            "max_capture_hn n=7",
            Relation::Eq,
            || Ok((thc(&max_capture_hn(7)?, cfg)?.into(), 3u32.into())),
        ));
    }

    rows.push(Row::check(
        "complete graph attains the domination bound",
        "th_c(K_n) = gamma(K_n) + 1",
        "complete n=5",
        Relation::Eq,
        || {
            let g = complete(5)?;
            Ok((thc(&g, cfg)?.into(), (domination_number(&g).0 + 1).into()))
        },
    ));

    Report::new(rows)
}
