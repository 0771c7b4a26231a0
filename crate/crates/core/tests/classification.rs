mod common;

use copthrottle::classification::{classify_low_throttle, z_witness_with, Containment, Trigger};
use copthrottle::graph::{domination_number, parse_graph6};
use copthrottle::pursuit::{algorithm2_two_in_two, can_catch_within, cop_throttle, SolverConfig};
use copthrottle::Graph;

fn small_graphs() -> Vec<Graph> {
    include_str!("data/graphs_upto6.g6")
        .lines()
        .map(|l| parse_graph6(l).unwrap())
        .collect()
}

#[test]
fn corpus_is_complete() {
    let gs = small_graphs();
    let by_order: Vec<usize> = (1..=6).map(|n| gs.iter().filter(|g| g.n() == n).count()).collect();
    assert_eq!(by_order, [1, 2, 4, 11, 34, 156]);
    assert_eq!(gs.iter().filter(|g| g.is_connected()).count(), 143);
}

#[test]
fn classes_match_throttling_on_all_small_graphs() {
    let cfg = SolverConfig::default();
    for g in small_graphs() {
        let c = classify_low_throttle(&g, &cfg).unwrap();
        let thc = cop_throttle(&g, &cfg).unwrap().thc;
        assert_eq!(c.class, thc.min(5), "{g:?}");
        assert_eq!(c.trigger.as_ref(), c.fired.first());
        let gamma = domination_number(&g).0;
        if c.class == 3 {
            assert_eq!(c.fired.contains(&Trigger::DominationTwo), gamma == 2);
        }
    }
}

#[test]
fn containment_readings_agree() {
    for g in small_graphs() {
        assert_eq!(z_witness_with(&g, Containment::Subset), z_witness_with(&g, Containment::ProperSubset));
    }
}

#[test]
fn two_cops_two_rounds_on_all_small_graphs() {
    let cfg = SolverConfig::default();
    for g in small_graphs() {
        let alg = algorithm2_two_in_two(&g).is_some();
        assert_eq!(alg, can_catch_within(&g, 2, 2, &cfg).unwrap());
        assert_eq!(alg, common::NaiveGame::new(&g).catch_within(2, 2));
    }
}
