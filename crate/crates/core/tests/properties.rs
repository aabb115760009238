mod common;

use common::{arb_graph, brute_burning_number, brute_cmcp, burns, floyd};
use gburn::heuristics::bff_bounds;
use gburn::*;
use gburn::Strategy as Solver;
use proptest::prelude::*;
use proptest::strategy::Strategy;

fn arb_instance() -> impl Strategy<Value = (usize, Vec<Vec<Vec<usize>>>)> {
    (1usize..=12, 1usize..=4).prop_flat_map(|(universe, p)| {
        let subset = prop::collection::vec(0..universe, 0..=universe);
        let cluster = prop::collection::vec(subset, 1..=4);
        (Just(universe), prop::collection::vec(cluster, p))
    })
}

fn arb_tie() -> impl Strategy<Value = TieBreak> {
    prop_oneof![
        Just(TieBreak::SmallestIndex),
        any::<u64>().prop_map(TieBreak::Seeded),
        prop::collection::vec(0usize..24, 0..8).prop_map(TieBreak::Preference),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distance_modes_agree_with_floyd(g in arb_graph(14)) {
        let d = floyd(&g);
        let full = DistanceOracle::full(&g);
        let lazy = DistanceOracle::on_demand(&g);
        for u in 0..g.n() {
            let row = lazy.row(u);
            for v in 0..g.n() {
                prop_assert_eq!(full.distance(u, v), d[u][v]);
                prop_assert_eq!(lazy.distance(u, v), d[u][v]);
                prop_assert_eq!(row[v] as usize, d[u][v]);
            }
        }
        let diameter = d.iter().flatten().copied().max().unwrap();
        prop_assert_eq!(full.diameter(), diameter);
    }

    #[test]
    fn neighborhoods_grow_with_radius(g in arb_graph(14), v in any::<prop::sample::Index>()) {
        let d = floyd(&g);
        let o = DistanceOracle::full(&g);
        let v = v.index(g.n());
        let mut prev: Vec<usize> = Vec::new();
        for r in 0..=g.n() {
            let ball = o.closed_neighborhood(v, r);
            let expected: Vec<usize> = (0..g.n()).filter(|&w| d[v][w] <= r).collect();
            prop_assert_eq!(&ball, &expected);
            prop_assert!(prev.iter().all(|w| ball.contains(w)));
            prev = ball;
        }
    }

    #[test]
    fn validator_matches_definition(
        g in arb_graph(12),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6),
    ) {
        let d = floyd(&g);
        let o = DistanceOracle::full(&g);
        let seq: Vec<usize> = picks.iter().map(|i| i.index(g.n())).collect();
        let valid = is_burning_sequence(&o, &seq.clone().into()).unwrap();
        prop_assert_eq!(valid, burns(&d, &seq));
        prop_assert_eq!(first_violation(&o, &seq.clone().into()).unwrap().is_none(), valid);
        prop_assert_eq!(simulate(&g, &seq.into()).unwrap().complete, valid);
    }

    #[test]
    fn appending_keeps_a_sequence_burning(
        g in arb_graph(12),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6),
        extra in any::<prop::sample::Index>(),
    ) {
        let o = DistanceOracle::full(&g);
        let mut seq: Vec<usize> = picks.iter().map(|i| i.index(g.n())).collect();
        if is_burning_sequence(&o, &seq.clone().into()).unwrap() {
            seq.push(extra.index(g.n()));
            prop_assert!(is_burning_sequence(&o, &seq.into()).unwrap());
        }
    }

    #[test]
    fn greedy_is_half_of_exact((universe, clusters) in arb_instance(), tie in arb_tie()) {
        let best = brute_cmcp(&clusters);
        let inst = CmcpInstance::new(universe, clusters).unwrap();
        let exact = exact_cmcp(&inst, u128::MAX).unwrap();
        prop_assert_eq!(exact.covered_count, best);
        let greedy = greedy_cmcp(&inst, &tie);
        prop_assert!(greedy.covered_count >= best.div_ceil(2));
        prop_assert_eq!(greedy.gains.iter().sum::<usize>(), greedy.covered_count);
        prop_assert_eq!(greedy.covered.len(), greedy.covered_count);
        let mut union: Vec<usize> = greedy
            .chosen
            .iter()
            .enumerate()
            .flat_map(|(k, &j)| inst.subset(k, j))
            .collect();
        union.sort_unstable();
        union.dedup();
        prop_assert_eq!(&union, &greedy.covered);
    }

    #[test]
    fn instance_text_round_trips((universe, clusters) in arb_instance()) {
        let inst = CmcpInstance::new(universe, clusters).unwrap();
        let again = CmcpInstance::parse(&inst.to_text()).unwrap();
        prop_assert_eq!(again.to_text(), inst.to_text());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn exact_matches_brute_force(g in arb_graph(9)) {
        let d = floyd(&g);
        let o = DistanceOracle::full(&g);
        let b = brute_burning_number(&d);
        let e = exact_solve(&g, &o, ExactBudget::default()).unwrap();
        prop_assert_eq!(e.burning_number, b);
        prop_assert_eq!(e.sequence.len(), b);
        prop_assert!(burns(&d, e.sequence.vertices()));

        // the reduction: full coverage at p = b, none below
        let at_b = exact_cmcp(&gbp_to_cmcp(&o, b).unwrap(), u128::MAX).unwrap();
        prop_assert_eq!(at_b.covered_count, g.n());
        let seq = selection_to_sequence(&at_b, b).unwrap();
        prop_assert!(burns(&d, seq.vertices()));
        if b > 1 {
            let below = exact_cmcp(&gbp_to_cmcp(&o, b - 1).unwrap(), u128::MAX).unwrap();
            prop_assert!(below.covered_count < g.n());
        }
    }

    #[test]
    fn heuristics_are_sound(g in arb_graph(10), seed in any::<u64>()) {
        let d = floyd(&g);
        let o = DistanceOracle::full(&g);
        let b = brute_burning_number(&d);
        let s0 = bff(&g, &o, 0).unwrap();
        prop_assert!(burns(&d, s0.vertices()));
        prop_assert!(s0.len() <= 3 * b - 2);
        let (l, h) = bff_bounds(s0.len());
        prop_assert!(l <= b);

        for strategy in [Solver::Gr, Solver::Grp] {
            for tie in [TieBreak::SmallestIndex, TieBreak::Seeded(seed)] {
                let r = binary_search_solve(&g, &o, strategy, &tie).unwrap();
                prop_assert!(r.burned_all);
                prop_assert!(burns(&d, r.sequence.vertices()));
                prop_assert!(r.sequence.len() >= b);
                prop_assert!(r.sequence.len() <= h || r.sequence.len() == s0.len());
                prop_assert!(!r.sequence.has_repeats());
            }
        }
    }

    #[test]
    fn restarts_dominate_single_runs(g in arb_graph(10), p in 1usize..6) {
        let o = DistanceOracle::full(&g);
        let single = gr(&g, &o, p, None, &TieBreak::SmallestIndex).unwrap();
        let restarted = grp(&g, &o, p, &TieBreak::SmallestIndex).unwrap();
        prop_assert!(restarted.burned_all || !single.burned_all);
        if !restarted.burned_all {
            prop_assert!(restarted.covered_count >= single.covered_count);
        }
    }

    #[test]
    fn gr_is_greedy_cmcp_on_the_reduction(g in arb_graph(10), p in 1usize..6) {
        let o = DistanceOracle::full(&g);
        let run = gr(&g, &o, p, None, &TieBreak::SmallestIndex).unwrap();
        let inst = gbp_to_cmcp(&o, p).unwrap().reversed();
        let sel = greedy_cmcp(&inst, &TieBreak::SmallestIndex);
        prop_assert_eq!(run.covered_count, sel.covered_count);
        // the two differ only in which zero-gain vertex fills a slot
        if sel.gains.iter().all(|&x| x > 0) {
            let seq = selection_to_sequence(&sel, p).unwrap();
            prop_assert_eq!(seq.vertices(), run.sequence.vertices());
        }
        if let Some(bound) = half_coverage_test(&run, g.n()) {
            prop_assert!(brute_burning_number(&floyd(&g)) > bound.p);
        }
    }
}

#[test]
fn path_distances() {
    for n in 1..=30 {
        let g = generate(GraphKind::Path, n).unwrap();
        let o = DistanceOracle::full(&g);
        for i in 0..n {
            for j in 0..n {
                assert_eq!(o.distance(i, j), i.abs_diff(j));
            }
        }
    }
}

#[test]
fn karate_distances_against_floyd() {
    let g = common::fixture("karate");
    let d = floyd(&g);
    let o = DistanceOracle::new(&g, 0);
    assert_eq!(o.mode(), gburn::graph::DistanceMode::OnDemand);
    assert_eq!(o.diameter(), 5);
    for u in 0..g.n() {
        for v in 0..g.n() {
            assert_eq!(o.distance(u, v), d[u][v]);
        }
    }
}
