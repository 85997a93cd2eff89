mod common;

use bdg_core::compatible::MoveKind;
use bdg_core::generators::random_satisfying;
use bdg_core::oracle::{brute_cycle, count_cycles, decode, encode, space_size};
use bdg_core::{
    check, find_hamiltonian, run_engine, verify_hamiltonian_cycle, BipartiteDigraph, ConditionSpec, EngineMode,
    Outcome, Vertex, VertexSet,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn digraph(max_a: usize, max_b: usize) -> impl Strategy<Value = BipartiteDigraph> {
    (1..=max_a, 1..=max_b).prop_flat_map(|(a, b)| {
        proptest::collection::vec(any::<bool>(), 2 * a * b).prop_map(move |bits| from_bits(a, b, &bits))
    })
}

fn balanced(max_a: usize) -> impl Strategy<Value = BipartiteDigraph> {
    (1..=max_a).prop_flat_map(|a| {
        proptest::collection::vec(any::<bool>(), 2 * a * a).prop_map(move |bits| from_bits(a, a, &bits))
    })
}

fn from_bits(a: usize, b: usize, bits: &[bool]) -> BipartiteDigraph {
    let mut d = BipartiteDigraph::empty(a, b);
    for i in 0..a {
        for j in 0..b {
            if bits[i * b + j] {
                d.add_arc(Vertex::x(i), Vertex::y(j)).unwrap();
            }
            if bits[a * b + j * a + i] {
                d.add_arc(Vertex::y(j), Vertex::x(i)).unwrap();
            }
        }
    }
    d
}

/// A digraph with a pair of class permutations.
fn with_relabeling(max_a: usize) -> impl Strategy<Value = (BipartiteDigraph, Vec<usize>, Vec<usize>)> {
    balanced(max_a).prop_flat_map(|d| {
        let a = d.a();
        (Just(d), Just((0..a).collect::<Vec<_>>()).prop_shuffle(), Just((0..a).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn reversed_cycle(seq: &[Vertex]) -> Vec<Vertex> {
    seq.iter().rev().copied().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_round_trip(d in digraph(6, 6)) {
        prop_assert_eq!(BipartiteDigraph::parse(&d.serialize()).unwrap(), d.clone());
        prop_assert_eq!(BipartiteDigraph::parse_single_line(&d.single_line()).unwrap(), d);
    }

    #[test]
    fn degree_sums_count_arcs(d in digraph(6, 6)) {
        let xs = (0..d.a()).map(Vertex::x);
        let ys = (0..d.b()).map(Vertex::y);
        prop_assert_eq!(xs.clone().map(|v| d.out_degree(v)).sum::<usize>(), d.arc_count_xy());
        prop_assert_eq!(ys.clone().map(|v| d.in_degree(v)).sum::<usize>(), d.arc_count_xy());
        prop_assert_eq!(ys.map(|v| d.out_degree(v)).sum::<usize>(), d.arc_count_yx());
        prop_assert_eq!(xs.map(|v| d.in_degree(v)).sum::<usize>(), d.arc_count_yx());
        let all = VertexSet::full(d.a(), d.b());
        for v in d.vertices() {
            prop_assert_eq!(d.degrees(v, Some(&all)).unwrap(), d.degrees(v, None).unwrap());
        }
    }

    #[test]
    fn restricted_degrees_count_neighbours_inside(d in digraph(5, 5), picks in proptest::collection::vec(any::<bool>(), 10)) {
        let inside: Vec<Vertex> = d.vertices().enumerate().filter(|(t, _)| picks[t % picks.len()]).map(|(_, v)| v).collect();
        let r = VertexSet::from_vertices(d.a(), d.b(), &inside).unwrap();
        for v in d.vertices() {
            let got = d.degrees(v, Some(&r)).unwrap();
            prop_assert_eq!(got.out, d.out_neighbors(v).filter(|w| r.contains(*w)).count());
            prop_assert_eq!(got.in_, d.in_neighbors(v).filter(|w| r.contains(*w)).count());
        }
    }

    #[test]
    fn transpose_is_an_involution(d in digraph(6, 6)) {
        let t = d.transpose();
        prop_assert_eq!(t.transpose(), d.clone());
        for v in d.vertices() {
            prop_assert_eq!(t.out_degree(v), d.in_degree(v));
            prop_assert_eq!(t.in_degree(v), d.out_degree(v));
        }
    }

    #[test]
    fn conditions_weaken_as_k_drops(d in balanced(5), k in 0usize..4) {
        let strong = check(&d, ConditionSpec::AkStar(k + 1)).unwrap().holds;
        let weak = check(&d, ConditionSpec::AkStar(k)).unwrap().holds;
        prop_assert!(!strong || weak);
        let all_pairs = check(&d, ConditionSpec::Ak(k)).unwrap().holds;
        prop_assert!(!all_pairs || weak);
    }

    #[test]
    fn condition_verdicts_survive_transpose_and_relabel((d, px, py) in with_relabeling(5), k in 0usize..4) {
        let r = d.relabel(&px, &py).unwrap();
        for spec in [ConditionSpec::AkStar(k), ConditionSpec::Ak(k), ConditionSpec::StrictHalfSum, ConditionSpec::DiracBipartite] {
            let held = check(&d, spec).unwrap().holds;
            prop_assert_eq!(check(&d.transpose(), spec).unwrap().holds, held);
            prop_assert_eq!(check(&r, spec).unwrap().holds, held);
        }
    }

    #[test]
    fn adding_arcs_never_breaks_a_condition(d in balanced(5), slot in any::<prop::sample::Index>(), k in 0usize..4) {
        let missing: Vec<(Vertex, Vertex)> = d
            .vertices()
            .flat_map(|u| (0..d.class_size(u.side.opposite())).map(move |j| (u, Vertex { side: u.side.opposite(), index: j })))
            .filter(|&(u, v)| !d.has_arc(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[slot.index(missing.len())];
        let mut e = d.clone();
        e.add_arc(u, v).unwrap();
        for spec in [ConditionSpec::AkStar(k), ConditionSpec::Ak(k), ConditionSpec::StrictHalfSum, ConditionSpec::DiracBipartite] {
            prop_assert!(!check(&d, spec).unwrap().holds || check(&e, spec).unwrap().holds);
        }
    }

    #[test]
    fn violations_are_real(d in balanced(5), k in 0usize..4) {
        let report = check(&d, ConditionSpec::AkStar(k)).unwrap();
        prop_assert_eq!(report.holds, report.violations.is_empty());
        for w in &report.violations {
            prop_assert!(!d.has_arc(w.u, w.v));
            prop_assert_eq!(w.sum, d.out_degree(w.u) + d.in_degree(w.v));
            prop_assert!(w.sum < d.a() + k);
        }
    }

    #[test]
    fn encoding_is_a_bijection(a in 1usize..4, b in 1usize..4, raw in any::<u64>()) {
        let code = raw % space_size(a, b).unwrap();
        let d = decode(a, b, code).unwrap();
        prop_assert_eq!(encode(&d).unwrap(), code);
    }

    #[test]
    fn cycle_counts_survive_relabel_and_reversal((d, px, py) in with_relabeling(4), t in 1usize..5) {
        prop_assume!(t <= d.a());
        let n = count_cycles(&d, 2 * t).unwrap();
        prop_assert_eq!(count_cycles(&d.relabel(&px, &py).unwrap(), 2 * t).unwrap(), n);
        prop_assert_eq!(count_cycles(&d.transpose(), 2 * t).unwrap(), n);
        prop_assert_eq!(brute_cycle(&d, 2 * t).unwrap().is_some(), n > 0);
    }

    #[test]
    fn engine_outcomes_are_sound(d in balanced(5)) {
        for mode in [EngineMode::Full, EngineMode::Remark26Forward, EngineMode::Remark26Reverse] {
            let run = match run_engine(&d, mode) {
                Ok(run) => run,
                Err(bdg_core::Error::MatchingAbsent) => {
                    prop_assert!(mode != EngineMode::Full);
                    continue;
                }
                Err(e) => return Err(TestCaseError::fail(format!("{mode:?}: {e}"))),
            };
            match &run.outcome {
                Outcome::Cycle(seq) => prop_assert!(verify_hamiltonian_cycle(&d, seq)),
                Outcome::Witness(w) => prop_assert!(w.is_valid_for(&d)),
            }
            for rec in &run.trace {
                if rec.kind != MoveKind::Reopen {
                    prop_assert!(rec.after_len > rec.before_len, "{}", rec);
                }
            }
            prop_assert!(run.stable_configs.iter().all(|s| s.is_consistent()));
        }
    }

    #[test]
    fn engine_witness_only_off_hypothesis(d in balanced(5)) {
        if let Outcome::Witness(w) = find_hamiltonian(&d, EngineMode::Full).unwrap() {
            prop_assert!(!check(&d, ConditionSpec::AkStar(2)).unwrap().holds);
            prop_assert!(w.is_valid_for(&d));
        }
    }

    #[test]
    fn engine_cycles_map_through_transpose((d, px, py) in with_relabeling(5)) {
        if let Outcome::Cycle(seq) = find_hamiltonian(&d, EngineMode::Full).unwrap() {
            prop_assert!(verify_hamiltonian_cycle(&d.transpose(), &reversed_cycle(&seq)));
            let moved: Vec<Vertex> = seq
                .iter()
                .map(|v| Vertex { side: v.side, index: if v.is_x() { px[v.index] } else { py[v.index] } })
                .collect();
            prop_assert!(verify_hamiltonian_cycle(&d.relabel(&px, &py).unwrap(), &moved));
        }
        let holds = check(&d, ConditionSpec::AkStar(2)).unwrap().holds;
        if holds {
            prop_assert!(find_hamiltonian(&d.transpose(), EngineMode::Full).unwrap().is_cycle());
            prop_assert!(find_hamiltonian(&d.relabel(&px, &py).unwrap(), EngineMode::Full).unwrap().is_cycle());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn satisfiers_stay_hamiltonian_after_removing_spare_arcs(a in 4usize..8, seed in any::<u64>(), order in subsequence((0..128usize).collect::<Vec<_>>(), 0..128)) {
        let mut d = random_satisfying(a, 2, seed).unwrap();
        for slot in order {
            let arcs = d.arcs();
            let (u, v) = arcs[slot % arcs.len()];
            d.remove_arc(u, v).unwrap();
            if !check(&d, ConditionSpec::AkStar(2)).unwrap().holds {
                d.add_arc(u, v).unwrap();
            }
        }
        match find_hamiltonian(&d, EngineMode::Full).unwrap() {
            Outcome::Cycle(seq) => prop_assert!(verify_hamiltonian_cycle(&d, &seq)),
            other => return Err(TestCaseError::fail(format!("{other:?} on {}", d.single_line()))),
        }
    }
}
