use proptest::prelude::*;
use tperf_core::graph::corpus::{graphs_up_to, CorpusFilter};
use tperf_core::graph::formats::*;
use tperf_core::graph::*;

/// Some injection `pattern -> host` preserving adjacency and non-adjacency.
fn brute_force(host: &Graph, pattern: &Graph) -> bool {
    fn go(h: &Graph, p: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == p.n() {
            return true;
        }
        for x in 0..h.n() {
            if map.contains(&x) || (0..i).any(|j| p.has_edge(i, j) != h.has_edge(x, map[j])) {
                continue;
            }
            map.push(x);
            if go(h, p, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    go(host, pattern, &mut Vec::new())
}

#[test]
fn induced_search_matches_brute_force_on_all_classes() {
    let all = graphs_up_to(6, CorpusFilter::All);
    for h in &all {
        for p in all.iter().filter(|p| p.n() <= h.n()) {
            let found = contains_induced(h, p);
            assert_eq!(found.is_some(), brute_force(h, p), "{h:?} / {p:?}");
            if let Some(e) = found {
                assert!(e.is_induced(h, p));
            }
        }
    }
}

#[test]
fn antiwebs_are_near_bipartite() {
    for n in 1..=19 {
        for k in (0..).take_while(|k| 2 * k < n) {
            let spec = AntiwebSpec::new(n, k).unwrap();
            let g = gen_antiweb(spec);
            assert!(g.is_near_bipartite(), "aweb({n},{k})");
            if n >= 3 {
                assert_eq!(g, gen_cycle_power(n, k).unwrap().complement());
            }
        }
    }
}

#[test]
fn named_graphs_survive_graph6_and_dimacs() {
    for ng in NamedGraph::ALL {
        let g = ng.graph();
        assert!(are_isomorphic(&from_graph6(&to_graph6(&g)).unwrap(), &g), "{ng}");
        assert_eq!(from_dimacs(&to_dimacs(&g)).unwrap(), g, "{ng}");
    }
}

#[test]
fn paper_isomorphisms() {
    let c5 = gen_cycle(5).unwrap();
    assert!(are_isomorphic(&c5, &c5.complement()));
    assert!(are_isomorphic(&gen_complete(4).unwrap(), &gen_wheel(3).unwrap()));
    // aweb(8,2) drawn as a ladder: the 8-cycle plus its four long diagonals.
    let ladder = Graph::from_edges(8, (0..8).map(|i| (i, (i + 1) % 8)).chain((0..4).map(|i| (i, i + 4)))).unwrap();
    assert!(are_isomorphic(&gen_antiweb(AntiwebSpec::new(8, 2).unwrap()), &ladder));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let s = to_graph6(&g);
        prop_assert_eq!(from_graph6(&s).unwrap(), g.clone());
        prop_assert_eq!(from_graph6(&format!(">>graph6<<{s}")).unwrap(), g);
    }

    #[test]
    fn dimacs_round_trip(g in arb_graph(30)) {
        prop_assert_eq!(from_dimacs(&to_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_graph_and_perm(12)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let iso = find_isomorphism(&g, &h).unwrap();
        prop_assert!(g.edges().all(|(u, v)| h.has_edge(iso[u], iso[v])));
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(20)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * g.n().saturating_sub(1) / 2);
    }

    #[test]
    fn induced_embeddings_are_induced(h in arb_graph(9), p in arb_graph(4)) {
        if let Some(e) = contains_induced(&h, &p) {
            prop_assert!(e.is_induced(&h, &p));
        }
    }
}
