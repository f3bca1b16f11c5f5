use tperf_core::graph::corpus::{graphs_up_to, CorpusFilter};
use tperf_core::graph::*;
use tperf_core::polytope::is_t_perfect_oracle;
use tperf_core::recognition::*;

fn antiweb_specs(max_n: usize) -> Vec<AntiwebSpec> {
    (1..=max_n).flat_map(|n| (0..).take_while(move |k| 2 * k < n).map(move |k| AntiwebSpec::new(n, k).unwrap())).collect()
}

#[test]
fn trotter_matches_search() {
    let specs = antiweb_specs(13);
    for h in &specs {
        let host = gen_antiweb(*h);
        for p in specs.iter().filter(|p| p.n() <= h.n()) {
            let found = contains_induced(&host, &gen_antiweb(*p)).is_some();
            assert_eq!(trotter_contains(h.n(), h.k(), p.n(), p.k()).unwrap(), found, "{h:?} {p:?}");
        }
    }
}

#[test]
fn near_bipartite_recogniser_matches_oracle() {
    let corpus = graphs_up_to(9, CorpusFilter::NearBip);
    assert!(corpus.len() > 7000);
    for g in &corpus {
        let r = is_t_perfect_near_bipartite(g).unwrap();
        let o = is_t_perfect_oracle(g).unwrap();
        assert_eq!(r.t_perfect, o.t_perfect, "{}", formats::to_graph6(g));
        if let Some(w) = r.witness {
            assert!(w.verify(g));
        }
    }
}

#[test]
fn p5_free_recogniser_matches_oracle() {
    for g in graphs_up_to(8, CorpusFilter::P5Free) {
        let r = is_t_perfect_p5_free(&g).unwrap();
        assert_eq!(r.t_perfect, is_t_perfect_oracle(&g).unwrap().t_perfect, "{}", formats::to_graph6(&g));
        if let Some(w) = r.witness {
            assert!(w.verify(&g));
        }
    }
}

#[test]
fn odd_wheels_match_pattern_search() {
    let w3 = gen_wheel(3).unwrap();
    let w5 = gen_wheel(5).unwrap();
    for g in graphs_up_to(7, CorpusFilter::All) {
        let found = find_odd_wheel(&g);
        let expected = contains_induced(&g, &w3).is_some() || contains_induced(&g, &w5).is_some();
        assert_eq!(found.is_some(), expected, "{g:?}");
        if let Some(w) = found {
            assert!(w.verify(&g));
        }
    }
}

/// Every induced path between `u` and `v`, by subset enumeration.
fn brute_parities(g: &Graph, u: usize, v: usize) -> (bool, bool) {
    let (mut even, mut odd) = (false, false);
    for s in 0u64..1 << g.n() {
        if s >> u & 1 == 0 || s >> v & 1 == 0 {
            continue;
        }
        let (h, labels) = g.induced_subgraph(s);
        let k = h.n();
        let is_path = if k == 1 {
            true
        } else {
            let ends = |x: usize| labels[x] == u || labels[x] == v;
            h.is_connected()
                && h.edge_count() == k - 1
                && (0..k).all(|x| h.degree(x) == if ends(x) { 1 } else { 2 })
        };
        if is_path {
            if (k - 1) % 2 == 0 {
                even = true;
            } else {
                odd = true;
            }
        }
    }
    (even, odd)
}

#[test]
fn odd_pairs_match_subset_enumeration() {
    for g in graphs_up_to(6, CorpusFilter::All) {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let (even, _) = brute_parities(&g, u, v);
                assert_eq!(verify_odd_pair(&g, u, v).unwrap().odd_pair, !even, "{g:?} {u} {v}");
            }
        }
    }
}

#[test]
fn clique_separators_match_exhaustive_search() {
    for g in graphs_up_to(6, CorpusFilter::All) {
        let all = g.vertex_mask();
        let best = (0..=all)
            .filter(|&k| k & !all == 0 && g.is_clique(k) && g.components_within(all & !k).len() >= 2)
            .map(|k| k.count_ones())
            .min();
        let found = find_clique_separator(&g);
        assert_eq!(found.as_ref().map(|c| c.clique.len() as u32), best, "{g:?}");
    }
}

#[test]
fn found_cutsets_verify() {
    for g in graphs_up_to(6, CorpusFilter::All) {
        if let Some(t) = find_harmonious_cutset(&g).unwrap() {
            assert_eq!(verify_harmonious_tuple(&g, &t).unwrap(), TupleVerdict::Harmonious);
        }
        // A cut vertex is always a harmonious cutset on its own.
        if find_clique_separator(&g).is_some_and(|c| c.clique.len() == 1) {
            assert!(find_harmonious_cutset(&g).unwrap().is_some());
        }
    }
}

#[test]
fn harmonious_gluing_preserves_t_perfection() {
    let family = glued_family(30).unwrap();
    assert!(family.len() >= 20);
    assert!(family.iter().any(|i| i.tuple.parts.len() == 2));
    for inst in &family {
        assert!(is_t_perfect_oracle(&inst.graph).unwrap().t_perfect, "{:?}", inst.graph);
    }
}

#[test]
fn minimality_at_recogniser_level() {
    for (n, k) in [(13, 3), (13, 4), (19, 7)] {
        let g = gen_antiweb(AntiwebSpec::new(n, k).unwrap());
        assert!(!is_t_perfect_near_bipartite(&g).unwrap().t_perfect);
        for step in tperf_core::tminor::one_step_t_minors(&g) {
            let v = is_t_perfect_near_bipartite(&step.result).unwrap();
            assert!(v.t_perfect, "aweb({n},{k}) {:?}: {:?}", step.op, v.witness);
        }
    }
}
