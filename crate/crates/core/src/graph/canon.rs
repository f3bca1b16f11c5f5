//! Canonical labelling by equitable refinement and individualisation.
//!
//! The search tree is the usual one: refine the colouring to an equitable
//! partition, individualise each vertex of the first non-singleton cell in turn,
//! and recurse. Every leaf is a relabelling; the canonical form is the largest
//! relabelled adjacency matrix. Automorphisms discovered at equal leaves, plus
//! transpositions of twin vertices, prune sibling subtrees in the same orbit.

use std::cmp::Ordering;

use super::Graph;
use crate::bits::{bit, bits};

/// A graph in canonical labelling. Two graphs are isomorphic iff their forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    graph: Graph,
}

impl CanonicalForm {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labelling(g).0
}

/// Canonical form together with the labelling `v -> position` that produces it.
pub fn canonical_labelling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let mut search = Search { g, best: None, generators: twin_transpositions(g) };
    let cells = if g.n() == 0 { Vec::new() } else { refine(g, vec![(0..g.n()).collect()]) };
    search.descend(cells, &mut Vec::new());
    let (adj, perm) = search.best.expect("the search tree has at least one leaf");
    (CanonicalForm { graph: Graph::from_raw(adj) }, perm)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}

/// An isomorphism `a -> b` as a vertex map, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let (ca, pa) = canonical_labelling(a);
    let (cb, pb) = canonical_labelling(b);
    if ca != cb {
        return None;
    }
    let mut inv_b = vec![0; b.n()];
    for (v, &p) in pb.iter().enumerate() {
        inv_b[p] = v;
    }
    Some(pa.iter().map(|&p| inv_b[p]).collect())
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Cells, fixed: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() {
                // Skip v when an automorphism fixing the current prefix maps an explored
                // child onto it. Generators are re-read since leaves below add new ones.
                let orbit_rep = self.orbits_fixing(fixed);
                if explored.iter().any(|&u| orbit_rep[u] == orbit_rep[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            fixed.push(v);
            self.descend(refine(self.g, child), fixed);
            fixed.pop();
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let n = self.g.n();
        let mut perm = vec![0; n];
        for (pos, c) in cells.iter().enumerate() {
            perm[c[0]] = pos;
        }
        let mut adj = vec![0u64; n];
        for v in 0..n {
            adj[perm[v]] = bits(self.g.nbrs(v)).fold(0, |m, u| m | bit(perm[u]));
        }
        match &self.best {
            None => self.best = Some((adj, perm)),
            Some((best_adj, best_perm)) => match adj.cmp(best_adj) {
                Ordering::Greater => self.best = Some((adj, perm)),
                Ordering::Less => {}
                Ordering::Equal => {
                    let mut inv = vec![0; n];
                    for (v, &p) in best_perm.iter().enumerate() {
                        inv[p] = v;
                    }
                    let auto: Vec<usize> = perm.iter().map(|&p| inv[p]).collect();
                    if auto.iter().enumerate().any(|(v, &w)| v != w) {
                        self.generators.push(auto);
                    }
                }
            },
        }
    }

    /// Orbit representatives under the group generated by the known automorphisms
    /// that fix every vertex of `fixed`.
    fn orbits_fixing(&self, fixed: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gen in &self.generators {
            if fixed.iter().any(|&f| gen[f] != f) {
                continue;
            }
            for (v, &w) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

/// Transpositions of vertices with equal open or equal closed neighbourhoods.
fn twin_transpositions(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let open = g.nbrs(u) & !bit(v) == g.nbrs(v) & !bit(u);
            if open {
                let mut t: Vec<usize> = (0..n).collect();
                t.swap(u, v);
                out.push(t);
            }
        }
    }
    out
}

/// Refines an ordered partition until it is equitable. Cells split by the vector of
/// neighbour counts into every current cell; split pieces keep the parent's place
/// and are ordered by that vector, so the result depends only on the isomorphism type.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | bit(v))).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = c
                .iter()
                .map(|&v| (masks.iter().map(|m| (g.nbrs(v) & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;

    fn random_perm(n: usize, seed: &mut u64) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (*seed >> 33) as usize % (i + 1);
            p.swap(i, j);
        }
        p
    }

    /// Tries every permutation; only usable for small n.
    fn iso_exhaustive(a: &Graph, b: &Graph) -> bool {
        fn go(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
            let v = map.len();
            if v == a.n() {
                return true;
            }
            for w in 0..b.n() {
                if used & bit(w) == 0 && (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                    map.push(w);
                    if go(a, b, map, used | bit(w)) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        a.n() == b.n() && a.edge_count() == b.edge_count() && go(a, b, &mut Vec::new(), 0)
    }

    #[test]
    fn examples() {
        let c5 = gen_cycle(5).unwrap();
        assert!(are_isomorphic(&c5, &c5.complement()));
        assert!(are_isomorphic(&gen_complete(4).unwrap(), &gen_wheel(3).unwrap()));
        // The Möbius ladder as an 8-cycle with its four long diagonals.
        let ladder = Graph::from_edges(8, (0..8).map(|i| (i, (i + 1) % 8)).chain((0..4).map(|i| (i, i + 4))))
            .unwrap();
        let a82 = gen_antiweb(AntiwebSpec::new(8, 2).unwrap());
        assert!(are_isomorphic(&ladder, &a82));
        assert!(!are_isomorphic(&gen_cycle(6).unwrap(), &gen_cycle(3).unwrap().disjoint_union(&gen_cycle(3).unwrap()).unwrap()));
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut seed = 7;
        let mut graphs: Vec<Graph> = NamedGraph::ALL.iter().map(|g| g.graph()).collect();
        for (n, k) in [(13, 4), (19, 7), (16, 6), (12, 3)] {
            graphs.push(gen_antiweb(AntiwebSpec::new(n, k).unwrap()));
        }
        graphs.push(Graph::empty(20).unwrap());
        graphs.push(gen_complete(30).unwrap());
        for g in &graphs {
            let cf = canonical_form(g);
            for _ in 0..5 {
                let p = random_perm(g.n(), &mut seed);
                let h = g.permuted(&p);
                assert_eq!(canonical_form(&h), cf, "{g:?}");
                let iso = find_isomorphism(g, &h).unwrap();
                assert_eq!(g.permuted(&iso), h);
            }
        }
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        let mut seed: u64 = 99;
        let mut graphs = Vec::new();
        for n in 1..=8usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for _ in 0..60 {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
                let code = seed >> 8;
                graphs.push(
                    Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e))
                        .unwrap(),
                );
            }
        }
        for a in &graphs {
            for b in graphs.iter().filter(|b| b.n() == a.n() && b.edge_count() == a.edge_count()) {
                assert_eq!(are_isomorphic(a, b), iso_exhaustive(a, b), "{a:?} / {b:?}");
            }
        }
    }
}
