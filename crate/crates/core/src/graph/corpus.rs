//! Exhaustive small-graph corpora, one representative per isomorphism class.
//!
//! Level `n` is built from level `n - 1` by adding a vertex with every possible
//! neighbourhood and keeping one graph per canonical form. When the class being
//! generated is closed under taking induced subgraphs, parents outside the class
//! are dropped early, which keeps filtered corpora cheap.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{canonical_form, is_p5_free, CanonicalForm, Graph, GraphError, MAX_VERTICES};
use crate::par::par_map;

/// Classes of graphs the generator can restrict to. All are hereditary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusFilter {
    All,
    P5Free,
    NearBip,
}

impl CorpusFilter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            CorpusFilter::All => true,
            CorpusFilter::P5Free => is_p5_free(g),
            CorpusFilter::NearBip => g.is_near_bipartite(),
        }
    }
}

impl std::str::FromStr for CorpusFilter {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(CorpusFilter::All),
            "p5free" => Ok(CorpusFilter::P5Free),
            "nearbip" => Ok(CorpusFilter::NearBip),
            _ => Err(GraphError::InvalidParameters(format!("unknown corpus filter `{s}`"))),
        }
    }
}

/// Number of unlabelled graphs on `n` vertices, n = 0..=8.
pub const KNOWN_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

/// One level of the corpus: canonical representatives on exactly `n` vertices,
/// sorted by canonical form.
pub fn extend_level(parents: &[Graph], filter: CorpusFilter) -> Vec<Graph> {
    let Some(n) = parents.first().map(|g| g.n() + 1) else {
        return Vec::new();
    };
    assert!(n <= MAX_VERTICES);
    let chunks: Vec<BTreeSet<CanonicalForm>> = par_map(parents, |p| {
        let mut seen = BTreeSet::new();
        for nbrs in 0..(1u64 << p.n()) {
            let mut adj = p.adjacency().to_vec();
            for u in crate::bits::bits(nbrs) {
                adj[u] |= 1 << (n - 1);
            }
            adj.push(nbrs);
            let g = Graph::from_raw(adj);
            if filter.accepts(&g) {
                seen.insert(canonical_form(&g));
            }
        }
        seen
    });
    let mut all = BTreeSet::new();
    for c in chunks {
        all.extend(c);
    }
    all.into_iter().map(CanonicalForm::into_graph).collect()
}

/// Levels `0..=max_n`; entry `n` holds every class member on `n` vertices.
pub fn generate(max_n: usize, filter: CorpusFilter) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(0).expect("empty graph")]];
    for _ in 1..=max_n {
        let next = extend_level(levels.last().expect("level 0"), filter);
        levels.push(next);
    }
    levels
}

/// Flat list of all graphs on `1..=max_n` vertices in the class.
pub fn graphs_up_to(max_n: usize, filter: CorpusFilter) -> Vec<Graph> {
    generate(max_n, filter).into_iter().skip(1).flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_totals() {
        let levels = generate(7, CorpusFilter::All);
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, KNOWN_COUNTS[..8]);
    }

    #[test]
    fn filtered_levels_are_subsets() {
        let all = generate(6, CorpusFilter::All);
        for f in [CorpusFilter::P5Free, CorpusFilter::NearBip] {
            let sub = generate(6, f);
            for n in 0..=6 {
                let expected: Vec<&Graph> = all[n].iter().filter(|g| f.accepts(g)).collect();
                assert_eq!(sub[n].iter().collect::<Vec<_>>(), expected, "{f:?} n={n}");
            }
        }
    }
}
