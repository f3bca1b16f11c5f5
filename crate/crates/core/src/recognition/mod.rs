//! Recognisers for t-perfection in special classes, with certificates.
//!
//! Every negative verdict carries a [`ForbiddenWitness`]: a named pattern and an
//! induced embedding of it, which anyone can re-check edge by edge.

mod harmonious;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{bit, bits};
use crate::graph::{
    contains_induced, gen_antiweb, gen_wheel, is_p5_free, AntiwebSpec, Embedding, Graph, GraphError, NamedGraph,
};
use crate::polytope::PolytopeError;

pub use harmonious::{
    find_clique_separator, find_harmonious_cutset, find_harmonious_cutset_with, glue, glued_family,
    verify_harmonious_tuple, verify_odd_pair, CliqueSeparator, GluedInstance, HarmoniousTuple, OddPairVerdict,
    Separation, StructuralViolation, TupleVerdict, DEFAULT_CUTSET_MAX_N,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error("graph is not near-bipartite: G - N({0}) has an odd cycle")]
    NotNearBipartite(usize),
    #[error("graph contains an induced P5")]
    NotP5Free(Embedding),
    #[error("search refused for n = {n} > {limit}")]
    TooLarge { n: usize, limit: usize },
}

impl RecognitionError {
    pub fn is_resource(&self) -> bool {
        match self {
            RecognitionError::Graph(e) => matches!(e, GraphError::PathCapExceeded(_) | GraphError::CycleCapExceeded(_)),
            RecognitionError::Polytope(e) => e.is_resource(),
            _ => false,
        }
    }
}

/// A forbidden graph, described by how to build it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Pattern {
    Named { name: NamedGraph },
    Antiweb { n: usize, k: usize },
    /// Hub `rim` joined to the cycle `0..rim`, `rim` odd.
    OddWheel { rim: usize },
    /// `aweb(4t + 4, 2t)`.
    EvenMoebius { t: usize },
}

impl Pattern {
    pub fn graph(&self) -> Result<Graph, GraphError> {
        match *self {
            Pattern::Named { name } => Ok(name.graph()),
            Pattern::Antiweb { n, k } => Ok(gen_antiweb(AntiwebSpec::new(n, k)?)),
            Pattern::OddWheel { rim } => {
                if rim % 2 == 0 {
                    return Err(GraphError::InvalidParameters(format!("odd wheel needs an odd rim, got {rim}")));
                }
                gen_wheel(rim)
            }
            Pattern::EvenMoebius { t } => Ok(gen_antiweb(AntiwebSpec::new(4 * t + 4, 2 * t)?)),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Named { name } => write!(f, "{name}"),
            Pattern::Antiweb { n, k } => write!(f, "aweb({n},{k})"),
            Pattern::OddWheel { rim } => write!(f, "W{rim}"),
            Pattern::EvenMoebius { t } => write!(f, "aweb({},{})", 4 * t + 4, 2 * t),
        }
    }
}

/// An induced copy of a forbidden pattern: `embedding.map[p]` is the host vertex
/// playing pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenWitness {
    pub pattern: Pattern,
    pub embedding: Embedding,
}

impl ForbiddenWitness {
    pub fn verify(&self, host: &Graph) -> bool {
        self.pattern.graph().is_ok_and(|p| self.embedding.is_induced(host, &p))
    }
}

/// A recogniser's answer. `witness` is present exactly when `t_perfect` is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionVerdict {
    pub t_perfect: bool,
    pub witness: Option<ForbiddenWitness>,
}

impl RecognitionVerdict {
    fn from_witness(witness: Option<ForbiddenWitness>) -> Self {
        RecognitionVerdict { t_perfect: witness.is_none(), witness }
    }
}

/// Is `aweb(n2, k2)` an induced subgraph of `aweb(n, k)`?
///
/// Trotter's inequalities `n(k2 + 1) >= n2(k + 1)` and `n k2 <= n2 k` decide this
/// whenever the smaller antiweb has an edge. When `n2 = 2 k2 + 1` it is edgeless, and
/// the question is just whether the host has a stable set of size `n2`; the
/// inequalities can fail there (`aweb(3,1)` sits inside `aweb(7,2)`).
pub fn trotter_contains(n: usize, k: usize, n2: usize, k2: usize) -> Result<bool, RecognitionError> {
    let host = AntiwebSpec::new(n, k)?;
    let pattern = AntiwebSpec::new(n2, k2)?;
    if pattern.is_edgeless() {
        return Ok(n2 <= host.stability_number());
    }
    Ok(n * (k2 + 1) >= n2 * (k + 1) && n * k2 <= n2 * k)
}

/// A shortest odd cycle of `G[within]`, as a cyclic vertex sequence. Shortest odd
/// cycles have no chords, so the result is induced.
pub(crate) fn shortest_odd_cycle_within(g: &Graph, within: u64) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in bits(within) {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| 2 * dist[v] + 1 >= b.len()) {
                break;
            }
            for u in bits(g.nbrs(v) & within) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if dist[u] == dist[v] && u > v {
                    let trace = |mut x: usize| {
                        let mut p = vec![x];
                        while x != root {
                            x = parent[x];
                            p.push(x);
                        }
                        p
                    };
                    let mut cycle = trace(v);
                    cycle.reverse();
                    let back = trace(u);
                    cycle.extend(&back[..back.len() - 1]);
                    let distinct = cycle.iter().fold(0u64, |m, &x| m | bit(x)).count_ones() as usize;
                    if distinct == cycle.len() && best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

/// A shortest odd cycle of `g`, induced; `None` for bipartite graphs.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    shortest_odd_cycle_within(g, g.vertex_mask())
}

/// An induced odd wheel: a hub together with an induced odd cycle in its neighbourhood.
/// Hubs are tried in increasing order; for each, a shortest odd cycle of `G[N(hub)]`.
pub fn find_odd_wheel(g: &Graph) -> Option<ForbiddenWitness> {
    (0..g.n()).find_map(|hub| {
        let cycle = shortest_odd_cycle_within(g, g.nbrs(hub))?;
        let rim = cycle.len();
        let mut map = cycle;
        map.push(hub);
        Some(ForbiddenWitness { pattern: Pattern::OddWheel { rim }, embedding: Embedding { map } })
    })
}

/// An induced `aweb(4t + 4, 2t)` for the smallest `t` that occurs.
pub fn find_even_moebius(g: &Graph) -> Option<ForbiddenWitness> {
    (1..)
        .take_while(|t| 4 * t + 4 <= g.n())
        .find_map(|t| find_pattern(g, Pattern::EvenMoebius { t }))
}

fn find_pattern(g: &Graph, pattern: Pattern) -> Option<ForbiddenWitness> {
    let p = pattern.graph().expect("built-in pattern");
    contains_induced(g, &p).map(|embedding| ForbiddenWitness { pattern, embedding })
}

/// First pattern in the list that occurs induced in `g`.
pub fn first_forbidden(g: &Graph, patterns: &[Pattern]) -> Option<ForbiddenWitness> {
    patterns.iter().find_map(|&p| find_pattern(g, p))
}

/// The prime antiwebs that are minimally t-imperfect and near-bipartite, besides the
/// even Möbius ladders.
pub const NEAR_BIPARTITE_ANTIWEBS: [(usize, usize); 5] = [(7, 1), (10, 2), (13, 3), (13, 4), (19, 7)];

/// t-perfection of a near-bipartite graph: it is t-perfect iff it contains no odd
/// wheel, no even Möbius ladder and none of [`NEAR_BIPARTITE_ANTIWEBS`] as an induced
/// subgraph.
pub fn is_t_perfect_near_bipartite(g: &Graph) -> Result<RecognitionVerdict, RecognitionError> {
    if let Some(v) = (0..g.n()).find(|&v| g.bipartition_within(g.minus_neighbourhood(v)).is_none()) {
        return Err(RecognitionError::NotNearBipartite(v));
    }
    let witness = find_odd_wheel(g).or_else(|| find_even_moebius(g)).or_else(|| {
        let aws: Vec<Pattern> = NEAR_BIPARTITE_ANTIWEBS.iter().map(|&(n, k)| Pattern::Antiweb { n, k }).collect();
        first_forbidden(g, &aws)
    });
    Ok(RecognitionVerdict::from_witness(witness))
}

/// The t-imperfect members of the forbidden family for P5-free graphs.
pub const P5_FREE_FORBIDDEN: [NamedGraph; 8] = [
    NamedGraph::K4,
    NamedGraph::W5,
    NamedGraph::C7Sq,
    NamedGraph::Aw10_2,
    NamedGraph::Aw13_3,
    NamedGraph::K4FigA,
    NamedGraph::K4FigB,
    NamedGraph::K4FigC,
];

/// t-perfection of a P5-free graph: it is t-perfect iff none of
/// [`P5_FREE_FORBIDDEN`] occurs as an induced subgraph.
pub fn is_t_perfect_p5_free(g: &Graph) -> Result<RecognitionVerdict, RecognitionError> {
    if !is_p5_free(g) {
        let p5 = NamedGraph::P5.graph();
        return Err(RecognitionError::NotP5Free(contains_induced(g, &p5).expect("P5 present")));
    }
    let patterns: Vec<Pattern> = P5_FREE_FORBIDDEN.iter().map(|&name| Pattern::Named { name }).collect();
    Ok(RecognitionVerdict::from_witness(first_forbidden(g, &patterns)))
}
