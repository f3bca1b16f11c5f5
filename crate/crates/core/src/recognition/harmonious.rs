//! Harmonious cutsets, odd pairs and clique separators.
//!
//! Path lengths count edges. A single vertex is an induced path of length 0, which
//! is even.

use serde::{Deserialize, Serialize};

use super::RecognitionError;
use crate::bits::{bit, bits};
use crate::graph::corpus::{graphs_up_to, CorpusFilter};
use crate::graph::{induced_path_parities, Graph, GraphError, DEFAULT_PATH_CAP};
use crate::polytope::is_t_perfect_oracle;

/// Largest graph [`find_harmonious_cutset`] searches by default.
pub const DEFAULT_CUTSET_MAX_N: usize = 12;

/// `(V(G1), V(G2))`: the two sides cover `V(G)` and meet in the cutset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub g1: Vec<usize>,
    pub g2: Vec<usize>,
}

/// Disjoint parts `X_1, ..., X_s` partitioning the cutset `X = V(G1) ∩ V(G2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmoniousTuple {
    pub parts: Vec<Vec<usize>>,
    pub separation: Separation,
}

impl HarmoniousTuple {
    pub fn cutset(&self) -> Vec<usize> {
        let mut x: Vec<usize> = self.parts.iter().flatten().copied().collect();
        x.sort_unstable();
        x
    }
}

/// A tuple that is malformed before any path is looked at.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructuralViolation {
    VertexOutOfRange { vertex: usize },
    EmptyPart { part: usize },
    PartsOverlap { vertex: usize },
    /// The vertex lies on neither side of the separation.
    NotCovered { vertex: usize },
    /// The vertex lies in `V(G1) ∩ V(G2)` but in no part, or in a part but not in both sides.
    PartsNotCutset { vertex: usize },
    /// One side has nothing outside the cutset.
    NotProper,
    EdgeAcrossSeparation { u: usize, v: usize },
    /// With three or more parts, every two parts must be complete to each other.
    PartsNotComplete { i: usize, j: usize, u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TupleVerdict {
    Harmonious,
    Structural { violation: StructuralViolation },
    /// An induced path with the wrong parity: odd inside one part (`same_part`), or
    /// even between two different parts.
    Parity { path: Vec<usize>, same_part: bool },
}

fn mask_checked(g: &Graph, vs: &[usize]) -> Result<u64, StructuralViolation> {
    vs.iter().try_fold(0u64, |m, &v| {
        if v < g.n() {
            Ok(m | bit(v))
        } else {
            Err(StructuralViolation::VertexOutOfRange { vertex: v })
        }
    })
}

fn check_structure(g: &Graph, t: &HarmoniousTuple) -> Result<Vec<u64>, StructuralViolation> {
    use StructuralViolation::*;
    let s1 = mask_checked(g, &t.separation.g1)?;
    let s2 = mask_checked(g, &t.separation.g2)?;
    let mut parts = Vec::with_capacity(t.parts.len());
    let mut seen = 0u64;
    for (i, p) in t.parts.iter().enumerate() {
        let m = mask_checked(g, p)?;
        if m == 0 {
            return Err(EmptyPart { part: i });
        }
        if let Some(v) = bits(m & seen).next() {
            return Err(PartsOverlap { vertex: v });
        }
        // Repeated vertices inside one part count as overlap too.
        if m.count_ones() as usize != p.len() {
            let v = p.iter().find(|&&v| p.iter().filter(|&&w| w == v).count() > 1).copied().unwrap_or(0);
            return Err(PartsOverlap { vertex: v });
        }
        seen |= m;
        parts.push(m);
    }
    if let Some(v) = bits(g.vertex_mask() & !(s1 | s2)).next() {
        return Err(NotCovered { vertex: v });
    }
    let x = s1 & s2;
    if let Some(v) = bits(x ^ seen).next() {
        return Err(PartsNotCutset { vertex: v });
    }
    let (a, b) = (s1 & !x, s2 & !x);
    if a == 0 || b == 0 {
        return Err(NotProper);
    }
    for u in bits(a) {
        if let Some(v) = bits(g.nbrs(u) & b).next() {
            return Err(EdgeAcrossSeparation { u: u.min(v), v: u.max(v) });
        }
    }
    if parts.len() >= 3 {
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                for u in bits(parts[i]) {
                    if let Some(v) = bits(parts[j] & !g.nbrs(u)).next() {
                        return Err(PartsNotComplete { i, j, u, v });
                    }
                }
            }
        }
    }
    Ok(parts)
}

/// Checks that `t` is a G-harmonious tuple across a proper separation: induced paths
/// between two cutset vertices are even exactly when both ends lie in the same part.
/// Structure is checked first and reported separately from parity failures.
pub fn verify_harmonious_tuple(g: &Graph, t: &HarmoniousTuple) -> Result<TupleVerdict, RecognitionError> {
    let parts = match check_structure(g, t) {
        Ok(p) => p,
        Err(violation) => return Ok(TupleVerdict::Structural { violation }),
    };
    let x = parts.iter().fold(0, |m, p| m | p);
    let part_of = |v: usize| parts.iter().position(|p| p & bit(v) != 0);
    let paths = induced_path_parities(g, Some(x), DEFAULT_PATH_CAP)?;
    for u in bits(x) {
        for w in bits(x) {
            let same = part_of(u) == part_of(w);
            let par = paths.parity(u, w);
            let bad_odd = same && par.odd;
            if bad_odd || (!same && par.even) {
                let path = paths.witness(u, w, bad_odd).expect("parity seen").to_vec();
                return Ok(TupleVerdict::Parity { path, same_part: same });
            }
        }
    }
    Ok(TupleVerdict::Harmonious)
}

pub fn find_harmonious_cutset(g: &Graph) -> Result<Option<HarmoniousTuple>, RecognitionError> {
    find_harmonious_cutset_with(g, DEFAULT_CUTSET_MAX_N)
}

/// Searches non-empty cutsets by increasing size (then lexicographically) for one
/// that admits a harmonious partition.
///
/// For a fixed cutset `X`, two vertices joined by an even induced path must share a
/// part, so the finest candidate partition is the set of classes of that relation.
/// Coarser candidates merge classes that no path connects at all; those are tried
/// only if the finest one fails.
pub fn find_harmonious_cutset_with(g: &Graph, max_n: usize) -> Result<Option<HarmoniousTuple>, RecognitionError> {
    let n = g.n();
    if n > max_n {
        return Err(RecognitionError::TooLarge { n, limit: max_n });
    }
    let all = g.vertex_mask();
    let mut cutsets: Vec<u64> = (1..all).filter(|&x| g.components_within(all & !x).len() >= 2).collect();
    cutsets.sort_by_key(|&x| (x.count_ones(), bits(x).collect::<Vec<_>>()));
    for x in cutsets {
        let comps = g.components_within(all & !x);
        let separation = Separation {
            g1: bits(x | comps[0]).collect(),
            g2: bits(comps[1..].iter().fold(x, |m, c| m | c)).collect(),
        };
        let paths = induced_path_parities(g, Some(x), DEFAULT_PATH_CAP)?;
        // Union-find over the even-path relation, as part labels.
        let xs: Vec<usize> = bits(x).collect();
        let mut label: Vec<usize> = (0..xs.len()).collect();
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                if paths.parity(xs[i], xs[j]).even {
                    let (a, b) = (label[i], label[j]);
                    label.iter_mut().filter(|l| **l == b).for_each(|l| *l = a);
                }
            }
        }
        let mut classes: Vec<u64> = Vec::new();
        let mut seen_labels = Vec::new();
        for (i, &l) in label.iter().enumerate() {
            match seen_labels.iter().position(|&s| s == l) {
                Some(c) => classes[c] |= bit(xs[i]),
                None => {
                    seen_labels.push(l);
                    classes.push(bit(xs[i]));
                }
            }
        }
        let unreachable = |a: u64, b: u64| {
            bits(a).all(|u| bits(b).all(|w| {
                let p = paths.parity(u, w);
                !p.even && !p.odd
            }))
        };
        for grouping in coarsenings(&classes, &unreachable) {
            let t = HarmoniousTuple { parts: grouping.iter().map(|&m| bits(m).collect()).collect(), separation: separation.clone() };
            if verify_harmonious_tuple(g, &t)? == TupleVerdict::Harmonious {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

/// Set partitions of `classes` (as merged masks), finest first, merging only classes
/// that `may_merge` allows pairwise.
fn coarsenings(classes: &[u64], may_merge: &dyn Fn(u64, u64) -> bool) -> Vec<Vec<u64>> {
    fn grow(i: usize, classes: &[u64], groups: &mut Vec<Vec<u64>>, may: &dyn Fn(u64, u64) -> bool, out: &mut Vec<Vec<u64>>) {
        if i == classes.len() {
            out.push(groups.iter().map(|g| g.iter().fold(0, |m, c| m | c)).collect());
            return;
        }
        let c = classes[i];
        groups.push(vec![c]);
        grow(i + 1, classes, groups, may, out);
        groups.pop();
        for k in 0..groups.len() {
            if groups[k].iter().all(|&d| may(c, d)) {
                groups[k].push(c);
                grow(i + 1, classes, groups, may, out);
                groups[k].pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(0, classes, &mut Vec::new(), may_merge, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddPairVerdict {
    pub odd_pair: bool,
    /// A shortest even induced path between the two vertices, when one exists.
    pub even_path: Option<Vec<usize>>,
}

/// Every induced `u`–`v` path has odd length. Holds vacuously when no path exists;
/// never holds for `u = v`.
pub fn verify_odd_pair(g: &Graph, u: usize, v: usize) -> Result<OddPairVerdict, RecognitionError> {
    for w in [u, v] {
        if w >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: w, n: g.n() }.into());
        }
    }
    let paths = induced_path_parities(g, Some(bit(u)), DEFAULT_PATH_CAP)?;
    let even_path = paths.witness(u, v, false).map(<[usize]>::to_vec);
    Ok(OddPairVerdict { odd_pair: even_path.is_none(), even_path })
}

/// A clique whose removal disconnects the graph, and the resulting components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSeparator {
    pub clique: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

/// Smallest clique separator, lexicographically first among those of that size. The
/// empty clique separates a disconnected graph.
pub fn find_clique_separator(g: &Graph) -> Option<CliqueSeparator> {
    let all = g.vertex_mask();
    let mut level: Vec<u64> = vec![0];
    while !level.is_empty() {
        for &k in &level {
            let comps = g.components_within(all & !k);
            if comps.len() >= 2 {
                return Some(CliqueSeparator {
                    clique: bits(k).collect(),
                    components: comps.into_iter().map(|c| bits(c).collect()).collect(),
                });
            }
        }
        let mut next = Vec::new();
        for &k in &level {
            let common = bits(k).fold(all, |m, v| m & g.nbrs(v));
            let above = match bits(k).last() {
                Some(top) => !((bit(top) << 1) - 1),
                None => u64::MAX,
            };
            next.extend(bits(common & above).map(|v| k | bit(v)));
        }
        level = next;
    }
    None
}

/// Glues `b` onto `a` by identifying the last `s` vertices of `a` with the first `s`
/// of `b`. `None` when the two copies of the shared vertices induce different graphs.
pub fn glue(a: &Graph, b: &Graph, s: usize) -> Option<Graph> {
    let (na, nb) = (a.n(), b.n());
    if s > na || s > nb {
        return None;
    }
    let to = |j: usize| if j < s { na - s + j } else { na + j - s };
    for i in 0..s {
        for j in i + 1..s {
            if a.has_edge(na - s + i, na - s + j) != b.has_edge(i, j) {
                return None;
            }
        }
    }
    let mut e: Vec<(usize, usize)> = a
        .edges()
        .chain(b.edges().map(|(u, v)| (to(u), to(v))))
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    e.sort_unstable();
    e.dedup();
    Graph::from_edges(na + nb - s, e).ok()
}

/// A graph glued from two t-perfect sides along a verified harmonious cutset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluedInstance {
    pub graph: Graph,
    pub tuple: HarmoniousTuple,
}

/// Up to `limit` graphs on at most 9 vertices, glued from two connected t-perfect
/// graphs on 3 to 5 vertices along two vertices (half the family) or one vertex.
/// An instance is kept when the shared vertices form a verified harmonious tuple,
/// either as one part or as singletons, and both sides are t-perfect. Pieces with
/// odd cycles are used first.
pub fn glued_family(limit: usize) -> Result<Vec<GluedInstance>, RecognitionError> {
    let perfect = |g: &Graph| is_t_perfect_oracle(g).map(|v| v.t_perfect);
    let mut pieces = Vec::new();
    for g in graphs_up_to(5, CorpusFilter::All) {
        if g.n() >= 3 && g.is_connected() && perfect(&g)? {
            pieces.push(g);
        }
    }
    pieces.sort_by_key(|g| (g.is_bipartite().is_some(), g.n(), g.edge_count()));
    let mut out = Vec::new();
    for (s, quota) in [(2, limit / 2), (1, limit)] {
        for a in &pieces {
            for b in &pieces {
                if out.len() >= quota {
                    break;
                }
                let Some(g) = glue(a, b, s).filter(|g| g.n() <= 9) else { continue };
                let na = a.n();
                let x: Vec<usize> = (na - s..na).collect();
                let separation = Separation { g1: (0..na).collect(), g2: (na - s..g.n()).collect() };
                let side = |vs: &[usize]| g.induced_subgraph(vs.iter().fold(0, |m, &v| m | bit(v))).0;
                if !perfect(&side(&separation.g1))? || !perfect(&side(&separation.g2))? {
                    continue;
                }
                for parts in [vec![x.clone()], x.iter().map(|&v| vec![v]).collect()] {
                    let tuple = HarmoniousTuple { parts, separation: separation.clone() };
                    if verify_harmonious_tuple(&g, &tuple)? == TupleVerdict::Harmonious {
                        out.push(GluedInstance { graph: g.clone(), tuple });
                        break;
                    }
                }
            }
        }
    }
    Ok(out)
}
