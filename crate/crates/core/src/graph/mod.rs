//! Simple undirected graphs on at most 64 vertices, stored as per-vertex
//! neighbour bitsets, together with the structural predicates the rest of the
//! crate is built on.

mod canon;
pub mod corpus;
mod cycles;
pub mod formats;
mod generators;
mod induced;
mod named;

pub use canon::{are_isomorphic, canonical_form, canonical_labelling, find_isomorphism, CanonicalForm};
pub use cycles::{
    enumerate_induced_odd_cycles, enumerate_induced_odd_cycles_capped, induced_path_parities,
    InducedPathParity, PathEnumeration, DEFAULT_CYCLE_CAP, DEFAULT_PATH_CAP,
};
pub use generators::{
    gen_antiweb, gen_complete, gen_cycle, gen_cycle_power, gen_path, gen_wheel, AntiwebSpec,
};
pub use induced::{contains_induced, is_p5_free, Embedding};
pub use named::NamedGraph;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{bit, bits, low_mask};

/// Largest vertex count representable with `u64` neighbourhoods.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error("induced odd cycle enumeration exceeded the cap of {0} cycles")]
    CycleCapExceeded(usize),
    #[error("induced path enumeration exceeded the cap of {0} paths")]
    PathCapExceeded(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("dimacs: {0}")]
    Dimacs(String),
}

/// A finite simple graph on the vertex set `0..n`.
///
/// Values are immutable once built; every operation returns a new graph.
/// Serialises as its graph6 string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl From<Graph> for String {
    fn from(g: Graph) -> String {
        formats::to_graph6(&g)
    }
}

impl TryFrom<String> for Graph {
    type Error = GraphError;
    fn try_from(s: String) -> Result<Self, GraphError> {
        formats::from_graph6(&s)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbour masks, checking symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let all = low_mask(n);
        for (v, &m) in adj.iter().enumerate() {
            if m & !all != 0 {
                let vertex = (m & !all).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if m & bit(v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
        }
        let mut sym = adj;
        for v in 0..n {
            for u in bits(sym[v]) {
                sym[u] |= bit(v);
            }
        }
        Ok(Graph { n, adj: sym })
    }

    /// Internal constructor for masks that are already symmetric and loop-free.
    pub(crate) fn from_raw(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!((0..adj.len()).all(|v| adj[v] & bit(v) == 0));
        debug_assert!((0..adj.len()).all(|v| bits(adj[v]).all(|u| adj[u] & bit(v) != 0)));
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bitset.
    #[inline]
    pub fn nbrs(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    /// True when the vertices of `set` are pairwise non-adjacent.
    pub fn is_stable(&self, set: u64) -> bool {
        bits(set).all(|v| self.adj[v] & set == 0)
    }

    /// True when the vertices of `set` are pairwise adjacent.
    pub fn is_clique(&self, set: u64) -> bool {
        bits(set).all(|v| (self.adj[v] | bit(v)) & set == set)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph::from_raw((0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect())
    }

    /// Subgraph induced on `keep`; vertices are relabelled densely in increasing order.
    /// The returned vector maps new labels to old ones.
    pub fn induced_subgraph(&self, keep: u64) -> (Graph, Vec<usize>) {
        let keep = keep & self.vertex_mask();
        let old: Vec<usize> = bits(keep).collect();
        let mut new_of = [usize::MAX; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| bits(self.adj[v] & keep).fold(0u64, |m, u| m | bit(new_of[u])))
            .collect();
        (Graph::from_raw(adj), old)
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertex_mask() & !bit(v)).0
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = bits(self.adj[v]).fold(0, |m, u| m | bit(perm[u]));
        }
        Graph::from_raw(adj)
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph::from_raw(adj))
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.vertex_mask())
    }

    /// Components of the subgraph induced on `within`.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                next &= within & !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colouring of the subgraph induced on `within`, or `None` if it has an odd cycle.
    /// Returns the mask of vertices on side 0; BFS starts from the smallest vertex of each
    /// component, which is placed on side 0.
    pub fn bipartition_within(&self, within: u64) -> Option<u64> {
        let mut side = [u8::MAX; MAX_VERTICES];
        let mut queue = VecDeque::new();
        for s in bits(within) {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for u in bits(self.adj[v] & within) {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(bits(within).filter(|&v| side[v] == 0).fold(0, |m, v| m | bit(v)))
    }

    /// Sides `(A, B)` of a bipartition, if one exists.
    pub fn is_bipartite(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let all = self.vertex_mask();
        let a = self.bipartition_within(all)?;
        Some((bits(a).collect(), bits(all & !a).collect()))
    }

    /// `G - N(v)`: the neighbourhood is removed while `v` itself stays (isolated).
    pub fn minus_neighbourhood(&self, v: usize) -> u64 {
        self.vertex_mask() & !self.adj[v]
    }

    /// Every `G - N(v)` is bipartite.
    pub fn is_near_bipartite(&self) -> bool {
        (0..self.n).all(|v| self.bipartition_within(self.minus_neighbourhood(v)).is_some())
    }

    /// Some single vertex deletion leaves a bipartite graph (bipartite graphs included).
    pub fn is_almost_bipartite(&self) -> bool {
        let all = self.vertex_mask();
        self.bipartition_within(all).is_some()
            || (0..self.n).any(|v| self.bipartition_within(all & !bit(v)).is_some())
    }

    /// Length of a shortest odd cycle, `None` for bipartite graphs.
    ///
    /// A BFS from each root finds an edge joining two vertices at equal depth; the
    /// shortest such closed walk over all roots is a shortest odd cycle.
    pub fn odd_girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for u in bits(self.adj[v]) {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    } else if dist[u] == dist[v] {
                        let len = 2 * dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Maximum clique size, by plain branch and bound. Intended for small graphs.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, cand: u64, size: usize, best: &mut usize) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            grow(g, cand & g.adj[v], size + 1, best);
            grow(g, cand & !bit(v), size, best);
        }
        let mut best = 0;
        grow(self, self.vertex_mask(), 0, &mut best);
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// Edge-list form used in JSON reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        EdgeList { n: g.n(), edges: g.edges().collect() }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = GraphError;

    fn try_from(e: EdgeList) -> Result<Self, Self::Error> {
        Graph::from_edges(e.n, e.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> Graph {
        gen_cycle(n).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(Graph::empty(65), Err(GraphError::TooManyVertices(65))));
        assert_eq!(Graph::from_adjacency(vec![0b10, 0]).unwrap(), Graph::from_edges(2, [(0, 1)]).unwrap());
    }

    #[test]
    fn bipartite_examples() {
        assert!(c(4).is_bipartite().is_some());
        assert!(c(5).is_bipartite().is_none());
        // K4 minus a perfect matching is C4.
        let k4 = gen_complete(4).unwrap();
        let km = Graph::from_edges(4, k4.edges().filter(|&e| e != (0, 1) && e != (2, 3))).unwrap();
        let (a, b) = km.is_bipartite().unwrap();
        assert_eq!((a.len(), b.len()), (2, 2));
    }

    #[test]
    fn near_bipartite_examples() {
        for (n, k) in [(7, 1), (8, 2), (10, 2), (13, 3), (13, 4), (19, 7)] {
            let g = gen_antiweb(AntiwebSpec::new(n, k).unwrap());
            assert!(g.is_near_bipartite(), "aweb({n},{k})");
        }
        assert!(gen_wheel(5).unwrap().is_near_bipartite());
        let c5_plus_triangle = c(5).disjoint_union(&c(3)).unwrap();
        assert!(!c5_plus_triangle.is_near_bipartite());
    }

    #[test]
    fn near_bipartite_keeps_the_vertex() {
        // In K2 + K1 deleting N(0) = {1} leaves {0, 2}: bipartite either way, but the
        // mask must still contain 0.
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(g.minus_neighbourhood(0), 0b101);
    }

    #[test]
    fn odd_girth_examples() {
        assert_eq!(c(5).odd_girth(), Some(5));
        assert_eq!(gen_complete(4).unwrap().odd_girth(), Some(3));
        assert_eq!(gen_cycle_power(7, 2).unwrap().odd_girth(), Some(3));
        assert_eq!(c(6).odd_girth(), None);
        assert_eq!(c(9).odd_girth(), Some(9));
    }

    #[test]
    fn complement_is_involutive_exhaustively() {
        for n in 0..=7usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for code in 0..(1u64 << pairs.len()) {
                let g = Graph::from_edges(
                    n,
                    pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e),
                )
                .unwrap();
                assert_eq!(g.complement().complement(), g);
            }
        }
    }

    #[test]
    fn components_and_induced() {
        let g = c(4).disjoint_union(&c(3)).unwrap();
        assert_eq!(g.components(), vec![0b1111, 0b111_0000]);
        let (h, map) = g.induced_subgraph(0b111_0001);
        assert_eq!(map, vec![0, 4, 5, 6]);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(g.clique_number(), 3);
    }
}
