//! Exact colouring, the 4-colouring of near-bipartite t-perfect graphs and
//! 3-colouring of P5-free t-perfect graphs.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{bit, bits};
use crate::graph::{gen_antiweb, AntiwebSpec, Graph, GraphError, NamedGraph};
use crate::polytope::{fractional_chromatic, PolytopeError, Rational};
use crate::recognition::{first_forbidden, is_t_perfect_p5_free, ForbiddenWitness, Pattern, RecognitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error("graph is not near-bipartite: G - N({0}) has an odd cycle")]
    NotNearBipartite(usize),
    #[error("the neighbourhood of {0} is not bipartite, so the graph has an induced odd wheel")]
    NeighbourhoodNotBipartite(usize),
    #[error("graph is not t-perfect: contains {}", .0.pattern)]
    NotTPerfect(ForbiddenWitness),
    #[error("graph is bipartite; the odd girth is undefined")]
    Bipartite,
    /// Would contradict the 3-colourability of P5-free t-perfect graphs.
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}

/// `colours[v]` in `1..=k`. Serialises as a JSON object from vertex to colour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BTreeMap<usize, usize>", try_from = "BTreeMap<usize, usize>")]
pub struct Colouring {
    pub colours: Vec<usize>,
}

impl From<Colouring> for BTreeMap<usize, usize> {
    fn from(c: Colouring) -> Self {
        c.colours.into_iter().enumerate().collect()
    }
}

impl TryFrom<BTreeMap<usize, usize>> for Colouring {
    type Error = String;

    fn try_from(m: BTreeMap<usize, usize>) -> Result<Self, String> {
        if m.keys().copied().ne(0..m.len()) {
            return Err("colouring keys must be the vertices 0..n".into());
        }
        Ok(Colouring { colours: m.into_values().collect() })
    }
}

impl Colouring {
    pub fn num_colours(&self) -> usize {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    /// Every vertex coloured in `1..`, no edge monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colours.len() == g.n()
            && self.colours.iter().all(|&c| c >= 1)
            && g.edges().all(|(u, v)| self.colours[u] != self.colours[v])
    }
}

/// A proper colouring with at most `k` colours, or `None` if there is none.
///
/// Backtracking in DSATUR order: the next vertex is the one seeing the most distinct
/// colours, ties broken by uncoloured degree, then index. A fresh colour is only
/// ever the smallest unused one.
pub fn k_colouring(g: &Graph, k: usize) -> Option<Colouring> {
    let n = g.n();
    let k = k.min(n);
    if n == 0 {
        return Some(Colouring { colours: Vec::new() });
    }
    if k == 0 {
        return None;
    }
    let mut colour = vec![0usize; n];
    if dsatur(g, k, &mut colour, 0, 0) {
        Some(Colouring { colours: colour })
    } else {
        None
    }
}

fn dsatur(g: &Graph, k: usize, colour: &mut [usize], coloured: u64, used: usize) -> bool {
    let uncoloured = g.vertex_mask() & !coloured;
    if uncoloured == 0 {
        return true;
    }
    let seen = |v: usize| bits(g.nbrs(v) & coloured).fold(0u64, |m, u| m | bit(colour[u]));
    let v = bits(uncoloured)
        .max_by_key(|&v| {
            (seen(v).count_ones(), (g.nbrs(v) & uncoloured).count_ones(), std::cmp::Reverse(v))
        })
        .expect("uncoloured vertex");
    let blocked = seen(v);
    for c in 1..=(used + 1).min(k) {
        if blocked & bit(c) != 0 {
            continue;
        }
        colour[v] = c;
        if dsatur(g, k, colour, coloured | bit(v), used.max(c)) {
            return true;
        }
    }
    colour[v] = 0;
    false
}

pub fn chromatic_number(g: &Graph) -> usize {
    (0..=g.n()).find(|&k| k_colouring(g, k).is_some()).expect("n colours always suffice")
}

/// The near-bipartite 4-colouring at the smallest vertex whose neighbourhood is
/// bipartite.
pub fn colour_near_bipartite_4(g: &Graph) -> Result<Colouring, ColouringError> {
    check_near_bipartite(g)?;
    match (0..g.n()).find(|&v| g.bipartition_within(g.nbrs(v)).is_some()) {
        Some(v) => colour_near_bipartite_4_at(g, v),
        None if g.n() == 0 => Ok(Colouring { colours: Vec::new() }),
        None => Err(ColouringError::NeighbourhoodNotBipartite(0)),
    }
}

/// Colours 1 and 2 on the bipartite graph `G - N(v)` (which keeps `v`, coloured 1),
/// colours 3 and 4 on `N(v)`. Each side assignment is a BFS from the smallest vertex
/// of every component.
pub fn colour_near_bipartite_4_at(g: &Graph, v: usize) -> Result<Colouring, ColouringError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
    }
    check_near_bipartite(g)?;
    let rest = g.minus_neighbourhood(v);
    let outer = g.bipartition_within(rest).expect("near-bipartite");
    let inner = g.bipartition_within(g.nbrs(v)).ok_or(ColouringError::NeighbourhoodNotBipartite(v))?;
    let colours = (0..g.n())
        .map(|u| match (rest & bit(u) != 0, (outer | inner) & bit(u) != 0) {
            (true, true) => 1,
            (true, false) => 2,
            (false, true) => 3,
            (false, false) => 4,
        })
        .collect();
    Ok(Colouring { colours })
}

fn check_near_bipartite(g: &Graph) -> Result<(), ColouringError> {
    match (0..g.n()).find(|&v| g.bipartition_within(g.minus_neighbourhood(v)).is_none()) {
        Some(v) => Err(ColouringError::NotNearBipartite(v)),
        None => Ok(()),
    }
}

/// The twelve graphs whose absence makes a P5-free graph 3-colourable, in the order
/// `K4, W5, MM_a..MM_f, C7², MM_g, aweb(10,2), aweb(13,3)`.
pub fn mm_patterns() -> [Pattern; 12] {
    use NamedGraph::*;
    [K4, W5, MmA, MmB, MmC, MmD, MmE, MmF, C7Sq, MmG, Aw10_2, Aw13_3].map(|name| Pattern::Named { name })
}

/// First of [`mm_patterns`] that occurs induced in `g`.
pub fn mm_forbidden(g: &Graph) -> Option<ForbiddenWitness> {
    first_forbidden(g, &mm_patterns())
}

/// A 3-colouring of a P5-free t-perfect graph.
///
/// The graph is first checked to be P5-free and t-perfect. Such a graph contains none
/// of the twelve 4-critical patterns, and is then 3-colourable; either step failing
/// raises [`ColouringError::TheoremViolation`].
pub fn three_colour_p5_free_tperfect(g: &Graph) -> Result<Colouring, ColouringError> {
    let verdict = is_t_perfect_p5_free(g)?;
    if let Some(w) = verdict.witness {
        return Err(ColouringError::NotTPerfect(w));
    }
    if let Some(w) = mm_forbidden(g) {
        return Err(ColouringError::TheoremViolation(format!(
            "t-perfect P5-free graph contains {} at {:?}",
            w.pattern, w.embedding.map
        )));
    }
    k_colouring(g, 3).ok_or_else(|| ColouringError::TheoremViolation("no 3-colouring exists".into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiFReport {
    pub og: usize,
    #[serde(with = "crate::polytope::rational::as_string")]
    pub chi_f: Rational,
    /// `2 og / (og - 1)`.
    #[serde(with = "crate::polytope::rational::as_string")]
    pub formula_value: Rational,
    pub matches: bool,
    /// `chi_f` compared to the formula value: `"less"`, `"equal"` or `"greater"`.
    pub comparison: String,
}

/// Compares the fractional chromatic number with `2 og / (og - 1)` exactly.
pub fn check_chi_f_formula(g: &Graph) -> Result<ChiFReport, ColouringError> {
    let og = g.odd_girth().ok_or(ColouringError::Bipartite)?;
    let chi_f = fractional_chromatic(g)?.value;
    let formula_value = Rational::new(BigInt::from(2 * og), BigInt::from(og - 1));
    let ord = chi_f.cmp(&formula_value);
    let comparison = match ord {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    };
    Ok(ChiFReport { og, chi_f, formula_value, matches: ord == Ordering::Equal, comparison: comparison.into() })
}

/// The minimally t-imperfect graphs small enough for desk checks.
pub fn desk_minimally_imperfect() -> Vec<(String, Graph)> {
    let aw = |n, k| gen_antiweb(AntiwebSpec::new(n, k).expect("antiweb"));
    vec![
        ("K4".into(), NamedGraph::K4.graph()),
        ("W5".into(), NamedGraph::W5.graph()),
        ("C7sq".into(), NamedGraph::C7Sq.graph()),
        ("aweb(8,2)".into(), aw(8, 2)),
        ("aweb(10,2)".into(), aw(10, 2)),
        ("aweb(13,3)".into(), aw(13, 3)),
        ("aweb(13,4)".into(), aw(13, 4)),
    ]
}
