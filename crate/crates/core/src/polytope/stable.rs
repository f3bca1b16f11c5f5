use num_traits::Zero;

use super::rational::{Rational, RationalVec};
use super::PolytopeError;
use crate::bits::{bits, low_mask};
use crate::graph::Graph;

/// All stable sets as bitmasks, `∅` first, in lexicographic order of their sorted
/// vertex lists.
pub fn stable_sets(g: &Graph) -> Vec<u64> {
    fn grow(g: &Graph, set: u64, cand: u64, out: &mut Vec<u64>) {
        out.push(set);
        for v in bits(cand) {
            grow(g, set | 1 << v, cand & !low_mask(v + 1) & !g.nbrs(v), out);
        }
    }
    let mut out = Vec::new();
    grow(g, 0, g.vertex_mask(), &mut out);
    out
}

/// Inclusion-maximal stable sets, in the same order as [`stable_sets`].
pub fn maximal_stable_sets(g: &Graph) -> Vec<u64> {
    let all = g.vertex_mask();
    stable_sets(g)
        .into_iter()
        .filter(|&s| {
            let dominated = bits(s).fold(s, |m, v| m | g.nbrs(v));
            dominated == all
        })
        .collect()
}

/// A maximum-weight stable set and its weight; ties go to the first set in
/// [`stable_sets`] order.
pub fn max_weight_stable_set(g: &Graph, w: &RationalVec) -> Result<(u64, Rational), PolytopeError> {
    if w.len() != g.n() {
        return Err(PolytopeError::DimensionMismatch { expected: g.n(), got: w.len() });
    }
    let mut best = (0u64, Rational::zero());
    for s in stable_sets(g) {
        let val = bits(s).fold(Rational::zero(), |acc, v| acc + &w[v]);
        if val > best.1 {
            best = (s, val);
        }
    }
    Ok(best)
}
