use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{as_string, Rational, RationalVec};
use super::simplex::{solve, LpOutcome};
use super::ssp::WeightedSet;
use super::stable::{maximal_stable_sets, stable_sets};
use super::PolytopeError;
use crate::bits::bits;
use crate::graph::Graph;

/// Optimal fractional colouring and an optimal fractional clique (dual) with equal value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalChromatic {
    #[serde(with = "as_string")]
    pub value: Rational,
    /// Weighted stable sets covering every vertex at least once.
    pub cover: Vec<WeightedSet>,
    /// Vertex weights with at most 1 on every stable set.
    pub dual: RationalVec,
}

impl FractionalChromatic {
    /// Re-checks primal and dual feasibility and that both objectives equal `value`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut covered = vec![Rational::zero(); n];
        let mut total = Rational::zero();
        for ws in &self.cover {
            if ws.weight < Rational::zero() || ws.set.iter().any(|&v| v >= n) {
                return false;
            }
            let mask = ws.set.iter().fold(0u64, |m, &v| m | 1 << v);
            if !g.is_stable(mask) {
                return false;
            }
            total += &ws.weight;
            for &v in &ws.set {
                covered[v] += &ws.weight;
            }
        }
        let dual_ok = self.dual.len() == n
            && !self.dual.has_negative()
            && stable_sets(g)
                .into_iter()
                .all(|s| bits(s).fold(Rational::zero(), |a, v| a + &self.dual[v]) <= Rational::one());
        covered.iter().all(|c| *c >= Rational::one()) && total == self.value && dual_ok && self.dual.sum() == self.value
    }
}

/// `min sum y_S` over stable sets with every vertex covered, solved over the full list
/// of non-empty stable sets; the dual `max sum w_v` with `w(S) <= 1` is solved
/// separately over the maximal stable sets and must reach the same value.
pub fn fractional_chromatic(g: &Graph) -> Result<FractionalChromatic, PolytopeError> {
    let n = g.n();
    if n == 0 {
        return Ok(FractionalChromatic { value: Rational::zero(), cover: vec![], dual: RationalVec(vec![]) });
    }
    let sets: Vec<u64> = stable_sets(g).into_iter().filter(|&s| s != 0).collect();
    let k = sets.len();
    // Columns: y_S for each set, then one surplus per vertex.
    let a: Vec<Vec<Rational>> = (0..n)
        .map(|v| {
            let mut row: Vec<Rational> =
                sets.iter().map(|&s| if s >> v & 1 == 1 { Rational::one() } else { Rational::zero() }).collect();
            row.extend((0..n).map(|u| if u == v { -Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let b = vec![Rational::one(); n];
    let mut c = vec![Rational::one(); k];
    c.extend(vec![Rational::zero(); n]);
    let LpOutcome::Optimal { x, value, .. } = solve(&a, &b, &c) else {
        return Err(PolytopeError::LpFailure("covering LP is feasible and bounded".into()));
    };
    let cover = sets
        .iter()
        .zip(&x)
        .filter(|(_, y)| !y.is_zero())
        .map(|(&s, y)| WeightedSet { set: bits(s).collect(), weight: y.clone() })
        .collect();

    let maximal = maximal_stable_sets(g);
    let m = maximal.len();
    let a: Vec<Vec<Rational>> = maximal
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let mut row: Vec<Rational> =
                (0..n).map(|v| if s >> v & 1 == 1 { Rational::one() } else { Rational::zero() }).collect();
            row.extend((0..m).map(|j| if j == i { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let b = vec![Rational::one(); m];
    let mut c = vec![-Rational::one(); n];
    c.extend(vec![Rational::zero(); m]);
    let LpOutcome::Optimal { x: w, value: dv, .. } = solve(&a, &b, &c) else {
        return Err(PolytopeError::LpFailure("fractional clique LP is feasible and bounded".into()));
    };
    if -dv.clone() != value {
        return Err(PolytopeError::LpFailure(format!("primal {value} and dual {} differ", -dv)));
    }
    Ok(FractionalChromatic { value, cover, dual: RationalVec(w[..n].to_vec()) })
}

#[cfg(test)]
mod tests {
    use super::super::rational::{int, rat};
    use super::*;
    use crate::graph::*;

    #[test]
    fn examples() {
        let chi = |g: &Graph| {
            let f = fractional_chromatic(g).unwrap();
            assert!(f.verify(g));
            f.value
        };
        assert_eq!(chi(&gen_cycle(5).unwrap()), rat(5, 2));
        assert_eq!(chi(&gen_complete(4).unwrap()), int(4));
        assert_eq!(chi(&gen_cycle_power(7, 2).unwrap()), rat(7, 2));
        assert_eq!(chi(&gen_path(3).unwrap()), int(2));
        assert_eq!(chi(&Graph::empty(3).unwrap()), int(1));
        assert_eq!(chi(&Graph::empty(0).unwrap()), int(0));
    }
}
