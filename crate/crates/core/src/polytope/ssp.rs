use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{as_string, Rational, RationalVec};
use super::simplex::{solve, LpOutcome};
use super::stable::{max_weight_stable_set, stable_sets};
use super::PolytopeError;
use crate::bits::bits;
use crate::graph::Graph;

/// One stable set with its weight in a convex combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedSet {
    pub set: Vec<usize>,
    #[serde(with = "as_string")]
    pub weight: Rational,
}

/// Why a point is or is not in SSP(G).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SspCertificate {
    /// `x = sum of weight * chi(set)` with non-negative weights summing to one.
    Member { combination: Vec<WeightedSet> },
    /// `normal . chi(S) <= rhs` for every stable set `S`, while `normal . x > rhs`.
    Separation {
        normal: RationalVec,
        #[serde(with = "as_string")]
        rhs: Rational,
    },
}

impl SspCertificate {
    pub fn is_member(&self) -> bool {
        matches!(self, SspCertificate::Member { .. })
    }

    /// Re-checks the certificate from scratch. The separation check maximises the
    /// normal over all stable sets by enumeration, independently of the LP.
    pub fn verify(&self, g: &Graph, x: &RationalVec) -> bool {
        if x.len() != g.n() {
            return false;
        }
        match self {
            SspCertificate::Member { combination } => {
                let mut total = Rational::zero();
                let mut point = RationalVec::zeros(g.n());
                for ws in combination {
                    let Some(mask) = ws.set.iter().try_fold(0u64, |m, &v| (v < g.n()).then_some(m | 1 << v)) else {
                        return false;
                    };
                    if ws.weight.is_negative() || !g.is_stable(mask) || mask.count_ones() as usize != ws.set.len() {
                        return false;
                    }
                    total += &ws.weight;
                    for v in bits(mask) {
                        point[v] += &ws.weight;
                    }
                }
                total.is_one() && point == *x
            }
            SspCertificate::Separation { normal, rhs } => {
                let Ok((_, best)) = max_weight_stable_set(g, normal) else {
                    return false;
                };
                best <= *rhs && normal.dot(x) > *rhs
            }
        }
    }
}

/// Decides `x ∈ SSP(G)` by an exact phase-1 LP over all stable sets.
pub fn in_ssp(g: &Graph, x: &RationalVec) -> Result<SspCertificate, PolytopeError> {
    let n = g.n();
    if x.len() != n {
        return Err(PolytopeError::DimensionMismatch { expected: n, got: x.len() });
    }
    let sets = stable_sets(g);
    // Columns (chi_S, 1); rows: one per vertex, then the convexity row.
    let mut a: Vec<Vec<Rational>> = (0..=n).map(|_| Vec::with_capacity(sets.len())).collect();
    for &s in &sets {
        for (v, row) in a.iter_mut().enumerate().take(n) {
            row.push(if s >> v & 1 == 1 { Rational::one() } else { Rational::zero() });
        }
        a[n].push(Rational::one());
    }
    let mut b: Vec<Rational> = x.0.clone();
    b.push(Rational::one());
    let c = vec![Rational::zero(); sets.len()];
    match solve(&a, &b, &c) {
        LpOutcome::Optimal { x: lambda, .. } => {
            let combination = sets
                .iter()
                .zip(lambda)
                .filter(|(_, l)| !l.is_zero())
                .map(|(&s, weight)| WeightedSet { set: bits(s).collect(), weight })
                .collect();
            Ok(SspCertificate::Member { combination })
        }
        LpOutcome::Infeasible { farkas } => {
            // y = (w, w0) with w.chi_S + w0 <= 0 for all S and w.x + w0 > 0.
            let normal = RationalVec(farkas[..n].to_vec());
            let rhs = -farkas[n].clone();
            Ok(SspCertificate::Separation { normal, rhs })
        }
        LpOutcome::Unbounded => unreachable!("feasibility problems have a zero objective"),
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;
    use crate::graph::*;

    #[test]
    fn k4_third_is_separated() {
        let k4 = gen_complete(4).unwrap();
        let x = RationalVec::constant(4, rat(1, 3));
        let cert = in_ssp(&k4, &x).unwrap();
        assert!(!cert.is_member());
        assert!(cert.verify(&k4, &x));
    }

    #[test]
    fn c5_two_fifths_is_a_member() {
        let c5 = gen_cycle(5).unwrap();
        let x = RationalVec::constant(5, rat(2, 5));
        let cert = in_ssp(&c5, &x).unwrap();
        assert!(cert.verify(&c5, &x));
        let SspCertificate::Member { combination } = cert else { panic!() };
        assert_eq!(combination.len(), 5);
        assert!(combination.iter().all(|w| w.set.len() == 2 && w.weight == rat(1, 5)));
    }

    #[test]
    fn negative_and_out_of_range_points() {
        let p2 = gen_path(2).unwrap();
        let x = RationalVec(vec![rat(-1, 2), rat(0, 1)]);
        let cert = in_ssp(&p2, &x).unwrap();
        assert!(!cert.is_member() && cert.verify(&p2, &x));
        let y = RationalVec(vec![rat(1, 1), rat(1, 1)]);
        assert!(in_ssp(&p2, &y).unwrap().verify(&p2, &y));
    }

    #[test]
    fn stable_set_vectors_are_members() {
        let g = NamedGraph::MmC.graph();
        for s in stable_sets(&g).into_iter().step_by(5) {
            let x = RationalVec::characteristic(g.n(), s);
            let cert = in_ssp(&g, &x).unwrap();
            assert!(cert.is_member() && cert.verify(&g, &x));
        }
    }
}
