use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, MAX_VERTICES};
use crate::bits::bit;

/// Parameters `(n, k)` of the antiweb on `0..n`, the complement of the `k`-th power
/// of the `n`-cycle: `i` and `j` are adjacent iff their circular distance exceeds `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AntiwebSpec {
    n: usize,
    k: usize,
}

impl AntiwebSpec {
    pub fn new(n: usize, k: usize) -> Result<Self, GraphError> {
        if n == 0 || n <= 2 * k {
            return Err(GraphError::InvalidParameters(format!(
                "antiweb needs n > 2k and n >= 1, got n={n}, k={k}"
            )));
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(AntiwebSpec { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `n >= 2k + 2` and `gcd(k + 1, n) = 1`.
    pub fn is_prime(&self) -> bool {
        self.n >= 2 * self.k + 2 && num_integer::gcd(self.k + 1, self.n) == 1
    }

    /// `n = 2k + 1`: the cycle power is complete, so the antiweb has no edges.
    pub fn is_edgeless(&self) -> bool {
        self.n == 2 * self.k + 1
    }

    /// Independence number: stable sets of the antiweb are cliques of the cycle power.
    pub fn stability_number(&self) -> usize {
        if self.is_edgeless() {
            self.n
        } else {
            self.k + 1
        }
    }

    /// The even Möbius ladder `aweb(4t+4, 2t)`.
    pub fn even_moebius(t: usize) -> Self {
        AntiwebSpec { n: 4 * t + 4, k: 2 * t }
    }
}

pub(crate) fn circular_distance(i: usize, j: usize, n: usize) -> usize {
    let d = i.abs_diff(j) % n;
    d.min(n - d)
}

/// `C_n^k`: vertices `0..n`, adjacent iff their circular distance is between 1 and `k`.
pub fn gen_cycle_power(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameters(format!("cycle power needs n >= 3, got {n}")));
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let adj = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| {
                    let d = circular_distance(i, j, n);
                    d > 0 && d <= k
                })
                .fold(0u64, |m, j| m | bit(j))
        })
        .collect();
    Ok(Graph::from_raw(adj))
}

pub fn gen_antiweb(spec: AntiwebSpec) -> Graph {
    let n = spec.n;
    let adj = (0..n)
        .map(|i| (0..n).filter(|&j| circular_distance(i, j, n) > spec.k).fold(0u64, |m, j| m | bit(j)))
        .collect();
    Graph::from_raw(adj)
}

pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    gen_cycle_power(n, 1)
}

/// Wheel `W_n`: rim cycle `0..n` and hub `n` adjacent to every rim vertex.
pub fn gen_wheel(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameters(format!("wheel needs n >= 3, got {n}")));
    }
    let rim = gen_cycle(n)?;
    let hub = Graph::empty(1)?;
    let g = rim.disjoint_union(&hub)?;
    Graph::from_edges(n + 1, g.edges().chain((0..n).map(|i| (i, n))))
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn gen_path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn gen_complete(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_power_examples() {
        let c5 = gen_cycle_power(5, 1).unwrap();
        assert_eq!(c5.edge_count(), 5);
        let c72 = gen_cycle_power(7, 2).unwrap();
        assert_eq!(c72.edge_count(), 14);
        assert!(c72.is_regular(4));
        assert_eq!(gen_cycle_power(10, 2).unwrap().edge_count(), 20);
        assert!(gen_cycle_power(2, 1).is_err());
        // k large saturates to the complete graph.
        assert_eq!(gen_cycle_power(5, 9).unwrap(), gen_complete(5).unwrap());
    }

    #[test]
    fn antiweb_examples() {
        let a71 = gen_antiweb(AntiwebSpec::new(7, 1).unwrap());
        assert_eq!(a71.n(), 7);
        assert!(a71.is_regular(4));
        let a82 = gen_antiweb(AntiwebSpec::new(8, 2).unwrap());
        assert!(a82.is_regular(3));
        assert_eq!(gen_antiweb(AntiwebSpec::new(4, 0).unwrap()), gen_complete(4).unwrap());
        assert!(AntiwebSpec::new(6, 3).is_err());
        assert!(AntiwebSpec::new(7, 3).unwrap().is_edgeless());
    }

    #[test]
    fn antiweb_is_complement_of_cycle_power() {
        for n in 3..=19 {
            for k in 0..=(n - 1) / 2 {
                let a = gen_antiweb(AntiwebSpec::new(n, k).unwrap());
                assert_eq!(a, gen_cycle_power(n, k).unwrap().complement(), "({n},{k})");
            }
        }
    }

    #[test]
    fn primality() {
        let prime = |n, k| AntiwebSpec::new(n, k).unwrap().is_prime();
        assert!(prime(13, 3) && prime(13, 4) && prime(19, 7) && prime(10, 2) && prime(7, 1));
        assert!(prime(8, 2) && prime(4, 0));
        assert!(!prime(9, 2) && !prime(12, 2));
        assert_eq!(AntiwebSpec::even_moebius(1), AntiwebSpec::new(8, 2).unwrap());
    }

    #[test]
    fn wheel_examples() {
        assert_eq!(gen_wheel(3).unwrap(), gen_complete(4).unwrap());
        let w5 = gen_wheel(5).unwrap();
        assert_eq!((w5.n(), w5.edge_count()), (6, 10));
        assert_eq!(gen_wheel(4).unwrap().degree(4), 4);
        assert!(gen_wheel(2).is_err());
    }
}
