use serde::{Deserialize, Serialize};

use super::{gen_path, Graph};
use crate::bits::{bit, bits};

/// Injective map from pattern vertices to host vertices; `map[p]` is the image of `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that adjacency is preserved in both directions.
    pub fn is_induced(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&h| h >= host.n()) {
            return false;
        }
        let mut seen = 0u64;
        for &h in &self.map {
            if seen & bit(h) != 0 {
                return false;
            }
            seen |= bit(h);
        }
        (0..pattern.n()).all(|p| {
            (p + 1..pattern.n())
                .all(|q| pattern.has_edge(p, q) == host.has_edge(self.map[p], self.map[q]))
        })
    }

    pub fn image(&self) -> u64 {
        self.map.iter().fold(0, |m, &h| m | bit(h))
    }
}

/// Order pattern vertices so that each one (after the first of its component) has an
/// already-placed neighbour, preferring high degree. Connected prefixes prune hardest.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let unplaced = pattern.vertex_mask() & !placed;
        let next = bits(unplaced)
            .max_by_key(|&v| {
                let back = (pattern.nbrs(v) & placed).count_ones();
                (back, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed |= bit(next);
        order.push(next);
    }
    order
}

/// Finds an induced copy of `pattern` in `host` by backtracking.
///
/// Candidates for each pattern vertex are restricted to unused host vertices of at least
/// the same degree whose adjacency to every already-mapped vertex agrees with the
/// pattern. The search is deterministic: host candidates are tried in increasing order.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let pn = pattern.n();
    if pn > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    if pn == 0 {
        return Some(Embedding { map: Vec::new() });
    }
    let order = search_order(pattern);
    // Host vertices with degree >= d, for each d.
    let max_deg = (0..pn).map(|p| pattern.degree(p)).max().unwrap_or(0);
    let deg_ok: Vec<u64> = (0..=max_deg)
        .map(|d| (0..host.n()).filter(|&h| host.degree(h) >= d).fold(0, |m, h| m | bit(h)))
        .collect();

    let mut map = vec![usize::MAX; pn];
    if extend(host, pattern, &order, &deg_ok, 0, 0, &mut map) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    deg_ok: &[u64],
    depth: usize,
    used: u64,
    map: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = host.vertex_mask() & !used & deg_ok[pattern.degree(p)];
    for &q in &order[..depth] {
        let hq = map[q];
        if pattern.has_edge(p, q) {
            cand &= host.nbrs(hq);
        } else {
            cand &= !host.nbrs(hq);
        }
        if cand == 0 {
            return false;
        }
    }
    // Remaining pattern vertices must still fit among the unused host vertices.
    if ((host.vertex_mask() & !used).count_ones() as usize) < order.len() - depth {
        return false;
    }
    for h in bits(cand) {
        map[p] = h;
        if extend(host, pattern, order, deg_ok, depth + 1, used | bit(h), map) {
            return true;
        }
    }
    map[p] = usize::MAX;
    false
}

pub fn is_p5_free(g: &Graph) -> bool {
    let p5 = gen_path(5).expect("P5");
    contains_induced(g, &p5).is_none()
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;

    /// Brute force over all injections, as an independent check.
    fn brute_force(host: &Graph, pattern: &Graph) -> bool {
        fn go(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
            let p = map.len();
            if p == pattern.n() {
                return true;
            }
            for h in 0..host.n() {
                if used & bit(h) != 0 {
                    continue;
                }
                if (0..p).all(|q| pattern.has_edge(p, q) == host.has_edge(h, map[q])) {
                    map.push(h);
                    if go(host, pattern, map, used | bit(h)) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        go(host, pattern, &mut Vec::new(), 0)
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0..1u64 << pairs.len())
            .map(|code| {
                Graph::from_edges(
                    n,
                    pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e),
                )
                .unwrap()
            })
            .collect()
    }

    #[test]
    fn examples() {
        let c5 = gen_cycle(5).unwrap();
        let p5 = gen_path(5).unwrap();
        assert!(contains_induced(&c5, &p5).is_none());
        let w5 = gen_wheel(5).unwrap();
        let e = contains_induced(&w5, &c5).unwrap();
        assert!(e.is_induced(&w5, &c5));
        assert_eq!(e.image(), 0b11111);
        let a133 = gen_antiweb(AntiwebSpec::new(13, 3).unwrap());
        let a82 = gen_antiweb(AntiwebSpec::new(8, 2).unwrap());
        assert!(contains_induced(&a133, &a82).is_none());
    }

    #[test]
    fn p5_freeness() {
        assert!(is_p5_free(&gen_cycle(5).unwrap()));
        assert!(!is_p5_free(&gen_path(5).unwrap()));
        assert!(is_p5_free(&gen_antiweb(AntiwebSpec::new(13, 3).unwrap())));
        // 0-5-10-2-9 is an induced path.
        assert!(!is_p5_free(&gen_antiweb(AntiwebSpec::new(13, 4).unwrap())));
        assert!(!is_p5_free(&gen_cycle(7).unwrap()));
    }

    #[test]
    fn agrees_with_brute_force_on_small_pairs() {
        // Hosts: all graphs on 5 vertices and a sample on 6; patterns: all graphs on up to 4.
        let patterns: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
        let mut hosts = all_graphs(5);
        hosts.extend(all_graphs(6).into_iter().step_by(37));
        for h in &hosts {
            for p in &patterns {
                let found = contains_induced(h, p);
                assert_eq!(found.is_some(), brute_force(h, p), "{h:?} / {p:?}");
                if let Some(e) = found {
                    assert!(e.is_induced(h, p));
                }
            }
        }
    }
}
