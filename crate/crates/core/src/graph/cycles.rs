//! Chordless cycle and induced path enumeration.

use super::{Graph, GraphError, MAX_VERTICES};
use crate::bits::{bit, bits};

/// Default limit on the number of induced odd cycles collected before giving up.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// Default limit on the number of induced paths walked by the parity enumeration.
pub const DEFAULT_PATH_CAP: usize = 5_000_000;

/// All induced odd cycles with the default cap.
pub fn enumerate_induced_odd_cycles(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    enumerate_induced_odd_cycles_capped(g, DEFAULT_CYCLE_CAP)
}

/// Every chordless odd cycle exactly once.
///
/// A cycle is reported starting at its smallest vertex `s`, continuing to the smaller of
/// the two cycle neighbours of `s`; the search extends chordless paths through vertices
/// larger than `s` and closes when the last vertex is adjacent to `s`.
pub fn enumerate_induced_odd_cycles_capped(
    g: &Graph,
    cap: usize,
) -> Result<Vec<Vec<usize>>, GraphError> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        let above = g.vertex_mask() & !crate::bits::low_mask(s + 1);
        path.clear();
        path.push(s);
        for v1 in bits(g.nbrs(s) & above) {
            path.push(v1);
            // Vertices adjacent to some interior vertex of the path are excluded.
            grow_cycle(g, s, above, g.nbrs(v1), &mut path, &mut out, cap)?;
            path.pop();
        }
    }
    Ok(out)
}

fn grow_cycle(
    g: &Graph,
    s: usize,
    allowed: u64,
    last_nbrs: u64,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<(), GraphError> {
    let on_path = path.iter().fold(0u64, |m, &v| m | bit(v));
    // Interior vertices are everything but the start and the last vertex.
    let interior = on_path & !bit(s) & !bit(*path.last().unwrap());
    let interior_nbrs = bits(interior).fold(0u64, |m, v| m | g.nbrs(v));
    let v1 = path[1];
    for w in bits(last_nbrs & allowed & !on_path & !interior_nbrs) {
        if g.has_edge(w, s) {
            // Closing vertex; a reflection is skipped unless v1 < w.
            if path.len() >= 2 && v1 < w && (path.len() + 1) % 2 == 1 {
                if out.len() >= cap {
                    return Err(GraphError::CycleCapExceeded(cap));
                }
                let mut c = path.clone();
                c.push(w);
                out.push(c);
            }
            continue;
        }
        path.push(w);
        grow_cycle(g, s, allowed, g.nbrs(w), path, out, cap)?;
        path.pop();
    }
    Ok(())
}

/// Parities of the induced paths joining two vertices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct InducedPathParity {
    pub even: bool,
    pub odd: bool,
}

/// For every ordered pair `(u, v)`, which path-length parities occur among induced
/// `u`–`v` paths, plus one shortest witness path per pair and parity.
#[derive(Debug, Clone)]
pub struct PathEnumeration {
    n: usize,
    parity: Vec<InducedPathParity>,
    witness: Vec<[Option<Vec<usize>>; 2]>,
}

impl PathEnumeration {
    pub fn parity(&self, u: usize, v: usize) -> InducedPathParity {
        self.parity[u * self.n + v]
    }

    /// A shortest induced `u`–`v` path of the given parity (`0` even, `1` odd).
    pub fn witness(&self, u: usize, v: usize, odd: bool) -> Option<&[usize]> {
        self.witness[u * self.n + v][odd as usize].as_deref()
    }
}

/// Enumerates all induced paths starting in `sources` (every vertex when `None`).
///
/// The single-vertex path counts as an even path from a vertex to itself.
pub fn induced_path_parities(
    g: &Graph,
    sources: Option<u64>,
    cap: usize,
) -> Result<PathEnumeration, GraphError> {
    let n = g.n();
    let mut en = PathEnumeration {
        n,
        parity: vec![InducedPathParity::default(); n * n],
        witness: vec![[None, None]; n * n],
    };
    let mut budget = cap;
    let mut path = Vec::with_capacity(MAX_VERTICES);
    for u in bits(sources.unwrap_or(g.vertex_mask())) {
        path.clear();
        path.push(u);
        record(&mut en, &path);
        walk(g, &mut path, bit(u), 0, &mut en, &mut budget, cap)?;
    }
    Ok(en)
}

fn record(en: &mut PathEnumeration, path: &[usize]) {
    let (u, v) = (path[0], *path.last().unwrap());
    let odd = (path.len() - 1) % 2 == 1;
    let idx = u * en.n + v;
    let p = &mut en.parity[idx];
    if odd {
        p.odd = true;
    } else {
        p.even = true;
    }
    let slot = &mut en.witness[idx][odd as usize];
    if slot.as_ref().is_none_or(|w| w.len() > path.len()) {
        *slot = Some(path.to_vec());
    }
}

fn walk(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: u64,
    blocked: u64,
    en: &mut PathEnumeration,
    budget: &mut usize,
    cap: usize,
) -> Result<(), GraphError> {
    let last = *path.last().unwrap();
    for w in bits(g.nbrs(last) & !on_path & !blocked) {
        if *budget == 0 {
            return Err(GraphError::PathCapExceeded(cap));
        }
        *budget -= 1;
        path.push(w);
        record(en, path);
        // `last` becomes interior: its other neighbours may no longer join the path.
        walk(g, path, on_path | bit(w), blocked | g.nbrs(last), en, budget, cap)?;
        path.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;

    /// Subset-based oracle: a vertex set is counted iff it induces a single odd cycle.
    fn brute_force_count(g: &Graph) -> usize {
        (1u64..1 << g.n())
            .filter(|&s| {
                let k = s.count_ones() as usize;
                if k < 3 || k % 2 == 0 {
                    return false;
                }
                let (h, _) = g.induced_subgraph(s);
                h.is_regular(2) && h.is_connected()
            })
            .count()
    }

    fn is_chordless_cycle(g: &Graph, c: &[usize]) -> bool {
        let k = c.len();
        (0..k).all(|i| {
            (0..k).all(|j| {
                let d = i.abs_diff(j);
                let cyc = d == 1 || d == k - 1;
                i == j || g.has_edge(c[i], c[j]) == cyc
            })
        })
    }

    #[test]
    fn examples() {
        let k4 = gen_complete(4).unwrap();
        assert_eq!(enumerate_induced_odd_cycles(&k4).unwrap().len(), 4);
        let w5 = gen_wheel(5).unwrap();
        let cycles = enumerate_induced_odd_cycles(&w5).unwrap();
        assert_eq!(cycles.len(), 6);
        assert!(cycles.contains(&vec![0, 1, 2, 3, 4]));
        assert!(enumerate_induced_odd_cycles(&gen_cycle(4).unwrap()).unwrap().is_empty());
        assert_eq!(enumerate_induced_odd_cycles(&gen_cycle(7).unwrap()).unwrap(), vec![vec![0, 1, 2, 3, 4, 5, 6]]);
    }

    #[test]
    fn cap_is_reported() {
        let k6 = gen_complete(6).unwrap();
        assert_eq!(
            enumerate_induced_odd_cycles_capped(&k6, 5),
            Err(GraphError::CycleCapExceeded(5))
        );
    }

    #[test]
    fn agrees_with_subset_oracle() {
        let mut graphs = Vec::new();
        for n in 3..=7usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let total = 1u64 << pairs.len();
            let step = (total / 3000).max(1);
            let mut code = 0;
            while code < total {
                graphs.push(
                    Graph::from_edges(
                        n,
                        pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e),
                    )
                    .unwrap(),
                );
                code += step;
            }
        }
        for g in &graphs {
            let cycles = enumerate_induced_odd_cycles(g).unwrap();
            assert_eq!(cycles.len(), brute_force_count(g), "{g:?}");
            for c in &cycles {
                assert!(is_chordless_cycle(g, c));
                assert_eq!(c[0], *c.iter().min().unwrap());
                assert!(c[1] < *c.last().unwrap());
            }
        }
    }

    #[test]
    fn path_parities_on_c5() {
        let c5 = gen_cycle(5).unwrap();
        let en = induced_path_parities(&c5, None, DEFAULT_PATH_CAP).unwrap();
        let p = en.parity(0, 2);
        assert!(p.even && p.odd);
        assert_eq!(en.witness(0, 2, false), Some(&[0, 1, 2][..]));
        assert_eq!(en.witness(0, 2, true), Some(&[0, 4, 3, 2][..]));
        assert_eq!(en.parity(3, 3), InducedPathParity { even: true, odd: false });
        // The long way round between adjacent vertices has the edge as a chord.
        assert_eq!(en.parity(0, 1), InducedPathParity { even: false, odd: true });
    }
}
