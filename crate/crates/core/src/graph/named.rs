//! Fixed small graphs referred to by name.
//!
//! Every figure graph below is a 5-cycle `0-1-2-3-4-0` plus extra vertices
//! numbered from 5 upward. The recipes list which vertices to delete (grey in the
//! drawings) and where to t-contract (black) so that `K4` remains.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{gen_antiweb, gen_complete, gen_cycle_power, gen_path, gen_wheel, AntiwebSpec};
use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum NamedGraph {
    K4FigA,
    K4FigB,
    K4FigC,
    MmA,
    MmB,
    MmC,
    MmD,
    MmE,
    MmF,
    MmG,
    P5,
    K4,
    W5,
    C7Sq,
    Aw10_2,
    Aw13_3,
}

const RIM: [(usize, usize); 5] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];

/// Extra vertex `v` joined to each vertex in `to`.
fn star(v: usize, to: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    to.iter().map(move |&u| (v, u))
}

fn rim_plus(n: usize, extra: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, RIM.iter().copied().chain(extra)).expect("static figure table")
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 16] = [
        NamedGraph::K4FigA,
        NamedGraph::K4FigB,
        NamedGraph::K4FigC,
        NamedGraph::MmA,
        NamedGraph::MmB,
        NamedGraph::MmC,
        NamedGraph::MmD,
        NamedGraph::MmE,
        NamedGraph::MmF,
        NamedGraph::MmG,
        NamedGraph::P5,
        NamedGraph::K4,
        NamedGraph::W5,
        NamedGraph::C7Sq,
        NamedGraph::Aw10_2,
        NamedGraph::Aw13_3,
    ];

    /// The three graphs that t-contract to `K4`.
    pub const K4_FIGURES: [NamedGraph; 3] = [NamedGraph::K4FigA, NamedGraph::K4FigB, NamedGraph::K4FigC];

    /// The seven 4-critical P5-free graphs beyond the five classical ones.
    pub const MM_FIGURES: [NamedGraph; 7] = [
        NamedGraph::MmA,
        NamedGraph::MmB,
        NamedGraph::MmC,
        NamedGraph::MmD,
        NamedGraph::MmE,
        NamedGraph::MmF,
        NamedGraph::MmG,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::K4FigA => "K4figA",
            NamedGraph::K4FigB => "K4figB",
            NamedGraph::K4FigC => "K4figC",
            NamedGraph::MmA => "MM_a",
            NamedGraph::MmB => "MM_b",
            NamedGraph::MmC => "MM_c",
            NamedGraph::MmD => "MM_d",
            NamedGraph::MmE => "MM_e",
            NamedGraph::MmF => "MM_f",
            NamedGraph::MmG => "MM_g",
            NamedGraph::P5 => "P5",
            NamedGraph::K4 => "K4",
            NamedGraph::W5 => "W5",
            NamedGraph::C7Sq => "C7sq",
            NamedGraph::Aw10_2 => "AW10_2",
            NamedGraph::Aw13_3 => "AW13_3",
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            // centre 5 on three consecutive rim vertices
            NamedGraph::K4FigA => rim_plus(6, star(5, &[0, 1, 2]).collect()),
            // centre 5 on four rim vertices
            NamedGraph::K4FigB => rim_plus(6, star(5, &[0, 1, 2, 3]).collect()),
            // u = 5, v = 6, x = 7
            NamedGraph::K4FigC => rim_plus(
                8,
                star(5, &[0, 1, 3]).chain(star(6, &[1, 3, 4])).chain(star(7, &[5, 6])).collect(),
            ),
            // grey 5, black 4
            NamedGraph::MmA => rim_plus(7, star(5, &[0, 3, 4]).chain(star(6, &[0, 1, 2])).collect()),
            // as MM_a with the two inner vertices joined
            NamedGraph::MmB => rim_plus(
                7,
                star(5, &[0, 3, 4]).chain(star(6, &[0, 1, 2, 5])).collect(),
            ),
            // grey 6, black 3
            NamedGraph::MmC => rim_plus(7, star(5, &[0, 1, 4]).chain(star(6, &[1, 2, 3, 4])).collect()),
            // black 0, nothing grey
            NamedGraph::MmD => rim_plus(7, star(5, &[0, 2, 3]).chain(star(6, &[1, 2, 3, 4])).collect()),
            // grey 5, black 4
            NamedGraph::MmE => rim_plus(
                7,
                star(5, &[0, 2, 3, 4]).chain(star(6, &[0, 1, 2, 3])).collect(),
            ),
            // grey 4, black 3; chord 1-4 and inner edge 5-6
            NamedGraph::MmF => rim_plus(
                7,
                star(5, &[0, 3, 4])
                    .chain(star(6, &[0, 1, 2, 5]))
                    .chain([(1, 4)])
                    .collect(),
            ),
            // u = 5; grey a = 6, b = 7, c = 8, d = 9; black 3
            NamedGraph::MmG => rim_plus(
                10,
                star(5, &[0, 1, 4])
                    .chain(star(6, &[1, 2, 4]))
                    .chain(star(7, &[1, 3, 4]))
                    .chain(star(8, &[6, 7, 9]))
                    .chain(star(9, &[6, 7]))
                    .collect(),
            ),
            NamedGraph::P5 => gen_path(5).expect("P5"),
            NamedGraph::K4 => gen_complete(4).expect("K4"),
            NamedGraph::W5 => gen_wheel(5).expect("W5"),
            NamedGraph::C7Sq => gen_cycle_power(7, 2).expect("C7^2"),
            NamedGraph::Aw10_2 => gen_antiweb(AntiwebSpec::new(10, 2).expect("aweb(10,2)")),
            NamedGraph::Aw13_3 => gen_antiweb(AntiwebSpec::new(13, 3).expect("aweb(13,3)")),
        }
    }

    /// Delete-then-contract recipe `(deleted, contracted)` in the graph's own labels,
    /// for the figure graphs that reduce to `K4`.
    pub fn k4_recipe(self) -> Option<(Vec<usize>, Vec<usize>)> {
        let r = |del: &[usize], con: &[usize]| Some((del.to_vec(), con.to_vec()));
        match self {
            NamedGraph::K4FigA => r(&[], &[3]),
            NamedGraph::K4FigB => r(&[], &[4]),
            NamedGraph::K4FigC => r(&[], &[2, 7]),
            NamedGraph::MmA => r(&[5], &[4]),
            NamedGraph::MmB => r(&[5], &[4]),
            NamedGraph::MmC => r(&[6], &[3]),
            NamedGraph::MmD => r(&[], &[0]),
            NamedGraph::MmE => r(&[5], &[4]),
            NamedGraph::MmF => r(&[4], &[3]),
            NamedGraph::MmG => r(&[6, 7, 8, 9], &[3]),
            _ => None,
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<NamedGraph> for String {
    fn from(g: NamedGraph) -> String {
        g.name().to_string()
    }
}

impl TryFrom<String> for NamedGraph {
    type Error = GraphError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl FromStr for NamedGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| GraphError::UnknownName(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_and_edge_counts() {
        let counts: Vec<(usize, usize)> =
            NamedGraph::ALL.iter().map(|g| (g.graph().n(), g.graph().edge_count())).collect();
        assert_eq!(
            counts,
            vec![
                (6, 8),
                (6, 9),
                (8, 13),
                (7, 11),
                (7, 12),
                (7, 12),
                (7, 12),
                (7, 13),
                (7, 13),
                (10, 19),
                (5, 4),
                (4, 6),
                (6, 10),
                (7, 14),
                (10, 25),
                (13, 39),
            ]
        );
    }

    #[test]
    fn degree_sequences_match_drawings() {
        let ds = |g: NamedGraph| g.graph().degree_sequence();
        assert_eq!(ds(NamedGraph::K4FigA), vec![3, 3, 3, 3, 2, 2]);
        assert_eq!(ds(NamedGraph::K4FigB), vec![4, 3, 3, 3, 3, 2]);
        assert_eq!(ds(NamedGraph::K4FigC), vec![4, 4, 4, 4, 3, 3, 2, 2]);
        assert_eq!(ds(NamedGraph::MmG), vec![5, 5, 5, 5, 3, 3, 3, 3, 3, 3]);
        assert_eq!(ds(NamedGraph::MmD), vec![4, 4, 4, 3, 3, 3, 3]);
    }

    #[test]
    fn names_round_trip() {
        for g in NamedGraph::ALL {
            assert_eq!(g.name().parse::<NamedGraph>().unwrap(), g);
        }
        assert!("K5".parse::<NamedGraph>().is_err());
        assert_eq!(NamedGraph::MmG.graph().n(), 10);
    }
}
