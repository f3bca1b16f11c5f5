//! `tperf check`: one property of one graph.

use serde_json::json;
use tperf_core::bits::bits;
use tperf_core::colouring::{check_chi_f_formula, k_colouring};
use tperf_core::graph::{contains_induced, gen_path, is_p5_free};
use tperf_core::polytope::{is_t_perfect_oracle_with, OracleOptions, TPerfVerdict};
use tperf_core::recognition::{
    find_harmonious_cutset, is_t_perfect_near_bipartite, is_t_perfect_p5_free, shortest_odd_cycle, verify_odd_pair,
    RecognitionVerdict,
};
use tperf_core::Graph;

use crate::cert;
use crate::error::CliError;
use crate::report::{Mode, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    P5Free,
    NearBip,
    TPerfect,
    OddGirth,
    ChiF,
    Colour(usize),
    Harmonious,
    OddPair(usize, usize),
}

impl Property {
    /// Number of arguments following the property name.
    pub fn arity(name: &str) -> Option<usize> {
        match name {
            "p5free" | "nearbip" | "tperfect" | "oddgirth" | "chif" | "harmonious" => Some(0),
            "colour" | "color" => Some(1),
            "oddpair" => Some(2),
            _ => None,
        }
    }

    pub fn parse(words: &[String]) -> Result<Self, CliError> {
        let (name, args) = words.split_first().ok_or_else(|| CliError::input("missing property"))?;
        let arity = Property::arity(name).ok_or_else(|| CliError::input(format!("unknown property `{name}`")))?;
        if args.len() != arity {
            return Err(CliError::input(format!("property {name} takes {arity} argument(s), got {}", args.len())));
        }
        let n = |s: &String| s.parse::<usize>().map_err(|_| CliError::input(format!("`{s}` is not a vertex or count")));
        Ok(match name.as_str() {
            "p5free" => Property::P5Free,
            "nearbip" => Property::NearBip,
            "tperfect" => Property::TPerfect,
            "oddgirth" => Property::OddGirth,
            "chif" => Property::ChiF,
            "harmonious" => Property::Harmonious,
            "colour" | "color" => Property::Colour(n(&args[0])?),
            _ => Property::OddPair(n(&args[0])?, n(&args[1])?),
        })
    }

    pub fn label(self) -> String {
        match self {
            Property::P5Free => "p5free".into(),
            Property::NearBip => "nearbip".into(),
            Property::TPerfect => "tperfect".into(),
            Property::OddGirth => "oddgirth".into(),
            Property::ChiF => "chif".into(),
            Property::Colour(k) => format!("colour {k}"),
            Property::Harmonious => "harmonious".into(),
            Property::OddPair(u, v) => format!("oddpair {u} {v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    /// Fall back to the polytope oracle when no recogniser applies.
    pub oracle: bool,
    pub force_long: bool,
}

pub fn check(g: &Graph, prop: Property, opts: CheckOptions) -> Result<Verdict, CliError> {
    let label = prop.label();
    match prop {
        Property::P5Free => Ok(match contains_induced(g, &gen_path(5)?) {
            None => Verdict::new(label, true, Mode::Search),
            Some(e) => Verdict::new(label, false, Mode::Search).cert(cert::p5(&e)),
        }),
        Property::NearBip => Ok(near_bipartite(g, label)),
        Property::TPerfect => t_perfect(g, label, opts),
        Property::OddGirth => Ok(match shortest_odd_cycle(g) {
            Some(c) => Verdict::new(label, true, Mode::Search).value(json!(c.len())).cert(cert::odd_cycle(&c)),
            None => {
                let (side, _) = g.is_bipartite().expect("no odd cycle");
                Verdict::new(label, false, Mode::Search).cert(cert::bipartition(&side))
            }
        }),
        Property::ChiF => {
            if g.is_bipartite().is_some() {
                return Err(CliError::input("chif: the graph is bipartite, so the odd girth formula does not apply"));
            }
            let r = check_chi_f_formula(g)?;
            Ok(Verdict::new(label, r.matches, Mode::Search)
                .value(serde_json::to_value(&r).expect("serialisable"))
                .cert(cert::fractional_colouring(g)?))
        }
        Property::Colour(k) => Ok(match k_colouring(g, k) {
            Some(c) => Verdict::new(label, true, Mode::Search).cert(cert::colouring(k, &c)),
            None => Verdict::new(label, false, Mode::Search),
        }),
        Property::Harmonious => Ok(match find_harmonious_cutset(g)? {
            Some(t) => Verdict::new(label, true, Mode::Search).cert(cert::harmonious(&t)),
            None => Verdict::new(label, false, Mode::Search),
        }),
        Property::OddPair(u, v) => {
            let r = verify_odd_pair(g, u, v)?;
            Ok(match r.even_path {
                None => Verdict::new(label, r.odd_pair, Mode::Search),
                Some(p) => Verdict::new(label, false, Mode::Search).cert(cert::induced_path(&p)),
            })
        }
    }
}

/// For every vertex, a 2-colouring of `G - N(v)`; or one vertex whose `G - N(v)`
/// has an odd cycle.
fn near_bipartite(g: &Graph, label: String) -> Verdict {
    let mut sides = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let rest = g.minus_neighbourhood(v);
        match g.bipartition_within(rest) {
            Some(side) => sides.push(bits(side).collect::<Vec<_>>()),
            None => {
                let (h, map) = g.induced_subgraph(rest);
                let cycle: Vec<usize> = shortest_odd_cycle(&h).expect("not bipartite").iter().map(|&i| map[i]).collect();
                return Verdict::new(label, false, Mode::Search).cert(json!({
                    "kind": "odd_cycle_outside_neighbourhood",
                    "vertex": v,
                    "cycle": cycle,
                }));
            }
        }
    }
    Verdict::new(label, true, Mode::Search).cert(json!({ "kind": "near_bipartite", "sides": sides }))
}

/// The recogniser that applies to `g`, if any.
pub fn recognise(g: &Graph) -> Result<Option<(Mode, RecognitionVerdict)>, CliError> {
    if is_p5_free(g) {
        return Ok(Some((Mode::RecognizerP5free, is_t_perfect_p5_free(g)?)));
    }
    if g.is_near_bipartite() {
        return Ok(Some((Mode::RecognizerNearbip, is_t_perfect_near_bipartite(g)?)));
    }
    Ok(None)
}

pub fn oracle(g: &Graph, force_long: bool) -> Result<TPerfVerdict, CliError> {
    Ok(is_t_perfect_oracle_with(g, &OracleOptions { force_long, ..OracleOptions::default() })?)
}

fn t_perfect(g: &Graph, label: String, opts: CheckOptions) -> Result<Verdict, CliError> {
    if let Some((mode, r)) = recognise(g)? {
        return Ok(match r.witness {
            None => Verdict::new(label, true, mode),
            Some(w) => Verdict::new(label, false, mode).cert(cert::forbidden(&w)?),
        });
    }
    if !opts.oracle {
        return Err(CliError::input(
            "tperfect: graph is neither P5-free nor near-bipartite; pass --oracle to decide it with the polytope oracle",
        ));
    }
    let v = oracle(g, opts.force_long)?;
    match v.witness {
        None => Ok(Verdict::new(label, true, Mode::OracleExhaustive)),
        Some(w) => {
            let c = cert::fractional_point(g, &w.point)?;
            Ok(Verdict::new(label, false, Mode::OracleExhaustive).maybe_cert(c))
        }
    }
}
