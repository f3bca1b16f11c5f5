//! `tperf sweep`: one assertion over a corpus. Graphs are evaluated independently;
//! a resource failure is recorded against its graph and the sweep carries on.

use clap::ValueEnum;
use serde_json::{json, Value};
use tperf_core::colouring::{check_chi_f_formula, colour_near_bipartite_4, three_colour_p5_free_tperfect};
use tperf_core::graph::formats::to_graph6;
use tperf_core::graph::{canonical_form, contains_induced, gen_path, is_p5_free};
use tperf_core::par::par_map;
use tperf_core::recognition::{is_t_perfect_near_bipartite, is_t_perfect_p5_free};
use tperf_core::tminor::{one_step_t_minors, TMinorStep};
use tperf_core::Graph;

use crate::cert;
use crate::check::{oracle, recognise};
use crate::error::CliError;
use crate::report::{Counterexample, ResourceFailure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Assertion {
    /// Every graph is t-perfect (oracle).
    Tperfect,
    /// One-step t-minors of oracle-t-perfect graphs are oracle-t-perfect.
    TminorClosure,
    /// One-step t-minors of P5-free graphs are P5-free.
    P5freeTminorClosure,
    /// The applicable recogniser agrees with the oracle.
    RecognizerMatchesOracle,
    /// Almost-bipartite graphs are t-perfect.
    AlmostBipartiteImpliesTperfect,
    /// P5-free t-perfect graphs have a 3-colouring.
    P5free3Colourable,
    /// Near-bipartite t-perfect graphs get a 4-colouring from the constructive proof.
    Nearbip4Colourable,
    /// t-perfect non-bipartite graphs have chi_f = 2 og/(og - 1).
    ChifFormula,
}

impl Assertion {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

pub enum Outcome {
    NotApplicable,
    Holds,
    Counterexample(Value),
    Resource(String),
}

fn step_json(step: &TMinorStep, witness: Value) -> Value {
    json!({
        "kind": "tminor_step",
        "step": step.op,
        "minor_graph6": to_graph6(&step.result),
        "witness": cert::about(witness, &step.result),
    })
}

fn imperfect_witness(g: &Graph, force_long: bool) -> Result<Option<Value>, CliError> {
    match oracle(g, force_long)?.witness {
        None => Ok(None),
        Some(w) => Ok(Some(cert::fractional_point(g, &w.point)?.unwrap_or_else(|| {
            json!({ "kind": "unverified", "point": w.point.to_strings() })
        }))),
    }
}

fn evaluate(a: Assertion, g: &Graph, force_long: bool) -> Result<Outcome, CliError> {
    use Outcome::*;
    let t_perfect = |h: &Graph| oracle(h, force_long).map(|v| v.t_perfect);
    Ok(match a {
        Assertion::Tperfect => match imperfect_witness(g, force_long)? {
            None => Holds,
            Some(c) => Counterexample(c),
        },
        Assertion::TminorClosure => {
            if !t_perfect(g)? {
                return Ok(NotApplicable);
            }
            for step in one_step_t_minors(g) {
                if let Some(w) = imperfect_witness(&step.result, force_long)? {
                    return Ok(Counterexample(step_json(&step, w)));
                }
            }
            Holds
        }
        Assertion::P5freeTminorClosure => {
            if !is_p5_free(g) {
                return Ok(NotApplicable);
            }
            let p5 = gen_path(5)?;
            for step in one_step_t_minors(g) {
                if let Some(e) = contains_induced(&step.result, &p5) {
                    return Ok(Counterexample(step_json(&step, cert::p5(&e))));
                }
            }
            Holds
        }
        Assertion::RecognizerMatchesOracle => {
            let Some((mode, r)) = recognise(g)? else {
                return Ok(NotApplicable);
            };
            let o = oracle(g, force_long)?;
            if o.t_perfect == r.t_perfect {
                Holds
            } else {
                let mut parts = Vec::new();
                if let Some(w) = &r.witness {
                    parts.push(cert::forbidden(w)?);
                }
                if let Some(w) = &o.witness {
                    parts.extend(cert::fractional_point(g, &w.point)?);
                }
                Counterexample(json!({
                    "kind": "disagreement",
                    "recognizer": { "mode": mode, "t_perfect": r.t_perfect },
                    "oracle": { "t_perfect": o.t_perfect },
                    "parts": parts,
                }))
            }
        }
        Assertion::AlmostBipartiteImpliesTperfect => {
            if !g.is_almost_bipartite() {
                return Ok(NotApplicable);
            }
            match imperfect_witness(g, force_long)? {
                None => Holds,
                Some(c) => Counterexample(c),
            }
        }
        Assertion::P5free3Colourable => {
            if !is_p5_free(g) || !is_t_perfect_p5_free(g)?.t_perfect {
                return Ok(NotApplicable);
            }
            match three_colour_p5_free_tperfect(g) {
                Ok(c) if c.is_proper(g) && c.num_colours() <= 3 => Holds,
                Ok(c) => Counterexample(json!({ "kind": "improper_colouring", "colours": c })),
                Err(e) => Counterexample(json!({ "kind": "theorem_violation", "error": e.to_string() })),
            }
        }
        Assertion::Nearbip4Colourable => {
            if !g.is_near_bipartite() || !is_t_perfect_near_bipartite(g)?.t_perfect {
                return Ok(NotApplicable);
            }
            match colour_near_bipartite_4(g) {
                Ok(c) if c.is_proper(g) && c.num_colours() <= 4 => Holds,
                Ok(c) => Counterexample(json!({ "kind": "improper_colouring", "colours": c })),
                Err(e) => Counterexample(json!({ "kind": "theorem_violation", "error": e.to_string() })),
            }
        }
        Assertion::ChifFormula => {
            if g.is_bipartite().is_some() || !t_perfect(g)? {
                return Ok(NotApplicable);
            }
            if check_chi_f_formula(g)?.matches {
                Holds
            } else {
                Counterexample(cert::fractional_colouring(g)?)
            }
        }
    })
}

pub struct SweepResult {
    pub graphs: usize,
    pub applicable: usize,
    pub counterexamples: Vec<Counterexample>,
    pub resource_failures: Vec<ResourceFailure>,
}

/// Evaluates `a` on every graph. Output order is by canonical form, whatever the
/// input order or scheduling. Input errors on a single graph abort the sweep;
/// resource errors do not.
pub fn sweep(a: Assertion, graphs: &[Graph], force_long: bool) -> Result<SweepResult, CliError> {
    let outcomes = par_map(graphs, |g| match evaluate(a, g, force_long) {
        Err(CliError::Resource(msg)) => Ok(Outcome::Resource(msg)),
        other => other,
    });
    let mut keyed: Vec<(Graph, &Graph, Outcome)> = Vec::new();
    let mut applicable = 0;
    for (g, o) in graphs.iter().zip(outcomes) {
        let o = o?;
        if !matches!(o, Outcome::NotApplicable) {
            applicable += 1;
        }
        if matches!(o, Outcome::Counterexample(_) | Outcome::Resource(_)) {
            keyed.push((canonical_form(g).into_graph(), g, o));
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let mut counterexamples = Vec::new();
    let mut resource_failures = Vec::new();
    for (_, g, o) in keyed {
        let graph6 = to_graph6(g);
        match o {
            Outcome::Counterexample(certificate) => counterexamples.push(Counterexample { graph6, certificate }),
            Outcome::Resource(error) => resource_failures.push(ResourceFailure { graph6, error }),
            _ => {}
        }
    }
    Ok(SweepResult { graphs: graphs.len(), applicable, counterexamples, resource_failures })
}
