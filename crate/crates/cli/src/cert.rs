//! Certificate JSON. Every object carries a `kind`; an optional `graph6` names the
//! graph it is about, otherwise it refers to the report's input graph.

use serde_json::{json, Value};
use tperf_core::colouring::Colouring;
use tperf_core::graph::formats::to_graph6;
use tperf_core::graph::{gen_path, Embedding};
use tperf_core::polytope::{
    fractional_chromatic, in_ssp, in_tstab, is_t_perfect_oracle, uniform_odd_girth_point, RationalVec,
    SspCertificate,
};
use tperf_core::recognition::{shortest_odd_cycle, ForbiddenWitness, HarmoniousTuple};
use tperf_core::Graph;

use crate::error::CliError;

pub fn about(mut c: Value, g: &Graph) -> Value {
    c["graph6"] = json!(to_graph6(g));
    c
}

pub fn induced(pattern: &str, pattern_graph: &Graph, e: &Embedding) -> Value {
    json!({
        "kind": "induced_subgraph",
        "pattern": pattern,
        "pattern_graph6": to_graph6(pattern_graph),
        "map": e.map,
    })
}

/// An induced forbidden pattern, plus a proof that the pattern itself is t-imperfect
/// when one can be produced within the resource caps.
pub fn forbidden(w: &ForbiddenWitness) -> Result<Value, CliError> {
    let p = w.pattern.graph()?;
    let mut c = induced(&w.pattern.to_string(), &p, &w.embedding);
    match imperfection(&p) {
        Ok(Some(fp)) => c["pattern_imperfect"] = about(fp, &p),
        Ok(None) | Err(CliError::Resource(_)) => {}
        Err(e) => return Err(e),
    }
    Ok(c)
}

pub fn p5(map: &Embedding) -> Value {
    induced("P5", &gen_path(5).expect("P5"), map)
}

/// `x` is in TSTAB and a separating hyperplane cuts it off SSP. `None` if `x` is
/// not such a point.
pub fn fractional_point(g: &Graph, x: &RationalVec) -> Result<Option<Value>, CliError> {
    if !in_tstab(g, x)?.member {
        return Ok(None);
    }
    let cert = in_ssp(g, x)?;
    let SspCertificate::Separation { normal, rhs } = cert else {
        return Ok(None);
    };
    Ok(Some(json!({
        "kind": "fractional_point",
        "point": x.to_strings(),
        "normal": normal.to_strings(),
        "rhs": rhs.to_string(),
    })))
}

/// A fractional point proving t-imperfection: the oracle's vertex for graphs it
/// accepts, else the uniform odd-girth point if that works.
pub fn imperfection(g: &Graph) -> Result<Option<Value>, CliError> {
    if g.n() <= tperf_core::polytope::DEFAULT_ORACLE_MAX_N {
        if let Some(w) = is_t_perfect_oracle(g)?.witness {
            return fractional_point(g, &w.point);
        }
        return Ok(None);
    }
    match uniform_odd_girth_point(g) {
        Some(x) => fractional_point(g, &x),
        None => Ok(None),
    }
}

pub fn colouring(k: usize, c: &Colouring) -> Value {
    json!({ "kind": "colouring", "k": k, "colours": c })
}

pub fn odd_cycle(cycle: &[usize]) -> Value {
    json!({ "kind": "odd_cycle", "cycle": cycle })
}

pub fn bipartition(side: &[usize]) -> Value {
    json!({ "kind": "bipartition", "side": side })
}

/// Optimal fractional colouring with its dual and a shortest odd cycle, so the
/// checker can recompute both `chi_f` and the odd girth bound.
pub fn fractional_colouring(g: &Graph) -> Result<Value, CliError> {
    let fc = fractional_chromatic(g)?;
    Ok(json!({
        "kind": "fractional_colouring",
        "value": fc.value.to_string(),
        "cover": fc.cover,
        "dual": fc.dual.to_strings(),
        "odd_cycle": shortest_odd_cycle(g),
    }))
}

pub fn harmonious(t: &HarmoniousTuple) -> Value {
    json!({ "kind": "harmonious_tuple", "parts": t.parts, "separation": t.separation })
}

pub fn induced_path(path: &[usize]) -> Value {
    let parity = if path.len() % 2 == 1 { "even" } else { "odd" };
    json!({ "kind": "induced_path", "path": path, "parity": parity })
}
