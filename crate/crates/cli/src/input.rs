//! Graph arguments: generator specs, files, stdin or raw graph6.

use std::io::Read;

use tperf_core::graph::formats::{from_dimacs, from_graph6, parse_graph6_lines};
use tperf_core::graph::{
    gen_antiweb, gen_complete, gen_cycle, gen_cycle_power, gen_path, gen_wheel, AntiwebSpec, NamedGraph,
};
use tperf_core::Graph;

use crate::error::CliError;

pub const GENERATORS: [&str; 8] = ["antiweb", "cycle", "cycle-power", "wheel", "path", "complete", "moebius", "named"];

fn num(kind: &str, s: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| CliError::input(format!("{kind}: `{s}` is not a non-negative integer")))
}

/// Builds a graph from a generator name and its parameters.
pub fn generate(kind: &str, params: &[String]) -> Result<Graph, CliError> {
    let arity = match kind {
        "antiweb" | "cycle-power" => 2,
        "cycle" | "wheel" | "path" | "complete" | "moebius" | "named" => 1,
        _ => {
            return Err(CliError::input(format!(
                "unknown generator `{kind}`; expected one of {}",
                GENERATORS.join(", ")
            )))
        }
    };
    if params.len() != arity {
        return Err(CliError::input(format!("{kind} takes {arity} parameter(s), got {}", params.len())));
    }
    if kind == "named" {
        return Ok(params[0].parse::<NamedGraph>()?.graph());
    }
    let p: Vec<usize> = params.iter().map(|s| num(kind, s)).collect::<Result<_, _>>()?;
    Ok(match kind {
        "antiweb" => gen_antiweb(AntiwebSpec::new(p[0], p[1])?),
        "cycle-power" => gen_cycle_power(p[0], p[1])?,
        "cycle" => gen_cycle(p[0])?,
        "wheel" => gen_wheel(p[0])?,
        "path" => gen_path(p[0])?,
        "complete" => gen_complete(p[0])?,
        _ => gen_antiweb(AntiwebSpec::even_moebius(p[0])),
    })
}

/// Parses a file body as DIMACS (if it has a `p` line) or as a single graph6 line.
fn parse_text(text: &str) -> Result<Graph, CliError> {
    let is_dimacs = text.lines().any(|l| l.trim_start().starts_with("p ") || l.trim_start().starts_with("c "));
    if is_dimacs {
        return Ok(from_dimacs(text)?);
    }
    let mut graphs = parse_graph6_lines(text)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        0 => Err(CliError::input("no graph in input")),
        k => Err(CliError::input(format!("expected one graph, found {k}"))),
    }
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{path}: {e}")))
    }
}

/// Resolves a graph argument:
///
/// * `kind:p1:p2` runs a generator, e.g. `antiweb:13:3` or `named:K4figC`;
/// * `@path` reads a graph6 or DIMACS file, `-` reads stdin;
/// * anything else is a graph6 string.
pub fn read_graph(arg: &str) -> Result<Graph, CliError> {
    if arg == "-" {
        return parse_text(&read_source("-")?);
    }
    if let Some(path) = arg.strip_prefix('@') {
        return parse_text(&read_source(path)?);
    }
    if let Some((kind, rest)) = arg.split_once(':') {
        if GENERATORS.contains(&kind) {
            let params: Vec<String> = rest.split(':').map(str::to_string).collect();
            return generate(kind, &params);
        }
    }
    Ok(from_graph6(arg)?)
}

/// Every graph in a graph6 file, one per line.
pub fn read_graph6_file(path: &str) -> Result<Vec<Graph>, CliError> {
    Ok(parse_graph6_lines(&read_source(path)?)?)
}
