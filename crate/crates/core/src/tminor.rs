//! Vertex deletion, t-contraction and bounded t-minor search.
//!
//! Relabelling convention: after either operation the surviving vertices keep their
//! relative order and are renumbered densely from 0. A t-contraction at `v` merges
//! `v` and `N(v)` into a new vertex placed last. In a step's `relabel` map the
//! contracted vertex `v` points at the merged vertex, and the absorbed neighbours
//! (or the deleted vertex) map to `None`.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{bit, bits};
use crate::graph::{are_isomorphic, canonical_form, CanonicalForm, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TMinorError {
    #[error("neighbourhood of vertex {0} is not stable")]
    NeighbourhoodNotStable(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("node budget must be positive")]
    ZeroBudget,
    #[error("step {index}: recorded relabelling does not match the operation")]
    RelabelMismatch { index: usize },
    #[error("malformed step list: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One operation, addressed in the labels of the graph it applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum StepOp {
    Delete { v: usize },
    #[serde(rename = "tcontract")]
    TContract { v: usize },
}

impl StepOp {
    pub fn vertex(self) -> usize {
        match self {
            StepOp::Delete { v } | StepOp::TContract { v } => v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TMinorStep {
    pub op: StepOp,
    pub result: Graph,
    /// `relabel[old]` is the label of `old` in `result`, if it survives.
    pub relabel: Vec<Option<usize>>,
}

/// Serialised form of a step: the operation plus its labelling map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    #[serde(flatten)]
    pub op: StepOp,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relabel: Option<Vec<Option<usize>>>,
}

impl From<&TMinorStep> for StepRecord {
    fn from(s: &TMinorStep) -> Self {
        StepRecord { op: s.op, relabel: Some(s.relabel.clone()) }
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), TMinorError> {
    if v >= g.n() {
        return Err(TMinorError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

pub fn delete(g: &Graph, v: usize) -> Result<TMinorStep, TMinorError> {
    check_vertex(g, v)?;
    let (result, old) = g.induced_subgraph(g.vertex_mask() & !bit(v));
    let mut relabel = vec![None; g.n()];
    for (new, &o) in old.iter().enumerate() {
        relabel[o] = Some(new);
    }
    Ok(TMinorStep { op: StepOp::Delete { v }, result, relabel })
}

/// t-contraction at `v` as a full step record.
pub fn t_contract_step(g: &Graph, v: usize) -> Result<TMinorStep, TMinorError> {
    check_vertex(g, v)?;
    let nv = g.nbrs(v);
    if !g.is_stable(nv) {
        return Err(TMinorError::NeighbourhoodNotStable(v));
    }
    let merged = nv | bit(v);
    let rest = g.vertex_mask() & !merged;
    let outer = bits(nv).fold(0u64, |m, u| m | g.nbrs(u)) & rest;
    let (base, old) = g.induced_subgraph(rest);
    let tilde = base.n();
    let mut relabel = vec![None; g.n()];
    let mut adj: Vec<u64> = base.adjacency().to_vec();
    let mut tilde_nbrs = 0u64;
    for (new, &o) in old.iter().enumerate() {
        relabel[o] = Some(new);
        if outer & bit(o) != 0 {
            adj[new] |= bit(tilde);
            tilde_nbrs |= bit(new);
        }
    }
    adj.push(tilde_nbrs);
    relabel[v] = Some(tilde);
    Ok(TMinorStep { op: StepOp::TContract { v }, result: Graph::from_raw(adj), relabel })
}

pub fn t_contract(g: &Graph, v: usize) -> Result<Graph, TMinorError> {
    t_contract_step(g, v).map(|s| s.result)
}

pub fn apply(g: &Graph, op: StepOp) -> Result<TMinorStep, TMinorError> {
    match op {
        StepOp::Delete { v } => delete(g, v),
        StepOp::TContract { v } => t_contract_step(g, v),
    }
}

/// Every deletion and every valid t-contraction, one step per isomorphism class of
/// result. Each class is represented by its least step (deletions before
/// contractions, then by vertex), and the list is in that order.
pub fn one_step_t_minors(g: &Graph) -> Vec<TMinorStep> {
    let ops = (0..g.n())
        .map(|v| StepOp::Delete { v })
        .chain((0..g.n()).map(|v| StepOp::TContract { v }));
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out = Vec::new();
    for op in ops {
        let Ok(step) = apply(g, op) else { continue };
        if seen.insert(canonical_form(&step.result)) {
            out.push(step);
        }
    }
    out
}

/// Applies serialised steps in order, checking any recorded relabelling.
pub fn replay(g: &Graph, steps: &[StepRecord]) -> Result<Graph, TMinorError> {
    let mut cur = g.clone();
    for (index, rec) in steps.iter().enumerate() {
        let step = apply(&cur, rec.op)?;
        if let Some(r) = &rec.relabel {
            if *r != step.relabel {
                return Err(TMinorError::RelabelMismatch { index });
            }
        }
        cur = step.result;
    }
    Ok(cur)
}

pub fn steps_to_json(steps: &[TMinorStep]) -> String {
    let recs: Vec<StepRecord> = steps.iter().map(StepRecord::from).collect();
    serde_json::to_string(&recs).expect("step records serialise")
}

pub fn steps_from_json(s: &str) -> Result<Vec<StepRecord>, TMinorError> {
    serde_json::from_str(s).map_err(|e| TMinorError::Json(e.to_string()))
}

/// Runs a delete-then-contract recipe given in the labels of `g`: every vertex of
/// `deleted` is removed, then t-contractions happen at `contracted` in order, with
/// labels tracked through each relabelling.
pub fn apply_recipe(
    g: &Graph,
    deleted: &[usize],
    contracted: &[usize],
) -> Result<Vec<TMinorStep>, TMinorError> {
    let mut cur = g.clone();
    // Current label of every original vertex.
    let mut label: Vec<Option<usize>> = (0..g.n()).map(Some).collect();
    let mut steps = Vec::new();
    let plan = deleted
        .iter()
        .map(|&v| (false, v))
        .chain(contracted.iter().map(|&v| (true, v)));
    for (contract, orig) in plan {
        if orig >= g.n() {
            return Err(TMinorError::VertexOutOfRange { vertex: orig, n: g.n() });
        }
        let v = label[orig].ok_or(TMinorError::VertexOutOfRange { vertex: orig, n: cur.n() })?;
        let op = if contract { StepOp::TContract { v } } else { StepOp::Delete { v } };
        let step = apply(&cur, op)?;
        for l in label.iter_mut() {
            *l = l.and_then(|c| step.relabel[c]);
        }
        cur = step.result.clone();
        steps.push(step);
    }
    Ok(steps)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TMinorSearch {
    /// A step sequence from the host to a graph isomorphic to the target.
    Found(Vec<TMinorStep>),
    /// The budget ran out before the reachable space was closed.
    NotFoundWithinBudget { expanded: usize },
    /// Every reachable class was expanded without meeting the target.
    ProvenAbsent { expanded: usize },
}

/// Breadth-first search over isomorphism classes of t-minors of `g`.
///
/// Classes with fewer vertices or fewer edges than the target are not entered, since
/// neither operation ever adds vertices or edges. `node_budget` bounds the number of
/// classes expanded.
pub fn has_t_minor(g: &Graph, target: &Graph, node_budget: usize) -> Result<TMinorSearch, TMinorError> {
    if node_budget == 0 {
        return Err(TMinorError::ZeroBudget);
    }
    let (tn, tm) = (target.n(), target.edge_count());
    if g.n() == tn && are_isomorphic(g, target) {
        return Ok(TMinorSearch::Found(Vec::new()));
    }
    // Each visited class keeps the graph reached and the step that reached it.
    let mut nodes: Vec<(Graph, Option<(usize, TMinorStep)>)> = vec![(g.clone(), None)];
    let mut visited: HashMap<CanonicalForm, usize> = HashMap::from([(canonical_form(g), 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut expanded = 0;
    while let Some(id) = queue.pop_front() {
        if expanded == node_budget {
            return Ok(TMinorSearch::NotFoundWithinBudget { expanded });
        }
        expanded += 1;
        let cur = nodes[id].0.clone();
        for step in one_step_t_minors(&cur) {
            let h = &step.result;
            if h.n() < tn || h.edge_count() < tm {
                continue;
            }
            let cf = canonical_form(h);
            if visited.contains_key(&cf) {
                continue;
            }
            let hit = h.n() == tn && h.edge_count() == tm && are_isomorphic(h, target);
            let child = nodes.len();
            visited.insert(cf, child);
            nodes.push((h.clone(), Some((id, step))));
            if hit {
                return Ok(TMinorSearch::Found(path_to(&nodes, child)));
            }
            queue.push_back(child);
        }
    }
    Ok(TMinorSearch::ProvenAbsent { expanded })
}

fn path_to(nodes: &[(Graph, Option<(usize, TMinorStep)>)], mut id: usize) -> Vec<TMinorStep> {
    let mut out = Vec::new();
    while let Some((parent, step)) = &nodes[id].1 {
        out.push(step.clone());
        id = *parent;
    }
    out.reverse();
    out
}
