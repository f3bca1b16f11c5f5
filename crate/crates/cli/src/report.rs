use serde::Serialize;
use serde_json::Value;
use tperf_core::graph::formats::to_graph6;
use tperf_core::Graph;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    InputError,
    ResourceExhausted,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Holds => 0,
            Status::Fails => 1,
            Status::InputError => 2,
            Status::ResourceExhausted => 3,
        }
    }
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    RecognizerP5free,
    RecognizerNearbip,
    OracleExhaustive,
    /// A direct search or construction for the property itself.
    Search,
}

/// What backs a verdict: a certificate the bundled checker can re-verify, or only
/// the fact that an exhaustive computation found nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    Certificate,
    OracleExhaustive,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub property: String,
    pub holds: bool,
    pub mode: Mode,
    pub evidence: Evidence,
    pub value: Option<Value>,
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn new(property: impl Into<String>, holds: bool, mode: Mode) -> Self {
        Verdict {
            property: property.into(),
            holds,
            mode,
            evidence: Evidence::OracleExhaustive,
            value: None,
            certificate: None,
            detail: None,
        }
    }

    pub fn cert(mut self, c: Value) -> Self {
        self.certificate = Some(c);
        self.evidence = Evidence::Certificate;
        self
    }

    pub fn maybe_cert(self, c: Option<Value>) -> Self {
        match c {
            Some(c) => self.cert(c),
            None => self,
        }
    }

    pub fn value(mut self, v: Value) -> Self {
        self.value = Some(v);
        self
    }

    /// Attaches a note; empty notes are dropped.
    pub fn detail(mut self, d: impl Into<String>) -> Self {
        let d = d.into();
        self.detail = (!d.is_empty()).then_some(d);
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDescriptor {
    pub descriptor: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
}

impl InputDescriptor {
    pub fn new(descriptor: String, g: &Graph) -> Self {
        InputDescriptor { descriptor, graph6: to_graph6(g), n: g.n(), m: g.edge_count() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub certificate: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResourceFailure {
    pub graph6: String,
    pub error: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub assertion: String,
    pub filter: String,
    pub source: String,
    pub max_n: Option<usize>,
    pub graphs: usize,
    pub applicable: usize,
    pub counterexamples: Vec<Counterexample>,
    pub resource_failures: Vec<ResourceFailure>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub total_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: Tool,
    pub command: String,
    pub argv: Vec<String>,
    pub input: Option<InputDescriptor>,
    pub verdicts: Vec<Verdict>,
    pub sweep: Option<SweepSummary>,
    pub status: Status,
    pub error: Option<String>,
    pub timings: Option<Timings>,
}

impl Report {
    pub fn new(command: &str, argv: Vec<String>) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            tool: Tool { name: "tperf", version: env!("CARGO_PKG_VERSION") },
            command: command.into(),
            argv,
            input: None,
            verdicts: Vec::new(),
            sweep: None,
            status: Status::Holds,
            error: None,
            timings: None,
        }
    }

    /// Status from the verdicts and sweep outcome: any failed verdict makes the
    /// report fail; otherwise per-graph resource failures make it inconclusive.
    pub fn settle(&mut self) {
        self.status = if self.verdicts.iter().any(|v| !v.holds) {
            Status::Fails
        } else if self.sweep.as_ref().is_some_and(|s| !s.resource_failures.is_empty()) {
            Status::ResourceExhausted
        } else {
            Status::Holds
        };
    }

    pub fn fail_with(&mut self, e: CliError) {
        self.status = match e {
            CliError::Input(_) => Status::InputError,
            CliError::Resource(_) => Status::ResourceExhausted,
        };
        self.error = Some(e.to_string());
    }
}
