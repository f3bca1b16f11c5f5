use thiserror::Error;
use tperf_core::colouring::ColouringError;
use tperf_core::polytope::PolytopeError;
use tperf_core::recognition::RecognitionError;
use tperf_core::tminor::TMinorError;
use tperf_core::GraphError;

/// Failures that end a command before any verdict: bad input (exit 2) or an
/// exhausted resource cap (exit 3).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

fn graph_is_resource(e: &GraphError) -> bool {
    matches!(e, GraphError::CycleCapExceeded(_) | GraphError::PathCapExceeded(_))
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        if graph_is_resource(&e) {
            CliError::Resource(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

// A refused oracle run (n above the limit without --force-long) counts as a
// resource outcome, not as bad input.
impl From<PolytopeError> for CliError {
    fn from(e: PolytopeError) -> Self {
        if e.is_resource() || matches!(e, PolytopeError::TooLarge { .. }) {
            CliError::Resource(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<RecognitionError> for CliError {
    fn from(e: RecognitionError) -> Self {
        match e {
            RecognitionError::Polytope(p) => p.into(),
            RecognitionError::TooLarge { .. } => CliError::Resource(e.to_string()),
            e if e.is_resource() => CliError::Resource(e.to_string()),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<ColouringError> for CliError {
    fn from(e: ColouringError) -> Self {
        match e {
            ColouringError::Graph(g) => g.into(),
            ColouringError::Recognition(r) => r.into(),
            ColouringError::Polytope(p) => p.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<TMinorError> for CliError {
    fn from(e: TMinorError) -> Self {
        match e {
            TMinorError::Graph(g) => g.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}
