//! Exact polyhedral tools: TSTAB and SSP, vertex enumeration, the t-perfection
//! oracle and the fractional chromatic number. No floating point is used anywhere.

mod chromatic;
pub mod dd;
mod hpoly;
mod oracle;
pub mod rational;
pub mod simplex;
mod ssp;
mod stable;

pub use chromatic::{fractional_chromatic, FractionalChromatic};
pub use dd::{enumerate_vertices, DEFAULT_RAY_CAP};
pub use hpoly::{build_tstab, build_tstab_capped, cycle_cap, in_tstab, HPolytope, Row, RowTag, TstabVerdict};
pub use oracle::{
    is_t_perfect_oracle, is_t_perfect_oracle_with, uniform_odd_girth_point, FractionalVertex, OracleMethod,
    OracleOptions, TPerfVerdict, DEFAULT_ORACLE_MAX_N,
};
pub use rational::{int, parse_rational, rat, Rational, RationalVec};
pub use ssp::{in_ssp, SspCertificate, WeightedSet};
pub use stable::{max_weight_stable_set, maximal_stable_sets, stable_sets};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid rational: {0}")]
    BadRational(String),
    #[error("undecided (resource): double description exceeded {0} rays")]
    RayCapExceeded(usize),
    #[error("undecided (resource): integer overflow in exact arithmetic")]
    Overflow,
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("no non-negativity row for coordinate {0}")]
    NotInOrthant(usize),
    #[error("row {row} does not match its tag")]
    AuditFailed { row: usize },
    #[error("full oracle refused for n = {n} > {limit}; pass --force-long to run anyway")]
    TooLarge { n: usize, limit: usize },
    #[error("linear program failed: {0}")]
    LpFailure(String),
}

impl PolytopeError {
    /// Resource exhaustion rather than a wrong or invalid input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            PolytopeError::RayCapExceeded(_)
                | PolytopeError::Overflow
                | PolytopeError::Graph(GraphError::CycleCapExceeded(_) | GraphError::PathCapExceeded(_))
        )
    }
}
