use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{as_string, int, Rational, RationalVec};
use super::PolytopeError;
use crate::graph::{enumerate_induced_odd_cycles_capped, Graph, DEFAULT_CYCLE_CAP};

/// Which inequality family a row comes from. The tag alone determines the row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RowTag {
    /// `-x_v <= 0`
    NonNeg { v: usize },
    /// `x_u + x_v <= 1`
    Edge { u: usize, v: usize },
    /// `sum over C of x <= floor(|C| / 2)`
    OddCycle { cycle: Vec<usize> },
    /// `x_v <= 1`, only for isolated vertices, which no other row bounds.
    Upper { v: usize },
}

impl RowTag {
    /// Coefficients and right-hand side determined by the tag.
    pub fn row(&self, dim: usize) -> (RationalVec, Rational) {
        let mut a = RationalVec::zeros(dim);
        let rhs = match self {
            RowTag::NonNeg { v } => {
                a[*v] = int(-1);
                Rational::zero()
            }
            RowTag::Edge { u, v } => {
                a[*u] = Rational::one();
                a[*v] = Rational::one();
                Rational::one()
            }
            RowTag::OddCycle { cycle } => {
                for &v in cycle {
                    a[v] = Rational::one();
                }
                int((cycle.len() / 2) as i64)
            }
            RowTag::Upper { v } => {
                a[*v] = Rational::one();
                Rational::one()
            }
        };
        (a, rhs)
    }
}

impl std::fmt::Display for RowTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RowTag::NonNeg { v } => write!(f, "nonneg {v}"),
            RowTag::Edge { u, v } => write!(f, "edge {u} {v}"),
            RowTag::OddCycle { cycle } => {
                f.write_str("cycle")?;
                cycle.iter().try_for_each(|v| write!(f, " {v}"))
            }
            RowTag::Upper { v } => write!(f, "upper {v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub coeffs: RationalVec,
    #[serde(with = "as_string")]
    pub rhs: Rational,
    pub tag: RowTag,
}

impl Row {
    pub fn from_tag(tag: RowTag, dim: usize) -> Self {
        let (coeffs, rhs) = tag.row(dim);
        Row { coeffs, rhs, tag }
    }

    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.dot(x)
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        self.lhs(x) <= self.rhs
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.lhs(x) == self.rhs
    }
}

/// `{ x : a_i x <= b_i for every row i }` in dimension `dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolytope {
    pub dim: usize,
    pub rows: Vec<Row>,
}

impl HPolytope {
    /// First violated row, if any.
    pub fn first_violated(&self, x: &RationalVec) -> Result<Option<usize>, PolytopeError> {
        self.check_dim(x)?;
        Ok(self.rows.iter().position(|r| !r.is_satisfied(x)))
    }

    pub fn tight_rows(&self, x: &RationalVec) -> Vec<usize> {
        (0..self.rows.len()).filter(|&i| self.rows[i].is_tight(x)).collect()
    }

    pub fn check_dim(&self, x: &RationalVec) -> Result<(), PolytopeError> {
        if x.len() != self.dim {
            return Err(PolytopeError::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        Ok(())
    }

    /// Every row's coefficients and right-hand side agree with its tag.
    pub fn audit(&self) -> Result<(), PolytopeError> {
        for (i, r) in self.rows.iter().enumerate() {
            if r.coeffs.len() != self.dim || r.tag.row(self.dim) != (r.coeffs.clone(), r.rhs.clone()) {
                return Err(PolytopeError::AuditFailed { row: i });
            }
        }
        Ok(())
    }

    /// Plain-text dump, one row per line: `tag; coefficients; rhs`.
    pub fn dump(&self) -> String {
        let mut out = format!("# dim {} rows {}\n# tag; coefficients; rhs\n", self.dim, self.rows.len());
        for r in &self.rows {
            let coeffs: Vec<String> = r.coeffs.to_strings();
            let _ = writeln!(out, "{}; {}; {}", r.tag, coeffs.join(" "), r.rhs);
        }
        out
    }

    pub fn count(&self, pred: impl Fn(&RowTag) -> bool) -> usize {
        self.rows.iter().filter(|r| pred(&r.tag)).count()
    }
}

/// Induced odd cycle cap: `TPERF_CYCLE_CAP` if set and valid, otherwise the default.
pub fn cycle_cap() -> usize {
    std::env::var("TPERF_CYCLE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CYCLE_CAP)
}

/// TSTAB(G): non-negativity rows for every vertex, then one row per edge, then one
/// per induced odd cycle. Isolated vertices additionally get `x_v <= 1`, placed right
/// after the non-negativity rows, since nothing else bounds them.
pub fn build_tstab(g: &Graph) -> Result<HPolytope, PolytopeError> {
    build_tstab_capped(g, cycle_cap())
}

pub fn build_tstab_capped(g: &Graph, cap: usize) -> Result<HPolytope, PolytopeError> {
    let n = g.n();
    let cycles = enumerate_induced_odd_cycles_capped(g, cap)?;
    let tags = (0..n)
        .map(|v| RowTag::NonNeg { v })
        .chain((0..n).filter(|&v| g.degree(v) == 0).map(|v| RowTag::Upper { v }))
        .chain(g.edges().map(|(u, v)| RowTag::Edge { u, v }))
        .chain(cycles.into_iter().map(|cycle| RowTag::OddCycle { cycle }));
    Ok(HPolytope { dim: n, rows: tags.map(|t| Row::from_tag(t, n)).collect() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TstabVerdict {
    pub member: bool,
    /// The first violated row, when not a member.
    pub violated: Option<Row>,
}

pub fn in_tstab(g: &Graph, x: &RationalVec) -> Result<TstabVerdict, PolytopeError> {
    let p = build_tstab(g)?;
    let violated = p.first_violated(x)?.map(|i| p.rows[i].clone());
    Ok(TstabVerdict { member: violated.is_none(), violated })
}
