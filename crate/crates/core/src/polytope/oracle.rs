//! Ground-truth t-perfection: is TSTAB(G) integral?
//!
//! The default method walks the edges of TSTAB leaving each integral vertex. The
//! integral points of TSTAB are exactly the stable-set vectors, the vertex-edge graph
//! of a polytope is connected, and `0` is always a vertex; so if any fractional
//! vertex exists, some fractional vertex is adjacent to a stable-set vertex. Edges
//! leaving `chi(S)` are the extreme rays of the cone cut out by the rows tight at
//! `chi(S)`. Flipping the sign of the coordinates in `S` puts that cone inside the
//! orthant (every `v` in `S` is bounded above by a tight edge or upper row), so each
//! cone is computed by the orthant double description in dimension `n`.
//!
//! The global method enumerates every vertex of TSTAB instead; it is kept as an
//! independent cross-check for small graphs.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::dd::{enumerate_vertices, independent_subset, orthant_cone_rays, DEFAULT_RAY_CAP};
use super::hpoly::{build_tstab_capped, cycle_cap, HPolytope, Row, RowTag};
use super::rational::{Rational, RationalVec};
use super::stable::stable_sets;
use super::PolytopeError;
use crate::graph::Graph;

/// Default largest vertex count for a full oracle run.
pub const DEFAULT_ORACLE_MAX_N: usize = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMethod {
    /// Edges out of every stable-set vertex.
    TangentCones,
    /// Every vertex of TSTAB.
    Global,
}

#[derive(Debug, Clone)]
pub struct OracleOptions {
    pub method: OracleMethod,
    pub max_n: usize,
    pub force_long: bool,
    pub ray_cap: usize,
    pub cycle_cap: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            method: OracleMethod::TangentCones,
            max_n: DEFAULT_ORACLE_MAX_N,
            force_long: false,
            ray_cap: DEFAULT_RAY_CAP,
            cycle_cap: cycle_cap(),
        }
    }
}

/// A fractional vertex of TSTAB together with `n` linearly independent rows tight at it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalVertex {
    pub point: RationalVec,
    pub tight_basis: Vec<RowTag>,
}

impl FractionalVertex {
    /// Independent re-check against a freshly built TSTAB.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.point.len() != n || self.point.is_integral() || self.tight_basis.len() != n {
            return false;
        }
        let Ok(p) = build_tstab_capped(g, usize::MAX) else {
            return false;
        };
        if !matches!(p.first_violated(&self.point), Ok(None)) {
            return false;
        }
        let mut rows = Vec::with_capacity(n);
        for tag in &self.tight_basis {
            if !p.rows.iter().any(|r| r.tag == *tag) {
                return false;
            }
            let row = Row::from_tag(tag.clone(), n);
            if !row.is_tight(&self.point) {
                return false;
            }
            rows.push(row.coeffs.0);
        }
        super::dd::rational_rank(&rows) == n
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TPerfVerdict {
    pub t_perfect: bool,
    pub witness: Option<FractionalVertex>,
    pub method: OracleMethod,
    /// Stable-set vertices examined (tangent cones) or vertices enumerated (global).
    pub vertices_examined: usize,
}

pub fn is_t_perfect_oracle(g: &Graph) -> Result<TPerfVerdict, PolytopeError> {
    is_t_perfect_oracle_with(g, &OracleOptions::default())
}

pub fn is_t_perfect_oracle_with(g: &Graph, opts: &OracleOptions) -> Result<TPerfVerdict, PolytopeError> {
    if g.n() > opts.max_n && !opts.force_long {
        return Err(PolytopeError::TooLarge { n: g.n(), limit: opts.max_n });
    }
    let p = build_tstab_capped(g, opts.cycle_cap)?;
    match opts.method {
        OracleMethod::TangentCones => tangent_cone_oracle(g, &p, opts.ray_cap),
        OracleMethod::Global => {
            let vertices = enumerate_vertices(&p, opts.ray_cap)?;
            let examined = vertices.len();
            let witness = vertices.into_iter().find(|v| !v.is_integral()).map(|v| with_basis(&p, v));
            Ok(TPerfVerdict {
                t_perfect: witness.is_none(),
                witness,
                method: OracleMethod::Global,
                vertices_examined: examined,
            })
        }
    }
}

fn with_basis(p: &HPolytope, point: RationalVec) -> FractionalVertex {
    let tight = p.tight_rows(&point);
    let coeffs: Vec<Vec<Rational>> = tight.iter().map(|&i| p.rows[i].coeffs.0.clone()).collect();
    let tight_basis = independent_subset(&coeffs).into_iter().map(|k| p.rows[tight[k]].tag.clone()).collect();
    FractionalVertex { point, tight_basis }
}

/// Integer coefficients of a TSTAB row (all TSTAB rows are integral).
fn int_coeffs(r: &Row) -> Vec<i64> {
    r.coeffs.iter().map(|c| i64::try_from(c.to_integer()).expect("TSTAB rows are small integers")).collect()
}

fn tangent_cone_oracle(g: &Graph, p: &HPolytope, ray_cap: usize) -> Result<TPerfVerdict, PolytopeError> {
    let n = g.n();
    let int_rows: Vec<Vec<i64>> = p.rows.iter().map(int_coeffs).collect();
    let rhs: Vec<i64> = p.rows.iter().map(|r| i64::try_from(r.rhs.to_integer()).expect("small rhs")).collect();
    let sets = stable_sets(g);
    for (examined, &s) in sets.iter().enumerate() {
        let in_s = |v: usize| s >> v & 1 == 1;
        // Row values at chi(S) are integers.
        let value = |k: usize| -> i64 { (0..n).filter(|&v| in_s(v)).map(|v| int_rows[k][v]).sum() };
        let mut cone_rows = Vec::new();
        let mut slack_rows = Vec::new();
        for (k, row) in p.rows.iter().enumerate() {
            if value(k) < rhs[k] {
                slack_rows.push(k);
                continue;
            }
            if let RowTag::NonNeg { v } = row.tag {
                if !in_s(v) {
                    continue; // already an orthant row
                }
            }
            cone_rows.push(
                (0..n).map(|v| if in_s(v) { -int_rows[k][v] } else { int_rows[k][v] }).collect::<Vec<i64>>(),
            );
        }
        for e in orthant_cone_rays(n, &cone_rows, ray_cap)? {
            let d: Vec<i128> = (0..n).map(|v| if in_s(v) { -e[v] } else { e[v] }).collect();
            // Step length to the first row that becomes tight along d.
            let mut step: Option<Rational> = None;
            for &k in &slack_rows {
                let ad: i128 = (0..n).map(|v| int_rows[k][v] as i128 * d[v]).sum();
                if ad > 0 {
                    let t = Rational::new(BigInt::from(rhs[k] - value(k)), BigInt::from(ad));
                    if step.as_ref().is_none_or(|s| t < *s) {
                        step = Some(t);
                    }
                }
            }
            let Some(t) = step else {
                return Err(PolytopeError::Unbounded);
            };
            let y = RationalVec(
                (0..n)
                    .map(|v| {
                        let base = if in_s(v) { Rational::from_integer(1.into()) } else { Rational::zero() };
                        base + &t * Rational::from_integer(BigInt::from(d[v]))
                    })
                    .collect(),
            );
            debug_assert!(!y.has_negative());
            if !y.is_integral() {
                return Ok(TPerfVerdict {
                    t_perfect: false,
                    witness: Some(with_basis(p, y)),
                    method: OracleMethod::TangentCones,
                    vertices_examined: examined + 1,
                });
            }
        }
    }
    Ok(TPerfVerdict {
        t_perfect: true,
        witness: None,
        method: OracleMethod::TangentCones,
        vertices_examined: sets.len(),
    })
}

/// `x = (og - 1) / (2 og)` on every vertex, where `og` is the odd girth. Every odd cycle
/// has length at least `og`, so the point satisfies every odd-cycle row, and edge rows
/// hold since the value is below 1/2. It is a natural candidate for lying outside SSP.
pub fn uniform_odd_girth_point(g: &Graph) -> Option<RationalVec> {
    let og = g.odd_girth()? as i64;
    Some(RationalVec::constant(g.n(), Rational::new(BigInt::from(og - 1), BigInt::from(2 * og))))
}
