//! Double description for pointed cones inside the non-negative orthant.
//!
//! The cone `{ r >= 0 : h_k . r <= 0 for all k }` is built by starting from the
//! orthant (extreme rays `e_i`) and inserting the rows `h_k` one at a time. Rays are
//! primitive integer vectors in `i128` with checked arithmetic; adjacency of two rays
//! is decided algebraically (the rows tight at both have rank `dim - 2`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::hpoly::HPolytope;
use super::rational::{Rational, RationalVec};
use super::PolytopeError;

/// Default ceiling on the number of rays held at any one time.
pub const DEFAULT_RAY_CAP: usize = 2_000_000;

#[derive(Clone)]
struct Ray {
    v: Vec<i128>,
    /// Bitset over all constraints inserted so far (orthant rows first).
    zero: Vec<u64>,
}

fn set_bit(z: &mut [u64], k: usize) {
    z[k / 64] |= 1 << (k % 64);
}

fn popcount_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

fn dot(h: &[i64], r: &[i128]) -> Result<i128, PolytopeError> {
    let mut s: i128 = 0;
    for (&a, &x) in h.iter().zip(r) {
        if a != 0 && x != 0 {
            s = (a as i128)
                .checked_mul(x)
                .and_then(|p| s.checked_add(p))
                .ok_or(PolytopeError::Overflow)?;
        }
    }
    Ok(s)
}

fn gcd_normalise(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// Rank of the given integer rows is at least `target`, by fraction-free elimination.
fn rank_at_least(mut m: Vec<Vec<i128>>, target: usize) -> Result<bool, PolytopeError> {
    if target == 0 {
        return Ok(true);
    }
    if m.len() < target {
        return Ok(false);
    }
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c];
        for i in rank + 1..m.len() {
            let f = m[i][c];
            for j in c + 1..cols {
                let a = m[i][j].checked_mul(piv).ok_or(PolytopeError::Overflow)?;
                let b = f.checked_mul(m[rank][j]).ok_or(PolytopeError::Overflow)?;
                m[i][j] = a.checked_sub(b).ok_or(PolytopeError::Overflow)? / prev;
            }
            m[i][c] = 0;
        }
        prev = piv;
        rank += 1;
        if rank >= target {
            return Ok(true);
        }
        if m.len() - rank < target - rank {
            return Ok(false);
        }
    }
    Ok(false)
}

/// Extreme rays of `{ r in R^dim : r >= 0, h . r <= 0 for h in rows }`.
pub fn orthant_cone_rays(dim: usize, rows: &[Vec<i64>], ray_cap: usize) -> Result<Vec<Vec<i128>>, PolytopeError> {
    let total = dim + rows.len();
    let words = total.div_ceil(64).max(1);
    // Constraint k as a row vector, for rank tests.
    let constraint = |k: usize| -> Vec<i128> {
        if k < dim {
            (0..dim).map(|i| if i == k { -1 } else { 0 }).collect()
        } else {
            rows[k - dim].iter().map(|&a| a as i128).collect()
        }
    };
    let mut rays: Vec<Ray> = (0..dim)
        .map(|i| {
            let mut zero = vec![0u64; words];
            for k in (0..dim).filter(|&k| k != i) {
                set_bit(&mut zero, k);
            }
            let mut v = vec![0i128; dim];
            v[i] = 1;
            Ray { v, zero }
        })
        .collect();
    let need = dim.saturating_sub(2) as u32;

    for (j, h) in rows.iter().enumerate() {
        let k = dim + j;
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        let mut keep = Vec::with_capacity(rays.len());
        for r in rays.drain(..) {
            let s = dot(h, &r.v)?;
            match s.signum() {
                1 => plus.push((r, s)),
                -1 => minus.push((r, s)),
                _ => {
                    let mut r = r;
                    set_bit(&mut r.zero, k);
                    keep.push(r);
                }
            }
        }
        if plus.is_empty() {
            keep.extend(minus.into_iter().map(|(r, _)| r));
            rays = keep;
            continue;
        }
        let mut created = Vec::new();
        for (p, sp) in &plus {
            for (q, sq) in &minus {
                if popcount_and(&p.zero, &q.zero) < need {
                    continue;
                }
                let common: Vec<u64> = p.zero.iter().zip(&q.zero).map(|(a, b)| a & b).collect();
                let tight: Vec<Vec<i128>> = (0..total)
                    .filter(|&c| common[c / 64] >> (c % 64) & 1 == 1)
                    .map(constraint)
                    .collect();
                if !rank_at_least(tight, need as usize)? {
                    continue;
                }
                let a = *sp;
                let b = -*sq;
                let mut v = Vec::with_capacity(dim);
                for (x, y) in q.v.iter().zip(&p.v) {
                    let t = a
                        .checked_mul(*x)
                        .and_then(|u| b.checked_mul(*y).and_then(|w| u.checked_add(w)))
                        .ok_or(PolytopeError::Overflow)?;
                    v.push(t);
                }
                gcd_normalise(&mut v);
                let mut zero = common;
                set_bit(&mut zero, k);
                created.push(Ray { v, zero });
            }
        }
        keep.extend(minus.into_iter().map(|(r, _)| r));
        keep.extend(created);
        if keep.len() > ray_cap {
            return Err(PolytopeError::RayCapExceeded(ray_cap));
        }
        rays = keep;
    }
    Ok(rays.into_iter().map(|r| r.v).collect())
}

/// Scales a rational row to coprime integers; returns the integer coefficients
/// and right-hand side.
fn integer_row(coeffs: &[Rational], rhs: &Rational) -> Result<(Vec<i64>, i64), PolytopeError> {
    let lcm = coeffs.iter().chain(std::iter::once(rhs)).fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let conv = |x: &Rational| -> Result<i64, PolytopeError> {
        (x.numer() * (&lcm / x.denom())).to_i64().ok_or(PolytopeError::Overflow)
    };
    let a = coeffs.iter().map(conv).collect::<Result<Vec<_>, _>>()?;
    Ok((a, conv(rhs)?))
}

/// Vertices of a polytope lying in the non-negative orthant.
///
/// The polytope must contain a `-x_v <= 0` row for every coordinate. Homogenising with
/// `t >= 0` turns it into a cone in the orthant of `R^{1 + dim}`; vertices are the
/// extreme rays with `t > 0`. The remaining rows are inserted in the given order.
pub fn enumerate_vertices(p: &HPolytope, ray_cap: usize) -> Result<Vec<RationalVec>, PolytopeError> {
    let d = p.dim;
    let mut has_nonneg = vec![false; d];
    let mut rows = Vec::new();
    for r in &p.rows {
        let (a, b) = integer_row(&r.coeffs, &r.rhs)?;
        let nz: Vec<usize> = (0..d).filter(|&i| a[i] != 0).collect();
        if b == 0 && nz.len() == 1 && a[nz[0]] < 0 {
            has_nonneg[nz[0]] = true;
            continue;
        }
        let mut h = Vec::with_capacity(d + 1);
        h.push(-b);
        h.extend(a);
        rows.push(h);
    }
    if let Some(v) = has_nonneg.iter().position(|&x| !x) {
        return Err(PolytopeError::NotInOrthant(v));
    }
    let rays = orthant_cone_rays(d + 1, &rows, ray_cap)?;
    let mut out = Vec::with_capacity(rays.len());
    for r in rays {
        if r[0] == 0 {
            return Err(PolytopeError::Unbounded);
        }
        let t = BigInt::from(r[0]);
        out.push(RationalVec(r[1..].iter().map(|&x| Rational::new(BigInt::from(x), t.clone())).collect()));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Rank of a set of rational rows (exact Gaussian elimination).
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for i in rank + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &piv;
            for j in c..cols {
                let d = &f * &m[rank][j];
                m[i][j] -= d;
            }
        }
        rank += 1;
    }
    rank
}

/// Indices of a maximal linearly independent subset of `rows`, chosen greedily in order.
pub fn independent_subset(rows: &[Vec<Rational>]) -> Vec<usize> {
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut picked = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        basis.push(r.clone());
        if rational_rank(&basis) == basis.len() {
            picked.push(i);
        } else {
            basis.pop();
        }
    }
    picked
}
