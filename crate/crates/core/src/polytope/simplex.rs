//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Problems are in standard form: minimise `c x` subject to `A x = b`, `x >= 0`.
//! Duals are read off the columns of the starting basis, so every outcome carries
//! a certificate: optimal duals, or a Farkas vector `y` with `y A <= 0` and `y b > 0`.

use num_traits::{One, Signed, Zero};

use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational, dual: Vec<Rational> },
    Infeasible { farkas: Vec<Rational> },
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs for the current objective, and the objective value.
    rc: Vec<Rational>,
    obj: Rational,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        if !p.is_one() {
            let inv = p.recip();
            for x in self.rows[r].iter_mut().filter(|x| !x.is_zero()) {
                *x *= &inv;
            }
            self.rhs[r] *= &inv;
        }
        let nz: Vec<usize> = (0..self.rows[r].len()).filter(|&j| !self.rows[r][j].is_zero()).collect();
        let prow = std::mem::take(&mut self.rows[r]);
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for &j in &nz {
                let d = &f * &prow[j];
                self.rows[i][j] -= d;
            }
            let d = &f * &prhs;
            self.rhs[i] -= d;
        }
        if !self.rc[col].is_zero() {
            let f = self.rc[col].clone();
            for &j in &nz {
                let d = &f * &prow[j];
                self.rc[j] -= d;
            }
            // obj tracks -z so that the same elimination applies.
            self.obj -= &f * &prhs;
        }
        self.rows[r] = prow;
        self.basis[r] = col;
    }

    /// Sets the objective `cost` and prices out the current basis.
    fn set_cost(&mut self, cost: &[Rational]) {
        self.rc = cost.to_vec();
        self.obj = Rational::zero();
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = cost[b].clone();
            if cb.is_zero() {
                continue;
            }
            for (j, x) in self.rows[r].iter().enumerate() {
                if !x.is_zero() {
                    self.rc[j] -= &cb * x;
                }
            }
            self.obj -= &cb * &self.rhs[r];
        }
    }

    /// Runs Bland's rule over columns `allowed`. Returns false if unbounded.
    fn optimise(&mut self, allowed: usize) -> bool {
        loop {
            let Some(col) = (0..allowed).find(|&j| self.rc[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(Rational, usize, usize)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &best {
                    None => true,
                    Some((q, _, b)) => ratio < *q || (ratio == *q && self.basis[r] < *b),
                };
                if better {
                    best = Some((ratio, r, self.basis[r]));
                }
            }
            let Some((_, r, _)) = best else {
                return false;
            };
            self.pivot(r, col);
        }
    }
}

/// Solves `min c x` s.t. `A x = b`, `x >= 0` exactly.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == m);
    let sign: Vec<bool> = b.iter().map(|x| x.is_negative()).collect();
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(&sign)
        .map(|(r, &neg)| if neg { r.iter().map(|x| -x).collect() } else { r.clone() })
        .collect();
    let rhs: Vec<Rational> = b.iter().map(|x| x.abs()).collect();

    // Starting basis: an existing unit column per row where possible, else an artificial.
    let mut start = vec![usize::MAX; m];
    for j in 0..n {
        let nz: Vec<usize> = (0..m).filter(|&i| !rows[i][j].is_zero()).collect();
        if let [i] = nz[..] {
            if rows[i][j].is_one() && start[i] == usize::MAX {
                start[i] = j;
            }
        }
    }
    let mut width = n;
    for i in 0..m {
        if start[i] == usize::MAX {
            for (k, row) in rows.iter_mut().enumerate() {
                row.push(if k == i { Rational::one() } else { Rational::zero() });
            }
            start[i] = width;
            width += 1;
        }
    }
    if m == 0 {
        // No constraints: optimal at 0 unless some cost is negative.
        if c.iter().any(|x| x.is_negative()) {
            return LpOutcome::Unbounded;
        }
        return LpOutcome::Optimal { x: vec![Rational::zero(); n], value: Rational::zero(), dual: vec![] };
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis: start.clone(),
        rc: vec![Rational::zero(); width],
        obj: Rational::zero(),
    };
    let dual_from = |t: &Tableau, cost: &[Rational]| -> Vec<Rational> {
        (0..m)
            .map(|i| {
                let y = &cost[start[i]] - &t.rc[start[i]];
                if sign[i] {
                    -y
                } else {
                    y
                }
            })
            .collect()
    };

    // Phase 1.
    let phase1: Vec<Rational> = (0..width).map(|j| if j >= n { Rational::one() } else { Rational::zero() }).collect();
    if width > n {
        t.set_cost(&phase1);
        t.optimise(n);
        if !t.obj.is_zero() {
            return LpOutcome::Infeasible { farkas: dual_from(&t, &phase1) };
        }
        // Drive zero-level artificials out of the basis where a structural pivot exists.
        for r in 0..m {
            if t.basis[r] >= n {
                if let Some(j) = (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                    t.pivot(r, j);
                }
            }
        }
    }

    // Phase 2; artificials cost nothing and never enter.
    let mut cost = c.to_vec();
    cost.resize(width, Rational::zero());
    t.set_cost(&cost);
    if !t.optimise(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &bcol) in t.basis.iter().enumerate() {
        if bcol < n {
            x[bcol] = t.rhs[r].clone();
        }
    }
    let value = -t.obj.clone();
    let dual = dual_from(&t, &cost);
    LpOutcome::Optimal { x, value, dual }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{int, rat};
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn small_optimum_with_duals() {
        // min -x - y  s.t.  x + 2y + s1 = 4, 3x + y + s2 = 6.
        let a = vec![v(&[1, 2, 1, 0]), v(&[3, 1, 0, 1])];
        let b = v(&[4, 6]);
        let c = v(&[-1, -1, 0, 0]);
        let LpOutcome::Optimal { x, value, dual } = solve(&a, &b, &c) else { panic!() };
        assert_eq!(value, rat(-14, 5));
        assert_eq!(&x[..2], &[rat(8, 5), rat(6, 5)]);
        // Strong duality: y b equals the optimum.
        assert_eq!(&dual[0] * int(4) + &dual[1] * int(6), value);
    }

    #[test]
    fn infeasible_gives_farkas_vector() {
        // x + y = 1 and x + y = 2.
        let a = vec![v(&[1, 1]), v(&[1, 1])];
        let b = v(&[1, 2]);
        let LpOutcome::Infeasible { farkas } = solve(&a, &b, &v(&[0, 0])) else { panic!() };
        for j in 0..2 {
            assert!(&farkas[0] * &a[0][j] + &farkas[1] * &a[1][j] <= int(0));
        }
        assert!(&farkas[0] * &b[0] + &farkas[1] * &b[1] > int(0));
    }

    #[test]
    fn negative_rhs_and_unbounded() {
        // -x = -3  =>  x = 3.
        let LpOutcome::Optimal { x, .. } = solve(&[v(&[-1])], &v(&[-3]), &v(&[1])) else { panic!() };
        assert_eq!(x, v(&[3]));
        // min -x  s.t.  x - y = 0 is unbounded.
        assert_eq!(solve(&[v(&[1, -1])], &v(&[0]), &v(&[-1, 0])), LpOutcome::Unbounded);
    }

    #[test]
    fn degenerate_cycle_prone_problem_terminates() {
        // Beale's classic cycling example in standard form.
        let a = vec![
            vec![rat(1, 4), int(-8), int(-1), int(9), int(1), int(0), int(0)],
            vec![rat(1, 2), int(-12), rat(-1, 2), int(3), int(0), int(1), int(0)],
            vec![int(0), int(0), int(1), int(0), int(0), int(0), int(1)],
        ];
        let b = v(&[0, 0, 1]);
        let c = vec![rat(-3, 4), int(20), rat(-1, 2), int(6), int(0), int(0), int(0)];
        let LpOutcome::Optimal { value, .. } = solve(&a, &b, &c) else { panic!() };
        assert_eq!(value, rat(-5, 4));
    }
}
