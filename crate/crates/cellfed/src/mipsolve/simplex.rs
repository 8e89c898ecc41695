//! Bounded-variable revised primal simplex with a two-phase start.
//!
//! Constraints are turned into equalities with one slack per row; phase one
//! minimizes artificial variables to find a feasible basis. The basis inverse
//! is kept explicitly and refreshed periodically. Dantzig pricing with a
//! switch to Bland's rule after a run of degenerate pivots guards against
//! cycling.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Row sense of a linear constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

/// A linear program: minimize `c·x` subject to row constraints and box bounds.
/// Bounds may be infinite.
#[derive(Debug, Clone)]
pub struct LpInstance {
    pub c: DVector<f64>,
    pub a: DMatrix<f64>,
    pub senses: Vec<Sense>,
    pub b: DVector<f64>,
    pub lower: DVector<f64>,
    pub upper: DVector<f64>,
}

impl LpInstance {
    pub fn num_vars(&self) -> usize {
        self.c.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        let m = self.a.nrows();
        if self.a.ncols() != n || self.b.len() != m || self.senses.len() != m {
            return Err(Error::ShapeMismatch("lp constraint dimensions".into()));
        }
        if self.lower.len() != n || self.upper.len() != n {
            return Err(Error::ShapeMismatch("lp bound dimensions".into()));
        }
        for i in 0..n {
            if self.lower[i] > self.upper[i] {
                return Err(Error::Config(format!("empty bound box on variable {i}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub x: DVector<f64>,
    pub objective: f64,
    pub status: LpStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VarState {
    Basic(usize),
    AtLower,
    AtUpper,
    /// Both bounds infinite; rests at zero while nonbasic.
    Free,
}

/// Running total of simplex pivots, for performance diagnostics.
pub static PIVOT_COUNT: std::sync::atomic::AtomicUsize = std::sync::atomic::AtomicUsize::new(0);

const FEAS_TOL: f64 = 1e-9;
const RC_TOL: f64 = 1e-9;
const PIVOT_TOL: f64 = 1e-10;
const DEGEN_LIMIT: usize = 40;
const REFACTOR_EVERY: usize = 100;

struct Core {
    /// columns of the equality system: structural, then slack, then artificial
    cols: DMatrix<f64>,
    b: DVector<f64>,
    lower: Vec<f64>,
    upper: Vec<f64>,
    n_total: usize,
    m: usize,
    state: Vec<VarState>,
    basis: Vec<usize>,
    /// transpose of the basis inverse; storing it transposed keeps the
    /// product-form pivot update and the multiplier solve on contiguous
    /// columns of a column-major matrix
    binv_t: DMatrix<f64>,
    pivots_since_refactor: usize,
}

impl Core {
    fn nonbasic_value(&self, j: usize) -> f64 {
        match self.state[j] {
            VarState::AtLower => self.lower[j],
            VarState::AtUpper => self.upper[j],
            VarState::Free => 0.0,
            VarState::Basic(_) => unreachable!("basic variable has no resting value"),
        }
    }

    /// b minus the contribution of all nonbasic variables.
    fn residual(&self) -> DVector<f64> {
        let mut r = self.b.clone();
        for j in 0..self.n_total {
            if matches!(self.state[j], VarState::Basic(_)) {
                continue;
            }
            let v = self.nonbasic_value(j);
            if v != 0.0 {
                r -= self.cols.column(j) * v;
            }
        }
        r
    }

    fn basic_values(&self, resid: &DVector<f64>) -> DVector<f64> {
        self.binv_t.tr_mul(resid)
    }

    fn refactor(&mut self) -> Result<()> {
        let mut bmat_t = DMatrix::zeros(self.m, self.m);
        for (i, &j) in self.basis.iter().enumerate() {
            bmat_t
                .column_mut(i)
                .copy_from(&self.cols.column(j));
        }
        // rows of B become columns here, so this LU inverts B^T directly
        bmat_t.transpose_mut();
        self.binv_t = bmat_t
            .lu()
            .try_inverse()
            .ok_or_else(|| Error::Numerical {
                context: "simplex".into(),
                detail: "singular basis".into(),
            })?;
        self.pivots_since_refactor = 0;
        Ok(())
    }

    /// Runs the simplex loop for the given costs. Returns `None` on optimal,
    /// or the unbounded status.
    fn optimize(&mut self, cost: &[f64]) -> Result<Option<LpStatus>> {
        let max_iter = 200 * (self.n_total + self.m) + 1000;
        let mut degen_run = 0usize;
        let mut resid = self.residual();
        let mut cb = DVector::zeros(self.m);
        for _ in 0..max_iter {
            PIVOT_COUNT.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            let xb = self.basic_values(&resid);
            // simplex multipliers y = cB' B^-1
            for (i, &j) in self.basis.iter().enumerate() {
                cb[i] = cost[j];
            }
            let y = &self.binv_t * &cb;
            // reduced costs for every column in one pass
            let rc_all = self.cols.tr_mul(&y);

            // entering variable
            let bland = degen_run >= DEGEN_LIMIT;
            let mut enter: Option<(usize, f64, f64)> = None; // (var, rc, direction)
            for j in 0..self.n_total {
                let dirn = match self.state[j] {
                    VarState::Basic(_) => continue,
                    VarState::AtLower => 1.0,
                    VarState::AtUpper => -1.0,
                    VarState::Free => 0.0,
                };
                if self.lower[j] == self.upper[j] {
                    continue; // fixed variable can never improve
                }
                let rc = cost[j] - rc_all[j];
                let (improves, dir) = if dirn == 0.0 {
                    if rc < -RC_TOL {
                        (true, 1.0)
                    } else if rc > RC_TOL {
                        (true, -1.0)
                    } else {
                        (false, 0.0)
                    }
                } else if dirn > 0.0 {
                    (rc < -RC_TOL, 1.0)
                } else {
                    (rc > RC_TOL, -1.0)
                };
                if !improves {
                    continue;
                }
                if bland {
                    enter = Some((j, rc, dir));
                    break;
                }
                if enter.map(|(_, best, _)| rc.abs() > best.abs()).unwrap_or(true) {
                    enter = Some((j, rc, dir));
                }
            }
            let Some((e, _rc, dir)) = enter else {
                return Ok(None); // optimal
            };

            // ratio test along +dir of variable e
            let d = self.binv_t.tr_mul(&self.cols.column(e));
            let own_range = self.upper[e] - self.lower[e]; // may be inf
            let mut t_limit = own_range;
            // (basis position, leaves at upper, |pivot|); among ties the
            // largest pivot magnitude wins, for numerical stability
            let mut leave: Option<(usize, bool, f64)> = None;
            for i in 0..self.m {
                let di = d[i] * dir;
                if di > PIVOT_TOL {
                    // basic variable decreases toward its lower bound
                    let lb = self.lower[self.basis[i]];
                    if lb.is_finite() {
                        let t = (xb[i] - lb) / di;
                        if t < t_limit - 1e-12
                            || (t < t_limit + 1e-12 && leave_pref(&leave, di))
                        {
                            t_limit = t.max(0.0);
                            leave = Some((i, false, di.abs()));
                        }
                    }
                } else if di < -PIVOT_TOL {
                    let ub = self.upper[self.basis[i]];
                    if ub.is_finite() {
                        let t = (ub - xb[i]) / -di;
                        if t < t_limit - 1e-12
                            || (t < t_limit + 1e-12 && leave_pref(&leave, di))
                        {
                            t_limit = t.max(0.0);
                            leave = Some((i, true, di.abs()));
                        }
                    }
                }
            }

            if !t_limit.is_finite() {
                return Ok(Some(LpStatus::Unbounded));
            }
            degen_run = if t_limit <= 1e-12 { degen_run + 1 } else { 0 };

            match leave {
                None => {
                    // bound flip: entering variable crosses its whole range
                    let old = self.nonbasic_value(e);
                    self.state[e] = match self.state[e] {
                        VarState::AtLower => VarState::AtUpper,
                        VarState::AtUpper => VarState::AtLower,
                        other => other,
                    };
                    let delta = self.nonbasic_value(e) - old;
                    if delta != 0.0 {
                        resid.axpy(-delta, &self.cols.column(e), 1.0);
                    }
                }
                Some((r, at_upper, _)) => {
                    // a tiny pivot on an accumulated inverse is untrustworthy:
                    // refresh the factorization and re-price instead of
                    // committing an update that corrupts the basis inverse
                    if d[r].abs() < 1e-7 && self.pivots_since_refactor > 0 {
                        self.refactor()?;
                        resid = self.residual();
                        continue;
                    }
                    let out = self.basis[r];
                    // entering variable stops resting at its bound...
                    let v_in = self.nonbasic_value(e);
                    if v_in != 0.0 {
                        resid.axpy(v_in, &self.cols.column(e), 1.0);
                    }
                    self.state[out] = if at_upper {
                        VarState::AtUpper
                    } else {
                        VarState::AtLower
                    };
                    // ...and the leaving variable starts resting at one
                    let v_out = self.nonbasic_value(out);
                    if v_out != 0.0 {
                        resid.axpy(-v_out, &self.cols.column(out), 1.0);
                    }
                    self.basis[r] = e;
                    self.state[e] = VarState::Basic(r);
                    // product-form update: pivot row r of B^-1 is column r here
                    let dr = d[r];
                    if dr.abs() < PIVOT_TOL {
                        self.refactor()?;
                    } else {
                        let pivot_col = self.binv_t.column(r) / dr;
                        for i in 0..self.m {
                            if i == r {
                                continue;
                            }
                            let f = d[i];
                            if f != 0.0 {
                                self.binv_t.column_mut(i).axpy(-f, &pivot_col, 1.0);
                            }
                        }
                        self.binv_t.set_column(r, &pivot_col);
                        self.pivots_since_refactor += 1;
                        if self.pivots_since_refactor >= REFACTOR_EVERY {
                            self.refactor()?;
                        }
                    }
                }
            }
        }
        Err(Error::Numerical {
            context: "simplex".into(),
            detail: "iteration limit reached".into(),
        })
    }
}

fn leave_pref(current: &Option<(usize, bool, f64)>, candidate_pivot: f64) -> bool {
    // among ratio-test ties, prefer the larger pivot magnitude
    current.map_or(true, |(_, _, mag)| candidate_pivot.abs() > mag)
}

/// Solves a linear program with the two-phase bounded revised simplex.
pub fn solve_lp(instance: &LpInstance) -> Result<LpSolution> {
    instance.validate()?;
    let n = instance.num_vars();
    let m = instance.a.nrows();
    let n_total = n + 2 * m; // structural + slack + artificial

    let mut cols = DMatrix::zeros(m, n_total);
    cols.view_mut((0, 0), (m, n)).copy_from(&instance.a);
    let mut lower = Vec::with_capacity(n_total);
    let mut upper = Vec::with_capacity(n_total);
    for i in 0..n {
        lower.push(instance.lower[i]);
        upper.push(instance.upper[i]);
    }
    for (i, sense) in instance.senses.iter().enumerate() {
        cols[(i, n + i)] = 1.0;
        match sense {
            Sense::Le => {
                lower.push(0.0);
                upper.push(f64::INFINITY);
            }
            Sense::Eq => {
                lower.push(0.0);
                upper.push(0.0);
            }
            Sense::Ge => {
                lower.push(f64::NEG_INFINITY);
                upper.push(0.0);
            }
        }
    }

    // initial nonbasic states: finite bound nearest zero, or free
    let mut state = Vec::with_capacity(n_total);
    for j in 0..n + m {
        state.push(initial_state(lower[j], upper[j]));
    }

    // artificial columns absorb the initial residual
    let mut core = Core {
        cols,
        b: instance.b.clone(),
        lower,
        upper,
        n_total,
        m,
        state,
        basis: Vec::new(),
        binv_t: DMatrix::identity(m, m),
        pivots_since_refactor: 0,
    };
    let resid = {
        // residual with only the n + m real variables placed
        let mut r = core.b.clone();
        for j in 0..n + m {
            let v = match core.state[j] {
                VarState::AtLower => core.lower[j],
                VarState::AtUpper => core.upper[j],
                _ => 0.0,
            };
            if v != 0.0 {
                r -= core.cols.column(j) * v;
            }
        }
        r
    };
    for i in 0..m {
        let sign = if resid[i] >= 0.0 { 1.0 } else { -1.0 };
        core.cols[(i, n + m + i)] = sign;
        core.lower.push(0.0);
        core.upper.push(f64::INFINITY);
        core.state.push(VarState::Basic(i));
        core.basis.push(n + m + i);
        core.binv_t[(i, i)] = sign;
    }

    // phase one: minimize the artificial sum
    let mut cost1 = vec![0.0; n_total];
    for j in n + m..n_total {
        cost1[j] = 1.0;
    }
    if let Some(status) = core.optimize(&cost1)? {
        // phase one cannot be unbounded (costs are nonnegative)
        return Err(Error::Numerical {
            context: "simplex".into(),
            detail: format!("phase one ended {status:?}"),
        });
    }
    let xb = core.basic_values(&core.residual());
    let mut phase1_obj = 0.0;
    for (i, &j) in core.basis.iter().enumerate() {
        if j >= n + m {
            phase1_obj += xb[i].max(0.0);
        }
    }
    if phase1_obj > 1e-7 {
        return Ok(LpSolution {
            x: DVector::zeros(n),
            objective: f64::INFINITY,
            status: LpStatus::Infeasible,
        });
    }

    // pin artificials to zero and run phase two on the real costs
    for j in n + m..n_total {
        core.upper[j] = 0.0;
        if !matches!(core.state[j], VarState::Basic(_)) {
            core.state[j] = VarState::AtLower;
        }
    }
    let mut cost2 = vec![0.0; n_total];
    for j in 0..n {
        cost2[j] = instance.c[j];
    }
    if let Some(status) = core.optimize(&cost2)? {
        return Ok(LpSolution {
            x: DVector::zeros(n),
            objective: f64::NEG_INFINITY,
            status,
        });
    }

    let xb = core.basic_values(&core.residual());
    let mut x = DVector::zeros(n);
    for j in 0..n {
        x[j] = match core.state[j] {
            VarState::Basic(i) => xb[i],
            VarState::AtLower => core.lower[j],
            VarState::AtUpper => core.upper[j],
            VarState::Free => 0.0,
        };
    }
    // clamp basic values onto the box against roundoff
    for j in 0..n {
        x[j] = x[j].clamp(instance.lower[j] - FEAS_TOL, instance.upper[j] + FEAS_TOL);
    }
    Ok(LpSolution {
        objective: instance.c.dot(&x),
        x,
        status: LpStatus::Optimal,
    })
}

fn initial_state(lower: f64, upper: f64) -> VarState {
    if lower.is_finite() {
        if upper.is_finite() && upper.abs() < lower.abs() {
            VarState::AtUpper
        } else {
            VarState::AtLower
        }
    } else if upper.is_finite() {
        VarState::AtUpper
    } else {
        VarState::Free
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec(v: &[f64]) -> DVector<f64> {
        DVector::from_column_slice(v)
    }

    fn lp(
        c: &[f64],
        rows: &[(&[f64], Sense, f64)],
        lower: &[f64],
        upper: &[f64],
    ) -> LpInstance {
        let n = c.len();
        let m = rows.len();
        let mut a = DMatrix::zeros(m, n);
        let mut b = DVector::zeros(m);
        let mut senses = Vec::new();
        for (i, (row, sense, rhs)) in rows.iter().enumerate() {
            for j in 0..n {
                a[(i, j)] = row[j];
            }
            b[i] = *rhs;
            senses.push(*sense);
        }
        LpInstance {
            c: vec(c),
            a,
            senses,
            b,
            lower: vec(lower),
            upper: vec(upper),
        }
    }

    #[test]
    fn min_x_between_one_and_two() {
        let p = lp(
            &[1.0],
            &[(&[1.0], Sense::Ge, 1.0), (&[1.0], Sense::Le, 2.0)],
            &[0.0],
            &[10.0],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.x[0] - 1.0).abs() < 1e-9);
        assert!((s.objective - 1.0).abs() < 1e-9);
    }

    #[test]
    fn infeasible_pair() {
        let p = lp(
            &[1.0],
            &[(&[1.0], Sense::Le, 0.0), (&[1.0], Sense::Ge, 1.0)],
            &[0.0],
            &[10.0],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Infeasible);
    }

    #[test]
    fn equality_and_maximization_via_negation() {
        // max x + y s.t. x + y = 1.5, boxes [0,1] -> min -(x+y) = -1.5
        let p = lp(
            &[-1.0, -1.0],
            &[(&[1.0, 1.0], Sense::Eq, 1.5)],
            &[0.0, 0.0],
            &[1.0, 1.0],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective + 1.5).abs() < 1e-9);
    }

    #[test]
    fn unbounded_detected() {
        let p = lp(
            &[-1.0],
            &[(&[-1.0], Sense::Le, 0.0)],
            &[0.0],
            &[f64::INFINITY],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Unbounded);
    }

    #[test]
    fn bound_flip_path() {
        // objective pushes both variables to their upper bounds through a
        // joint constraint that is loose: flips, no pivots needed
        let p = lp(
            &[-1.0, -2.0],
            &[(&[1.0, 1.0], Sense::Le, 10.0)],
            &[0.0, 0.0],
            &[2.0, 3.0],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.x[0] - 2.0).abs() < 1e-9);
        assert!((s.x[1] - 3.0).abs() < 1e-9);
    }

    #[test]
    fn klee_minty_like_degenerate() {
        // several redundant constraints through the optimum exercise the
        // anti-cycling path
        let p = lp(
            &[-1.0, -1.0],
            &[
                (&[1.0, 0.0], Sense::Le, 1.0),
                (&[0.0, 1.0], Sense::Le, 1.0),
                (&[1.0, 1.0], Sense::Le, 2.0),
                (&[1.0, 1.0], Sense::Le, 2.0),
                (&[0.5, 0.5], Sense::Le, 1.0),
            ],
            &[0.0, 0.0],
            &[5.0, 5.0],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective + 2.0).abs() < 1e-9);
    }

    #[test]
    fn negative_rhs_rows() {
        // -x - y <= -3 with boxes [0,2]: x + y >= 3
        let p = lp(
            &[1.0, 2.0],
            &[(&[-1.0, -1.0], Sense::Le, -3.0)],
            &[0.0, 0.0],
            &[2.0, 2.0],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective - 4.0).abs() < 1e-9, "{}", s.objective);
        assert!((s.x[0] - 2.0).abs() < 1e-9);
        assert!((s.x[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn fixed_variables_respected() {
        let p = lp(
            &[1.0, 1.0],
            &[(&[1.0, 1.0], Sense::Ge, 1.0)],
            &[0.5, 0.0],
            &[0.5, 4.0],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.x[0] - 0.5).abs() < 1e-9);
        assert!((s.x[1] - 0.5).abs() < 1e-9);
    }
}
