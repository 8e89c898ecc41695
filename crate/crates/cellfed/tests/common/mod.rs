//! Shared helpers for integration tests: an independent dense tableau
//! simplex used as an LP oracle, plus exhaustive enumeration helpers.

#![allow(dead_code)]

use cellfed::mipsolve::{solve_lp, LpInstance, LpStatus, MilpInstance, Sense};
use nalgebra::{DMatrix, DVector};

/// Outcome of the dense tableau oracle.
#[derive(Debug, PartialEq)]
pub enum OracleLp {
    Optimal(f64),
    Infeasible,
    Unbounded,
}

/// Independent two-phase dense tableau simplex with Bland's rule.
///
/// Standard form only: `min c'x  s.t.  A x {<=,=,>=} b,  x >= 0`.
/// Finite upper bounds must be passed as explicit `<=` rows by the caller.
pub fn tableau_simplex(
    c: &[f64],
    rows: &[Vec<f64>],
    senses: &[Sense],
    b: &[f64],
) -> OracleLp {
    let n = c.len();
    let m = rows.len();
    // count slack columns
    let n_slack = senses.iter().filter(|s| !matches!(s, Sense::Eq)).count();
    let total = n + n_slack + m; // structural + slacks + one artificial per row
    let mut t = DMatrix::<f64>::zeros(m, total + 1);
    let mut basis = vec![0usize; m];
    let mut slack_col = n;
    for i in 0..m {
        for j in 0..n {
            t[(i, j)] = rows[i][j];
        }
        t[(i, total)] = b[i];
        match senses[i] {
            Sense::Le => {
                t[(i, slack_col)] = 1.0;
                slack_col += 1;
            }
            Sense::Ge => {
                t[(i, slack_col)] = -1.0;
                slack_col += 1;
            }
            Sense::Eq => {}
        }
        if t[(i, total)] < 0.0 {
            for j in 0..=total {
                t[(i, j)] = -t[(i, j)];
            }
        }
        let art = n + n_slack + i;
        t[(i, art)] = 1.0;
        basis[i] = art;
    }
    let art_start = n + n_slack;

    let run_phase = |t: &mut DMatrix<f64>,
                     basis: &mut Vec<usize>,
                     cost: &[f64],
                     block_artificials: bool|
     -> Option<f64> {
        // reduced-cost row: z_j - c_j for the current basis
        loop {
            // reduced costs via basis cost vector
            let mut entering = None;
            for j in 0..total {
                if block_artificials && j >= art_start {
                    continue;
                }
                if basis.contains(&j) {
                    continue;
                }
                let mut red = cost[j];
                for i in 0..t.nrows() {
                    red -= cost[basis[i]] * t[(i, j)];
                }
                if red < -1e-9 {
                    entering = Some(j); // Bland: first eligible index
                    break;
                }
            }
            let Some(e) = entering else {
                let mut obj = 0.0;
                for i in 0..t.nrows() {
                    obj += cost[basis[i]] * t[(i, total)];
                }
                return Some(obj);
            };
            // ratio test, Bland tie-break on leaving basic variable index
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..t.nrows() {
                if t[(i, e)] > 1e-9 {
                    let ratio = t[(i, total)] / t[(i, e)];
                    match leave {
                        None => leave = Some((i, ratio)),
                        Some((li, lr)) => {
                            if ratio < lr - 1e-12
                                || ((ratio - lr).abs() <= 1e-12 && basis[i] < basis[li])
                            {
                                leave = Some((i, ratio));
                            }
                        }
                    }
                }
            }
            let Some((r, _)) = leave else {
                return None; // unbounded in this phase
            };
            // pivot
            let piv = t[(r, e)];
            for j in 0..=total {
                t[(r, j)] /= piv;
            }
            for i in 0..t.nrows() {
                if i != r {
                    let f = t[(i, e)];
                    if f != 0.0 {
                        for j in 0..=total {
                            t[(i, j)] -= f * t[(r, j)];
                        }
                    }
                }
            }
            basis[r] = e;
        }
    };

    // phase 1: minimize sum of artificials
    let mut cost1 = vec![0.0; total];
    for j in art_start..total {
        cost1[j] = 1.0;
    }
    let p1 = run_phase(&mut t, &mut basis, &cost1, false)
        .expect("phase 1 is always bounded below by 0");
    if p1 > 1e-7 {
        return OracleLp::Infeasible;
    }
    // phase 2 with original costs; artificials may stay basic at zero but
    // never re-enter
    let mut cost2 = vec![0.0; total];
    cost2[..n].copy_from_slice(c);
    match run_phase(&mut t, &mut basis, &cost2, true) {
        Some(obj) => OracleLp::Optimal(obj),
        None => OracleLp::Unbounded,
    }
}

/// Runs the tableau oracle on an [`LpInstance`] whose lower bounds are all
/// zero by appending explicit upper-bound rows.
pub fn oracle_solve_instance(lp: &LpInstance) -> OracleLp {
    let n = lp.num_vars();
    assert!(
        (0..n).all(|j| lp.lower[j] == 0.0),
        "oracle expects zero lower bounds"
    );
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut senses = Vec::new();
    let mut b = Vec::new();
    for i in 0..lp.a.nrows() {
        rows.push((0..n).map(|j| lp.a[(i, j)]).collect());
        senses.push(lp.senses[i]);
        b.push(lp.b[i]);
    }
    for j in 0..n {
        if lp.upper[j].is_finite() {
            let mut row = vec![0.0; n];
            row[j] = 1.0;
            rows.push(row);
            senses.push(Sense::Le);
            b.push(lp.upper[j]);
        }
    }
    let c: Vec<f64> = lp.c.iter().copied().collect();
    tableau_simplex(&c, &rows, &senses, &b)
}

/// Exhaustive MILP oracle: fixes every 0/1 pattern of the integer variables
/// and solves the continuous remainder, returning the best objective.
pub fn enumerate_milp(instance: &MilpInstance) -> Option<f64> {
    let nb = instance.integer_vars.len();
    assert!(nb <= 16, "enumeration limited to 16 binaries");
    let mut best: Option<f64> = None;
    for mask in 0u32..(1u32 << nb) {
        let mut lp = instance.lp.clone();
        for (bit, &j) in instance.integer_vars.iter().enumerate() {
            let v = if mask >> bit & 1 == 1 { 1.0 } else { 0.0 };
            lp.lower[j] = v;
            lp.upper[j] = v;
        }
        if let Ok(sol) = solve_lp(&lp) {
            if sol.status == LpStatus::Optimal {
                best = Some(match best {
                    Some(b) if b <= sol.objective => b,
                    _ => sol.objective,
                });
            }
        }
    }
    best
}

/// A random bounded-feasible LP: zero lower bounds, finite upper bounds, and
/// a right-hand side built around a known interior point.
pub fn random_bounded_lp(
    rng: &mut impl rand::Rng,
    n: usize,
    m: usize,
) -> LpInstance {
    let c = DVector::from_fn(n, |_, _| rng.gen_range(-1.0..1.0));
    let upper = DVector::from_fn(n, |_, _| rng.gen_range(0.5..3.0));
    let lower = DVector::zeros(n);
    let x0 = DVector::from_fn(n, |j, _| rng.gen_range(0.0..upper[j]));
    let a = DMatrix::from_fn(m, n, |_, _, | rng.gen_range(-1.0..1.0));
    let mut senses = Vec::with_capacity(m);
    let mut b = DVector::zeros(m);
    let ax0 = &a * &x0;
    for i in 0..m {
        let roll: f64 = rng.gen_range(0.0..1.0);
        if roll < 0.45 {
            senses.push(Sense::Le);
            b[i] = ax0[i] + rng.gen_range(0.0..1.0);
        } else if roll < 0.9 {
            senses.push(Sense::Ge);
            b[i] = ax0[i] - rng.gen_range(0.0..1.0);
        } else {
            senses.push(Sense::Eq);
            b[i] = ax0[i];
        }
    }
    LpInstance {
        c,
        a,
        senses,
        b,
        lower,
        upper,
    }
}
