//! Best-first branch-and-bound for mixed binary programs over the LP solver.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use nalgebra::DVector;

use crate::error::Result;

use super::simplex::{solve_lp, LpInstance, LpStatus};

/// A linear program plus a set of binary variables.
#[derive(Debug, Clone)]
pub struct MilpInstance {
    pub lp: LpInstance,
    /// Indices of binary variables; their bounds must lie within [0, 1].
    pub integer_vars: Vec<usize>,
}

impl MilpInstance {
    pub fn validate(&self) -> Result<()> {
        self.lp.validate()?;
        for &j in &self.integer_vars {
            if j >= self.lp.num_vars()
                || self.lp.lower[j] < -1e-12
                || self.lp.upper[j] > 1.0 + 1e-12
            {
                return Err(crate::error::Error::Config(format!(
                    "integer variable {j} is not binary-bounded"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum MilpStatus {
    Optimal,
    Infeasible,
    NodeLimit,
}

#[derive(Debug, Clone)]
pub struct MilpSolution {
    pub values: DVector<f64>,
    pub objective: f64,
    pub status: MilpStatus,
    /// Relative gap between incumbent and best open bound at exit.
    pub gap: f64,
    pub nodes_explored: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct MilpOptions {
    pub node_limit: usize,
    pub rel_gap: f64,
    pub int_tol: f64,
    /// Stop early once an incumbent exists and this many consecutive nodes
    /// fail to improve it. `None` keeps the search exact.
    pub stall_limit: Option<usize>,
}

impl Default for MilpOptions {
    fn default() -> Self {
        Self {
            node_limit: 200_000,
            rel_gap: 1e-6,
            int_tol: 1e-6,
            stall_limit: None,
        }
    }
}

struct Node {
    bound: f64,
    id: usize,
    lower: DVector<f64>,
    upper: DVector<f64>,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.bound == other.bound && self.id == other.id
    }
}
impl Eq for Node {}
impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Node {
    // BinaryHeap is a max-heap; invert so the lowest bound pops first,
    // oldest node on ties
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .bound
            .partial_cmp(&self.bound)
            .unwrap_or(Ordering::Equal)
            .then(other.id.cmp(&self.id))
    }
}

/// Solves the mixed binary program by best-first branch-and-bound on LP
/// relaxations. Branching picks the most fractional binary (ties to the
/// lowest index); a rounding heuristic probes for early incumbents.
pub fn solve_milp(instance: &MilpInstance, options: &MilpOptions) -> Result<MilpSolution> {
    instance.validate()?;
    let n = instance.lp.num_vars();

    let mut heap = BinaryHeap::new();
    let mut next_id = 0usize;
    heap.push(Node {
        bound: f64::NEG_INFINITY,
        id: next_id,
        lower: instance.lp.lower.clone(),
        upper: instance.lp.upper.clone(),
    });
    next_id += 1;

    let mut incumbent: Option<(DVector<f64>, f64)> = None;
    let mut nodes = 0usize;
    let mut nodes_at_improve = 0usize;
    let mut exhausted = true;

    while let Some(node) = heap.pop() {
        let inc_obj = incumbent.as_ref().map(|(_, o)| *o).unwrap_or(f64::INFINITY);
        if node.bound > inc_obj - gap_slack(inc_obj, options.rel_gap) {
            continue; // pruned by bound; counts as closed
        }
        if nodes >= options.node_limit
            || options
                .stall_limit
                .map(|s| incumbent.is_some() && nodes - nodes_at_improve >= s)
                .unwrap_or(false)
        {
            exhausted = false;
            heap.push(node); // keep it counted in the final bound
            break;
        }
        nodes += 1;

        let mut lp = instance.lp.clone();
        lp.lower = node.lower.clone();
        lp.upper = node.upper.clone();
        let relax = solve_lp(&lp)?;
        match relax.status {
            LpStatus::Infeasible => continue,
            LpStatus::Unbounded => {
                return Err(crate::error::Error::Numerical {
                    context: "branch-and-bound".into(),
                    detail: "unbounded relaxation".into(),
                })
            }
            LpStatus::Optimal => {}
        }
        if relax.objective > inc_obj - gap_slack(inc_obj, options.rel_gap) {
            continue;
        }

        // most fractional binary, ties to the lowest index
        let mut branch: Option<(usize, f64)> = None;
        for &j in &instance.integer_vars {
            let frac = relax.x[j] - relax.x[j].round();
            if frac.abs() > options.int_tol {
                let dist = (relax.x[j].fract() - 0.5).abs();
                if branch.map(|(_, best)| dist < best).unwrap_or(true) {
                    branch = Some((j, dist));
                }
            }
        }

        match branch {
            None => {
                // integral relaxation: candidate incumbent
                if relax.objective < inc_obj {
                    incumbent = Some((snap_binaries(&relax.x, &instance.integer_vars), relax.objective));
                    nodes_at_improve = nodes;
                }
            }
            Some((j, _)) => {
                // rounding heuristic: fix binaries at rounded values and
                // re-solve the continuous remainder
                if incumbent.is_none() {
                    let mut fixed = lp.clone();
                    for &jj in &instance.integer_vars {
                        let v = relax.x[jj].round().clamp(0.0, 1.0);
                        if v < fixed.lower[jj] || v > fixed.upper[jj] {
                            continue;
                        }
                        fixed.lower[jj] = v;
                        fixed.upper[jj] = v;
                    }
                    if let Ok(h) = solve_lp(&fixed) {
                        if h.status == LpStatus::Optimal && h.objective < inc_obj {
                            incumbent =
                                Some((snap_binaries(&h.x, &instance.integer_vars), h.objective));
                            nodes_at_improve = nodes;
                        }
                    }
                }

                let mut down = Node {
                    bound: relax.objective,
                    id: next_id,
                    lower: node.lower.clone(),
                    upper: node.upper.clone(),
                };
                next_id += 1;
                down.upper[j] = 0.0;
                heap.push(down);
                let mut up = Node {
                    bound: relax.objective,
                    id: next_id,
                    lower: node.lower,
                    upper: node.upper,
                };
                next_id += 1;
                up.lower[j] = 1.0;
                heap.push(up);
            }
        }
    }

    let open_bound = heap
        .peek()
        .map(|nd| nd.bound)
        .unwrap_or(f64::INFINITY);
    match incumbent {
        Some((values, objective)) => {
            let bound = if exhausted {
                objective
            } else {
                open_bound.min(objective)
            };
            let gap = if exhausted {
                0.0
            } else {
                (objective - bound).abs() / objective.abs().max(1.0)
            };
            Ok(MilpSolution {
                values,
                objective,
                status: if exhausted || gap <= options.rel_gap {
                    MilpStatus::Optimal
                } else {
                    MilpStatus::NodeLimit
                },
                gap,
                nodes_explored: nodes,
            })
        }
        None => Ok(MilpSolution {
            values: DVector::zeros(n),
            objective: f64::INFINITY,
            status: if exhausted {
                MilpStatus::Infeasible
            } else {
                MilpStatus::NodeLimit
            },
            gap: f64::INFINITY,
            nodes_explored: nodes,
        }),
    }
}

fn gap_slack(incumbent: f64, rel_gap: f64) -> f64 {
    rel_gap * incumbent.abs().max(1.0)
}

fn snap_binaries(x: &DVector<f64>, integer_vars: &[usize]) -> DVector<f64> {
    let mut out = x.clone();
    for &j in integer_vars {
        out[j] = out[j].round().clamp(0.0, 1.0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mipsolve::simplex::Sense;
    use nalgebra::{DMatrix, DVector};

    fn knapsack() -> MilpInstance {
        // max 3a + 4b + 5c + 4d s.t. 2a + 3b + 4c + 5d <= 9, binaries
        let c = DVector::from_column_slice(&[-3.0, -4.0, -5.0, -4.0]);
        let a = DMatrix::from_row_slice(1, 4, &[2.0, 3.0, 4.0, 5.0]);
        MilpInstance {
            lp: LpInstance {
                c,
                a,
                senses: vec![Sense::Le],
                b: DVector::from_column_slice(&[9.0]),
                lower: DVector::zeros(4),
                upper: DVector::from_element(4, 1.0),
            },
            integer_vars: vec![0, 1, 2, 3],
        }
    }

    fn enumerate_knapsack() -> (f64, Vec<f64>) {
        let values = [3.0, 4.0, 5.0, 4.0];
        let weights = [2.0, 3.0, 4.0, 5.0];
        let mut best = (0.0, vec![0.0; 4]);
        for mask in 0..16u32 {
            let mut v = 0.0;
            let mut w = 0.0;
            let mut x = vec![0.0; 4];
            for i in 0..4 {
                if mask & (1 << i) != 0 {
                    v += values[i];
                    w += weights[i];
                    x[i] = 1.0;
                }
            }
            if w <= 9.0 && v > best.0 {
                best = (v, x);
            }
        }
        best
    }

    #[test]
    fn knapsack_matches_enumeration() {
        let inst = knapsack();
        let sol = solve_milp(&inst, &MilpOptions::default()).unwrap();
        assert_eq!(sol.status, MilpStatus::Optimal);
        let (best_value, best_x) = enumerate_knapsack();
        assert!(
            (sol.objective + best_value).abs() < 1e-9,
            "milp {} enum {}",
            sol.objective,
            best_value
        );
        for i in 0..4 {
            assert!((sol.values[i] - best_x[i]).abs() < 1e-6);
        }
    }

    #[test]
    fn integral_relaxation_single_node() {
        // relaxation optimum already binary: x = 1 forced by >= 1 row
        let inst = MilpInstance {
            lp: LpInstance {
                c: DVector::from_column_slice(&[1.0]),
                a: DMatrix::from_row_slice(1, 1, &[1.0]),
                senses: vec![Sense::Ge],
                b: DVector::from_column_slice(&[1.0]),
                lower: DVector::zeros(1),
                upper: DVector::from_element(1, 1.0),
            },
            integer_vars: vec![0],
        };
        let sol = solve_milp(&inst, &MilpOptions::default()).unwrap();
        assert_eq!(sol.status, MilpStatus::Optimal);
        assert_eq!(sol.nodes_explored, 1);
        assert!((sol.objective - 1.0).abs() < 1e-9);
    }

    #[test]
    fn infeasible_milp() {
        // x + y = 1.5 with both binary is LP-feasible but IP-infeasible
        let inst = MilpInstance {
            lp: LpInstance {
                c: DVector::from_column_slice(&[1.0, 1.0]),
                a: DMatrix::from_row_slice(1, 2, &[1.0, 1.0]),
                senses: vec![Sense::Eq],
                b: DVector::from_column_slice(&[1.5]),
                lower: DVector::zeros(2),
                upper: DVector::from_element(2, 1.0),
            },
            integer_vars: vec![0, 1],
        };
        let sol = solve_milp(&inst, &MilpOptions::default()).unwrap();
        assert_eq!(sol.status, MilpStatus::Infeasible);
    }

    #[test]
    fn deterministic_node_count() {
        let inst = knapsack();
        let a = solve_milp(&inst, &MilpOptions::default()).unwrap();
        let b = solve_milp(&inst, &MilpOptions::default()).unwrap();
        assert_eq!(a.nodes_explored, b.nodes_explored);
        assert_eq!(a.values, b.values);
    }

    #[test]
    fn mixed_continuous_and_binary() {
        // min -y - 0.5 t, y binary, t in [0, 2], t <= 3y: optimum y=1, t=2
        let inst = MilpInstance {
            lp: LpInstance {
                c: DVector::from_column_slice(&[-1.0, -0.5]),
                a: DMatrix::from_row_slice(1, 2, &[-3.0, 1.0]),
                senses: vec![Sense::Le],
                b: DVector::from_column_slice(&[0.0]),
                lower: DVector::zeros(2),
                upper: DVector::from_column_slice(&[1.0, 2.0]),
            },
            integer_vars: vec![0],
        };
        let sol = solve_milp(&inst, &MilpOptions::default()).unwrap();
        assert_eq!(sol.status, MilpStatus::Optimal);
        assert!((sol.objective + 2.0).abs() < 1e-9);
        assert!((sol.values[0] - 1.0).abs() < 1e-6);
        assert!((sol.values[1] - 2.0).abs() < 1e-6);
    }
}
