//! Power-allocation subproblem: with federation and activation variables
//! fixed, choose transmit amplitudes `rho` minimizing PA energy (plus slack
//! penalties) under per-UE SINR cone constraints. Solved by the built-in
//! interior-point method in [`ipm`].

pub mod ipm;

use nalgebra::{DMatrix, DVector};

use crate::channel::ChannelRealization;
use crate::error::{Error, Result};
use crate::model::{Assignment, PowerAllocation, RateRequirement};
use ipm::{solve_cone, ConeLayout, ConeOptions, ConeStatus};

/// One second-order cone constraint `‖A v + b‖₂ ≤ c·v + d`.
#[derive(Debug, Clone)]
pub struct ConeConstraint {
    pub a: DMatrix<f64>,
    pub b: DVector<f64>,
    pub c: DVector<f64>,
    pub d: f64,
}

/// A second-order cone program in inequality form over variables `v`.
#[derive(Debug, Clone)]
pub struct SocpInstance {
    /// Linear objective coefficients.
    pub objective: DVector<f64>,
    pub cones: Vec<ConeConstraint>,
    /// Extra linear inequalities `lin_a · v ≤ lin_b`.
    pub lin_a: DMatrix<f64>,
    pub lin_b: DVector<f64>,
    /// Finite box bounds on every variable.
    pub lower: DVector<f64>,
    pub upper: DVector<f64>,
}

impl SocpInstance {
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if self.lower.len() != n || self.upper.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "bounds length {}/{} vs {n} variables",
                self.lower.len(),
                self.upper.len()
            )));
        }
        for i in 0..n {
            if !self.lower[i].is_finite() || !self.upper[i].is_finite() {
                return Err(Error::Config(format!("non-finite bound on variable {i}")));
            }
            if self.lower[i] > self.upper[i] {
                return Err(Error::Config(format!("empty bound box on variable {i}")));
            }
        }
        if self.lin_a.ncols() != n && self.lin_a.nrows() > 0 {
            return Err(Error::ShapeMismatch("linear block width".into()));
        }
        if self.lin_a.nrows() != self.lin_b.len() {
            return Err(Error::ShapeMismatch("linear block height".into()));
        }
        for cone in &self.cones {
            if cone.a.ncols() != n || cone.c.len() != n || cone.a.nrows() != cone.b.len() {
                return Err(Error::ShapeMismatch("cone constraint dimensions".into()));
            }
        }
        Ok(())
    }

    /// Plain-text dump for debugging regressions; inverse of [`SocpInstance::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let n = self.num_vars();
        out.push_str(&format!("socp {} {} {}\n", n, self.cones.len(), self.lin_a.nrows()));
        let row = |v: &DVector<f64>| {
            v.iter().map(|x| format!("{x:e}")).collect::<Vec<_>>().join(" ")
        };
        out.push_str(&format!("objective {}\n", row(&self.objective)));
        out.push_str(&format!("lower {}\n", row(&self.lower)));
        out.push_str(&format!("upper {}\n", row(&self.upper)));
        for cone in &self.cones {
            out.push_str(&format!("cone {} {:e}\n", cone.a.nrows(), cone.d));
            out.push_str(&format!("c {}\n", row(&cone.c)));
            for r in 0..cone.a.nrows() {
                let a_row: Vec<String> =
                    (0..n).map(|j| format!("{:e}", cone.a[(r, j)])).collect();
                out.push_str(&format!("a {} {:e}\n", a_row.join(" "), cone.b[r]));
            }
        }
        for r in 0..self.lin_a.nrows() {
            let a_row: Vec<String> = (0..n).map(|j| format!("{:e}", self.lin_a[(r, j)])).collect();
            out.push_str(&format!("lin {} {:e}\n", a_row.join(" "), self.lin_b[r]));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad_dump("empty dump"))?;
        let head: Vec<&str> = header.split_whitespace().collect();
        if head.len() != 4 || head[0] != "socp" {
            return Err(bad_dump("bad header"));
        }
        let n: usize = head[1].parse().map_err(|_| bad_dump("bad n"))?;
        let n_cones: usize = head[2].parse().map_err(|_| bad_dump("bad cone count"))?;
        let n_lin: usize = head[3].parse().map_err(|_| bad_dump("bad linear count"))?;

        let parse_vec = |line: &str, tag: &str, len: usize| -> Result<Vec<f64>> {
            let mut it = line.split_whitespace();
            if it.next() != Some(tag) {
                return Err(bad_dump(&format!("expected {tag} line")));
            }
            let vals: Vec<f64> = it.map(|t| t.parse().unwrap_or(f64::NAN)).collect();
            if vals.len() != len || vals.iter().any(|v| v.is_nan()) {
                return Err(bad_dump(&format!("bad {tag} line")));
            }
            Ok(vals)
        };
        let objective = DVector::from_vec(parse_vec(
            lines.next().ok_or_else(|| bad_dump("missing objective"))?,
            "objective",
            n,
        )?);
        let lower = DVector::from_vec(parse_vec(
            lines.next().ok_or_else(|| bad_dump("missing lower"))?,
            "lower",
            n,
        )?);
        let upper = DVector::from_vec(parse_vec(
            lines.next().ok_or_else(|| bad_dump("missing upper"))?,
            "upper",
            n,
        )?);

        let mut cones = Vec::with_capacity(n_cones);
        for _ in 0..n_cones {
            let head_line = lines.next().ok_or_else(|| bad_dump("missing cone header"))?;
            let parts: Vec<&str> = head_line.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "cone" {
                return Err(bad_dump("bad cone header"));
            }
            let rows: usize = parts[1].parse().map_err(|_| bad_dump("bad cone rows"))?;
            let d: f64 = parts[2].parse().map_err(|_| bad_dump("bad cone offset"))?;
            let c = DVector::from_vec(parse_vec(
                lines.next().ok_or_else(|| bad_dump("missing cone c"))?,
                "c",
                n,
            )?);
            let mut a = DMatrix::zeros(rows, n);
            let mut b = DVector::zeros(rows);
            for r in 0..rows {
                let vals = parse_vec(
                    lines.next().ok_or_else(|| bad_dump("missing cone row"))?,
                    "a",
                    n + 1,
                )?;
                for j in 0..n {
                    a[(r, j)] = vals[j];
                }
                b[r] = vals[n];
            }
            cones.push(ConeConstraint { a, b, c, d });
        }
        let mut lin_a = DMatrix::zeros(n_lin, n);
        let mut lin_b = DVector::zeros(n_lin);
        for r in 0..n_lin {
            let vals = parse_vec(
                lines.next().ok_or_else(|| bad_dump("missing linear row"))?,
                "lin",
                n + 1,
            )?;
            for j in 0..n {
                lin_a[(r, j)] = vals[j];
            }
            lin_b[r] = vals[n];
        }
        let out = Self {
            objective,
            cones,
            lin_a,
            lin_b,
            lower,
            upper,
        };
        out.validate()?;
        Ok(out)
    }
}

fn bad_dump(detail: &str) -> Error {
    Error::Config(format!("socp dump parse: {detail}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SocpStatus {
    Optimal,
    Infeasible,
    MaxIter,
}

#[derive(Debug, Clone)]
pub struct SocpSolution {
    pub values: DVector<f64>,
    pub objective: f64,
    pub status: SocpStatus,
    pub kkt_residual: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct SocpOptions {
    pub cone: ConeOptions,
}

impl Default for SocpOptions {
    fn default() -> Self {
        Self {
            cone: ConeOptions::default(),
        }
    }
}

/// Solves an [`SocpInstance`] by conversion to conic inequality form: box
/// rows and linear rows populate the nonnegative orthant, each cone
/// constraint one second-order block. Blocks are normalized by their largest
/// coefficient magnitude for conditioning.
pub fn solve_socp(instance: &SocpInstance, options: &SocpOptions) -> Result<SocpSolution> {
    instance.validate()?;
    let n = instance.num_vars();
    let n_lin = instance.lin_a.nrows();
    let nonneg = 2 * n + n_lin;
    let soc_dims: Vec<usize> = instance.cones.iter().map(|c| c.a.nrows() + 1).collect();
    let m = nonneg + soc_dims.iter().sum::<usize>();

    let mut g = DMatrix::zeros(m, n);
    let mut h = DVector::zeros(m);
    for i in 0..n {
        // -v_i <= -lower_i
        g[(2 * i, i)] = -1.0;
        h[2 * i] = -instance.lower[i];
        // v_i <= upper_i
        g[(2 * i + 1, i)] = 1.0;
        h[2 * i + 1] = instance.upper[i];
    }
    for r in 0..n_lin {
        let mut scale = instance.lin_b[r].abs();
        for j in 0..n {
            scale = scale.max(instance.lin_a[(r, j)].abs());
        }
        let scale = if scale > 0.0 { scale } else { 1.0 };
        for j in 0..n {
            g[(2 * n + r, j)] = instance.lin_a[(r, j)] / scale;
        }
        h[2 * n + r] = instance.lin_b[r] / scale;
    }
    let mut at = nonneg;
    for cone in &instance.cones {
        let rows = cone.a.nrows();
        let mut scale = cone.d.abs();
        for j in 0..n {
            scale = scale.max(cone.c[j].abs());
        }
        for r in 0..rows {
            scale = scale.max(cone.b[r].abs());
            for j in 0..n {
                scale = scale.max(cone.a[(r, j)].abs());
            }
        }
        let scale = if scale > 0.0 { scale } else { 1.0 };
        // s0 = c·v + d, s_i = (A v + b)_i
        for j in 0..n {
            g[(at, j)] = -cone.c[j] / scale;
        }
        h[at] = cone.d / scale;
        for r in 0..rows {
            for j in 0..n {
                g[(at + 1 + r, j)] = -cone.a[(r, j)] / scale;
            }
            h[at + 1 + r] = cone.b[r] / scale;
        }
        at += rows + 1;
    }

    let layout = ConeLayout {
        nonneg,
        socs: soc_dims,
    };
    let sol = solve_cone(&instance.objective, &g, &h, &layout, &options.cone)?;
    Ok(SocpSolution {
        objective: sol.objective,
        values: sol.x,
        status: match sol.status {
            ConeStatus::Optimal => SocpStatus::Optimal,
            ConeStatus::MaxIter => SocpStatus::MaxIter,
            ConeStatus::NumericalFailure => {
                return Err(Error::Numerical {
                    context: "solve_socp".into(),
                    detail: "non-finite iterates".into(),
                })
            }
        },
        kkt_residual: sol.kkt_residual,
    })
}

/// Scalar parameters of the power subproblem.
#[derive(Debug, Clone, Copy)]
pub struct PowerParams {
    pub m_antennas: u32,
    pub tau_p: u32,
    pub noise_w: f64,
    pub pt_max_w: f64,
    /// PA objective coefficient in J per sqrt-W (see `energy::pa_objective_coeff`).
    pub pa_coeff_j: f64,
}

/// Variant of the power subproblem to build.
#[derive(Debug, Clone, Copy)]
pub enum PowerMode {
    /// Slack-penalized objective: PA energy + lambda * sum of rate slacks.
    Penalized { lambda: f64 },
    /// Pure feasibility probe: minimize the total rate slack only.
    PhaseOne,
    /// No slacks; the SINR cones must hold exactly.
    Hard,
}

/// Joule-scale factor applied to the objective (micro-Joules internally).
const OBJ_SCALE: f64 = 1e6;

/// A built power subproblem together with its variable maps.
#[derive(Debug, Clone)]
pub struct PowerSocp {
    pub instance: SocpInstance,
    /// Variable index -> (csp, federation) for the amplitude variables.
    pub rho_vars: Vec<(usize, usize)>,
    /// Variable index offset of the slacks and their (ue, federation) keys.
    pub slack_vars: Vec<(usize, usize)>,
    /// Per-slack multipliers turning solved slack variables into natural
    /// units. Each slack is expressed relative to the magnitude of its own
    /// cone constraint, which keeps the instance well conditioned.
    pub slack_units: Vec<f64>,
    /// Hard mode only: a UE has a positive threshold but no active CSP in its
    /// federation, so no power vector can satisfy its cone.
    pub structurally_infeasible: bool,
}

impl PowerSocp {
    /// Reads amplitudes and the total relative slack (dimensionless, one unit
    /// per fully-missed rate constraint) out of a solution.
    pub fn extract(&self, sol: &SocpSolution, s_count: usize, f_count: usize) -> (PowerAllocation, f64) {
        let mut powers = PowerAllocation::zeros(s_count, f_count);
        for (i, &(s, f)) in self.rho_vars.iter().enumerate() {
            powers.rho[(s, f)] = sol.values[i].max(0.0);
        }
        let base = self.rho_vars.len();
        let slack: f64 = (0..self.slack_vars.len())
            .map(|j| sol.values[base + j].max(0.0))
            .sum();
        (powers, slack)
    }
}

/// Builds the fixed-assignment power SOCP. Variables are the amplitudes
/// `rho[(s, f)]` for active pairs (`y[(s, f)] = true`), then one rate slack
/// per constrained UE unless `Hard`. Each UE `k` with threshold `t > 0`
/// contributes one cone
///
///   ‖(rho ⊙ sqrt(beta_k), sigma)‖ ≤ (1/sqrt(t)) (sqrt(M/tau_p) rho·sqrt(gamma_k) + slack_k)
///
/// over the active CSPs of its federation. Amplitudes off the active support
/// are fixed to zero, which keeps the PA term linear.
pub fn build_power_socp(
    assignment: &Assignment,
    channel: &ChannelRealization,
    requirements: &[RateRequirement],
    params: &PowerParams,
    mode: PowerMode,
) -> PowerSocp {
    let s_count = assignment.y.nrows();
    let f_count = assignment.y.ncols();
    let k_count = assignment.x.nrows();
    assert_eq!(requirements.len(), k_count);
    assert_eq!(channel.beta.nrows(), k_count);
    assert_eq!(channel.beta.ncols(), s_count);

    let mut rho_vars = Vec::new();
    let mut rho_index = vec![vec![None; f_count]; s_count];
    for f in 0..f_count {
        for s in 0..s_count {
            if assignment.y[(s, f)] {
                rho_index[s][f] = Some(rho_vars.len());
                rho_vars.push((s, f));
            }
        }
    }

    let sigma = params.noise_w.sqrt();
    let m_over_tp = (params.m_antennas as f64 / params.tau_p as f64).sqrt();
    let with_slack = !matches!(mode, PowerMode::Hard);

    // constrained UEs: assigned to a federation with a positive threshold
    let mut cone_ues = Vec::new();
    let mut structurally_infeasible = false;
    for k in 0..k_count {
        if requirements[k].sinr_thr <= 0.0 {
            continue;
        }
        if let Some(f) = assignment.federation_of_ue(k) {
            let active: Vec<usize> = (0..s_count).filter(|&s| assignment.y[(s, f)]).collect();
            if active.is_empty() && !with_slack {
                structurally_infeasible = true;
            }
            cone_ues.push((k, f, active));
        }
    }

    let n_rho = rho_vars.len();
    let mut slack_vars = Vec::new();
    let mut slack_units = Vec::new();
    if with_slack {
        for &(k, f, ref active) in &cone_ues {
            slack_vars.push((k, f));
            // intrinsic magnitude of the cone's left-hand side at full power
            let beta_sum: f64 = active.iter().map(|&s| channel.beta[(k, s)]).sum();
            slack_units.push((params.pt_max_w * beta_sum + params.noise_w).sqrt());
        }
    }
    let n = n_rho + slack_vars.len();

    let mut objective = DVector::zeros(n);
    let lower = DVector::zeros(n);
    let mut upper = DVector::zeros(n);
    let rho_cap = params.pt_max_w.sqrt();
    for i in 0..n_rho {
        upper[i] = rho_cap;
    }
    match mode {
        PowerMode::Penalized { lambda } => {
            for i in 0..n_rho {
                objective[i] = params.pa_coeff_j * OBJ_SCALE;
            }
            // the penalty is charged per relative slack unit: a slack of 1
            // means a UE whose rate constraint is missed entirely, so lambda
            // must dwarf the whole static-energy budget, not the (tiny)
            // natural amplitude scale
            for j in 0..slack_units.len() {
                objective[n_rho + j] = lambda * OBJ_SCALE;
            }
        }
        PowerMode::PhaseOne => {
            // minimize the sum of relative constraint violations
            for j in 0..slack_vars.len() {
                objective[n_rho + j] = 1.0;
            }
        }
        PowerMode::Hard => {
            for i in 0..n_rho {
                objective[i] = params.pa_coeff_j * OBJ_SCALE;
            }
        }
    }

    let mut cones = Vec::with_capacity(cone_ues.len());
    for (ci, &(k, f, ref active)) in cone_ues.iter().enumerate() {
        let thr = requirements[k].sinr_thr;
        let inv_sqrt_thr = 1.0 / thr.sqrt();
        let rows = active.len() + 1;
        let mut a = DMatrix::zeros(rows, n);
        let mut b = DVector::zeros(rows);
        let mut c = DVector::zeros(n);
        for (r, &s) in active.iter().enumerate() {
            let idx = rho_index[s][f].expect("active pair has a variable");
            a[(r, idx)] = channel.beta[(k, s)].sqrt();
            c[idx] = inv_sqrt_thr * m_over_tp * channel.gamma[(k, s)].sqrt();
        }
        b[rows - 1] = sigma;
        if with_slack {
            c[n_rho + ci] = inv_sqrt_thr * slack_units[ci];
            // largest useful slack: the cone holds with rho = 0 at
            // sqrt(thr) in relative units; leave headroom beyond that
            upper[n_rho + ci] = thr.sqrt() * 1.1 + 1.0;
        }
        cones.push(ConeConstraint { a, b, c, d: 0.0 });
    }

    PowerSocp {
        instance: SocpInstance {
            objective,
            cones,
            lin_a: DMatrix::zeros(0, n),
            lin_b: DVector::zeros(0),
            lower,
            upper,
        },
        rho_vars,
        slack_vars,
        slack_units,
        structurally_infeasible,
    }
}

/// Outcome of a full power solve.
#[derive(Debug, Clone)]
pub struct PowerSolveResult {
    pub powers: PowerAllocation,
    /// Total relative rate slack (dimensionless; zero in hard mode).
    pub slack_sum: f64,
    /// Objective of the built instance in micro-Joules (PA + penalty terms).
    pub objective_uj: f64,
    pub status: SocpStatus,
}

/// Builds and solves the power subproblem for a fixed assignment.
pub fn solve_power(
    assignment: &Assignment,
    channel: &ChannelRealization,
    requirements: &[RateRequirement],
    params: &PowerParams,
    mode: PowerMode,
    options: &SocpOptions,
) -> Result<PowerSolveResult> {
    let socp = build_power_socp(assignment, channel, requirements, params, mode);
    let s_count = assignment.y.nrows();
    let f_count = assignment.y.ncols();
    if socp.structurally_infeasible {
        return Ok(PowerSolveResult {
            powers: PowerAllocation::zeros(s_count, f_count),
            slack_sum: f64::INFINITY,
            objective_uj: f64::INFINITY,
            status: SocpStatus::Infeasible,
        });
    }
    let sol = solve_socp(&socp.instance, options)?;
    let (powers, slack_sum) = socp.extract(&sol, s_count, f_count);
    Ok(PowerSolveResult {
        powers,
        slack_sum,
        objective_uj: sol.objective,
        status: sol.status,
    })
}

/// Slack threshold below which a phase-one solve counts as feasible
/// (scaled slack units; natural slack divided by the noise amplitude).
pub const FEAS_SLACK_TOL: f64 = 1e-6;

/// True iff the SINR constraints admit a power allocation within the caps
/// for this assignment. Decided by minimizing the total rate slack subject
/// to hard amplitude bounds: the assignment is feasible exactly when that
/// minimum is zero.
pub fn power_feasible(
    assignment: &Assignment,
    channel: &ChannelRealization,
    requirements: &[RateRequirement],
    params: &PowerParams,
) -> Result<bool> {
    let socp = build_power_socp(assignment, channel, requirements, params, PowerMode::PhaseOne);
    if socp.instance.cones.is_empty() {
        return Ok(true);
    }
    let sol = solve_socp(&socp.instance, &SocpOptions::default())?;
    // phase-one objective is the slack sum in scaled units
    Ok(sol.status == SocpStatus::Optimal && sol.objective < FEAS_SLACK_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::ChannelRealization;
    use nalgebra::DMatrix;

    fn single_pair_setup(beta: f64, gamma: f64) -> (Assignment, ChannelRealization) {
        let mut assignment = Assignment::empty(1, 1, 1, 1);
        assignment.x[(0, 0)] = true;
        assignment.y[(0, 0)] = true;
        assignment.z[0] = true;
        let channel = ChannelRealization {
            beta: DMatrix::from_element(1, 1, beta),
            gamma: DMatrix::from_element(1, 1, gamma),
            los: DMatrix::from_element(1, 1, true),
        };
        (assignment, channel)
    }

    fn params() -> PowerParams {
        PowerParams {
            m_antennas: 16,
            tau_p: 12,
            noise_w: 3.98e-13,
            pt_max_w: 3.0,
            pa_coeff_j: 4.8e-5,
        }
    }

    fn req(thr: f64) -> RateRequirement {
        RateRequirement {
            r_thr_se: 0.0,
            sinr_thr: thr,
        }
    }

    /// rho solving the tight single-pair cone when power suffices.
    fn closed_form_rho(thr: f64, beta: f64, gamma: f64, p: &PowerParams) -> f64 {
        let mtp = p.m_antennas as f64 / p.tau_p as f64;
        (thr * p.noise_w / (mtp * gamma - thr * beta)).sqrt()
    }

    #[test]
    fn construction_counts() {
        let (assignment, channel) = single_pair_setup(1e-8, 5e-9);
        let reqs = [req(1.0)];
        let p = params();
        let socp = build_power_socp(
            &assignment,
            &channel,
            &reqs,
            &p,
            PowerMode::Penalized { lambda: 1e4 },
        );
        assert_eq!(socp.instance.num_vars(), 2);
        assert_eq!(socp.instance.cones.len(), 1);
        assert_eq!(socp.rho_vars, vec![(0, 0)]);
        assert_eq!(socp.slack_vars, vec![(0, 0)]);

        let hard = build_power_socp(&assignment, &channel, &reqs, &p, PowerMode::Hard);
        assert_eq!(hard.instance.num_vars(), 1);
        assert!(hard.slack_vars.is_empty());
    }

    #[test]
    fn closed_form_single_pair() {
        let beta = 1e-8;
        let gamma = 9e-9;
        let p = params();
        let thr = 1.0905;
        // M/tau_p * gamma = 4/3 * 9e-9 = 1.2e-8 > thr * beta = 1.09e-8
        let expected = closed_form_rho(thr, beta, gamma, &p);
        assert!(expected <= p.pt_max_w.sqrt());

        let (assignment, channel) = single_pair_setup(beta, gamma);
        let reqs = [req(thr)];
        for mode in [PowerMode::Penalized { lambda: 1e6 }, PowerMode::Hard] {
            let result = solve_power(
                &assignment,
                &channel,
                &reqs,
                &p,
                mode,
                &SocpOptions::default(),
            )
            .unwrap();
            assert_eq!(result.status, SocpStatus::Optimal);
            let rho = result.powers.rho[(0, 0)];
            assert!(
                (rho - expected).abs() / expected < 1e-6,
                "rho {rho} expected {expected}"
            );
            assert!(result.slack_sum < 1e-9 * expected);
        }
    }

    #[test]
    fn slack_absorbs_unreachable_sinr() {
        // (M/tau_p) gamma <= thr * beta: no power meets the target
        let beta = 1e-8;
        let gamma = 5e-9;
        let p = params();
        let mtp = p.m_antennas as f64 / p.tau_p as f64;
        let thr = mtp * gamma / beta * 1.5;
        let (assignment, channel) = single_pair_setup(beta, gamma);
        let reqs = [req(thr)];
        let result = solve_power(
            &assignment,
            &channel,
            &reqs,
            &p,
            PowerMode::Penalized { lambda: 1e6 },
            &SocpOptions::default(),
        )
        .unwrap();
        assert_eq!(result.status, SocpStatus::Optimal);
        assert!(result.slack_sum > 1e-9, "slack {}", result.slack_sum);
    }

    #[test]
    fn zero_threshold_gives_zero_power() {
        let (assignment, channel) = single_pair_setup(1e-8, 5e-9);
        let reqs = [req(0.0)];
        let p = params();
        let result = solve_power(
            &assignment,
            &channel,
            &reqs,
            &p,
            PowerMode::Penalized { lambda: 1e4 },
            &SocpOptions::default(),
        )
        .unwrap();
        assert_eq!(result.status, SocpStatus::Optimal);
        assert!(result.powers.rho[(0, 0)].abs() < 1e-9);
        assert!(result.objective_uj.abs() < 1e-6);
    }

    fn two_fed_setup() -> (Assignment, ChannelRealization, Vec<RateRequirement>) {
        // UE 0 with CSP 0 in federation 0; UE 1 with CSP 1 in federation 1
        let mut assignment = Assignment::empty(2, 2, 2, 1);
        assignment.x[(0, 0)] = true;
        assignment.x[(1, 1)] = true;
        assignment.y[(0, 0)] = true;
        assignment.y[(1, 1)] = true;
        assignment.z[0] = true;
        let beta = DMatrix::from_row_slice(2, 2, &[1e-8, 2e-9, 3e-9, 1.5e-8]);
        let gamma = DMatrix::from_row_slice(2, 2, &[5e-9, 1e-9, 1e-9, 7e-9]);
        let channel = ChannelRealization {
            beta,
            gamma,
            los: DMatrix::from_element(2, 2, true),
        };
        let reqs = vec![req(1.0905), req(0.8)];
        (assignment, channel, reqs)
    }

    #[test]
    fn block_separability() {
        let (assignment, channel, reqs) = two_fed_setup();
        let p = params();
        let mode = PowerMode::Penalized { lambda: 1e5 };
        let joint = solve_power(&assignment, &channel, &reqs, &p, mode, &SocpOptions::default())
            .unwrap();
        assert_eq!(joint.status, SocpStatus::Optimal);

        let mut sum = 0.0;
        for f in 0..2 {
            let mut sub = assignment.clone();
            for k in 0..2 {
                for ff in 0..2 {
                    if ff != f {
                        sub.x[(k, ff)] = false;
                    }
                }
            }
            for s in 0..2 {
                for ff in 0..2 {
                    if ff != f {
                        sub.y[(s, ff)] = false;
                    }
                }
            }
            let reqs_f: Vec<RateRequirement> = (0..2)
                .map(|k| {
                    if sub.federation_of_ue(k).is_some() {
                        reqs[k].clone()
                    } else {
                        req(0.0)
                    }
                })
                .collect();
            let block =
                solve_power(&sub, &channel, &reqs_f, &p, mode, &SocpOptions::default()).unwrap();
            assert_eq!(block.status, SocpStatus::Optimal);
            sum += block.objective_uj;
        }
        assert!(
            (joint.objective_uj - sum).abs() / joint.objective_uj.abs().max(1e-12) < 1e-6,
            "joint {} vs blocks {}",
            joint.objective_uj,
            sum
        );
    }

    #[test]
    fn adding_a_ue_never_helps() {
        // same channel; second UE joins federation 0 -> objective cannot drop
        let (mut assignment, channel, mut reqs) = two_fed_setup();
        let p = params();
        let mode = PowerMode::Penalized { lambda: 1e5 };
        reqs[1] = req(0.0);
        assignment.x[(1, 1)] = false;
        let before =
            solve_power(&assignment, &channel, &reqs, &p, mode, &SocpOptions::default()).unwrap();

        assignment.x[(1, 0)] = true;
        reqs[1] = req(0.5);
        let after =
            solve_power(&assignment, &channel, &reqs, &p, mode, &SocpOptions::default()).unwrap();
        assert!(after.objective_uj >= before.objective_uj - 1e-9);
    }

    #[test]
    fn feasibility_trivial_cases() {
        let (assignment, channel) = single_pair_setup(1e-8, 5e-9);
        let p = params();
        // threshold zero -> feasible regardless of activation
        assert!(power_feasible(&assignment, &channel, &[req(0.0)], &p).unwrap());

        // no CSPs active, positive threshold -> infeasible
        let mut idle = assignment.clone();
        idle.y[(0, 0)] = false;
        assert!(!power_feasible(&idle, &channel, &[req(1.0)], &p).unwrap());
    }

    #[test]
    fn feasibility_matches_closed_form_cap() {
        let beta = 1e-8;
        let gamma = 5e-9;
        let p = params();
        let mtp = p.m_antennas as f64 / p.tau_p as f64;
        let (assignment, channel) = single_pair_setup(beta, gamma);

        // threshold where the closed-form rho* equals the cap sqrt(3):
        // thr * noise / (mtp*gamma - thr*beta) = 3  =>  thr = 3*mtp*gamma / (noise + 3*beta)
        let thr_star = 3.0 * mtp * gamma / (p.noise_w + 3.0 * beta);
        let slightly_below = thr_star * 0.99;
        let slightly_above = thr_star * 1.01;
        assert!(closed_form_rho(slightly_below, beta, gamma, &p) < 3f64.sqrt());
        // above the crossing the closed form exceeds the cap or has no
        // positive solution at all (NaN from a negative denominator)
        let above = closed_form_rho(slightly_above, beta, gamma, &p);
        assert!(!(above <= 3f64.sqrt()));

        assert!(power_feasible(&assignment, &channel, &[req(slightly_below)], &p).unwrap());
        assert!(!power_feasible(&assignment, &channel, &[req(slightly_above)], &p).unwrap());
    }

    #[test]
    fn cone_constraints_hold_at_solution() {
        let (assignment, channel, reqs) = two_fed_setup();
        let p = params();
        let socp = build_power_socp(
            &assignment,
            &channel,
            &reqs,
            &p,
            PowerMode::Penalized { lambda: 1e5 },
        );
        let sol = solve_socp(&socp.instance, &SocpOptions::default()).unwrap();
        assert_eq!(sol.status, SocpStatus::Optimal);
        for cone in &socp.instance.cones {
            let lhs = (&cone.a * &sol.values + &cone.b).norm();
            let rhs = cone.c.dot(&sol.values) + cone.d;
            assert!(lhs <= rhs + 1e-8, "cone violated: {lhs} > {rhs}");
        }
    }

    #[test]
    fn dump_roundtrip() {
        let (assignment, channel, reqs) = two_fed_setup();
        let p = params();
        let socp = build_power_socp(
            &assignment,
            &channel,
            &reqs,
            &p,
            PowerMode::Penalized { lambda: 1e5 },
        );
        let text = socp.instance.to_text();
        let back = SocpInstance::from_text(&text).unwrap();
        assert_eq!(back.objective, socp.instance.objective);
        assert_eq!(back.cones.len(), socp.instance.cones.len());
        for (a, b) in back.cones.iter().zip(&socp.instance.cones) {
            assert_eq!(a.a, b.a);
            assert_eq!(a.b, b.b);
            assert_eq!(a.c, b.c);
            assert_eq!(a.d, b.d);
        }
        let s1 = solve_socp(&socp.instance, &SocpOptions::default()).unwrap();
        let s2 = solve_socp(&back, &SocpOptions::default()).unwrap();
        assert!((s1.objective - s2.objective).abs() < 1e-12);
    }
}
