//! Assignment subproblem: with transmit amplitudes fixed, choose federation
//! memberships, CSP activations, and ECSP activations minimizing static
//! energy plus slack penalties. Solved as a mixed binary program by the
//! built-in simplex ([`simplex`]) and branch-and-bound ([`branch`]).

pub mod branch;
pub mod simplex;

pub use branch::{solve_milp, MilpInstance, MilpOptions, MilpSolution, MilpStatus};
pub use simplex::{solve_lp, LpInstance, LpSolution, LpStatus, Sense};

use nalgebra::{DMatrix, DVector};

use crate::channel::ChannelRealization;
use crate::error::{Error, Result};
use crate::model::{Assignment, PowerAllocation, RateRequirement};

/// Joule-scale factor applied to the objective (micro-Joules internally).
const OBJ_SCALE: f64 = 1e6;

/// Scalar parameters of the assignment subproblem.
#[derive(Debug, Clone, Copy)]
pub struct AssignParams {
    pub m_antennas: u32,
    pub tau_p: u32,
    pub noise_w: f64,
    pub pt_max_w: f64,
    /// Static energy of one active (CSP, federation) pair (J).
    pub csp_static_j: f64,
    /// Fronthaul energy of one active ECSP (J).
    pub ecsp_energy_j: f64,
    /// Slack penalty weight (J per natural slack unit).
    pub lambda: f64,
}

/// Variable layout of the built MILP: `x` (UE memberships), `y` (CSP
/// memberships), `z` (ECSP activations), `eps` (power-cap slacks), then
/// `eps_tilde` (rate slacks). Slacks are stored relative to their natural
/// scale; the `*_unit` fields convert back.
#[derive(Debug, Clone)]
pub struct AssignmentMilp {
    pub instance: MilpInstance,
    pub k_count: usize,
    pub s_count: usize,
    pub f_count: usize,
    pub s_bar: usize,
    /// Natural unit of each rate slack (the constraint magnitude B_{k,f}).
    pub rate_slack_units: Vec<f64>,
    /// Natural unit of the power-cap slacks (sqrt of the power cap).
    pub cap_slack_unit: f64,
}

impl AssignmentMilp {
    pub fn x_var(&self, k: usize, f: usize) -> usize {
        k * self.f_count + f
    }
    pub fn y_var(&self, s: usize, f: usize) -> usize {
        self.k_count * self.f_count + s * self.f_count + f
    }
    pub fn z_var(&self, sb: usize) -> usize {
        (self.k_count + self.s_count) * self.f_count + sb
    }
    pub fn eps_var(&self, s: usize, f: usize) -> usize {
        (self.k_count + self.s_count) * self.f_count + self.s_bar + s * self.f_count + f
    }
    pub fn eps_tilde_var(&self, k: usize, f: usize) -> usize {
        (self.k_count + 2 * self.s_count) * self.f_count + self.s_bar + k * self.f_count + f
    }

    /// Reads the binary assignment and the total relative slack
    /// (dimensionless, one unit per fully-missed constraint) out of a
    /// solution vector.
    pub fn extract(&self, sol: &MilpSolution) -> (Assignment, f64) {
        let mut assignment = Assignment::empty(self.k_count, self.s_count, self.f_count, self.s_bar);
        for k in 0..self.k_count {
            for f in 0..self.f_count {
                assignment.x[(k, f)] = sol.values[self.x_var(k, f)] > 0.5;
            }
        }
        for s in 0..self.s_count {
            for f in 0..self.f_count {
                assignment.y[(s, f)] = sol.values[self.y_var(s, f)] > 0.5;
            }
        }
        for sb in 0..self.s_bar {
            assignment.z[sb] = sol.values[self.z_var(sb)] > 0.5;
        }
        let mut slack = 0.0;
        for s in 0..self.s_count {
            for f in 0..self.f_count {
                slack += sol.values[self.eps_var(s, f)].max(0.0);
            }
        }
        for k in 0..self.k_count {
            for f in 0..self.f_count {
                slack += sol.values[self.eps_tilde_var(k, f)].max(0.0);
            }
        }
        (assignment, slack)
    }
}

/// Builds the fixed-power assignment MILP. Rows: one rate constraint per
/// (UE, federation) with a positive threshold, one power-cap row per
/// (CSP, federation), one ECSP-coupling row per CSP, one membership equality
/// per UE, one pilot-capacity row per federation.
pub fn build_assignment_milp(
    powers: &PowerAllocation,
    channel: &ChannelRealization,
    requirements: &[RateRequirement],
    ecsp_partition: &[Vec<usize>],
    params: &AssignParams,
) -> Result<AssignmentMilp> {
    let k_count = channel.beta.nrows();
    let s_count = channel.beta.ncols();
    let f_count = powers.rho.ncols();
    let s_bar = ecsp_partition.len();
    if powers.rho.nrows() != s_count || requirements.len() != k_count {
        return Err(Error::ShapeMismatch("assignment milp inputs".into()));
    }
    let mut ecsp_of = vec![usize::MAX; s_count];
    for (sb, members) in ecsp_partition.iter().enumerate() {
        for &s in members {
            if s >= s_count || ecsp_of[s] != usize::MAX {
                return Err(Error::Config("ecsp partition is not a partition".into()));
            }
            ecsp_of[s] = sb;
        }
    }
    if ecsp_of.iter().any(|&sb| sb == usize::MAX) {
        return Err(Error::Config("ecsp partition misses a csp".into()));
    }

    let n = (2 * k_count + 2 * s_count) * f_count + s_bar;
    let sqrt_cap = params.pt_max_w.sqrt();
    let m_over_tp = (params.m_antennas as f64 / params.tau_p as f64).sqrt();

    let map = AssignmentMilp {
        instance: MilpInstance {
            lp: LpInstance {
                c: DVector::zeros(n),
                a: DMatrix::zeros(0, 0),
                senses: Vec::new(),
                b: DVector::zeros(0),
                lower: DVector::zeros(n),
                upper: DVector::zeros(n),
            },
            integer_vars: Vec::new(),
        },
        k_count,
        s_count,
        f_count,
        s_bar,
        rate_slack_units: vec![0.0; k_count * f_count],
        cap_slack_unit: sqrt_cap,
    };

    let mut c = DVector::zeros(n);
    let mut lower = DVector::zeros(n);
    let mut upper = DVector::zeros(n);
    let mut integer_vars = Vec::new();
    let mut rate_slack_units = vec![0.0; k_count * f_count];

    for k in 0..k_count {
        for f in 0..f_count {
            let j = map.x_var(k, f);
            upper[j] = 1.0;
            integer_vars.push(j);
        }
    }
    for s in 0..s_count {
        for f in 0..f_count {
            let j = map.y_var(s, f);
            upper[j] = 1.0;
            c[j] = params.csp_static_j * OBJ_SCALE;
            integer_vars.push(j);
            // bound tightening by dominance: switching y to 0 and absorbing
            // rho in the cap slack changes the objective by lambda*rho_rel -
            // static (y appears in no other binding row), so y=0 dominates
            // below the static cost; above static + ECSP cost, y=1 dominates
            let rho_rel = powers.rho[(s, f)] / sqrt_cap;
            if params.lambda * rho_rel < params.csp_static_j {
                upper[j] = 0.0;
            } else if params.lambda * rho_rel > params.csp_static_j + params.ecsp_energy_j {
                lower[j] = 1.0;
            }
        }
    }
    for sb in 0..s_bar {
        let j = map.z_var(sb);
        upper[j] = 1.0;
        c[j] = params.ecsp_energy_j * OBJ_SCALE;
        integer_vars.push(j);
    }
    for s in 0..s_count {
        for f in 0..f_count {
            let j = map.eps_var(s, f);
            upper[j] = 1.0; // relative to sqrt(P_max)
            c[j] = params.lambda * OBJ_SCALE; // lambda per relative slack unit
        }
    }
    for k in 0..k_count {
        for f in 0..f_count {
            let j = map.eps_tilde_var(k, f);
            let thr = requirements[k].sinr_thr;
            if thr > 0.0 {
                // B_{k,f}: rate constraint magnitude at the fixed powers
                let mut interf = params.noise_w;
                for s in 0..s_count {
                    interf += powers.rho[(s, f)].powi(2) * channel.beta[(k, s)];
                }
                let b_kf = thr.sqrt() * interf.sqrt();
                rate_slack_units[k * f_count + f] = b_kf;
                upper[j] = 1.0; // relative to B_{k,f}
                c[j] = params.lambda * OBJ_SCALE; // lambda per relative slack unit
            } // otherwise the slack stays fixed at zero
        }
    }

    let mut rows: Vec<(Vec<(usize, f64)>, Sense, f64)> = Vec::new();
    // rate rows: (1 - A/B) x_kf - eps_tilde <= 0
    for k in 0..k_count {
        let thr = requirements[k].sinr_thr;
        if thr <= 0.0 {
            continue;
        }
        for f in 0..f_count {
            let mut signal = 0.0;
            for s in 0..s_count {
                signal += powers.rho[(s, f)] * channel.gamma[(k, s)].sqrt();
            }
            let a_kf = m_over_tp * signal;
            let b_kf = rate_slack_units[k * f_count + f];
            rows.push((
                vec![
                    (map.x_var(k, f), 1.0 - a_kf / b_kf),
                    (map.eps_tilde_var(k, f), -1.0),
                ],
                Sense::Le,
                0.0,
            ));
        }
    }
    // power-cap rows: rho/sqrt(P_max) <= y + eps
    for s in 0..s_count {
        for f in 0..f_count {
            rows.push((
                vec![(map.y_var(s, f), -1.0), (map.eps_var(s, f), -1.0)],
                Sense::Le,
                -powers.rho[(s, f)] / sqrt_cap,
            ));
        }
    }
    // ECSP coupling: sum_f y_sf <= z
    for s in 0..s_count {
        let mut row: Vec<(usize, f64)> = (0..f_count).map(|f| (map.y_var(s, f), 1.0)).collect();
        row.push((map.z_var(ecsp_of[s]), -1.0));
        rows.push((row, Sense::Le, 0.0));
    }
    // UE membership: sum_f x_kf = 1
    for k in 0..k_count {
        let row = (0..f_count).map(|f| (map.x_var(k, f), 1.0)).collect();
        rows.push((row, Sense::Eq, 1.0));
    }
    // pilot capacity: sum_k x_kf <= tau_p
    for f in 0..f_count {
        let row = (0..k_count).map(|k| (map.x_var(k, f), 1.0)).collect();
        rows.push((row, Sense::Le, params.tau_p as f64));
    }

    let m_rows = rows.len();
    let mut a = DMatrix::zeros(m_rows, n);
    let mut b = DVector::zeros(m_rows);
    let mut senses = Vec::with_capacity(m_rows);
    for (i, (entries, sense, rhs)) in rows.into_iter().enumerate() {
        for (j, v) in entries {
            a[(i, j)] = v;
        }
        senses.push(sense);
        b[i] = rhs;
    }

    Ok(AssignmentMilp {
        instance: MilpInstance {
            lp: LpInstance {
                c,
                a,
                senses,
                b,
                lower,
                upper,
            },
            integer_vars,
        },
        rate_slack_units,
        ..map
    })
}

impl MilpInstance {
    /// Plain-text sparse triplet dump; inverse of [`MilpInstance::from_text`].
    pub fn to_text(&self) -> String {
        let lp = &self.lp;
        let n = lp.num_vars();
        let m = lp.a.nrows();
        let mut out = String::new();
        out.push_str(&format!("milp {n} {m} {}\n", self.integer_vars.len()));
        for j in 0..n {
            out.push_str(&format!(
                "var {j} {:e} {:e} {:e}\n",
                lp.c[j], lp.lower[j], lp.upper[j]
            ));
        }
        for &j in &self.integer_vars {
            out.push_str(&format!("int {j}\n"));
        }
        for i in 0..m {
            let sense = match lp.senses[i] {
                Sense::Le => "<=",
                Sense::Eq => "=",
                Sense::Ge => ">=",
            };
            out.push_str(&format!("row {i} {sense} {:e}\n", lp.b[i]));
        }
        for i in 0..m {
            for j in 0..n {
                let v = lp.a[(i, j)];
                if v != 0.0 {
                    out.push_str(&format!("a {i} {j} {v:e}\n"));
                }
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |detail: &str| Error::Config(format!("milp dump parse: {detail}"));
        let mut lines = text.lines();
        let header: Vec<&str> = lines
            .next()
            .ok_or_else(|| bad("empty dump"))?
            .split_whitespace()
            .collect();
        if header.len() != 4 || header[0] != "milp" {
            return Err(bad("bad header"));
        }
        let n: usize = header[1].parse().map_err(|_| bad("bad n"))?;
        let m: usize = header[2].parse().map_err(|_| bad("bad m"))?;
        let n_int: usize = header[3].parse().map_err(|_| bad("bad int count"))?;

        let mut c = DVector::zeros(n);
        let mut lower = DVector::zeros(n);
        let mut upper = DVector::zeros(n);
        let mut integer_vars = Vec::with_capacity(n_int);
        let mut senses = vec![Sense::Le; m];
        let mut b = DVector::zeros(m);
        let mut a = DMatrix::zeros(m, n);
        for line in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["var", j, cj, lj, uj] => {
                    let j: usize = j.parse().map_err(|_| bad("var index"))?;
                    if j >= n {
                        return Err(bad("var index range"));
                    }
                    c[j] = cj.parse().map_err(|_| bad("var cost"))?;
                    lower[j] = lj.parse().map_err(|_| bad("var lower"))?;
                    upper[j] = uj.parse().map_err(|_| bad("var upper"))?;
                }
                ["int", j] => {
                    integer_vars.push(j.parse().map_err(|_| bad("int index"))?);
                }
                ["row", i, sense, rhs] => {
                    let i: usize = i.parse().map_err(|_| bad("row index"))?;
                    if i >= m {
                        return Err(bad("row index range"));
                    }
                    senses[i] = match *sense {
                        "<=" => Sense::Le,
                        "=" => Sense::Eq,
                        ">=" => Sense::Ge,
                        _ => return Err(bad("row sense")),
                    };
                    b[i] = rhs.parse().map_err(|_| bad("row rhs"))?;
                }
                ["a", i, j, v] => {
                    let i: usize = i.parse().map_err(|_| bad("entry row"))?;
                    let j: usize = j.parse().map_err(|_| bad("entry col"))?;
                    if i >= m || j >= n {
                        return Err(bad("entry range"));
                    }
                    a[(i, j)] = v.parse().map_err(|_| bad("entry value"))?;
                }
                [] => {}
                _ => return Err(bad("unknown line")),
            }
        }
        let out = Self {
            lp: LpInstance {
                c,
                a,
                senses,
                b,
                lower,
                upper,
            },
            integer_vars,
        };
        out.validate()?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::RateRequirement;
    use nalgebra::DMatrix;

    fn req(thr: f64) -> RateRequirement {
        RateRequirement {
            r_thr_se: 0.0,
            sinr_thr: thr,
        }
    }

    fn params() -> AssignParams {
        AssignParams {
            m_antennas: 16,
            tau_p: 12,
            noise_w: 3.98e-13,
            pt_max_w: 3.0,
            csp_static_j: 2.9e-4,
            ecsp_energy_j: 9.2e-5,
            lambda: 4.0,
        }
    }

    #[test]
    fn variable_count_formula() {
        // K*F + S*F + S_bar + S*F + K*F
        let k = 3;
        let s = 4;
        let f = 2;
        let channel = ChannelRealization {
            beta: DMatrix::from_element(k, s, 1e-8),
            gamma: DMatrix::from_element(k, s, 5e-9),
            los: DMatrix::from_element(k, s, true),
        };
        let powers = PowerAllocation::zeros(s, f);
        let reqs = vec![req(1.0); k];
        let partition = vec![vec![0, 1], vec![2, 3]];
        let milp =
            build_assignment_milp(&powers, &channel, &reqs, &partition, &params()).unwrap();
        assert_eq!(
            milp.instance.lp.num_vars(),
            k * f + s * f + 2 + s * f + k * f
        );
        // rows: K*F rate + S*F cap + S coupling + K membership + F capacity
        assert_eq!(
            milp.instance.lp.a.nrows(),
            k * f + s * f + s + k + f
        );
        assert_eq!(milp.instance.integer_vars.len(), k * f + s * f + 2);
    }

    #[test]
    fn zero_power_zero_threshold_all_idle() {
        let k = 2;
        let s = 3;
        let f = 2;
        let channel = ChannelRealization {
            beta: DMatrix::from_element(k, s, 1e-8),
            gamma: DMatrix::from_element(k, s, 5e-9),
            los: DMatrix::from_element(k, s, true),
        };
        let powers = PowerAllocation::zeros(s, f);
        let reqs = vec![req(0.0); k];
        let partition = vec![vec![0, 1], vec![2]];
        let milp =
            build_assignment_milp(&powers, &channel, &reqs, &partition, &params()).unwrap();
        let sol = solve_milp(&milp.instance, &MilpOptions::default()).unwrap();
        assert_eq!(sol.status, MilpStatus::Optimal);
        assert!(sol.objective.abs() < 1e-9);
        let (assignment, slack) = milp.extract(&sol);
        assert_eq!(assignment.active_csps(), 0);
        assert_eq!(assignment.active_ecsps(), 0);
        assert!(slack.abs() < 1e-12);
        // every UE still belongs to exactly one federation
        for kk in 0..k {
            assert!(assignment.federation_of_ue(kk).is_some());
        }
    }

    #[test]
    fn single_pair_activates_csp_and_ecsp() {
        // one UE, one CSP, power already meets the SINR target
        let channel = ChannelRealization {
            beta: DMatrix::from_element(1, 1, 1e-8),
            gamma: DMatrix::from_element(1, 1, 9e-9),
            los: DMatrix::from_element(1, 1, true),
        };
        let p = params();
        let thr = 1.0;
        // closed-form amplitude satisfying the constraint exactly, plus margin
        let mtp = p.m_antennas as f64 / p.tau_p as f64;
        let rho = (thr * p.noise_w / (mtp * 9e-9 - thr * 1e-8)).sqrt() * 1.5;
        let mut powers = PowerAllocation::zeros(1, 1);
        powers.rho[(0, 0)] = rho;
        let milp = build_assignment_milp(
            &powers,
            &channel,
            &[req(thr)],
            &[vec![0]],
            &p,
        )
        .unwrap();
        let sol = solve_milp(&milp.instance, &MilpOptions::default()).unwrap();
        assert_eq!(sol.status, MilpStatus::Optimal);
        let (assignment, slack) = milp.extract(&sol);
        assert!(assignment.y[(0, 0)]);
        assert!(assignment.z[0]);
        assert!(assignment.x[(0, 0)]);
        assert!(slack < 1e-9);
        let expected = (p.csp_static_j + p.ecsp_energy_j) * 1e6;
        assert!(
            (sol.objective - expected).abs() < 1e-6,
            "obj {} expected {expected}",
            sol.objective
        );
    }

    #[test]
    fn membership_always_enforced() {
        // zero rates: x rows still force one federation per UE
        let k = 4;
        let s = 2;
        let f = 2;
        let channel = ChannelRealization {
            beta: DMatrix::from_element(k, s, 1e-8),
            gamma: DMatrix::from_element(k, s, 5e-9),
            los: DMatrix::from_element(k, s, true),
        };
        let powers = PowerAllocation::zeros(s, f);
        let reqs = vec![req(0.0); k];
        let milp = build_assignment_milp(
            &powers,
            &channel,
            &reqs,
            &[vec![0], vec![1]],
            &params(),
        )
        .unwrap();
        let sol = solve_milp(&milp.instance, &MilpOptions::default()).unwrap();
        let (assignment, _) = milp.extract(&sol);
        for kk in 0..k {
            let count = (0..f).filter(|&ff| assignment.x[(kk, ff)]).count();
            assert_eq!(count, 1);
        }
    }

    #[test]
    fn capacity_binds() {
        // 3 UEs, capacity 1 per federation, 3 federations: forced spread
        let k = 3;
        let s = 1;
        let f = 3;
        let channel = ChannelRealization {
            beta: DMatrix::from_element(k, s, 1e-8),
            gamma: DMatrix::from_element(k, s, 5e-9),
            los: DMatrix::from_element(k, s, true),
        };
        let powers = PowerAllocation::zeros(s, f);
        let reqs = vec![req(0.0); k];
        let mut p = params();
        p.tau_p = 1;
        let milp =
            build_assignment_milp(&powers, &channel, &reqs, &[vec![0]], &p).unwrap();
        let sol = solve_milp(&milp.instance, &MilpOptions::default()).unwrap();
        assert_eq!(sol.status, MilpStatus::Optimal);
        let (assignment, _) = milp.extract(&sol);
        for ff in 0..f {
            let load = (0..k).filter(|&kk| assignment.x[(kk, ff)]).count();
            assert!(load <= 1);
        }
    }

    #[test]
    fn dump_roundtrip() {
        let channel = ChannelRealization {
            beta: DMatrix::from_element(2, 2, 1e-8),
            gamma: DMatrix::from_element(2, 2, 5e-9),
            los: DMatrix::from_element(2, 2, true),
        };
        let mut powers = PowerAllocation::zeros(2, 2);
        powers.rho[(0, 0)] = 0.3;
        powers.rho[(1, 1)] = 0.2;
        let milp = build_assignment_milp(
            &powers,
            &channel,
            &[req(1.0), req(0.5)],
            &[vec![0], vec![1]],
            &params(),
        )
        .unwrap();
        let text = milp.instance.to_text();
        let back = MilpInstance::from_text(&text).unwrap();
        assert_eq!(back.lp.c, milp.instance.lp.c);
        assert_eq!(back.lp.a, milp.instance.lp.a);
        assert_eq!(back.lp.b, milp.instance.lp.b);
        assert_eq!(back.integer_vars, milp.instance.integer_vars);
        let s1 = solve_milp(&milp.instance, &MilpOptions::default()).unwrap();
        let s2 = solve_milp(&back, &MilpOptions::default()).unwrap();
        assert_eq!(s1.objective, s2.objective);
        assert_eq!(s1.nodes_explored, s2.nodes_explored);
    }
}
