//! Decision variables, SINR/rate mathematics, and an independent constraint
//! verifier for candidate solutions.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::channel::ChannelRealization;
use crate::error::{Error, Result};

/// Binary assignment of UEs and CSPs to federations and ECSP activations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assignment {
    /// UE -> federation membership, K x F.
    pub x: DMatrix<bool>,
    /// CSP -> federation membership, S x F.
    pub y: DMatrix<bool>,
    /// ECSP activation, length S-bar.
    pub z: Vec<bool>,
}

impl Assignment {
    pub fn empty(k: usize, s: usize, f: usize, s_bar: usize) -> Self {
        Self {
            x: DMatrix::from_element(k, f, false),
            y: DMatrix::from_element(s, f, false),
            z: vec![false; s_bar],
        }
    }

    /// Federation of UE `k`, if any.
    pub fn federation_of_ue(&self, k: usize) -> Option<usize> {
        (0..self.x.ncols()).find(|&f| self.x[(k, f)])
    }

    /// Federation of CSP `s`, if any.
    pub fn federation_of_csp(&self, s: usize) -> Option<usize> {
        (0..self.y.ncols()).find(|&f| self.y[(s, f)])
    }

    pub fn active_csps(&self) -> usize {
        self.y.iter().filter(|&&b| b).count()
    }

    pub fn active_ecsps(&self) -> usize {
        self.z.iter().filter(|&&b| b).count()
    }
}

/// Per-CSP transmit amplitudes; `rho[(s, f)]^2` is the transmit power in W
/// that CSP `s` spends in federation `f`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerAllocation {
    pub rho: DMatrix<f64>,
}

impl PowerAllocation {
    pub fn zeros(s: usize, f: usize) -> Self {
        Self {
            rho: DMatrix::zeros(s, f),
        }
    }

    /// Total transmit power of CSP `s` (W).
    pub fn csp_power_w(&self, s: usize) -> f64 {
        (0..self.rho.ncols()).map(|f| self.rho[(s, f)].powi(2)).sum()
    }
}

/// Per-UE rate requirement in linear SINR form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RateRequirement {
    /// Spectral-efficiency threshold (bit/s/Hz).
    pub r_thr_se: f64,
    /// Equivalent linear SINR threshold.
    pub sinr_thr: f64,
}

/// Linear SINR threshold matching a rate requirement:
/// `2^(rate/bandwidth * tau_c/(tau_c - tau_p)) - 1`.
///
/// ```
/// let t = cellfed::model::sinr_threshold(20e6, 20e6, 200, 12);
/// assert!((t.sinr_thr - 1.0905).abs() < 1e-3);
/// ```
pub fn sinr_threshold(rate_bps: f64, bandwidth_hz: f64, tau_c: u32, tau_p: u32) -> RateRequirement {
    assert!(rate_bps >= 0.0 && bandwidth_hz > 0.0 && tau_p < tau_c);
    let r_thr_se = rate_bps / bandwidth_hz;
    let sinr_thr = 2f64.powf(r_thr_se * tau_c as f64 / (tau_c - tau_p) as f64) - 1.0;
    RateRequirement { r_thr_se, sinr_thr }
}

/// Achieved SINR of UE `k` under MRT with equal per-pilot power split.
pub fn achieved_sinr(
    k: usize,
    assignment: &Assignment,
    powers: &PowerAllocation,
    channel: &ChannelRealization,
    m_antennas: u32,
    tau_p: u32,
    noise_w: f64,
) -> f64 {
    let s_count = channel.beta.ncols();
    let mut signal_amp = 0.0;
    let mut interference = 0.0;
    for f in 0..assignment.x.ncols() {
        if !assignment.x[(k, f)] {
            continue;
        }
        for s in 0..s_count {
            let rho = powers.rho[(s, f)];
            signal_amp += rho * channel.gamma[(k, s)].sqrt();
            interference += rho * rho * channel.beta[(k, s)];
        }
    }
    (m_antennas as f64 / tau_p as f64) * signal_amp * signal_amp / (interference + noise_w)
}

/// Spectral efficiency of UE `k`: `(tau_c - tau_p)/tau_c * log2(1 + SINR)`.
pub fn achieved_rate_se(sinr: f64, tau_c: u32, tau_p: u32) -> f64 {
    (tau_c - tau_p) as f64 / tau_c as f64 * (1.0 + sinr).log2()
}

/// Feasibility tolerances of the verifier.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative slack on the SINR constraints.
    pub sinr_rel: f64,
    /// Absolute slack on the power caps (in sqrt-W).
    pub power_abs: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            sinr_rel: 1e-6,
            power_abs: 1e-9,
        }
    }
}

/// Worst violation per constraint family, tagged with the problem's
/// constraint labels.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstraintViolations {
    /// SINR / data-rate constraints (7b), relative.
    pub sinr_7b: f64,
    /// Power caps rho <= sqrt(P_max) y (7c), absolute in sqrt-W.
    pub power_7c: f64,
    /// ECSP activation coupling (7d), integral count.
    pub ecsp_7d: f64,
    /// One federation per UE (7e), integral count.
    pub ue_membership_7e: f64,
    /// Per-federation UE capacity (7f), integral count.
    pub capacity_7f: f64,
}

/// Verification outcome for one candidate solution.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolutionReport {
    pub feasible: bool,
    pub violations: ConstraintViolations,
    pub per_ue_sinr: Vec<f64>,
    pub per_ue_rate_se: Vec<f64>,
    pub objective_j: f64,
    pub avg_power_w: f64,
}

impl SolutionReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// System-level constants the verifier needs alongside the channel.
#[derive(Debug, Clone, Copy)]
pub struct VerifyContext {
    pub m_antennas: u32,
    pub tau_c: u32,
    pub tau_p: u32,
    pub noise_w: f64,
    pub pt_max_w: f64,
}

/// Independent check of every constraint family of the federation problem.
///
/// The SINR constraint is checked in its per-federation subconstraint form:
/// for each (k, f) with `x[k][f] = 1`, the in-federation signal and
/// interference alone must meet the threshold.
pub fn verify_solution(
    assignment: &Assignment,
    powers: &PowerAllocation,
    channel: &ChannelRealization,
    requirements: &[RateRequirement],
    ecsp_partition: &[Vec<usize>],
    ctx: &VerifyContext,
    tol: &Tolerances,
) -> Result<SolutionReport> {
    let k_count = channel.beta.nrows();
    let s_count = channel.beta.ncols();
    let f_count = assignment.x.ncols();
    if assignment.x.nrows() != k_count
        || assignment.y.nrows() != s_count
        || assignment.y.ncols() != f_count
        || powers.rho.nrows() != s_count
        || powers.rho.ncols() != f_count
        || requirements.len() != k_count
    {
        return Err(Error::ShapeMismatch("verify_solution input dimensions".into()));
    }

    let mut v = ConstraintViolations {
        sinr_7b: 0.0,
        power_7c: 0.0,
        ecsp_7d: 0.0,
        ue_membership_7e: 0.0,
        capacity_7f: 0.0,
    };

    // (7b): F subconstraints per UE
    let mut per_ue_sinr = vec![0.0; k_count];
    for k in 0..k_count {
        let thr = requirements[k].sinr_thr;
        for f in 0..f_count {
            if !assignment.x[(k, f)] {
                continue;
            }
            let mut amp = 0.0;
            let mut intf = 0.0;
            for s in 0..s_count {
                let rho = powers.rho[(s, f)];
                amp += rho * channel.gamma[(k, s)].sqrt();
                intf += rho * rho * channel.beta[(k, s)];
            }
            let sinr =
                (ctx.m_antennas as f64 / ctx.tau_p as f64) * amp * amp / (intf + ctx.noise_w);
            per_ue_sinr[k] = sinr;
            if thr > 0.0 {
                let rel = (thr - sinr) / thr;
                if rel > v.sinr_7b {
                    v.sinr_7b = rel;
                }
            }
        }
    }

    // (7c): rho <= sqrt(P_max) * y
    let sqrt_pmax = ctx.pt_max_w.sqrt();
    for s in 0..s_count {
        for f in 0..f_count {
            let cap = if assignment.y[(s, f)] { sqrt_pmax } else { 0.0 };
            let excess = powers.rho[(s, f)] - cap;
            if excess > v.power_7c {
                v.power_7c = excess;
            }
            if powers.rho[(s, f)] < -v.power_7c {
                v.power_7c = -powers.rho[(s, f)];
            }
        }
    }

    // (7d): sum_f y_s^f <= z_{ecsp(s)}, which also caps CSP membership at one
    for (bar_s, set) in ecsp_partition.iter().enumerate() {
        for &s in set {
            let memberships = (0..f_count).filter(|&f| assignment.y[(s, f)]).count();
            let zc = usize::from(assignment.z[bar_s]);
            if memberships > zc {
                v.ecsp_7d = v.ecsp_7d.max((memberships - zc) as f64);
            }
        }
    }

    // (7e): exactly one federation per UE
    for k in 0..k_count {
        let memberships = (0..f_count).filter(|&f| assignment.x[(k, f)]).count();
        v.ue_membership_7e = v.ue_membership_7e.max((memberships as f64 - 1.0).abs());
    }

    // (7f): per-federation UE capacity
    for f in 0..f_count {
        let served = (0..k_count).filter(|&k| assignment.x[(k, f)]).count();
        if served as u32 > ctx.tau_p {
            v.capacity_7f = v.capacity_7f.max((served as u32 - ctx.tau_p) as f64);
        }
    }

    let per_ue_rate_se: Vec<f64> = per_ue_sinr
        .iter()
        .map(|&s| achieved_rate_se(s, ctx.tau_c, ctx.tau_p))
        .collect();

    let feasible = v.sinr_7b <= tol.sinr_rel
        && v.power_7c <= tol.power_abs
        && v.ecsp_7d == 0.0
        && v.ue_membership_7e == 0.0
        && v.capacity_7f == 0.0;

    Ok(SolutionReport {
        feasible,
        violations: v,
        per_ue_sinr,
        per_ue_rate_se,
        objective_j: f64::NAN,
        avg_power_w: f64::NAN,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;

    fn tiny_channel() -> ChannelRealization {
        // 1 UE, 1 CSP with beta = gamma = 1e-8
        ChannelRealization {
            beta: DMatrix::from_element(1, 1, 1e-8),
            gamma: DMatrix::from_element(1, 1, 1e-8),
            los: DMatrix::from_element(1, 1, true),
        }
    }

    #[test]
    fn threshold_goldens() {
        assert_eq!(sinr_threshold(0.0, 20e6, 200, 12).sinr_thr, 0.0);
        let t96 = sinr_threshold(96e6, 20e6, 200, 12);
        assert!((t96.sinr_thr - (2f64.powf(4.8 * 200.0 / 188.0) - 1.0)).abs() < 1e-9);
        assert!((t96.sinr_thr - 33.44).abs() < 0.01);
        let t20 = sinr_threshold(20e6, 20e6, 200, 12);
        assert!((t20.sinr_thr - 1.0905).abs() < 1e-3);
    }

    #[test]
    fn sinr_fixture_single_link() {
        let ch = tiny_channel();
        let mut a = Assignment::empty(1, 1, 1, 1);
        a.x[(0, 0)] = true;
        a.y[(0, 0)] = true;
        a.z[0] = true;
        let mut p = PowerAllocation::zeros(1, 1);
        p.rho[(0, 0)] = 3f64.sqrt();
        let noise = 3.98e-13;
        let sinr = achieved_sinr(0, &a, &p, &ch, 16, 12, noise);
        let expect = (16.0 / 12.0) * 3.0 * 1e-8 / (3.0 * 1e-8 + noise);
        assert!((sinr - expect).abs() / expect < 1e-12);
        assert!((sinr - 1.333).abs() < 1e-3);
        let se = achieved_rate_se(sinr, 200, 12);
        assert!((se - 1.149).abs() < 1e-3);
    }

    #[test]
    fn zero_power_gives_zero_sinr_and_rate() {
        let ch = tiny_channel();
        let mut a = Assignment::empty(1, 1, 1, 1);
        a.x[(0, 0)] = true;
        let p = PowerAllocation::zeros(1, 1);
        assert_eq!(achieved_sinr(0, &a, &p, &ch, 16, 12, 1e-13), 0.0);
        assert_eq!(achieved_rate_se(0.0, 200, 12), 0.0);
    }

    #[test]
    fn threshold_and_rate_are_inverse() {
        let req = sinr_threshold(42e6, 20e6, 200, 12);
        let se = achieved_rate_se(req.sinr_thr, 200, 12);
        assert!((se - req.r_thr_se).abs() < 1e-12);
    }

    #[test]
    fn sinr_saturates_as_power_scales() {
        let ch = tiny_channel();
        let mut a = Assignment::empty(1, 1, 1, 1);
        a.x[(0, 0)] = true;
        let mut prev = 0.0;
        for t in [1e-3, 1e-1, 1.0, 10.0] {
            let mut p = PowerAllocation::zeros(1, 1);
            p.rho[(0, 0)] = t;
            let s = achieved_sinr(0, &a, &p, &ch, 16, 12, 3.98e-13);
            assert!(s > prev);
            prev = s;
        }
        // limit (M/tau_p) * gamma / beta
        assert!((prev - 16.0 / 12.0).abs() < 1e-3);
    }

    fn verify_ctx() -> VerifyContext {
        VerifyContext {
            m_antennas: 16,
            tau_c: 200,
            tau_p: 12,
            noise_w: 3.98e-13,
            pt_max_w: 3.0,
        }
    }

    #[test]
    fn verifier_accepts_good_solution() {
        let ch = tiny_channel();
        let mut a = Assignment::empty(1, 1, 1, 1);
        a.x[(0, 0)] = true;
        a.y[(0, 0)] = true;
        a.z[0] = true;
        let mut p = PowerAllocation::zeros(1, 1);
        p.rho[(0, 0)] = 1.0;
        let reqs = vec![sinr_threshold(20e6, 20e6, 200, 12)];
        let rep = verify_solution(
            &a,
            &p,
            &ch,
            &reqs,
            &[vec![0]],
            &verify_ctx(),
            &Tolerances::default(),
        )
        .unwrap();
        assert!(rep.feasible, "{:?}", rep.violations);
    }

    #[test]
    fn verifier_flags_double_membership() {
        let ch = ChannelRealization {
            beta: DMatrix::from_element(1, 1, 1e-8),
            gamma: DMatrix::from_element(1, 1, 1e-8),
            los: DMatrix::from_element(1, 1, true),
        };
        let mut a = Assignment::empty(1, 1, 2, 1);
        a.x[(0, 0)] = true;
        a.x[(0, 1)] = true;
        let p = PowerAllocation::zeros(1, 2);
        let reqs = vec![sinr_threshold(0.0, 20e6, 200, 12)];
        let rep = verify_solution(
            &a,
            &p,
            &ch,
            &reqs,
            &[vec![0]],
            &verify_ctx(),
            &Tolerances::default(),
        )
        .unwrap();
        assert!(!rep.feasible);
        assert!(rep.violations.ue_membership_7e > 0.0);
    }

    #[test]
    fn verifier_flags_power_cap_excess() {
        let ch = tiny_channel();
        let mut a = Assignment::empty(1, 1, 1, 1);
        a.x[(0, 0)] = true;
        a.y[(0, 0)] = true;
        a.z[0] = true;
        let mut p = PowerAllocation::zeros(1, 1);
        p.rho[(0, 0)] = 3f64.sqrt() + 1e-6;
        let reqs = vec![sinr_threshold(0.0, 20e6, 200, 12)];
        let rep = verify_solution(
            &a,
            &p,
            &ch,
            &reqs,
            &[vec![0]],
            &verify_ctx(),
            &Tolerances::default(),
        )
        .unwrap();
        assert!(!rep.feasible);
        assert!(rep.violations.power_7c > 1e-7);
    }

    #[test]
    fn aggregated_and_subconstraint_forms_agree() {
        // with one membership per UE, the aggregated SINR equals the
        // in-federation subconstraint value for every binary x
        let k_count = 2;
        let s_count = 2;
        let ch = ChannelRealization {
            beta: DMatrix::from_fn(k_count, s_count, |k, s| 1e-8 * (1.0 + k as f64 + s as f64)),
            gamma: DMatrix::from_fn(k_count, s_count, |k, s| 5e-9 * (1.0 + k as f64 * s as f64)),
            los: DMatrix::from_element(k_count, s_count, true),
        };
        let mut p = PowerAllocation::zeros(s_count, 2);
        p.rho[(0, 0)] = 0.7;
        p.rho[(1, 1)] = 1.1;
        for bits in 0..4u32 {
            let mut a = Assignment::empty(k_count, s_count, 2, 1);
            for k in 0..k_count {
                let f = ((bits >> k) & 1) as usize;
                a.x[(k, f)] = true;
            }
            for k in 0..k_count {
                let f = a.federation_of_ue(k).unwrap();
                // aggregated form: sums over all federations pick out column f
                let agg = achieved_sinr(k, &a, &p, &ch, 16, 12, 3.98e-13);
                let mut amp = 0.0;
                let mut intf = 0.0;
                for s in 0..s_count {
                    amp += p.rho[(s, f)] * ch.gamma[(k, s)].sqrt();
                    intf += p.rho[(s, f)].powi(2) * ch.beta[(k, s)];
                }
                let sub = (16.0 / 12.0) * amp * amp / (intf + 3.98e-13);
                assert!((agg - sub).abs() <= 1e-12 * sub.max(1.0));
            }
        }
    }

    #[test]
    fn label_permutation_preserves_sinr() {
        let ch = ChannelRealization {
            beta: DMatrix::from_element(1, 2, 1e-8),
            gamma: DMatrix::from_element(1, 2, 5e-9),
            los: DMatrix::from_element(1, 2, true),
        };
        let mut a1 = Assignment::empty(1, 2, 2, 1);
        a1.x[(0, 0)] = true;
        let mut p1 = PowerAllocation::zeros(2, 2);
        p1.rho[(0, 0)] = 0.9;
        p1.rho[(1, 0)] = 0.3;
        let mut a2 = Assignment::empty(1, 2, 2, 1);
        a2.x[(0, 1)] = true;
        let mut p2 = PowerAllocation::zeros(2, 2);
        p2.rho[(0, 1)] = 0.9;
        p2.rho[(1, 1)] = 0.3;
        let s1 = achieved_sinr(0, &a1, &p1, &ch, 16, 12, 3.98e-13);
        let s2 = achieved_sinr(0, &a2, &p2, &ch, 16, 12, 3.98e-13);
        assert_eq!(s1, s2);
    }
}
