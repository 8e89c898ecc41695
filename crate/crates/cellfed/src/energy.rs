//! Hardware energy model of the CSP/ECSP nodes.
//!
//! All per-process energies are Joules per coherence block; the block-average
//! consumed power multiplies by `f_bb / tau_c` (one block spans `tau_c`
//! baseband samples).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Assignment, PowerAllocation};
use crate::scenario::Scenario;

/// Hardware constants of the energy model.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct EnergyParams {
    /// Max PA efficiency at full transmit power.
    pub eta_max: f64,
    /// Max transmit power per CSP (W).
    pub pt_max_w: f64,
    /// PA efficiency exponent; 0.5 keeps the PA term a Euclidean norm.
    pub pa_exponent: f64,
    /// DAC figure of merit (J/step).
    pub fom_j_per_step: f64,
    /// DAC/ADC resolution (bits).
    pub bits: u32,
    /// RF sampling rate (Hz).
    pub fs_hz: f64,
    /// Baseband sampling rate (Hz).
    pub f_bb_hz: f64,
    /// Ethernet link power (W).
    pub p_eth_w: f64,
    /// White Rabbit synchronization core power (W).
    pub p_sync_w: f64,
    /// Energy per multiply-accumulate (J/op).
    pub e_mac_j: f64,
    /// Energy per SRAM access (J/op).
    pub e_sram_j: f64,
    /// Energy per DRAM access (J/op).
    pub e_dram_j: f64,
    /// Processing energy overhead factor.
    pub zeta: f64,
    /// SRAM access fraction per operation.
    pub alpha_sram: f64,
    /// DRAM access fraction per operation.
    pub gamma_dram: f64,
}

impl Default for EnergyParams {
    fn default() -> Self {
        Self {
            eta_max: 0.34,
            pt_max_w: 3.0,
            pa_exponent: 0.5,
            fom_j_per_step: 34.4e-15,
            bits: 12,
            fs_hz: 600e6,
            f_bb_hz: 20e6,
            p_eth_w: 7.0,
            p_sync_w: 2.2,
            e_mac_j: 3.1e-12,
            e_sram_j: 5.0e-12,
            e_dram_j: 640.0e-12,
            zeta: 1.2,
            alpha_sram: 0.10,
            gamma_dram: 0.01,
        }
    }
}

impl EnergyParams {
    pub fn validate(&self) -> Result<()> {
        let pos = [
            ("eta_max", self.eta_max),
            ("pt_max_w", self.pt_max_w),
            ("pa_exponent", self.pa_exponent),
            ("fom_j_per_step", self.fom_j_per_step),
            ("fs_hz", self.fs_hz),
            ("f_bb_hz", self.f_bb_hz),
            ("p_eth_w", self.p_eth_w),
            ("p_sync_w", self.p_sync_w),
            ("e_mac_j", self.e_mac_j),
            ("e_sram_j", self.e_sram_j),
            ("e_dram_j", self.e_dram_j),
            ("zeta", self.zeta),
            ("alpha_sram", self.alpha_sram),
            ("gamma_dram", self.gamma_dram),
        ];
        for (name, v) in pos {
            if !(v > 0.0) {
                return Err(Error::Config(format!("energy.{name} must be positive")));
            }
        }
        if self.eta_max > 1.0 {
            return Err(Error::Config("energy.eta_max must be in (0,1]".into()));
        }
        if !(0.4..=0.5).contains(&self.pa_exponent) {
            return Err(Error::Config(
                "energy.pa_exponent must lie in [0.4, 0.5]".into(),
            ));
        }
        Ok(())
    }

    /// DAC/ADC component power, `FoM * 2^b * fs` (W).
    pub fn dac_power_w(&self) -> f64 {
        self.fom_j_per_step * (1u64 << self.bits) as f64 * self.fs_hz
    }
}

/// Per-node energies for one coherence block.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnergyBreakdown {
    /// Energy per DSP operation (J/op).
    pub e_op: f64,
    /// Channel estimation energy (J/block).
    pub e_ce: f64,
    /// Linear (precoding) processing energy (J/block).
    pub e_lp: f64,
    /// PA energy during payload transmission (J/block).
    pub e_pa: f64,
    /// DAC/ADC energy (J/block).
    pub e_dac: f64,
    /// ECSP fronthaul energy, Ethernet + sync core (J/block).
    pub e_ecsp: f64,
    /// Static CSP energy excluding the PA term (J/block).
    pub per_csp_static: f64,
    /// Full CSP energy for the block (J).
    pub total_j: f64,
    /// Block-average power (W).
    pub avg_power_w: f64,
}

/// Energy per DSP operation: `zeta * (e_mac + alpha*e_sram + gamma*e_dram)`.
///
/// ```
/// let p = cellfed::energy::EnergyParams::default();
/// let e = cellfed::energy::op_energy(&p);
/// assert!((e - 12.0e-12).abs() < 1e-24);
/// ```
pub fn op_energy(params: &EnergyParams) -> f64 {
    params.zeta
        * (params.e_mac_j + params.alpha_sram * params.e_sram_j + params.gamma_dram * params.e_dram_j)
}

/// PA consumption at transmit power `p_t`:
/// `(1/eta_max) * sqrt(pt_max) * sqrt(p_t)` for exponent 0.5.
///
/// ```
/// let p = cellfed::energy::EnergyParams::default();
/// let w = cellfed::energy::pa_power(3.0, &p).unwrap();
/// assert!((w - 3.0 / 0.34).abs() < 1e-12);
/// ```
pub fn pa_power(p_t: f64, params: &EnergyParams) -> Result<f64> {
    if p_t < 0.0 || p_t > params.pt_max_w {
        return Err(Error::Config(format!(
            "transmit power {p_t} W outside [0, {}]",
            params.pt_max_w
        )));
    }
    Ok(params.pt_max_w.powf(params.pa_exponent) * p_t.powf(1.0 - params.pa_exponent)
        / params.eta_max)
}

/// Joule coefficient of the PA objective term:
/// `(tau_c - tau_p) / f_bb * sqrt(pt_max) / eta_max`, multiplying `sqrt(P_t)`.
pub fn pa_objective_coeff(params: &EnergyParams, tau_c: u32, tau_p: u32) -> f64 {
    (tau_c - tau_p) as f64 / params.f_bb_hz * params.pt_max_w.sqrt() / params.eta_max
}

/// All per-block energies of one CSP serving `k_served` UEs with `m` antennas
/// at transmit power `p_t`.
pub fn csp_block_energies(
    params: &EnergyParams,
    m: u32,
    k_served: u32,
    tau_c: u32,
    tau_p: u32,
    p_t: f64,
) -> Result<EnergyBreakdown> {
    if tau_p >= tau_c {
        return Err(Error::Config("tau_p must be < tau_c".into()));
    }
    let e_op = op_energy(params);
    let mk = 2.0 * m as f64 * k_served as f64 * e_op;
    let e_ce = mk * tau_p as f64;
    let e_lp = mk * (tau_c - tau_p) as f64;
    let e_pa = pa_power(p_t, params)? * (tau_c - tau_p) as f64 / params.f_bb_hz;
    let e_dac = m as f64 * params.dac_power_w() * tau_c as f64 / params.f_bb_hz;
    let e_ecsp = (params.p_eth_w + params.p_sync_w) * tau_c as f64 / params.f_bb_hz;
    let total_j = e_lp + e_ce + e_pa + e_ecsp + e_dac;
    Ok(EnergyBreakdown {
        e_op,
        e_ce,
        e_lp,
        e_pa,
        e_dac,
        e_ecsp,
        per_csp_static: total_j - e_pa,
        total_j,
        avg_power_w: total_j * params.f_bb_hz / tau_c as f64,
    })
}

/// Constant per-active-CSP energy used in the objective. The per-federation UE
/// cap `tau_p` stands in for the served-UE count, which keeps the objective
/// linear in the activation variables.
pub fn per_csp_static_j(params: &EnergyParams, m: u32, tau_c: u32, tau_p: u32) -> Result<f64> {
    Ok(csp_block_energies(params, m, tau_p, tau_c, tau_p, 0.0)?.per_csp_static)
}

/// ECSP fronthaul energy per block (J).
pub fn ecsp_block_energy_j(params: &EnergyParams, tau_c: u32) -> f64 {
    (params.p_eth_w + params.p_sync_w) * tau_c as f64 / params.f_bb_hz
}

/// Total energy and block-average power of a candidate solution.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ObjectiveValue {
    pub total_j: f64,
    pub avg_power_w: f64,
}

/// Evaluates the network objective: static CSP energy for every activated
/// (CSP, federation) pair, ECSP fronthaul energy for every active ECSP, and
/// the PA term coupling the per-CSP transmit amplitudes.
pub fn objective_energy(
    assignment: &Assignment,
    powers: &PowerAllocation,
    scenario: &Scenario,
    params: &EnergyParams,
) -> Result<ObjectiveValue> {
    let cfg = &scenario.config;
    let (s_count, f_count) = (cfg.num_csps as usize, cfg.num_federations as usize);
    if assignment.y.nrows() != s_count
        || assignment.y.ncols() != f_count
        || powers.rho.nrows() != s_count
        || powers.rho.ncols() != f_count
        || assignment.z.len() != cfg.num_ecsps as usize
    {
        return Err(Error::ShapeMismatch(
            "assignment/powers do not match scenario dimensions".into(),
        ));
    }
    let static_j = per_csp_static_j(params, cfg.antennas_per_csp, cfg.coherence_len, cfg.pilot_len)?;
    let ecsp_j = ecsp_block_energy_j(params, cfg.coherence_len);
    let pa_coeff = pa_objective_coeff(params, cfg.coherence_len, cfg.pilot_len);

    let active_csps: f64 = assignment
        .y
        .iter()
        .map(|&b| if b { 1.0 } else { 0.0 })
        .sum();
    let active_ecsps: f64 = assignment
        .z
        .iter()
        .map(|&b| if b { 1.0 } else { 0.0 })
        .sum();
    let pa_sum: f64 = (0..s_count)
        .map(|s| {
            (0..f_count)
                .map(|f| powers.rho[(s, f)].powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .sum();

    let total_j = static_j * active_csps + ecsp_j * active_ecsps + pa_coeff * pa_sum;
    Ok(ObjectiveValue {
        total_j,
        avg_power_w: total_j * params.f_bb_hz / cfg.coherence_len as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Assignment, PowerAllocation};
    use crate::scenario::{build_scenario, ScenarioConfig};
    use nalgebra::DMatrix;

    fn fig3_scenario() -> crate::scenario::Scenario {
        build_scenario(&ScenarioConfig {
            num_csps: 4,
            num_ecsps: 2,
            antennas_per_csp: 16,
            num_ues: 3,
            num_federations: 2,
            pilot_len: 12,
            coherence_len: 200,
            carrier_hz: 3e9,
            rate_thr_bps: 20e6,
            seed: 1,
            ..ScenarioConfig::default()
        })
        .unwrap()
    }

    #[test]
    fn golden_dac_power() {
        let p = EnergyParams::default();
        let expect = 34.4e-15 * 4096.0 * 600e6;
        assert!((p.dac_power_w() - expect).abs() / expect < 1e-12);
        assert!((p.dac_power_w() - 0.0845).abs() < 1e-3);
    }

    #[test]
    fn golden_op_energy() {
        let e = op_energy(&EnergyParams::default());
        let expect = 1.2 * (3.1e-12 + 0.5e-12 + 6.4e-12);
        assert!((e - expect).abs() / expect < 1e-12);
    }

    #[test]
    fn op_energy_linearity() {
        let mut p = EnergyParams::default();
        let base = op_energy(&p);
        p.zeta *= 2.0;
        assert!((op_energy(&p) - 2.0 * base).abs() < 1e-24);
        p.zeta = 1.0;
        p.alpha_sram = 1e-300;
        p.gamma_dram = 1e-300;
        assert!((op_energy(&p) - p.e_mac_j).abs() < 1e-20);
    }

    #[test]
    fn pa_power_goldens() {
        let p = EnergyParams::default();
        assert!((pa_power(3.0, &p).unwrap() - 8.823529411764707).abs() < 1e-12);
        assert_eq!(pa_power(0.0, &p).unwrap(), 0.0);
        assert!((pa_power(0.75, &p).unwrap() - 1.5 / 0.34).abs() < 1e-12);
        assert!(pa_power(-0.1, &p).is_err());
        assert!(pa_power(3.01, &p).is_err());
    }

    #[test]
    fn block_energies_goldens() {
        let p = EnergyParams::default();
        let b = csp_block_energies(&p, 16, 12, 200, 12, 0.0).unwrap();
        let expect_ce = 2.0 * 16.0 * 12.0 * 12.0e-12 * 12.0;
        let expect_lp = 2.0 * 16.0 * 12.0 * 12.0e-12 * 188.0;
        assert!((b.e_ce - expect_ce).abs() / expect_ce < 1e-12);
        assert!((b.e_lp - expect_lp).abs() / expect_lp < 1e-12);
        let expect_ecsp = 9.2 * 200.0 / 20e6;
        assert!((b.e_ecsp - expect_ecsp).abs() / expect_ecsp < 1e-12);
        // static ~ 10.6 W when averaged over the block
        let static_w = b.per_csp_static * p.f_bb_hz / 200.0;
        assert!((static_w - 10.645).abs() < 0.01);
        assert!((b.total_j - (b.e_ce + b.e_lp + b.e_pa + b.e_dac + b.e_ecsp)).abs() < 1e-18);
        assert!((b.avg_power_w * 200.0 / p.f_bb_hz - b.total_j).abs() < 1e-18);
    }

    #[test]
    fn objective_zero_for_empty_solution() {
        let sc = fig3_scenario();
        let a = Assignment::empty(3, 4, 2, 2);
        let pw = PowerAllocation {
            rho: DMatrix::zeros(4, 2),
        };
        let v = objective_energy(&a, &pw, &sc, &EnergyParams::default()).unwrap();
        assert_eq!(v.total_j, 0.0);
    }

    #[test]
    fn objective_single_csp_golden() {
        let sc = fig3_scenario();
        let p = EnergyParams::default();
        let mut a = Assignment::empty(3, 4, 2, 2);
        a.y[(0, 0)] = true;
        a.z[0] = true;
        let mut pw = PowerAllocation {
            rho: DMatrix::zeros(4, 2),
        };
        pw.rho[(0, 0)] = 3.0f64.sqrt();
        let v = objective_energy(&a, &pw, &sc, &p).unwrap();
        let static_j = per_csp_static_j(&p, 16, 200, 12).unwrap();
        let expect = static_j + 9.2e-5 + 8.823529411764707 * 188.0 / 20e6;
        assert!((v.total_j - expect).abs() / expect < 1e-12);
        assert!((v.total_j - 2.816e-4).abs() < 2e-6);
    }

    #[test]
    fn objective_federation_permutation_invariant() {
        let sc = fig3_scenario();
        let p = EnergyParams::default();
        let mut a = Assignment::empty(3, 4, 2, 2);
        a.y[(0, 0)] = true;
        a.y[(2, 1)] = true;
        a.z[0] = true;
        a.z[1] = true;
        let mut pw = PowerAllocation {
            rho: DMatrix::zeros(4, 2),
        };
        pw.rho[(0, 0)] = 1.2;
        pw.rho[(2, 1)] = 0.4;
        let v1 = objective_energy(&a, &pw, &sc, &p).unwrap().total_j;
        // swap federation columns
        let mut a2 = a.clone();
        let mut pw2 = pw.clone();
        for s in 0..4 {
            a2.y[(s, 0)] = a.y[(s, 1)];
            a2.y[(s, 1)] = a.y[(s, 0)];
            pw2.rho[(s, 0)] = pw.rho[(s, 1)];
            pw2.rho[(s, 1)] = pw.rho[(s, 0)];
        }
        let v2 = objective_energy(&a2, &pw2, &sc, &p).unwrap().total_j;
        assert!((v1 - v2).abs() < 1e-18);
    }

    #[test]
    fn pa_concavity_split_costs_more() {
        // splitting 2 W across two CSPs costs more PA energy than one CSP at 2 W
        let p = EnergyParams::default();
        let split = 2.0 * pa_power(1.0, &p).unwrap();
        let single = pa_power(2.0, &p).unwrap();
        assert!(split > single);
    }
}
