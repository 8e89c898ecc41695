//! Experiment drivers: single runs, Monte Carlo sweeps over the scenario
//! axes, CSV and run-manifest artifacts, and a self-check oracle suite.
//!
//! Sweeps pair drops across configurations: drop `d` uses the same seed in
//! every sweep cell, so per-drop comparisons between configurations are
//! paired (common random numbers). Row order in the CSV is canonical —
//! sorted by (CSP count, antennas, federations, rate, drop) — regardless of
//! execution order.

use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::channel::{realize_channel, ChannelParams};
use crate::conesolve::{solve_power, PowerMode, PowerParams, SocpStatus};
use crate::energy::{
    ecsp_block_energy_j, objective_energy, pa_objective_coeff, per_csp_static_j, EnergyParams,
};
use crate::error::{Error, Result};
use crate::mipsolve::{
    build_assignment_milp, solve_lp, solve_milp, AssignParams, LpInstance, LpStatus, MilpInstance,
    MilpOptions, MilpStatus, Sense,
};
use crate::model::{sinr_threshold, Assignment, RateRequirement};
use crate::orchestrator::{initial_assignment, solve, MethodTag, SolveOptions, SystemModel};
use crate::rng::SeedTree;
use crate::scenario::{build_scenario, Scenario, ScenarioConfig};

/// Sweep axes; the Cartesian product of all four is evaluated.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct SweepAxes {
    pub rates_mbps: Vec<f64>,
    pub csp_counts: Vec<u32>,
    pub antenna_counts: Vec<u32>,
    pub federation_counts: Vec<u32>,
}

impl Default for SweepAxes {
    fn default() -> Self {
        Self {
            rates_mbps: vec![20.0, 40.0, 60.0, 96.0],
            csp_counts: vec![30],
            antenna_counts: vec![16],
            federation_counts: vec![2],
        }
    }
}

impl SweepAxes {
    pub fn validate(&self) -> Result<()> {
        if self.rates_mbps.is_empty()
            || self.csp_counts.is_empty()
            || self.antenna_counts.is_empty()
            || self.federation_counts.is_empty()
        {
            return Err(Error::Config("sweep: every axis must be non-empty".into()));
        }
        if self.rates_mbps.iter().any(|r| !(*r >= 0.0)) {
            return Err(Error::Config("sweep.rates_mbps: rates must be >= 0".into()));
        }
        Ok(())
    }

    /// Axes sorted ascending with duplicates removed (canonical row order).
    fn canonical(&self) -> SweepAxes {
        let mut rates = self.rates_mbps.clone();
        rates.sort_by(|a, b| a.partial_cmp(b).expect("validated finite rates"));
        rates.dedup();
        let sorted_dedup = |v: &[u32]| {
            let mut v = v.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        };
        SweepAxes {
            rates_mbps: rates,
            csp_counts: sorted_dedup(&self.csp_counts),
            antenna_counts: sorted_dedup(&self.antenna_counts),
            federation_counts: sorted_dedup(&self.federation_counts),
        }
    }
}

/// Full experiment description: one JSON document with defaults for every
/// parameter. Flags on the command line override individual fields.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentConfig {
    pub scenario: ScenarioConfig,
    pub channel: ChannelParams,
    pub energy: EnergyParams,
    pub solver: SolveOptions,
    pub sweep: SweepAxes,
    /// Monte Carlo drops per sweep cell.
    pub drops: u32,
    /// System bandwidth used to translate rate requirements into
    /// spectral-efficiency targets (Hz).
    pub bandwidth_hz: f64,
    /// Record wall-clock time per row. Off by default so that repeated runs
    /// of the same config produce byte-identical CSV output.
    pub timing: bool,
    /// CSV destination; `None` keeps results in memory only.
    pub out_path: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            scenario: ScenarioConfig::default(),
            channel: ChannelParams::default(),
            energy: EnergyParams::default(),
            solver: SolveOptions::default(),
            sweep: SweepAxes::default(),
            drops: 10,
            bandwidth_hz: 20e6,
            timing: false,
            out_path: None,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        self.scenario.validate()?;
        self.channel.validate()?;
        self.energy.validate()?;
        self.solver.validate()?;
        self.sweep.validate()?;
        if self.drops == 0 {
            return Err(Error::Config("drops must be >= 1".into()));
        }
        if !(self.bandwidth_hz > 0.0) {
            return Err(Error::Config("bandwidth_hz must be > 0".into()));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// One per-drop result. `feasible == false` leaves every power field empty.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResultRow {
    pub seed: u64,
    pub s: u32,
    pub s_bar: u32,
    pub m: u32,
    pub k: u32,
    pub f: u32,
    pub tau_p: u32,
    pub rate_mbps: f64,
    pub feasible: bool,
    pub total_power_w: Option<f64>,
    pub active_csps: Option<u32>,
    pub active_ecsps: Option<u32>,
    pub method_tag: Option<MethodTag>,
    pub outer_iters: u32,
    pub milp_nodes: u64,
    pub wall_time_s: Option<f64>,
}

/// CSV header; names match the `ResultRow` fields exactly. The leading
/// `row_kind` column distinguishes per-drop rows from aggregate rows.
pub const CSV_HEADER: &str = "row_kind,seed,s,s_bar,m,k,f,tau_p,rate_mbps,feasible,\
total_power_w,active_csps,active_ecsps,method_tag,outer_iters,milp_nodes,wall_time_s";

fn method_name(tag: MethodTag) -> &'static str {
    match tag {
        MethodTag::Alternation => "alternation",
        MethodTag::Random => "random",
        MethodTag::Refined => "refined",
    }
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

impl ResultRow {
    pub fn csv_line(&self) -> String {
        format!(
            "drop,{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.seed,
            self.s,
            self.s_bar,
            self.m,
            self.k,
            self.f,
            self.tau_p,
            self.rate_mbps,
            self.feasible,
            opt(&self.total_power_w),
            opt(&self.active_csps),
            opt(&self.active_ecsps),
            self.method_tag.map(method_name).unwrap_or(""),
            self.outer_iters,
            self.milp_nodes,
            opt(&self.wall_time_s),
        )
    }
}

/// Per-cell aggregate over drops: feasibility fraction and mean block-average
/// power over the feasible drops.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AggregateRow {
    pub s: u32,
    pub s_bar: u32,
    pub m: u32,
    pub k: u32,
    pub f: u32,
    pub tau_p: u32,
    pub rate_mbps: f64,
    pub feasible_fraction: f64,
    pub mean_power_w: Option<f64>,
}

impl AggregateRow {
    /// Same column layout as per-drop rows: `feasible` carries the fraction,
    /// `total_power_w` the mean; per-drop-only columns stay empty.
    pub fn csv_line(&self) -> String {
        format!(
            "aggregate,,{},{},{},{},{},{},{},{},{},,,,,,",
            self.s,
            self.s_bar,
            self.m,
            self.k,
            self.f,
            self.tau_p,
            self.rate_mbps,
            self.feasible_fraction,
            opt(&self.mean_power_w),
        )
    }
}

/// Builds and solves one drop with everything derived from `config.scenario`.
/// Returns the result row together with the raw solve outcome.
pub fn run_single(config: &ExperimentConfig) -> Result<(ResultRow, crate::orchestrator::SolveOutcome)> {
    config.validate()?;
    let cfg = &config.scenario;
    let scenario = build_scenario(cfg)?;
    let tree = SeedTree::new(cfg.seed);
    let mut rng = tree.stream("channel");
    let channel = realize_channel(&scenario, &config.channel, &mut rng)?;
    let req = sinr_threshold(
        cfg.rate_thr_bps,
        config.bandwidth_hz,
        cfg.coherence_len,
        cfg.pilot_len,
    );
    let requirements = vec![req; cfg.num_ues as usize];
    let mut solver = config.solver;
    solver.seed = cfg.seed;
    let model = SystemModel {
        scenario: &scenario,
        channel: &channel,
        requirements: &requirements,
        energy: &config.energy,
        noise_w: config.channel.noise_w,
    };
    let start = Instant::now();
    let outcome = solve(&model, &solver)?;
    let wall = start.elapsed().as_secs_f64();

    let (feasible, power, csps, ecsps, method, iters, nodes) = match outcome.feasible() {
        Some(sol) => (
            true,
            Some(sol.avg_power_w),
            Some(sol.assignment.active_csps() as u32),
            Some(sol.assignment.active_ecsps() as u32),
            Some(sol.method),
            sol.outer_iters,
            sol.milp_nodes,
        ),
        None => match &outcome {
            crate::orchestrator::SolveOutcome::Infeasible {
                outer_iters,
                milp_nodes,
                ..
            } => (false, None, None, None, None, *outer_iters, *milp_nodes),
            crate::orchestrator::SolveOutcome::Feasible(_) => unreachable!(),
        },
    };
    let row = ResultRow {
        seed: cfg.seed,
        s: cfg.num_csps,
        s_bar: cfg.num_ecsps,
        m: cfg.antennas_per_csp,
        k: cfg.num_ues,
        f: cfg.num_federations,
        tau_p: cfg.pilot_len,
        rate_mbps: cfg.rate_thr_bps / 1e6,
        feasible,
        total_power_w: power,
        active_csps: csps,
        active_ecsps: ecsps,
        method_tag: method,
        outer_iters: iters,
        milp_nodes: nodes,
        wall_time_s: config.timing.then_some(wall),
    };
    Ok((row, outcome))
}

/// Complete sweep output: per-drop rows in canonical order, per-cell
/// aggregates, and the rendered CSV text.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub rows: Vec<ResultRow>,
    pub aggregates: Vec<AggregateRow>,
    pub csv: String,
}

/// Runs the Cartesian product of the sweep axes times `drops` drops. Pilot
/// length follows the federation axis as `tau_p = ceil(K / F)` so that the
/// pilot budget always admits `K` users. Drop `d` reuses one seed across all
/// cells (paired comparisons). When `out_path` is set the CSV is flushed row
/// by row — an interrupted run keeps its partial results — and a JSON
/// manifest (config hash, master seed, crate version) lands next to it.
pub fn run_sweep(config: &ExperimentConfig) -> Result<SweepResult> {
    config.validate()?;
    let axes = config.sweep.canonical();
    let master = SeedTree::new(config.scenario.seed);
    let drop_seeds: Vec<u64> = (0..config.drops as u64)
        .map(|d| master.subtree("drop", d).master())
        .collect();

    let mut writer: Option<std::io::BufWriter<std::fs::File>> = match &config.out_path {
        Some(path) => {
            if let Some(dir) = path.parent() {
                if !dir.as_os_str().is_empty() {
                    std::fs::create_dir_all(dir)?;
                }
            }
            Some(std::io::BufWriter::new(std::fs::File::create(path)?))
        }
        None => None,
    };
    let mut csv = String::new();
    let emit = |line: &str, writer: &mut Option<std::io::BufWriter<std::fs::File>>,
                    csv: &mut String|
     -> Result<()> {
        csv.push_str(line);
        csv.push('\n');
        if let Some(w) = writer {
            writeln!(w, "{line}")?;
            w.flush()?;
        }
        Ok(())
    };
    emit(CSV_HEADER, &mut writer, &mut csv)?;

    let mut rows = Vec::new();
    let mut aggregates = Vec::new();
    for &s in &axes.csp_counts {
        for &m in &axes.antenna_counts {
            for &f in &axes.federation_counts {
                for &rate in &axes.rates_mbps {
                    let k = config.scenario.num_ues;
                    let tau_p = k.div_ceil(f);
                    let mut cell_power = Vec::new();
                    let mut cell_feasible = 0u32;
                    for &seed in &drop_seeds {
                        let mut one = config.clone();
                        one.out_path = None;
                        one.scenario.num_csps = s;
                        one.scenario.antennas_per_csp = m;
                        one.scenario.num_federations = f;
                        one.scenario.pilot_len = tau_p;
                        one.scenario.rate_thr_bps = rate * 1e6;
                        one.scenario.seed = seed;
                        let (row, _) = run_single(&one)?;
                        emit(&row.csv_line(), &mut writer, &mut csv)?;
                        if row.feasible {
                            cell_feasible += 1;
                            cell_power.push(row.total_power_w.expect("feasible row has power"));
                        }
                        rows.push(row);
                    }
                    let agg = AggregateRow {
                        s,
                        s_bar: config.scenario.num_ecsps,
                        m,
                        k,
                        f,
                        tau_p,
                        rate_mbps: rate,
                        feasible_fraction: cell_feasible as f64 / config.drops as f64,
                        mean_power_w: (!cell_power.is_empty())
                            .then(|| cell_power.iter().sum::<f64>() / cell_power.len() as f64),
                    };
                    emit(&agg.csv_line(), &mut writer, &mut csv)?;
                    aggregates.push(agg);
                }
            }
        }
    }

    if let Some(path) = &config.out_path {
        write_manifest(config, path)?;
    }
    Ok(SweepResult {
        rows,
        aggregates,
        csv,
    })
}

/// Writes `<out>.manifest.json` describing the run: SHA-256 of the effective
/// config, master seed, and crate version.
fn write_manifest(config: &ExperimentConfig, out: &std::path::Path) -> Result<()> {
    let config_json = config.to_json()?;
    let hash = Sha256::digest(config_json.as_bytes());
    let manifest = serde_json::json!({
        "format": "cellfed-sweep-v1",
        "config_sha256": format!("{hash:x}"),
        "master_seed": config.scenario.seed,
        "drops": config.drops,
        "crate": env!("CARGO_PKG_NAME"),
        "version": env!("CARGO_PKG_VERSION"),
    });
    let mut path = out.as_os_str().to_owned();
    path.push(".manifest.json");
    std::fs::write(
        PathBuf::from(path),
        serde_json::to_string_pretty(&manifest)? + "\n",
    )?;
    Ok(())
}

/// One check of the oracle suite.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`run_oracle_suite`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleReport {
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs the built-in cross-checks: the cone solver against the single-link
/// closed form, branch-and-bound against exhaustive enumeration (capped at
/// `size_limit` binaries), and the full heuristic against a brute-force
/// oracle on a tiny instance.
pub fn run_oracle_suite(size_limit: usize) -> Result<OracleReport> {
    if size_limit > 16 {
        return Err(Error::Config(
            "oracle size limit above 16 binaries would enumerate too many leaves".into(),
        ));
    }
    let checks = vec![
        socp_closed_form_check()?,
        milp_enumeration_check(size_limit.min(14))?,
        joint_tiny_check()?,
    ];
    Ok(OracleReport { checks })
}

/// Minimal transmit power of an isolated UE-CSP link:
/// `p = thr * sigma^2 / ((M/tau_p) * gamma - thr * beta)`, defined only when
/// the denominator is positive.
pub fn single_link_power(
    m: u32,
    tau_p: u32,
    gamma: f64,
    beta: f64,
    noise_w: f64,
    sinr_thr: f64,
) -> Option<f64> {
    let denom = (m as f64 / tau_p as f64) * gamma - sinr_thr * beta;
    (denom > 0.0).then(|| sinr_thr * noise_w / denom)
}

fn single_link_model(s: u32) -> (ScenarioConfig, Assignment) {
    let cfg = ScenarioConfig {
        num_csps: s,
        num_ecsps: 1,
        num_ues: 1,
        num_federations: 1,
        pilot_len: 12,
        ..ScenarioConfig::default()
    };
    let mut assignment = Assignment::empty(1, s as usize, 1, 1);
    assignment.x[(0, 0)] = true;
    assignment.y[(0, 0)] = true;
    assignment.z[0] = true;
    (cfg, assignment)
}

fn socp_closed_form_check() -> Result<OracleCheck> {
    let tree = SeedTree::new(0xccf0_u64);
    let mut rng = tree.stream("socp-oracle");
    let (cfg, assignment) = single_link_model(1);
    let noise_w = ChannelParams::default().noise_w;
    let energy = EnergyParams::default();
    let params = PowerParams {
        m_antennas: cfg.antennas_per_csp,
        tau_p: cfg.pilot_len,
        noise_w,
        pt_max_w: energy.pt_max_w,
        pa_coeff_j: pa_objective_coeff(&energy, cfg.coherence_len, cfg.pilot_len),
    };
    let opts = crate::conesolve::SocpOptions::default();

    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for trial in 0..100 {
        let beta = 10f64.powf(rng.gen_range(-12.0..-7.0));
        let gamma = beta * rng.gen_range(0.05..1.0);
        let rate = rng.gen_range(5e6..90e6);
        let req = sinr_threshold(rate, 20e6, cfg.coherence_len, cfg.pilot_len);
        let channel = crate::channel::ChannelRealization {
            beta: nalgebra::DMatrix::from_element(1, 1, beta),
            gamma: nalgebra::DMatrix::from_element(1, 1, gamma),
            los: nalgebra::DMatrix::from_element(1, 1, true),
        };
        let reqs = [req.clone()];
        match single_link_power(
            cfg.antennas_per_csp,
            cfg.pilot_len,
            gamma,
            beta,
            noise_w,
            req.sinr_thr,
        ) {
            Some(p_closed) if p_closed <= energy.pt_max_w => {
                let sol = solve_power(
                    &assignment,
                    &channel,
                    &reqs,
                    &params,
                    PowerMode::Hard,
                    &opts,
                )?;
                if sol.status != SocpStatus::Optimal {
                    failures.push(format!("trial {trial}: hard solve not optimal"));
                    continue;
                }
                let p_solver = sol.powers.rho[(0, 0)].powi(2);
                let rel = (p_solver - p_closed).abs() / p_closed.max(1e-300);
                worst = worst.max(rel);
                if rel > 1e-6 {
                    failures.push(format!("trial {trial}: rel err {rel:.2e}"));
                }
            }
            _ => {
                // structurally infeasible (or beyond the power cap): the
                // penalized solve must report strictly positive slack
                let sol = solve_power(
                    &assignment,
                    &channel,
                    &reqs,
                    &params,
                    PowerMode::Penalized { lambda: 1.0 },
                    &opts,
                )?;
                if sol.slack_sum <= 0.0 {
                    failures.push(format!("trial {trial}: infeasible case had zero slack"));
                }
            }
        }
    }
    Ok(OracleCheck {
        name: "socp-closed-form".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("100 trials, max relative error {worst:.2e}")
        } else {
            failures.join("; ")
        },
    })
}

/// Exhaustive reference solve: fixes every binary pattern and takes the best
/// continuous solve. Exponential in the binary count; callers cap it.
pub fn enumerate_milp(instance: &MilpInstance) -> Result<(Option<f64>, MilpStatus)> {
    let nb = instance.integer_vars.len();
    assert!(nb <= 16, "enumeration limited to 16 binaries");
    let mut best: Option<f64> = None;
    for mask in 0u32..(1 << nb) {
        let mut lp = instance.lp.clone();
        let mut valid = true;
        for (bit, &j) in instance.integer_vars.iter().enumerate() {
            let v = f64::from((mask >> bit) & 1);
            if v < lp.lower[j] - 1e-12 || v > lp.upper[j] + 1e-12 {
                valid = false;
                break;
            }
            lp.lower[j] = v;
            lp.upper[j] = v;
        }
        if !valid {
            continue;
        }
        let sol = solve_lp(&lp)?;
        if sol.status == LpStatus::Optimal && best.map(|b| sol.objective < b).unwrap_or(true) {
            best = Some(sol.objective);
        }
    }
    Ok(match best {
        Some(obj) => (Some(obj), MilpStatus::Optimal),
        None => (None, MilpStatus::Infeasible),
    })
}

fn milp_enumeration_check(max_binaries: usize) -> Result<OracleCheck> {
    let tree = SeedTree::new(0xccf1_u64);
    let mut rng = tree.stream("milp-oracle");
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for trial in 0..30 {
        let nb = rng.gen_range(4..=max_binaries.max(4));
        let nc = 3usize;
        let n = nb + nc;
        let m = 6usize;
        let mut c = nalgebra::DVector::zeros(n);
        for j in 0..n {
            c[j] = rng.gen_range(-2.0..2.0);
        }
        let mut a = nalgebra::DMatrix::zeros(m, n);
        let mut b = nalgebra::DVector::zeros(m);
        for i in 0..m {
            for j in 0..n {
                a[(i, j)] = rng.gen_range(-1.0..1.0);
            }
            // keep the origin feasible so every instance has an optimum
            b[i] = rng.gen_range(0.5..3.0);
        }
        let mut upper = nalgebra::DVector::from_element(n, 1.0);
        for j in nb..n {
            upper[j] = rng.gen_range(1.0..3.0);
        }
        let inst = MilpInstance {
            lp: LpInstance {
                c,
                a,
                senses: vec![Sense::Le; m],
                b,
                lower: nalgebra::DVector::zeros(n),
                upper,
            },
            integer_vars: (0..nb).collect(),
        };
        let (reference, _) = enumerate_milp(&inst)?;
        let reference = reference.expect("origin-feasible instance");
        let sol = solve_milp(&inst, &MilpOptions::default())?;
        if sol.status != MilpStatus::Optimal {
            failures.push(format!("trial {trial}: status {:?}", sol.status));
            continue;
        }
        let err = (sol.objective - reference).abs() / reference.abs().max(1.0);
        worst = worst.max(err);
        if err > 1e-8 {
            failures.push(format!(
                "trial {trial}: bb {:.9e} vs enum {:.9e}",
                sol.objective, reference
            ));
        }
    }
    Ok(OracleCheck {
        name: "milp-enumeration".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("30 instances, max relative gap {worst:.2e}")
        } else {
            failures.join("; ")
        },
    })
}

/// Tiny instance used by the joint oracle.
pub fn tiny_config(seed: u64, rate_bps: f64) -> ScenarioConfig {
    ScenarioConfig {
        num_csps: 4,
        num_ecsps: 2,
        antennas_per_csp: 16,
        num_ues: 3,
        num_federations: 2,
        pilot_len: 2,
        rate_thr_bps: rate_bps,
        seed,
        ..ScenarioConfig::default()
    }
}

/// Brute-force joint oracle: enumerates every (UE assignment, CSP activation)
/// combination respecting pilot capacity, solves the hard power problem for
/// each, and returns the minimal objective. Exponential; tiny instances only.
pub fn joint_enumeration_oracle(
    scenario: &Scenario,
    channel: &crate::channel::ChannelRealization,
    requirements: &[RateRequirement],
    energy: &EnergyParams,
    noise_w: f64,
) -> Result<Option<f64>> {
    let cfg = &scenario.config;
    let (k, s, f) = (
        cfg.num_ues as usize,
        cfg.num_csps as usize,
        cfg.num_federations as usize,
    );
    assert!(
        (f + 1).pow(s as u32) * f.pow(k as u32) <= 20_000,
        "joint oracle only supports tiny instances"
    );
    let params = PowerParams {
        m_antennas: cfg.antennas_per_csp,
        tau_p: cfg.pilot_len,
        noise_w,
        pt_max_w: energy.pt_max_w,
        pa_coeff_j: pa_objective_coeff(energy, cfg.coherence_len, cfg.pilot_len),
    };
    let opts = crate::conesolve::SocpOptions::default();
    let mut best: Option<f64> = None;
    // UE memberships: base-F counter over K digits
    for x_code in 0..f.pow(k as u32) {
        let mut ue_fed = vec![0usize; k];
        let mut code = x_code;
        for slot in ue_fed.iter_mut() {
            *slot = code % f;
            code /= f;
        }
        let mut load = vec![0u32; f];
        for &fi in &ue_fed {
            load[fi] += 1;
        }
        if load.iter().any(|&l| l > cfg.pilot_len) {
            continue;
        }
        // CSP activations: base-(F+1) counter, digit F means inactive
        for y_code in 0..(f + 1).pow(s as u32) {
            let mut assignment = Assignment::empty(k, s, f, cfg.num_ecsps as usize);
            for (kk, &fi) in ue_fed.iter().enumerate() {
                assignment.x[(kk, fi)] = true;
            }
            let mut code = y_code;
            for si in 0..s {
                let digit = code % (f + 1);
                code /= f + 1;
                if digit < f {
                    assignment.y[(si, digit)] = true;
                }
            }
            for (e, members) in scenario.ecsp_partition.iter().enumerate() {
                assignment.z[e] = members
                    .iter()
                    .any(|&si| (0..f).any(|fi| assignment.y[(si, fi)]));
            }
            let sol = solve_power(
                &assignment,
                channel,
                requirements,
                &params,
                PowerMode::Hard,
                &opts,
            )?;
            if sol.status != SocpStatus::Optimal {
                continue;
            }
            let obj = objective_energy(&assignment, &sol.powers, scenario, energy)?;
            if best.map(|b| obj.total_j < b).unwrap_or(true) {
                best = Some(obj.total_j);
            }
        }
    }
    Ok(best)
}

fn joint_tiny_check() -> Result<OracleCheck> {
    let cfg = tiny_config(3, 30e6);
    let scenario = build_scenario(&cfg)?;
    let chp = ChannelParams::default();
    let tree = SeedTree::new(cfg.seed);
    let mut rng = tree.stream("channel");
    let channel = realize_channel(&scenario, &chp, &mut rng)?;
    let req = sinr_threshold(cfg.rate_thr_bps, 20e6, cfg.coherence_len, cfg.pilot_len);
    let requirements = vec![req; cfg.num_ues as usize];
    let energy = EnergyParams::default();
    let oracle = joint_enumeration_oracle(&scenario, &channel, &requirements, &energy, chp.noise_w)?;
    let model = SystemModel {
        scenario: &scenario,
        channel: &channel,
        requirements: &requirements,
        energy: &energy,
        noise_w: chp.noise_w,
    };
    let outcome = solve(&model, &SolveOptions::default())?;
    let (passed, detail) = match (oracle, outcome.feasible()) {
        (Some(exact), Some(sol)) => {
            let ok = sol.objective_j >= exact - 1e-6 * exact.abs().max(1e-12);
            (
                ok,
                format!(
                    "heuristic {:.6e} J vs exact {:.6e} J (ratio {:.4})",
                    sol.objective_j,
                    exact,
                    sol.objective_j / exact
                ),
            )
        }
        (Some(exact), None) => (
            false,
            format!("oracle feasible at {exact:.6e} J but heuristic infeasible"),
        ),
        (None, Some(sol)) => (
            false,
            format!(
                "oracle infeasible but heuristic claims {:.6e} J",
                sol.objective_j
            ),
        ),
        (None, None) => (true, "both infeasible".into()),
    };
    Ok(OracleCheck {
        name: "joint-tiny-instance".into(),
        passed,
        detail,
    })
}

/// Builds the assignment subproblem exactly as one alternation step would —
/// initial assignment, one penalized power solve, then the mixed binary
/// program — and returns its plain-text dump.
pub fn dump_assignment_milp(config: &ExperimentConfig) -> Result<String> {
    config.validate()?;
    let cfg = &config.scenario;
    let scenario = build_scenario(cfg)?;
    let tree = SeedTree::new(cfg.seed);
    let mut rng = tree.stream("channel");
    let channel = realize_channel(&scenario, &config.channel, &mut rng)?;
    let req = sinr_threshold(
        cfg.rate_thr_bps,
        config.bandwidth_hz,
        cfg.coherence_len,
        cfg.pilot_len,
    );
    let requirements = vec![req; cfg.num_ues as usize];
    let energy = &config.energy;
    let static_j = per_csp_static_j(energy, cfg.antennas_per_csp, cfg.coherence_len, cfg.pilot_len)?;
    let ecsp_j = ecsp_block_energy_j(energy, cfg.coherence_len);
    let lambda = config
        .solver
        .lambda
        .unwrap_or(1e4 * (static_j + ecsp_j));
    let power_params = PowerParams {
        m_antennas: cfg.antennas_per_csp,
        tau_p: cfg.pilot_len,
        noise_w: config.channel.noise_w,
        pt_max_w: energy.pt_max_w,
        pa_coeff_j: pa_objective_coeff(energy, cfg.coherence_len, cfg.pilot_len),
    };
    let assignment = initial_assignment(&scenario, cfg.num_federations as usize)?;
    let power = solve_power(
        &assignment,
        &channel,
        &requirements,
        &power_params,
        PowerMode::Penalized { lambda },
        &crate::conesolve::SocpOptions::default(),
    )?;
    let assign_params = AssignParams {
        m_antennas: cfg.antennas_per_csp,
        tau_p: cfg.pilot_len,
        noise_w: config.channel.noise_w,
        pt_max_w: energy.pt_max_w,
        csp_static_j: static_j,
        ecsp_energy_j: ecsp_j,
        lambda,
    };
    let milp = build_assignment_milp(
        &power.powers,
        &channel,
        &requirements,
        &scenario.ecsp_partition,
        &assign_params,
    )?;
    Ok(milp.instance.to_text())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_round_trips_json() {
        let cfg = ExperimentConfig::default();
        let text = cfg.to_json().unwrap();
        let back = ExperimentConfig::from_json(&text).unwrap();
        assert_eq!(back.drops, cfg.drops);
        assert_eq!(back.scenario.num_csps, cfg.scenario.num_csps);
    }

    #[test]
    fn empty_axis_rejected() {
        let mut cfg = ExperimentConfig::default();
        cfg.sweep.rates_mbps.clear();
        assert!(matches!(cfg.validate(), Err(Error::Config(_))));
    }

    #[test]
    fn zero_rate_row_is_trivially_feasible() {
        let mut cfg = ExperimentConfig::default();
        cfg.scenario = tiny_config(1, 0.0);
        let (row, _) = run_single(&cfg).unwrap();
        assert!(row.feasible);
        assert_eq!(row.active_csps, Some(0));
        assert!(row.total_power_w.unwrap() < 1e-12);
    }

    #[test]
    fn sweep_csv_structure_and_aggregates() {
        let mut cfg = ExperimentConfig::default();
        cfg.scenario = tiny_config(1, 10e6);
        cfg.drops = 3;
        cfg.sweep = SweepAxes {
            rates_mbps: vec![10.0, 5.0],
            csp_counts: vec![4],
            antenna_counts: vec![16],
            federation_counts: vec![2],
        };
        let out = run_sweep(&cfg).unwrap();
        // 2 rates x 3 drops per-drop rows, 2 aggregates
        assert_eq!(out.rows.len(), 6);
        assert_eq!(out.aggregates.len(), 2);
        let lines: Vec<&str> = out.csv.trim_end().lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 1 + 6 + 2);
        // canonical order: rates ascending
        assert!(out.rows[0].rate_mbps < out.rows[3].rate_mbps);
        // aggregates recomputable from the per-drop rows
        for agg in &out.aggregates {
            let cell: Vec<&ResultRow> = out
                .rows
                .iter()
                .filter(|r| r.rate_mbps == agg.rate_mbps)
                .collect();
            let feas: Vec<f64> = cell
                .iter()
                .filter(|r| r.feasible)
                .map(|r| r.total_power_w.unwrap())
                .collect();
            let frac = feas.len() as f64 / cell.len() as f64;
            assert!((frac - agg.feasible_fraction).abs() < 1e-12);
            if let Some(mean) = agg.mean_power_w {
                let recomputed = feas.iter().sum::<f64>() / feas.len() as f64;
                assert!((recomputed - mean).abs() <= 1e-9 * mean.abs().max(1.0));
            }
        }
    }

    #[test]
    fn sweep_is_byte_deterministic() {
        let mut cfg = ExperimentConfig::default();
        cfg.scenario = tiny_config(7, 10e6);
        cfg.drops = 2;
        cfg.sweep = SweepAxes {
            rates_mbps: vec![10.0],
            csp_counts: vec![4],
            antenna_counts: vec![16],
            federation_counts: vec![2],
        };
        let a = run_sweep(&cfg).unwrap();
        let b = run_sweep(&cfg).unwrap();
        assert_eq!(a.csv, b.csv);
    }

    #[test]
    fn single_link_power_matches_hand_arithmetic() {
        // thr=1, sigma^2=2e-13, (M/tau_p)*gamma - thr*beta = 4/3*3e-10 - 1e-10 = 3e-10
        let p = single_link_power(4, 3, 3e-10, 1e-10, 2e-13, 1.0).unwrap();
        assert!((p / (2e-13 / 3e-10) - 1.0).abs() < 1e-12);
        assert!(single_link_power(4, 3, 1e-10, 2e-9, 2e-13, 1.0).is_none());
    }

    #[test]
    fn oracle_suite_passes() {
        let report = run_oracle_suite(8).unwrap();
        for check in &report.checks {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn dump_milp_round_trips() {
        let mut cfg = ExperimentConfig::default();
        cfg.scenario = tiny_config(1, 20e6);
        let text = dump_assignment_milp(&cfg).unwrap();
        let back = MilpInstance::from_text(&text).unwrap();
        assert_eq!(back.lp.num_vars(), back.lp.c.len());
        assert!(!back.integer_vars.is_empty());
    }
}
