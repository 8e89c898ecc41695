//! Acceptance gate: one test per top-level criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see them as they complete).
//!
//! Numeric criteria check golden arithmetic and oracle equivalence; the
//! sweep criteria check qualitative orderings (power monotone in rate,
//! concentration beats distribution at equal antenna budget, infeasibility
//! onset ordering, federation-count sweet spot) that are robust to the
//! unstated noise/shadowing constants, instead of absolute Watt values.

mod common;

use cellfed::channel::{realize_channel, ChannelParams, ChannelRealization};
use cellfed::conesolve::{solve_power, PowerMode, PowerParams, SocpOptions, SocpStatus};
use cellfed::energy::{
    ecsp_block_energy_j, op_energy, pa_power, EnergyParams,
};
use cellfed::experiment::{
    joint_enumeration_oracle, run_sweep, tiny_config, ExperimentConfig, ResultRow, SweepAxes,
};
use cellfed::mipsolve::{solve_milp, LpInstance, MilpInstance, MilpOptions, MilpStatus, Sense};
use cellfed::model::{sinr_threshold, verify_solution, Assignment, Tolerances, VerifyContext};
use cellfed::orchestrator::{solve, SolveOptions, SystemModel};
use cellfed::rng::SeedTree;
use cellfed::scenario::build_scenario;
use nalgebra::{DMatrix, DVector};
use rand::Rng;

fn report(num: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "[criterion {num}] {name}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {num} ({name}) failed: {detail}");
}

fn rel_err(actual: f64, expected: f64) -> f64 {
    (actual - expected).abs() / expected.abs().max(1e-300)
}

#[test]
fn c1_energy_golden_values() {
    let p = EnergyParams::default();
    // analytic values from the hardware constants
    let dac_expect = 34.4e-15 * 4096.0 * 600e6; // ~84.5 mW
    let op_expect = 1.2 * (3.1e-12 + 0.1 * 5.0e-12 + 0.01 * 640.0e-12); // 12.0 pJ
    let ecsp_expect = (7.0 + 2.2) * 200.0 / 20e6; // 92 uJ per block
    let pa_expect = 3.0 / 0.34; // ~8.824 W at full power

    let checks = [
        ("P_DAC", p.dac_power_w(), dac_expect),
        ("E_op", op_energy(&p), op_expect),
        ("E_ECSP", ecsp_block_energy_j(&p, 200), ecsp_expect),
        ("P_PA(3W)", pa_power(3.0, &p).unwrap(), pa_expect),
    ];
    let worst = checks
        .iter()
        .map(|(_, a, e)| rel_err(*a, *e))
        .fold(0.0f64, f64::max);
    report(
        1,
        "energy golden values",
        worst < 1e-9,
        &format!(
            "P_DAC {:.4} mW, E_op {:.2} pJ, E_ECSP {:.1} uJ, P_PA {:.4} W; max rel err {worst:.2e}",
            checks[0].1 * 1e3,
            checks[1].1 * 1e12,
            checks[2].1 * 1e6,
            checks[3].1
        ),
    );
}

#[test]
fn c2_socp_matches_single_link_closed_form() {
    let tree = SeedTree::new(0xacce_0002);
    let mut rng = tree.stream("socp-acceptance");
    let (m, tau_p, tau_c) = (16u32, 12u32, 200u32);
    let noise_w = ChannelParams::default().noise_w;
    let energy = EnergyParams::default();
    let params = PowerParams {
        m_antennas: m,
        tau_p,
        noise_w,
        pt_max_w: energy.pt_max_w,
        pa_coeff_j: cellfed::energy::pa_objective_coeff(&energy, tau_c, tau_p),
    };
    let mut assignment = Assignment::empty(1, 1, 1, 1);
    assignment.x[(0, 0)] = true;
    assignment.y[(0, 0)] = true;
    assignment.z[0] = true;
    let opts = SocpOptions::default();

    let mut worst = 0.0f64;
    let mut infeasible_checked = 0u32;
    let mut pass = true;
    let mut detail = String::new();
    for trial in 0..100 {
        let beta = 10f64.powf(rng.gen_range(-12.0..-7.0));
        let gamma = beta * rng.gen_range(0.05..1.0);
        let rate = rng.gen_range(5e6..90e6);
        let req = sinr_threshold(rate, 20e6, tau_c, tau_p);
        let channel = ChannelRealization {
            beta: DMatrix::from_element(1, 1, beta),
            gamma: DMatrix::from_element(1, 1, gamma),
            los: DMatrix::from_element(1, 1, true),
        };
        let reqs = [req.clone()];
        // closed form: p = thr*sigma^2 / ((M/tau_p)*gamma - thr*beta)
        let denom = (m as f64 / tau_p as f64) * gamma - req.sinr_thr * beta;
        if denom > 0.0 && req.sinr_thr * noise_w / denom <= energy.pt_max_w {
            let p_closed = req.sinr_thr * noise_w / denom;
            let sol =
                solve_power(&assignment, &channel, &reqs, &params, PowerMode::Hard, &opts).unwrap();
            if sol.status != SocpStatus::Optimal {
                pass = false;
                detail = format!("trial {trial}: hard solve returned {:?}", sol.status);
                break;
            }
            let rel = rel_err(sol.powers.rho[(0, 0)].powi(2), p_closed);
            worst = worst.max(rel);
            if rel > 1e-6 {
                pass = false;
                detail = format!("trial {trial}: power off by {rel:.2e}");
                break;
            }
        } else {
            let sol = solve_power(
                &assignment,
                &channel,
                &reqs,
                &params,
                PowerMode::Penalized { lambda: 1.0 },
                &opts,
            )
            .unwrap();
            if sol.slack_sum <= 0.0 {
                pass = false;
                detail = format!("trial {trial}: infeasible link reported zero slack");
                break;
            }
            infeasible_checked += 1;
        }
    }
    if pass {
        detail = format!(
            "100 trials ({infeasible_checked} infeasible), max relative power error {worst:.2e}"
        );
    }
    report(2, "SOCP vs closed form", pass, &detail);
}

#[test]
fn c3_milp_matches_enumeration() {
    let tree = SeedTree::new(0xacce_0003);
    let mut rng = tree.stream("milp-acceptance");
    let mut worst = 0.0f64;
    let mut pass = true;
    let mut detail = String::new();
    for trial in 0..50 {
        let nb = rng.gen_range(4..=14usize);
        let nc = 3usize;
        let n = nb + nc;
        let m_rows = 8usize;
        let mut c = DVector::zeros(n);
        for j in 0..n {
            c[j] = rng.gen_range(-2.0..2.0);
        }
        let mut a = DMatrix::zeros(m_rows, n);
        let mut b = DVector::zeros(m_rows);
        for i in 0..m_rows {
            for j in 0..n {
                a[(i, j)] = rng.gen_range(-1.0..1.0);
            }
            b[i] = rng.gen_range(0.5..3.0); // origin stays feasible
        }
        let mut upper = DVector::from_element(n, 1.0);
        for j in nb..n {
            upper[j] = rng.gen_range(1.0..3.0);
        }
        let inst = MilpInstance {
            lp: LpInstance {
                c,
                a,
                senses: vec![Sense::Le; m_rows],
                b,
                lower: DVector::zeros(n),
                upper,
            },
            integer_vars: (0..nb).collect(),
        };
        let reference = common::enumerate_milp(&inst).expect("origin-feasible instance");
        let sol = solve_milp(&inst, &MilpOptions::default()).unwrap();
        if sol.status != MilpStatus::Optimal {
            pass = false;
            detail = format!("trial {trial} ({nb} binaries): status {:?}", sol.status);
            break;
        }
        let err = (sol.objective - reference).abs() / reference.abs().max(1.0);
        worst = worst.max(err);
        if err > 1e-8 {
            pass = false;
            detail = format!(
                "trial {trial} ({nb} binaries): bb {:.9e} vs enum {:.9e}",
                sol.objective, reference
            );
            break;
        }
    }
    if pass {
        detail = format!("50 instances with 4..=14 binaries, max relative gap {worst:.2e}");
    }
    report(3, "MILP vs enumeration", pass, &detail);
}

#[test]
fn c4_joint_heuristic_vs_tiny_oracle() {
    let tree = SeedTree::new(0xacce_0004);
    let mut rng = tree.stream("joint-acceptance");
    let energy = EnergyParams::default();
    let chp = ChannelParams::default();
    let mut oracle_feasible = 0u32;
    let mut within_ratio = 0u32;
    let mut worst_ratio = 0.0f64;
    let mut pass = true;
    let mut detail = String::new();
    for seed in 0..50u64 {
        let rate = rng.gen_range(10e6..60e6);
        let cfg = tiny_config(seed + 1, rate);
        let scenario = build_scenario(&cfg).unwrap();
        let mut channel_rng = SeedTree::new(cfg.seed).stream("channel");
        let channel = realize_channel(&scenario, &chp, &mut channel_rng).unwrap();
        let req = sinr_threshold(rate, 20e6, cfg.coherence_len, cfg.pilot_len);
        let requirements = vec![req; cfg.num_ues as usize];
        let exact =
            joint_enumeration_oracle(&scenario, &channel, &requirements, &energy, chp.noise_w)
                .unwrap();
        let model = SystemModel {
            scenario: &scenario,
            channel: &channel,
            requirements: &requirements,
            energy: &energy,
            noise_w: chp.noise_w,
        };
        let mut solver = SolveOptions::default();
        solver.seed = cfg.seed;
        let outcome = solve(&model, &solver).unwrap();
        match (exact, outcome.feasible()) {
            (Some(opt), Some(sol)) => {
                oracle_feasible += 1;
                if sol.objective_j < opt - 1e-6 * opt.abs().max(1e-12) {
                    pass = false;
                    detail = format!(
                        "seed {seed}: heuristic {:.6e} beats exact optimum {opt:.6e}",
                        sol.objective_j
                    );
                    break;
                }
                let ratio = sol.objective_j / opt;
                worst_ratio = worst_ratio.max(ratio);
                if ratio <= 1.5 {
                    within_ratio += 1;
                }
            }
            (Some(opt), None) => {
                pass = false;
                detail = format!("seed {seed}: oracle feasible at {opt:.6e} J, heuristic infeasible");
                break;
            }
            (None, Some(sol)) => {
                pass = false;
                detail = format!(
                    "seed {seed}: oracle infeasible, heuristic claims {:.6e} J",
                    sol.objective_j
                );
                break;
            }
            (None, None) => {}
        }
    }
    if pass {
        let frac = within_ratio as f64 / oracle_feasible.max(1) as f64;
        pass = frac >= 0.9;
        detail = format!(
            "{oracle_feasible}/50 oracle-feasible seeds, {within_ratio} within 1.5x \
             ({:.0}%), worst ratio {worst_ratio:.3}",
            frac * 100.0
        );
    }
    report(4, "joint heuristic vs tiny oracle", pass, &detail);
}

#[test]
fn c5_verifier_gate_over_regression_sweep() {
    let chp = ChannelParams::default();
    let energy = EnergyParams::default();
    let master = SeedTree::new(0xacce_0005);
    let mut feasible = 0u32;
    let mut pass = true;
    let mut detail = String::new();
    for drop in 0..100u64 {
        let rate = if drop % 2 == 0 { 20e6 } else { 40e6 };
        let cfg = cellfed::scenario::ScenarioConfig {
            num_csps: 15,
            rate_thr_bps: rate,
            seed: master.subtree("drop", drop).master(),
            ..cellfed::scenario::ScenarioConfig::default()
        };
        let scenario = build_scenario(&cfg).unwrap();
        let mut rng = SeedTree::new(cfg.seed).stream("channel");
        let channel = realize_channel(&scenario, &chp, &mut rng).unwrap();
        let req = sinr_threshold(rate, 20e6, cfg.coherence_len, cfg.pilot_len);
        let requirements = vec![req; cfg.num_ues as usize];
        let model = SystemModel {
            scenario: &scenario,
            channel: &channel,
            requirements: &requirements,
            energy: &energy,
            noise_w: chp.noise_w,
        };
        let mut solver = SolveOptions::default();
        solver.seed = cfg.seed;
        let outcome = solve(&model, &solver).unwrap();
        if let Some(sol) = outcome.feasible() {
            feasible += 1;
            // independent re-verification at declared tolerances
            let check = verify_solution(
                &sol.assignment,
                &sol.powers,
                &channel,
                &requirements,
                &scenario.ecsp_partition,
                &VerifyContext {
                    m_antennas: cfg.antennas_per_csp,
                    tau_c: cfg.coherence_len,
                    tau_p: cfg.pilot_len,
                    noise_w: chp.noise_w,
                    pt_max_w: energy.pt_max_w,
                },
                &Tolerances::default(),
            )
            .unwrap();
            if !check.feasible {
                pass = false;
                detail = format!("drop {drop}: returned solution fails re-verification");
                break;
            }
        }
    }
    if pass {
        detail = format!("100 drops, {feasible} feasible, zero verifier exceptions");
    }
    report(5, "verifier gate over 100-drop sweep", pass, &detail);
}

/// Runs the Fig.-3-style sweep for one (S, M) configuration.
fn config_sweep(s: u32, m: u32, rates: &[f64], drops: u32, seed: u64) -> cellfed::experiment::SweepResult {
    let mut cfg = ExperimentConfig::default();
    cfg.scenario.seed = seed;
    cfg.drops = drops;
    cfg.sweep = SweepAxes {
        rates_mbps: rates.to_vec(),
        csp_counts: vec![s],
        antenna_counts: vec![m],
        federation_counts: vec![2],
    };
    run_sweep(&cfg).unwrap()
}

fn row_power(rows: &[ResultRow], rate: f64, seed: u64) -> Option<f64> {
    rows.iter()
        .find(|r| r.rate_mbps == rate && r.seed == seed)
        .and_then(|r| r.total_power_w)
}

#[test]
fn c6_rate_sweep_trends() {
    let rates = [20.0, 40.0, 60.0, 96.0];
    let drops = 10;
    let seed = 42;
    // (S, M): lowest-capability first, then the equal-antenna-budget trio
    let configs = [(15u32, 8u32), (15, 32), (30, 16), (60, 8)];
    let sweeps: Vec<_> = configs
        .iter()
        .map(|&(s, m)| config_sweep(s, m, &rates, drops, seed))
        .collect();

    // (a) mean power non-decreasing in rate (5% heuristic noise allowance)
    let mut monotone = true;
    let mut mono_detail = String::new();
    for (ci, sweep) in sweeps.iter().enumerate() {
        let mut prev: Option<f64> = None;
        for agg in &sweep.aggregates {
            if let Some(mean) = agg.mean_power_w {
                if let Some(p) = prev {
                    if mean < p * 0.95 {
                        monotone = false;
                        mono_detail = format!(
                            "config {:?}: mean power drops from {p:.1} W to {mean:.1} W at {} Mbit/s",
                            configs[ci], agg.rate_mbps
                        );
                    }
                }
                prev = Some(mean);
            }
        }
    }

    // (b) at the fixed 480-antenna budget, fewer CSPs with more antennas win
    // the per-drop pairwise comparison at least 70% of the time
    let budget = [1usize, 2, 3]; // indices of (15,32), (30,16), (60,8)
    let mut wins = 0u32;
    let mut comparable = 0u32;
    let drop_seeds: Vec<u64> = sweeps[1].rows.iter().map(|r| r.seed).collect();
    for i in 0..budget.len() {
        for j in i + 1..budget.len() {
            let (a, b) = (&sweeps[budget[i]], &sweeps[budget[j]]);
            for &rate in &rates {
                for &ds in &drop_seeds {
                    if let (Some(pa), Some(pb)) =
                        (row_power(&a.rows, rate, ds), row_power(&b.rows, rate, ds))
                    {
                        comparable += 1;
                        if pa < pb {
                            wins += 1;
                        }
                    }
                }
            }
        }
    }
    let win_frac = wins as f64 / comparable.max(1) as f64;

    // (c) infeasibility onset: the weakest configuration (15x8) hits it at a
    // rate no later than every equal-budget configuration, and strictly
    // earlier than the strongest per-CSP one (15x32)
    let onset = |sweep: &cellfed::experiment::SweepResult| -> f64 {
        sweep
            .aggregates
            .iter()
            .find(|a| a.feasible_fraction <= 0.5)
            .map(|a| a.rate_mbps)
            .unwrap_or(f64::INFINITY)
    };
    let onsets: Vec<f64> = sweeps.iter().map(onset).collect();
    let onset_ok = onsets[0] <= onsets[1]
        && onsets[0] <= onsets[2]
        && onsets[0] <= onsets[3]
        && onsets[0] < onsets[1];

    let pass = monotone && win_frac >= 0.7 && onset_ok;
    report(
        6,
        "rate-sweep trends",
        pass,
        &format!(
            "monotone: {monotone}{}{}; concentration wins {wins}/{comparable} ({:.0}%); \
             infeasibility onsets (Mbit/s) 15x8={}, 15x32={}, 30x16={}, 60x8={}",
            if mono_detail.is_empty() { "" } else { " — " },
            mono_detail,
            win_frac * 100.0,
            onsets[0],
            onsets[1],
            onsets[2],
            onsets[3]
        ),
    );
}

#[test]
fn c7_federation_sweep_trend() {
    let mut cfg = ExperimentConfig::default();
    cfg.scenario.seed = 42;
    cfg.drops = 10;
    cfg.sweep = SweepAxes {
        rates_mbps: vec![60.0],
        csp_counts: vec![30],
        antenna_counts: vec![16],
        federation_counts: vec![1, 2, 3, 4],
    };
    let sweep = run_sweep(&cfg).unwrap();
    // paired per-drop comparison of F=1 vs F=2 at the highest rate
    let rows_f = |f: u32| -> Vec<&ResultRow> { sweep.rows.iter().filter(|r| r.f == f).collect() };
    let f1 = rows_f(1);
    let f2 = rows_f(2);
    let mut p1 = Vec::new();
    let mut p2 = Vec::new();
    for r1 in &f1 {
        if let Some(r2) = f2.iter().find(|r| r.seed == r1.seed) {
            if let (Some(a), Some(b)) = (r1.total_power_w, r2.total_power_w) {
                p1.push(a);
                p2.push(b);
            }
        }
    }
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len().max(1) as f64;
    let (m1, m2) = (mean(&p1), mean(&p2));
    let pass = !p1.is_empty() && m2 <= m1;
    let per_f: Vec<String> = sweep
        .aggregates
        .iter()
        .map(|a| {
            format!(
                "F={} {:.1} W ({:.0}% feasible)",
                a.f,
                a.mean_power_w.unwrap_or(f64::NAN),
                a.feasible_fraction * 100.0
            )
        })
        .collect();
    report(
        7,
        "federation-count trend",
        pass,
        &format!(
            "paired drops at 60 Mbit/s: F=1 mean {m1:.1} W vs F=2 mean {m2:.1} W over {} drops; {}",
            p1.len(),
            per_f.join(", ")
        ),
    );
}

#[test]
fn c8_byte_identical_csv() {
    let mut cfg = ExperimentConfig::default();
    cfg.scenario.seed = 11;
    cfg.scenario.num_csps = 15;
    cfg.drops = 3;
    cfg.sweep = SweepAxes {
        rates_mbps: vec![20.0, 40.0],
        csp_counts: vec![15],
        antenna_counts: vec![16],
        federation_counts: vec![2],
    };
    let a = run_sweep(&cfg).unwrap();
    let b = run_sweep(&cfg).unwrap();
    report(
        8,
        "byte-identical CSV determinism",
        a.csv == b.csv,
        &format!("{} bytes of CSV, identical across two runs", a.csv.len()),
    );
}
