//! Command-line front end: single solves, Monte Carlo sweeps, a federation
//! sweep, the built-in oracle suite, and an assignment-subproblem dump.
//!
//! Exit codes: 0 on success (an infeasible solve is still a successful run),
//! 2 on configuration errors, 3 on oracle failures, 1 on anything else.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cellfed::experiment::{
    dump_assignment_milp, run_oracle_suite, run_single, run_sweep, ExperimentConfig,
};
use cellfed::Error;

#[derive(Parser)]
#[command(
    name = "cellfed",
    version,
    about = "Energy-minimal federation planning for a cell-free massive MIMO downlink"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one drop and print the outcome as JSON.
    Run(CommonArgs),
    /// Monte Carlo sweep over the configured axes; emits CSV.
    Sweep(CommonArgs),
    /// Sweep the federation count (pilot length follows as K/F); emits CSV.
    Federations(FederationsArgs),
    /// Run the built-in solver cross-checks and report pass/fail.
    Oracle {
        /// Cap on enumerated binaries in the branch-and-bound check.
        #[arg(long, default_value_t = 8)]
        size_limit: usize,
    },
    /// Print the assignment subproblem of the first alternation step in the
    /// plain-text exchange format.
    DumpMilp(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// JSON experiment config; defaults are used when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Master seed override.
    #[arg(long)]
    seed: Option<u64>,
    /// CSP count override (also pins the sweep axis).
    #[arg(long)]
    csps: Option<u32>,
    /// Antennas per CSP override (also pins the sweep axis).
    #[arg(long)]
    antennas: Option<u32>,
    /// Per-UE rate requirement override in Mbit/s (also pins the sweep axis).
    #[arg(long)]
    rate_mbps: Option<f64>,
    /// Federation count override; pilot length is set to ceil(K/F).
    #[arg(long)]
    federations: Option<u32>,
    /// Monte Carlo drops per sweep cell.
    #[arg(long)]
    drops: Option<u32>,
    /// Output path (CSV for sweeps, text for dump-milp).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the effective merged config before running.
    #[arg(long)]
    show_params: bool,
    /// Record wall-clock time per row (breaks byte-identical reruns).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct FederationsArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Federation counts to sweep.
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3, 4])]
    counts: Vec<u32>,
}

fn load_config(args: &CommonArgs) -> Result<ExperimentConfig, Error> {
    let mut cfg = match &args.config {
        Some(path) => ExperimentConfig::from_json(&std::fs::read_to_string(path)?)?,
        None => ExperimentConfig::default(),
    };
    if let Some(seed) = args.seed {
        cfg.scenario.seed = seed;
    }
    if let Some(s) = args.csps {
        cfg.scenario.num_csps = s;
        cfg.sweep.csp_counts = vec![s];
    }
    if let Some(m) = args.antennas {
        cfg.scenario.antennas_per_csp = m;
        cfg.sweep.antenna_counts = vec![m];
    }
    if let Some(rate) = args.rate_mbps {
        cfg.scenario.rate_thr_bps = rate * 1e6;
        cfg.sweep.rates_mbps = vec![rate];
    }
    if let Some(f) = args.federations {
        cfg.scenario.num_federations = f;
        cfg.scenario.pilot_len = cfg.scenario.num_ues.div_ceil(f);
        cfg.sweep.federation_counts = vec![f];
    }
    if let Some(d) = args.drops {
        cfg.drops = d;
    }
    if args.out.is_some() {
        cfg.out_path = args.out.clone();
    }
    cfg.timing = cfg.timing || args.timing;
    cfg.validate()?;
    if args.show_params {
        println!("{}", cfg.to_json()?);
    }
    Ok(cfg)
}

fn cmd_run(args: &CommonArgs) -> Result<(), Error> {
    let cfg = load_config(args)?;
    let (row, outcome) = run_single(&cfg)?;
    println!("{}", outcome.to_json()?);
    match (row.feasible, row.total_power_w) {
        (true, Some(p)) => eprintln!(
            "feasible: {:.3} W over {} active CSPs ({} outer iterations)",
            p,
            row.active_csps.unwrap_or(0),
            row.outer_iters
        ),
        _ => eprintln!("infeasible after {} outer iterations", row.outer_iters),
    }
    Ok(())
}

fn cmd_sweep(cfg: &ExperimentConfig) -> Result<(), Error> {
    let result = run_sweep(cfg)?;
    match &cfg.out_path {
        Some(path) => eprintln!(
            "wrote {} per-drop rows and {} aggregates to {}",
            result.rows.len(),
            result.aggregates.len(),
            path.display()
        ),
        None => print!("{}", result.csv),
    }
    Ok(())
}

fn cmd_oracle(size_limit: usize) -> Result<bool, Error> {
    let report = run_oracle_suite(size_limit)?;
    for check in &report.checks {
        println!(
            "{} {}: {}",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.detail
        );
    }
    Ok(report.all_passed())
}

fn cmd_dump_milp(args: &CommonArgs) -> Result<(), Error> {
    let cfg = load_config(args)?;
    let text = dump_assignment_milp(&cfg)?;
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<bool, Error> {
    match &cli.cmd {
        Command::Run(args) => cmd_run(args).map(|()| true),
        Command::Sweep(args) => {
            let cfg = load_config(args)?;
            cmd_sweep(&cfg).map(|()| true)
        }
        Command::Federations(args) => {
            let mut cfg = load_config(&args.common)?;
            if args.common.federations.is_none() {
                cfg.sweep.federation_counts = args.counts.clone();
            }
            cfg.validate()?;
            cmd_sweep(&cfg).map(|()| true)
        }
        Command::Oracle { size_limit } => cmd_oracle(*size_limit),
        Command::DumpMilp(args) => cmd_dump_milp(args).map(|()| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3), // oracle mismatch
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Config(_)
                | Error::Json(_)
                | Error::ShapeMismatch(_)
                | Error::StructuralInfeasibility(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
