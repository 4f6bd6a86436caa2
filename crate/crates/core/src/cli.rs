//! Command-line driver. Every command writes one JSON report with the
//! top-level keys `command`, `input`, `grid`, `results`, `checks` and
//! `runtime_ms`.
//!
//! Exit codes: 0 when every check passed, 2 when some check failed (the
//! report is still written), 1 on input or validation errors.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bipartite::{
    beta_exhaustive, beta_graph_exact, mixing_sequence, threshold_rounding, threshold_sweep,
    RatioReport, EXHAUSTIVE_LIMIT,
};
use crate::error::{Error, Result};
use crate::graphon::{associated_graphon, family, Graphon};
use crate::io::{read_input, write_csv, Input};
use crate::spectral::{antidirichlet, inner_v, lambda_max, lambda_max_graph_with};
use crate::verify::{bipartite_equivalence, verify_graph_correspondence, verify_graphon, Check, VerifyOptions};

pub const DEFAULT_GRID: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    LambdaMax,
    Beta,
    Verify,
    FromGraph,
    Mixing,
    Round,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BetaMethod {
    Exhaustive,
    Rounding,
    Both,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "dual-cheeger", version, about = "Top of the spectrum and bipartiteness ratio of step graphons")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Graphon or graph JSON file.
    #[arg(long)]
    pub input: PathBuf,
    /// Report destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// CSV destination for sweep data (`round`, `mixing`).
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Grid resolution for analytic families (default 128); grid kernels
    /// keep their own size unless this is given.
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_iter: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub restarts: usize,
    #[arg(long, value_enum, default_value_t = BetaMethod::Both)]
    pub method: BetaMethod,
    /// Cells per vertex when a graph is turned into a graphon.
    #[arg(long, default_value_t = 1)]
    pub blocks: usize,
    /// Highest doubling-map level for `mixing`.
    #[arg(long, default_value_t = 4)]
    pub levels: usize,
    /// Write `runtime_ms: 0` so repeated runs are byte-identical.
    #[arg(long)]
    pub no_timing: bool,
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        if self.grid == Some(0) {
            return Err(Error::BadParameters("--grid must be >= 1".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::BadParameters("--tol must be positive".into()));
        }
        if self.max_iter == 0 {
            return Err(Error::BadParameters("--max-iter must be >= 1".into()));
        }
        if self.blocks == 0 {
            return Err(Error::BadParameters("--blocks must be >= 1".into()));
        }
        Ok(())
    }

    fn verify_options(&self) -> VerifyOptions {
        VerifyOptions {
            spectral_tol: self.tol,
            max_iter: self.max_iter,
            seed: self.seed,
            restarts: self.restarts,
            ..VerifyOptions::default()
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: Command,
    pub input: String,
    pub grid: usize,
    pub results: Value,
    pub checks: Vec<Check>,
    pub runtime_ms: u64,
}

/// Runs one command and returns the process exit code.
pub fn run(config: &RunConfig) -> i32 {
    match execute(config) {
        Ok(report) => {
            match emit(config, &report) {
                Ok(()) => exit_code(&report),
                Err(err) => {
                    eprintln!("error: {err}");
                    1
                }
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

/// 0 when every check passed, 2 otherwise.
pub fn exit_code(report: &Report) -> i32 {
    if report.checks.iter().all(|c| c.passed) {
        0
    } else {
        2
    }
}

fn emit(config: &RunConfig, report: &Report) -> Result<()> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    match &config.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Runs the command without writing anything but CSV side output.
pub fn execute(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let input = read_input(&config.input)?;
    let (grid, results, checks) = match config.command {
        Command::LambdaMax => cmd_lambda_max(config, &input)?,
        Command::Beta => cmd_beta(config, &input)?,
        Command::Verify => cmd_verify(config, &input)?,
        Command::FromGraph => cmd_from_graph(config, &input)?,
        Command::Mixing => cmd_mixing(config, &input)?,
        Command::Round => cmd_round(config, &input)?,
    };
    let runtime_ms = if config.no_timing { 0 } else { start.elapsed().as_millis() as u64 };
    Ok(Report {
        command: config.command,
        input: config.input.display().to_string(),
        grid,
        results,
        checks,
        runtime_ms,
    })
}

type Outcome = (usize, Value, Vec<Check>);

fn graphon_of(config: &RunConfig, input: &Input) -> Result<Graphon> {
    match input {
        Input::Graphon(spec) => {
            let m = config.grid.or(spec.native_resolution()).unwrap_or(DEFAULT_GRID);
            family(spec, m)
        }
        Input::Graph(spec) => associated_graphon(&spec.to_graph()?, config.blocks),
    }
}

fn ratio_json(r: &RatioReport) -> Value {
    json!({
        "beta": r.beta,
        "witness": r.witness,
        "threshold": r.threshold,
    })
}

fn cmd_lambda_max(config: &RunConfig, input: &Input) -> Result<Outcome> {
    let result = match input {
        Input::Graph(spec) => lambda_max_graph_with(&spec.to_graph()?, config.tol, config.max_iter, config.seed)?,
        Input::Graphon(_) => {
            let w = graphon_of(config, input)?;
            lambda_max(&w, config.tol, config.max_iter, config.seed)?
        }
    };
    Ok((result.grid, serde_json::to_value(&result)?, Vec::new()))
}

fn rounding_of(config: &RunConfig, w: &Graphon) -> Result<Option<RatioReport>> {
    let spectrum = lambda_max(w, config.tol, config.max_iter, config.seed)?;
    spectrum.eigenfunction.map(|f| threshold_rounding(w, &f)).transpose()
}

fn cmd_beta(config: &RunConfig, input: &Input) -> Result<Outcome> {
    let exhaustive = |w: &Graphon| -> Result<RatioReport> {
        match input {
            Input::Graph(spec) => beta_graph_exact(&spec.to_graph()?),
            Input::Graphon(_) => beta_exhaustive(w),
        }
    };
    let w = graphon_of(config, input)?;
    let grid = match input {
        Input::Graph(spec) => spec.n,
        Input::Graphon(_) => w.m(),
    };
    let results = match config.method {
        BetaMethod::Exhaustive => {
            let mut v = ratio_json(&exhaustive(&w)?);
            v["method"] = json!("exhaustive");
            v
        }
        BetaMethod::Rounding => {
            let r = rounding_of(config, &w)?.ok_or_else(|| {
                Error::BadParameters("no step eigenfunction to round: λ_max = 1 is attained off the grid".into())
            })?;
            let mut v = ratio_json(&r);
            v["method"] = json!("rounding");
            v
        }
        BetaMethod::Both => {
            let size = match input {
                Input::Graph(spec) => spec.n,
                Input::Graphon(_) => w.m(),
            };
            let ex = if size <= EXHAUSTIVE_LIMIT { Some(exhaustive(&w)?) } else { None };
            let ro = rounding_of(config, &w)?;
            json!({
                "exhaustive": ex.as_ref().map(ratio_json),
                "rounding": ro.as_ref().map(ratio_json),
            })
        }
    };
    Ok((grid, results, Vec::new()))
}

fn cmd_verify(config: &RunConfig, input: &Input) -> Result<Outcome> {
    let opts = config.verify_options();
    let report = match input {
        Input::Graph(spec) => verify_graph_correspondence(&spec.to_graph()?, config.blocks, &opts)?,
        Input::Graphon(_) => {
            let w = graphon_of(config, input)?;
            let mut report = verify_graphon(&w, &opts)?;
            if w.min_degree() >= opts.degree_floor {
                let eq = bipartite_equivalence(&w, &opts)?;
                report.equivalence = eq.equivalence;
                report.checks.extend(eq.checks);
            }
            report
        }
    };
    let checks = report.checks.clone();
    let mut results = serde_json::to_value(&report)?;
    if let Value::Object(map) = &mut results {
        map.remove("checks");
    }
    Ok((report.grid, results, checks))
}

fn cmd_from_graph(config: &RunConfig, input: &Input) -> Result<Outcome> {
    let Input::Graph(spec) = input else {
        return Err(Error::BadParameters("from-graph needs a graph input".into()));
    };
    let w = associated_graphon(&spec.to_graph()?, config.blocks)?;
    let results = json!({
        "n": spec.n,
        "cells_per_vertex": config.blocks,
        "graphon": { "family": "grid", "kernel": w.rows() },
    });
    Ok((w.m(), results, Vec::new()))
}

fn cmd_mixing(config: &RunConfig, input: &Input) -> Result<Outcome> {
    let w = graphon_of(config, input)?;
    let seq = mixing_sequence(&w, config.levels)?;
    if let Some(path) = &config.csv {
        let rows: Vec<(String, f64)> = seq.iter().enumerate().map(|(n, &b)| (n.to_string(), b)).collect();
        write_csv(path, ("n", "beta"), &rows)?;
    }
    let sequence: Vec<Value> = seq.iter().enumerate().map(|(n, &b)| json!({ "n": n, "beta": b })).collect();
    Ok((w.m(), json!({ "levels": config.levels, "sequence": sequence }), Vec::new()))
}

fn cmd_round(config: &RunConfig, input: &Input) -> Result<Outcome> {
    let w = graphon_of(config, input)?;
    let spectrum = lambda_max(&w, config.tol, config.max_iter, config.seed)?;
    let f = spectrum.eigenfunction.ok_or_else(|| {
        Error::BadParameters("no step eigenfunction to round: λ_max = 1 is attained off the grid".into())
    })?;
    let sweep = threshold_sweep(&w, &f)?;
    let best = threshold_rounding(&w, &f)?;
    let bound_sq = antidirichlet(&w, &f)? / inner_v(&w, &f, &f)?;
    if let Some(path) = &config.csv {
        let rows: Vec<(String, f64)> =
            sweep.iter().map(|p| (crate::io::format_sig12(p.t), p.beta)).collect();
        write_csv(path, ("t", "beta"), &rows)?;
    }
    let checks = vec![Check::new("rounding_contract", best.beta * best.beta, bound_sq, 1e-9)];
    let results = json!({
        "lambda_max": spectrum.lambda_max,
        "best": ratio_json(&best),
        "bound": bound_sq.sqrt(),
        "sweep": sweep.iter().map(|p| json!({ "t": p.t, "beta": p.beta })).collect::<Vec<_>>(),
    });
    Ok((w.m(), results, checks))
}
