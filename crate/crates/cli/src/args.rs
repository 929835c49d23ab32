use std::f64::consts::PI;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dirrelay::model::{parse_number, validate, NetworkParams, PARAM_KEYS};
use dirrelay::{OptimizeOptions, ProtocolVariant};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "dirrelay",
    version,
    about = "Relay selection with directional antennas: figures, sweeps, optimization and simulation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Optimal reference distance at fixed p against its analytic upper bounds
    Fig2(Fig2Args),
    /// Jointly optimal p and reference distance across beamwidths
    Fig34(GridCommand),
    /// Optimal density of progress, directional against omnidirectional
    Fig5(Fig5Args),
    /// Evaluate the closed forms over a grid of one parameter
    Sweep(SweepArgs),
    /// Optimize a single scenario
    Optimize(OptimizeArgs),
    /// Monte-Carlo estimate of the density of progress
    Simulate(SimulateArgs),
    /// Re-run a command from its manifest
    Rerun(RerunArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Fig2(_) => "fig2",
            Command::Fig34(_) => "fig34",
            Command::Fig5(_) => "fig5",
            Command::Sweep(_) => "sweep",
            Command::Optimize(_) => "optimize",
            Command::Simulate(_) => "simulate",
            Command::Rerun(_) => "rerun",
        }
    }

    pub fn common(&self) -> Option<&CommonArgs> {
        match self {
            Command::Fig2(a) => Some(&a.grid.common),
            Command::Fig34(a) => Some(&a.common),
            Command::Fig5(a) => Some(&a.grid.common),
            Command::Sweep(a) => Some(&a.common),
            Command::Optimize(a) => Some(&a.common),
            Command::Simulate(a) => Some(&a.common),
            Command::Rerun(_) => None,
        }
    }

    pub fn common_mut(&mut self) -> Option<&mut CommonArgs> {
        match self {
            Command::Fig2(a) => Some(&mut a.grid.common),
            Command::Fig34(a) => Some(&mut a.common),
            Command::Fig5(a) => Some(&mut a.grid.common),
            Command::Sweep(a) => Some(&mut a.common),
            Command::Optimize(a) => Some(&mut a.common),
            Command::Simulate(a) => Some(&mut a.common),
            Command::Rerun(_) => None,
        }
    }
}

/// Scenario, tolerances and output location shared by every command.
#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct CommonArgs {
    /// Config file: flat `key = value` lines or a JSON object
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Parameter override `key=value`; repeatable
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    /// SIR threshold in dB
    #[arg(long, conflicts_with = "beta_linear")]
    pub beta_db: Option<f64>,
    /// SIR threshold, linear
    #[arg(long)]
    pub beta_linear: Option<f64>,
    #[arg(long)]
    pub mu: Option<f64>,
    #[arg(long)]
    pub p: Option<f64>,
    /// Beamwidth; accepts forms like `pi/2`
    #[arg(long, value_parser = parse_angle)]
    pub phi: Option<f64>,
    #[arg(long)]
    pub r_m: Option<f64>,
    /// Output directory
    #[arg(long, env = "DIRRELAY_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-6)]
    pub argmax_tol: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub residual_tol: f64,
    #[arg(long, default_value_t = 200)]
    pub max_rounds: usize,
}

fn parse_angle(raw: &str) -> Result<f64, String> {
    parse_number("phi", raw).map_err(|e| e.to_string())
}

#[derive(Debug)]
pub struct Resolved {
    pub params: NetworkParams,
    pub overrides: Vec<(String, String)>,
}

impl CommonArgs {
    /// Defaults, then the config file, then `--set`, then dedicated flags.
    pub fn resolve(&self) -> Result<Resolved, String> {
        let mut params = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
                NetworkParams::from_config_str(&text).map_err(|e| e.to_string())?
            }
            None => NetworkParams::default(),
        };
        let mut overrides = Vec::new();
        for pair in &self.set {
            let (key, raw) = pair
                .split_once('=')
                .ok_or_else(|| format!("--set expects KEY=VALUE, got `{pair}`"))?;
            let key = key.trim();
            if !PARAM_KEYS.contains(&key) {
                return Err(format!("unknown parameter key `{key}` (known: {})", PARAM_KEYS.join(", ")));
            }
            params = params.with_overrides([(key, raw)]).map_err(|e| e.to_string())?;
            overrides.push((key.to_string(), raw.trim().to_string()));
        }
        let flags = [
            ("lambda", self.lambda),
            ("alpha", self.alpha),
            ("beta_db", self.beta_db),
            ("beta", self.beta_linear),
            ("mu", self.mu),
            ("p", self.p),
            ("phi", self.phi),
            ("r_m", self.r_m),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                params.set(key, v).map_err(|e| e.to_string())?;
                overrides.push((key.to_string(), format!("{v}")));
            }
        }
        let params = validate(params).map_err(|e| e.to_string())?;
        Ok(Resolved { params, overrides })
    }

    pub fn options(&self) -> OptimizeOptions {
        OptimizeOptions {
            argmax_tol: self.argmax_tol,
            residual_tol: self.residual_tol,
            max_rounds: self.max_rounds,
        }
    }
}

/// Beamwidth grid: explicit list or evenly spaced points on `[π/6, 2π]`.
#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct GridCommand {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Comma-separated beamwidths, e.g. `pi/6,pi/2,pi`
    #[arg(long)]
    pub phis: Option<String>,
    /// Number of evenly spaced beamwidths on [pi/6, 2pi]
    #[arg(long)]
    pub phi_count: Option<usize>,
}

impl GridCommand {
    pub fn phis(&self, default_count: usize) -> Result<Vec<f64>, String> {
        if let Some(list) = &self.phis {
            let values = parse_list("phi", list)?;
            if values.iter().any(|&v| !(v > 0.0 && v <= 2.0 * PI + 1e-12)) {
                return Err("beamwidths must lie in (0, 2pi]".into());
            }
            return Ok(values);
        }
        let n = self.phi_count.unwrap_or(default_count);
        if n == 0 {
            return Err("empty beamwidth grid".into());
        }
        Ok(linspace(PI / 6.0, 2.0 * PI, n))
    }
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

pub fn parse_list(key: &str, list: &str) -> Result<Vec<f64>, String> {
    let values: Vec<f64> = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_number(key, s).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    if values.is_empty() {
        return Err(format!("empty list for {key}"));
    }
    Ok(values)
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct Fig2Args {
    #[command(flatten)]
    pub grid: GridCommand,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct SimArgs {
    #[arg(long, default_value_t = 20_000)]
    pub trials: usize,
    /// Relay window radius; defaults to 15/sqrt(lambda)
    #[arg(long)]
    pub window: Option<f64>,
    /// Interference-only ring beyond the window; defaults to 10/sqrt(lambda)
    #[arg(long)]
    pub guard: Option<f64>,
    /// Drop the mean interference from beyond the guard ring
    #[arg(long)]
    pub truncate_field: bool,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct Fig5Args {
    #[command(flatten)]
    pub grid: GridCommand,
    /// Add simulated columns for both variants
    #[arg(long)]
    pub simulate: bool,
    #[command(flatten)]
    pub sim: SimArgs,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Parameter to vary
    #[arg(long, default_value = "phi")]
    pub key: String,
    /// Comma-separated values for the swept key
    #[arg(long, conflicts_with = "range")]
    pub values: Option<String>,
    /// `lo,hi,count` evenly spaced
    #[arg(long)]
    pub range: Option<String>,
    /// Joint optimum per density; values are densities (default 0.5,1,2,4)
    #[arg(long)]
    pub scaling: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum OptimizeTarget {
    /// Reference distance at the configured p
    Rm,
    /// Transmission probability and reference distance together
    Joint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum VariantArg {
    Directional,
    Omnidirectional,
}

impl From<VariantArg> for ProtocolVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Directional => ProtocolVariant::Directional,
            VariantArg::Omnidirectional => ProtocolVariant::Omnidirectional,
        }
    }
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct OptimizeArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value = "joint")]
    pub target: OptimizeTarget,
    #[arg(long, value_enum, default_value = "directional")]
    pub variant: VariantArg,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub sim: SimArgs,
    #[arg(long, value_enum, default_value = "directional")]
    pub variant: VariantArg,
    /// Also write one row per trial to `simulate_trials.csv`
    #[arg(long)]
    pub per_trial: bool,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct RerunArgs {
    /// Manifest written by an earlier run
    pub manifest: PathBuf,
    /// Write outputs here instead of the recorded directory
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}
