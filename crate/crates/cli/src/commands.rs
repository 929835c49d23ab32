use dirrelay::analytic::{expected_density, rm_from_p, rm_upper_bound_with, success_probability, AnalyticError, BoundForm, ProgressModel};
use dirrelay::model::{NetworkParams, PARAM_KEYS};
use dirrelay::optimize::{optimize_joint_with, optimize_rm_with};
use dirrelay::simulate::{estimate_density_of_progress, simulate_trials, summarize, write_trial_csv};
use dirrelay::{OptimizationResult, OptimizeOptions, ProtocolVariant, SimConfig};
use rayon::prelude::*;

use crate::args::{linspace, parse_list, Fig2Args, Fig5Args, GridCommand, OptimizeArgs, OptimizeTarget, SimArgs, SimulateArgs, SweepArgs};
use crate::output::{Row, Table};

/// Everything a command produces besides its manifest.
pub struct Outcome {
    pub tables: Vec<Table>,
    /// Extra files as `(name, contents)`.
    pub extra: Vec<(String, String)>,
    pub notes: Vec<String>,
}

impl Outcome {
    fn tables(tables: Vec<Table>) -> Self {
        Self {
            tables,
            extra: Vec::new(),
            notes: Vec::new(),
        }
    }
}

fn at_phi(params: &NetworkParams, phi: f64) -> NetworkParams {
    NetworkParams { phi, ..*params }
}

fn joint(params: &NetworkParams, variant: ProtocolVariant, opts: &OptimizeOptions) -> Result<OptimizationResult, String> {
    optimize_joint_with(&ProgressModel::new(variant, params), opts).map_err(|e| e.to_string())
}

fn bound_or_inf(params: &NetworkParams, form: BoundForm) -> Result<f64, String> {
    match rm_upper_bound_with(params, form) {
        Ok(b) => Ok(b),
        Err(AnalyticError::VacuousBound { .. }) => Ok(f64::INFINITY),
        Err(e) => Err(e.to_string()),
    }
}

fn flag(ok: bool) -> f64 {
    if ok {
        1.0
    } else {
        0.0
    }
}

pub fn fig2(args: &Fig2Args, params: &NetworkParams) -> Result<Outcome, String> {
    let phis = args.grid.phis(24)?;
    let opts = args.grid.common.options();
    let mut table = Table::new(
        "fig2",
        &[
            "phi",
            "p",
            "rm_numerical",
            "rm_bound",
            "rm_bound_halved_constant",
            "bound_holds",
            "halved_bound_holds",
        ],
    );
    table.rows = phis
        .par_iter()
        .map(|&phi| {
            let params = at_phi(params, phi);
            let row = || -> Result<Vec<f64>, String> {
                let model = ProgressModel::new(ProtocolVariant::Directional, &params);
                let rm = optimize_rm_with(&model, params.p, &opts).map_err(|e| e.to_string())?.rm_star;
                let bound = bound_or_inf(&params, BoundForm::Rederived)?;
                let halved = bound_or_inf(&params, BoundForm::HalvedConstant)?;
                Ok(vec![phi, params.p, rm, bound, halved, flag(bound >= rm), flag(halved >= rm)])
            };
            row().map_or_else(|e| Row::failed(7, e), Row::ok)
        })
        .collect();
    let violations = table.rows.iter().filter(|r| r.values[6] == 0.0).count();
    let mut out = Outcome::tables(vec![table]);
    out.notes.push(format!(
        "halved-constant bound falls below the numerical optimum on {violations} rows"
    ));
    Ok(out)
}

pub fn fig34(args: &GridCommand, params: &NetworkParams) -> Result<Outcome, String> {
    let phis = args.phis(12)?;
    let opts = args.common.options();
    let mut table = Table::new("fig34", &["phi", "p_star", "rm_star_numeric", "rm_star_closed_form", "objective"]);
    table.rows = phis
        .par_iter()
        .map(|&phi| {
            let params = at_phi(params, phi);
            let row = || -> Result<Vec<f64>, String> {
                let opt = joint(&params, ProtocolVariant::Directional, &opts)?;
                let p = opt.p_star.unwrap_or(f64::NAN);
                let closed = rm_from_p(&params, p).map_err(|e| e.to_string())?;
                Ok(vec![phi, p, opt.rm_star, closed, opt.objective])
            };
            row().map_or_else(|e| Row::failed(5, e), Row::ok)
        })
        .collect();
    let ok: Vec<&Row> = table.rows.iter().filter(|r| r.status.is_ok()).collect();
    let (lo, hi) = ok.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
        (lo.min(r.values[1]), hi.max(r.values[1]))
    });
    let max_gap = ok.iter().map(|r| (r.values[2] - r.values[3]).abs()).fold(0.0, f64::max);
    let mut out = Outcome::tables(vec![table]);
    out.notes.push(format!("p_star spread over the grid: {:e}", hi - lo));
    out.notes
        .push(format!("largest |rm_star_numeric - rm_star_closed_form|: {max_gap:e}"));
    Ok(out)
}

fn sim_config(sim: &SimArgs, params: &NetworkParams, seed: u64, variant: ProtocolVariant) -> SimConfig {
    let base = SimConfig::for_density(params.lambda, sim.trials, seed).with_variant(variant);
    SimConfig {
        window_radius: sim.window.unwrap_or(base.window_radius),
        guard_radius: sim.guard.unwrap_or(base.guard_radius),
        far_field_mean: !sim.truncate_field,
        ..base
    }
}

pub fn fig5(args: &Fig5Args, params: &NetworkParams) -> Result<Outcome, String> {
    let phis = args.grid.phis(12)?;
    let common = &args.grid.common;
    let opts = common.options();
    let mut columns = vec!["phi", "edp_directional_opt", "edp_omni_opt", "p_star_directional", "p_star_omni"];
    if args.simulate {
        columns.extend(["sim_directional", "sim_directional_se", "sim_omni", "sim_omni_se"]);
    }
    let width = columns.len();
    let mut table = Table::new("fig5", &columns);
    let analytic: Vec<Result<(OptimizationResult, OptimizationResult), String>> = phis
        .par_iter()
        .map(|&phi| {
            let params = at_phi(params, phi);
            Ok((
                joint(&params, ProtocolVariant::Directional, &opts)?,
                joint(&params, ProtocolVariant::Omnidirectional, &opts)?,
            ))
        })
        .collect();
    for (&phi, result) in phis.iter().zip(analytic) {
        let row = match result {
            Ok((dir, omni)) => {
                let mut values = vec![
                    phi,
                    dir.objective,
                    omni.objective,
                    dir.p_star.unwrap_or(f64::NAN),
                    omni.p_star.unwrap_or(f64::NAN),
                ];
                let mut status = Ok(());
                if args.simulate {
                    for (variant, opt) in [(ProtocolVariant::Directional, &dir), (ProtocolVariant::Omnidirectional, &omni)] {
                        let at = NetworkParams {
                            phi,
                            p: opt.p_star.unwrap_or(params.p),
                            r_m: opt.rm_star,
                            ..*params
                        };
                        match estimate_density_of_progress(&sim_config(&args.sim, &at, common.seed, variant), &at) {
                            Ok(est) => values.extend([est.mean, est.std_error]),
                            Err(e) => {
                                values.extend([f64::NAN, f64::NAN]);
                                status = Err(e.to_string());
                            }
                        }
                    }
                }
                Row { values, status }
            }
            Err(e) => Row::failed(width, e),
        };
        table.rows.push(row);
    }
    let mut out = Outcome::tables(vec![table]);
    out.notes.push(
        "at phi = 2pi both variants select relays over the full circle and every transmitter covers every receiver, \
         so the directional and omnidirectional columns coincide there"
            .into(),
    );
    Ok(out)
}

pub fn sweep(args: &SweepArgs, params: &NetworkParams) -> Result<Outcome, String> {
    if args.scaling {
        return scaling(args, params);
    }
    let key = args.key.as_str();
    if !PARAM_KEYS.contains(&key) {
        return Err(format!("unknown parameter key `{key}` (known: {})", PARAM_KEYS.join(", ")));
    }
    let values = grid_values(args, key)?.ok_or("sweep needs --values or --range")?;
    let mut table = Table::new("sweep", &[key, "edp_directional", "edp_omni", "success_at_r_m", "rm_bound"]);
    table.rows = values
        .par_iter()
        .map(|&v| {
            let row = || -> Result<Vec<f64>, String> {
                let mut point = *params;
                point.set(key, v).map_err(|e| e.to_string())?;
                let point = dirrelay::model::validate(point).map_err(|e| e.to_string())?;
                Ok(vec![
                    v,
                    expected_density(ProtocolVariant::Directional, &point),
                    expected_density(ProtocolVariant::Omnidirectional, &point),
                    success_probability(&point, point.r_m),
                    bound_or_inf(&point, BoundForm::Rederived)?,
                ])
            };
            row().map_or_else(|e| Row::failed(5, e), Row::ok)
        })
        .collect();
    Ok(Outcome::tables(vec![table]))
}

fn grid_values(args: &SweepArgs, key: &str) -> Result<Option<Vec<f64>>, String> {
    if let Some(list) = &args.values {
        return parse_list(key, list).map(Some);
    }
    if let Some(range) = &args.range {
        let parts = parse_list(key, range)?;
        let [lo, hi, n] = parts[..] else {
            return Err("--range expects lo,hi,count".into());
        };
        if !(n >= 1.0 && n.fract() == 0.0) {
            return Err(format!("--range count must be a positive integer, got {n}"));
        }
        return Ok(Some(linspace(lo, hi, n as usize)));
    }
    Ok(None)
}

fn scaling(args: &SweepArgs, params: &NetworkParams) -> Result<Outcome, String> {
    let lambdas = grid_values(args, "lambda")?.unwrap_or_else(|| vec![0.5, 1.0, 2.0, 4.0]);
    let opts = args.common.options();
    let mut table = Table::new("scaling", &["lambda", "p_star", "rm_star", "edp_star", "edp_star_over_sqrt_lambda"]);
    table.rows = lambdas
        .par_iter()
        .map(|&lambda| {
            let row = || -> Result<Vec<f64>, String> {
                if !(lambda > 0.0) {
                    return Err(format!("lambda must be positive, got {lambda}"));
                }
                let point = NetworkParams { lambda, ..*params };
                let opt = joint(&point, ProtocolVariant::Directional, &opts)?;
                Ok(vec![
                    lambda,
                    opt.p_star.unwrap_or(f64::NAN),
                    opt.rm_star,
                    opt.objective,
                    opt.objective / lambda.sqrt(),
                ])
            };
            row().map_or_else(|e| Row::failed(5, e), Row::ok)
        })
        .collect();
    let ratios: Vec<f64> = table.rows.iter().filter(|r| r.status.is_ok()).map(|r| r.values[4]).collect();
    let spread = ratios.iter().fold(0.0_f64, |m, r| m.max((r / ratios[0] - 1.0).abs()));
    let mut out = Outcome::tables(vec![table]);
    if !ratios.is_empty() {
        out.notes
            .push(format!("largest relative deviation of edp_star/sqrt(lambda): {spread:e}"));
    }
    Ok(out)
}

pub fn optimize(args: &OptimizeArgs, params: &NetworkParams) -> Result<Outcome, String> {
    let opts = args.common.options();
    let model = ProgressModel::new(args.variant.into(), params);
    let result = match args.target {
        OptimizeTarget::Rm => optimize_rm_with(&model, params.p, &opts),
        OptimizeTarget::Joint => optimize_joint_with(&model, &opts),
    };
    let columns = ["p_star", "rm_star", "objective", "iterations", "converged", "res_rm", "res_p"];
    let mut table = Table::new("optimize", &columns);
    let row_of = |r: &OptimizationResult| {
        vec![
            r.p_star.unwrap_or(f64::NAN),
            r.rm_star,
            r.objective,
            r.iterations as f64,
            flag(r.converged),
            r.residuals.map_or(f64::NAN, |s| s.res_rm),
            r.residuals.map_or(f64::NAN, |s| s.res_p),
        ]
    };
    table.rows.push(match &result {
        Ok(r) => Row::ok(row_of(r)),
        Err(dirrelay::OptimizeError::NotConverged(best)) => Row {
            values: row_of(best),
            status: Err("not converged; best point reported".into()),
        },
        Err(e) => Row::failed(columns.len(), e.to_string()),
    });
    Ok(Outcome::tables(vec![table]))
}

pub fn simulate(args: &SimulateArgs, params: &NetworkParams) -> Result<Outcome, String> {
    let variant: ProtocolVariant = args.variant.into();
    let sim = sim_config(&args.sim, params, args.common.seed, variant);
    let samples = simulate_trials(&sim, params, true).map_err(|e| e.to_string())?;
    let columns = [
        "mean",
        "std_error",
        "ci95_low",
        "ci95_high",
        "analytic",
        "z_score",
        "trials_used",
        "relay_found_fraction",
        "rejected",
    ];
    let mut table = Table::new("simulate", &columns);
    table.rows.push(match summarize(&samples, params) {
        Ok(est) => {
            let analytic = expected_density(variant, params);
            Row::ok(vec![
                est.mean,
                est.std_error,
                est.mean - 1.96 * est.std_error,
                est.mean + 1.96 * est.std_error,
                analytic,
                (est.mean - analytic) / est.std_error,
                est.trials_used as f64,
                est.relay_found_fraction,
                est.rejected as f64,
            ])
        }
        Err(e) => Row::failed(columns.len(), e.to_string()),
    });
    let mut out = Outcome::tables(vec![table]);
    if args.per_trial {
        let mut buf = Vec::new();
        write_trial_csv(&mut buf, &samples).map_err(|e| e.to_string())?;
        out.extra
            .push(("simulate_trials.csv".into(), String::from_utf8(buf).map_err(|e| e.to_string())?));
    }
    out.notes.push(format!(
        "window {} guard {} trials {} far-field mean {}",
        sim.window_radius, sim.guard_radius, sim.trials, sim.far_field_mean
    ));
    Ok(out)
}
