//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion does.

use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::process::Command;

use dirrelay::analytic::{
    expected_density, expected_density_closed, expected_density_numeric, relay_distance_cdf, rm_from_p, rm_upper_bound_with,
    stationarity_residuals, success_probability, BoundForm, ProgressModel,
};
use dirrelay::model::{beta_from_db, derive_constants, spatial_constant, NetworkParams};
use dirrelay::optimize::{optimize_joint_with, optimize_rm_with, solve_stationary_system};
use dirrelay::simulate::{estimate_density_of_progress, estimate_link_success, simulate_trials, summarize};
use dirrelay::stats::{kolmogorov_pvalue, ks_statistic};
use dirrelay::{OptimizationResult, OptimizeOptions, ProtocolVariant, SimConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn base() -> NetworkParams {
    NetworkParams {
        lambda: 1.0,
        alpha: 3.0,
        beta: beta_from_db(10.0),
        ..NetworkParams::default()
    }
}

fn grid(n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| PI / 6.0 + (2.0 * PI - PI / 6.0) * i as f64 / (n - 1) as f64)
        .collect()
}

fn joint(params: &NetworkParams, variant: ProtocolVariant) -> Result<OptimizationResult, String> {
    optimize_joint_with(&ProgressModel::new(variant, params), &OptimizeOptions::default()).map_err(|e| e.to_string())
}

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn constant_p() -> Outcome {
    let mut ps = Vec::new();
    for phi in grid(12) {
        ps.push(
            joint(&NetworkParams { phi, ..base() }, ProtocolVariant::Directional)?
                .p_star
                .unwrap(),
        );
    }
    let lo = ps.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let within = ps.iter().all(|p| (p - 0.12).abs() <= 0.005);
    ensure(
        within && hi - lo < 1e-4,
        format!("p* in [{lo:.8}, {hi:.8}], spread {:.2e}", hi - lo),
    )
}

fn closed_form_vs_quadrature() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let lambda = rng.random_range(0.1..10.0);
        let params = NetworkParams {
            lambda,
            alpha: rng.random_range(2.2..5.0),
            beta: beta_from_db(rng.random_range(0.0..20.0)),
            mu: 1.0,
            p: rng.random_range(0.02..0.9),
            phi: rng.random_range(0.05..1.0) * 2.0 * PI,
            r_m: rng.random_range(0.0..1.5) / lambda.sqrt(),
        };
        let closed = expected_density_closed(&params);
        let numeric = expected_density_numeric(&params).map_err(|e| e.to_string())?;
        worst = worst.max((closed - numeric).abs() / numeric.abs());
    }
    ensure(worst <= 1e-8, format!("max relative error {worst:.2e} over 100 scenarios"))
}

fn bound_dominance() -> Outcome {
    let mut rederived_violations = 0;
    let mut halved_violations = Vec::new();
    let phis = grid(24);
    for &phi in &phis {
        let params = NetworkParams { phi, p: 0.1, ..base() };
        let model = ProgressModel::new(ProtocolVariant::Directional, &params);
        let rm = optimize_rm_with(&model, 0.1, &OptimizeOptions::default())
            .map_err(|e| e.to_string())?
            .rm_star;
        let bound = rm_upper_bound_with(&params, BoundForm::Rederived).map_err(|e| e.to_string())?;
        let halved = rm_upper_bound_with(&params, BoundForm::HalvedConstant).map_err(|e| e.to_string())?;
        if bound < rm {
            rederived_violations += 1;
        }
        if halved < rm {
            halved_violations.push(format!("{phi:.3}"));
        }
    }
    ensure(
        rederived_violations == 0,
        format!(
            "bound holds on {}/{} rows; halved-constant variant violated on {} rows",
            phis.len() - rederived_violations,
            phis.len(),
            halved_violations.len()
        ),
    )
}

fn closed_form_rm() -> Outcome {
    let t = spatial_constant(3.0, beta_from_db(10.0));
    let p_star = solve_stationary_system(t).map_err(|e| e.to_string())?.p_star;
    let mut worst: f64 = 0.0;
    let mut previous = f64::INFINITY;
    let mut monotone = true;
    for phi in grid(12) {
        let params = NetworkParams { phi, ..base() };
        let model = ProgressModel::new(ProtocolVariant::Directional, &params);
        let searched = optimize_rm_with(&model, p_star, &OptimizeOptions::default())
            .map_err(|e| e.to_string())?
            .rm_star;
        let closed = rm_from_p(&params, p_star).map_err(|e| e.to_string())?;
        worst = worst.max((searched - closed).abs());
        monotone &= closed <= previous;
        previous = closed;
    }
    ensure(
        worst < 1e-3 && monotone,
        format!("max |search - closed form| = {worst:.2e}, non-increasing: {monotone}"),
    )
}

fn cross_route() -> Outcome {
    let t = spatial_constant(3.0, beta_from_db(10.0));
    let root = solve_stationary_system(t).map_err(|e| e.to_string())?;
    let reference = stationarity_residuals(root.p_star, root.u_star, t).map_err(|e| e.to_string())?;
    let mut worst_gap: f64 = 0.0;
    let mut worst_res: f64 = 0.0;
    let mut bitwise = true;
    for phi in [PI / 6.0, PI / 2.0, PI, 2.0 * PI] {
        let params = NetworkParams { phi, ..base() };
        let opt = joint(&params, ProtocolVariant::Directional)?;
        worst_gap = worst_gap.max((opt.p_star.unwrap() - root.p_star).abs());
        worst_res = worst_res.max(opt.residuals.unwrap().max_abs());
        let t_here = derive_constants(&params).t;
        let again = stationarity_residuals(root.p_star, root.u_star, t_here).map_err(|e| e.to_string())?;
        bitwise &= again.res_rm.to_bits() == reference.res_rm.to_bits() && again.res_p.to_bits() == reference.res_p.to_bits();
    }
    ensure(
        worst_gap < 1e-6 && worst_res < 1e-8 && bitwise,
        format!("p* gap {worst_gap:.2e}, residuals {worst_res:.2e}, beamwidth-free residuals bitwise equal: {bitwise}"),
    )
}

fn scaling_law() -> Outcome {
    let mut ratios = Vec::new();
    for lambda in [0.5, 1.0, 2.0, 4.0] {
        let opt = joint(&NetworkParams { lambda, ..base() }, ProtocolVariant::Directional)?;
        ratios.push(opt.objective / lambda.sqrt());
    }
    let worst = ratios.iter().map(|r| (r / ratios[0] - 1.0).abs()).fold(0.0, f64::max);
    ensure(
        worst < 1e-6,
        format!("E*/sqrt(lambda) = {:.10}, max relative deviation {worst:.2e}", ratios[0]),
    )
}

fn simulator() -> Outcome {
    let mut params = NetworkParams {
        p: 0.12,
        phi: PI / 2.0,
        ..base()
    };
    let model = ProgressModel::new(ProtocolVariant::Directional, &params);
    params.r_m = optimize_rm_with(&model, 0.12, &OptimizeOptions::default())
        .map_err(|e| e.to_string())?
        .rm_star;
    let sim = SimConfig::for_density(1.0, 20_000, 2024);
    let samples = simulate_trials(&sim, &params, true).map_err(|e| e.to_string())?;
    let est = summarize(&samples, &params).map_err(|e| e.to_string())?;
    let exact = expected_density_closed(&params);
    let z = (est.mean - exact) / est.std_error;
    let rel_se = est.std_error / est.mean;

    let distances: Vec<f64> = samples.iter().filter(|s| s.relay_found).map(|s| s.d).collect();
    let ks = ks_statistic(&distances, |r| relay_distance_cdf(&params, r).unwrap_or(0.0));
    let ks_p = kolmogorov_pvalue(ks, distances.len());

    let link_sim = SimConfig::for_density(1.0, 100_000, 77);
    let mut worst_link: f64 = 0.0;
    for d in [0.1, 0.2, 0.3] {
        let est = estimate_link_success(&link_sim, &params, d).map_err(|e| e.to_string())?;
        worst_link = worst_link.max((est.probability / success_probability(&params, d) - 1.0).abs());
    }
    ensure(
        z.abs() <= 3.0 && rel_se < 0.02 && ks_p > 0.01 && worst_link < 0.02,
        format!(
            "E sim {:.6} vs closed {exact:.6} (z = {z:.2}, se/mean = {rel_se:.4}); KS p = {ks_p:.3}; link success max rel err {worst_link:.4}",
            est.mean
        ),
    )
}

fn directional_dominance() -> Outcome {
    let mut analytic_ok = true;
    for phi in grid(12).into_iter().filter(|&phi| phi < 2.0 * PI - 1e-9) {
        let params = NetworkParams { phi, ..base() };
        let dir = joint(&params, ProtocolVariant::Directional)?;
        let omni = joint(&params, ProtocolVariant::Omnidirectional)?;
        analytic_ok &= dir.objective > omni.objective;
    }
    let params = NetworkParams { phi: PI / 2.0, ..base() };
    let mut sims = Vec::new();
    for variant in [ProtocolVariant::Directional, ProtocolVariant::Omnidirectional] {
        let opt = joint(&params, variant)?;
        let at = NetworkParams {
            p: opt.p_star.unwrap(),
            r_m: opt.rm_star,
            ..params
        };
        let sim = SimConfig::for_density(1.0, 20_000, 5).with_variant(variant);
        sims.push(estimate_density_of_progress(&sim, &at).map_err(|e| e.to_string())?);
        assert!(expected_density(variant, &at) > 0.0);
    }
    let separation = (sims[0].mean - sims[1].mean) / sims[0].std_error.hypot(sims[1].std_error);
    ensure(
        analytic_ok && separation > 3.0,
        format!(
            "analytic ordering on 11 beamwidths: {analytic_ok}; simulated {:.5} vs {:.5} ({separation:.1} sigma)",
            sims[0].mean, sims[1].mean
        ),
    )
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_dirrelay");
    let runs = [
        ("fig2", vec!["fig2", "--phi-count", "6"]),
        (
            "fig5",
            vec!["fig5", "--phis", "pi/2,pi", "--simulate", "--trials", "400", "--seed", "11"],
        ),
        ("simulate", vec!["simulate", "--trials", "500", "--seed", "4", "--per-trial"]),
    ];
    let mut checked = 0;
    for (name, args) in runs {
        let first = TempDir::new().map_err(|e| e.to_string())?;
        let second = TempDir::new().map_err(|e| e.to_string())?;
        let status = Command::new(bin)
            .args(&args)
            .arg("--out-dir")
            .arg(first.path())
            .output()
            .map(|o| o.status)
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("{name} exited with {status}"));
        }
        let manifest = first.path().join(format!("{name}.manifest.json"));
        let status = Command::new(bin)
            .arg("rerun")
            .arg(&manifest)
            .arg("--out-dir")
            .arg(second.path())
            .output()
            .map(|o| o.status)
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("rerun of {name} exited with {status}"));
        }
        for entry in fs::read_dir(first.path()).map_err(|e| e.to_string())? {
            let path = entry.map_err(|e| e.to_string())?.path();
            if path.extension().is_some_and(|e| e == "csv") {
                let again = second.path().join(path.file_name().unwrap());
                if fs::read(&path).ok() != fs::read(&again).ok() {
                    return Err(format!("{} differs on rerun", path.display()));
                }
                checked += 1;
            }
        }
    }
    let params = NetworkParams {
        p: 0.12,
        r_m: 0.3,
        ..base()
    };
    let sim = SimConfig::for_density(1.0, 2_000, 8);
    let parallel = simulate_trials(&sim, &params, true).map_err(|e| e.to_string())?;
    let serial = simulate_trials(&sim, &params, false).map_err(|e| e.to_string())?;
    let same = summarize(&parallel, &params).ok() == summarize(&serial, &params).ok()
        && parallel
            .iter()
            .zip(&serial)
            .all(|(a, b)| a.progress.to_bits() == b.progress.to_bits() && a.sir.to_bits() == b.sir.to_bits());
    ensure(
        same,
        format!("{checked} CSV files byte-identical on rerun; serial and parallel trials bitwise equal: {same}"),
    )
}

/// Written to the raw stderr handle so the verdicts show even when output is captured.
fn report(line: &str) {
    let _ = writeln!(std::io::stderr(), "{line}");
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("constant optimal p across beamwidths", constant_p),
        ("closed form matches quadrature", closed_form_vs_quadrature),
        ("reference-distance bound dominates the optimum", bound_dominance),
        ("closed-form optimal reference distance", closed_form_rm),
        ("stationary system agrees with direct optimizer", cross_route),
        ("optimal density scales with sqrt(lambda)", scaling_law),
        ("simulator matches closed forms", simulator),
        ("directional beats omnidirectional", directional_dominance),
        ("reruns are byte-identical", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => report(&format!("PASS {}: {name}: {detail}", i + 1)),
            Err(detail) => {
                report(&format!("FAIL {}: {name}: {detail}", i + 1));
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
