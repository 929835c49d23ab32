//! Maximization of the expected density of progress.
//!
//! Two independent routes reach the joint optimum:
//!
//! * [`optimize_joint`] works on the objective itself: coordinate ascent with
//!   golden-section line searches, a Nelder–Mead polish, and a final Newton
//!   step on the analytic gradient of `ln E` in `(p, r_m)`.
//! * [`solve_stationary_system`] finds the root of the two first-order
//!   conditions written in `u = k·r_m²`, where the beamwidth has cancelled.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analytic::{stationarity_residuals, AnalyticError, ProgressModel, StationarityResiduals};
use crate::model::{spatial_constant, validate, ModelError, NetworkParams, ProtocolVariant};

/// Search box for the transmission probability.
pub const P_MIN: f64 = 0.005;
pub const P_MAX: f64 = 0.495;
/// Upper end of the r_m search box, in units of `1/√k`.
pub const RM_BOX_SCALE: f64 = 3.0;
const PRESCAN_POINTS: usize = 64;
const GOLDEN: f64 = 0.618_033_988_749_894_8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizeOptions {
    /// Target accuracy of the argmax.
    pub argmax_tol: f64,
    /// Bound on first-order residuals for a result to count as converged.
    pub residual_tol: f64,
    /// Coordinate-ascent rounds before giving up.
    pub max_rounds: usize,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        Self {
            argmax_tol: 1e-6,
            residual_tol: 1e-8,
            max_rounds: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizationResult {
    /// Absent for runs at fixed `p`.
    pub p_star: Option<f64>,
    pub rm_star: f64,
    /// Expected density of progress at the argmax.
    pub objective: f64,
    pub iterations: usize,
    pub converged: bool,
    pub tolerance_used: f64,
    /// `(p·∂lnE/∂p, r_m·∂lnE/∂r_m)` at the argmax; the first entry is 0 for fixed-`p` runs.
    pub scaled_gradient: [f64; 2],
    /// First-order residuals in `u = k·r_m²` form; directional variant only.
    pub residuals: Option<StationarityResiduals>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OptimizeError {
    #[error("invalid search interval [{lo}, {hi}] or tolerance {tol}")]
    InvalidBracket { lo: f64, hi: f64, tol: f64 },
    #[error("objective is not finite at x = {0}")]
    NonFinite(f64),
    #[error("did not converge; best point p = {:?}, r_m = {}", .0.p_star, .0.rm_star)]
    NotConverged(Box<OptimizationResult>),
    #[error("no stationary point in the search box: {0}")]
    NoRoot(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Analytic(#[from] AnalyticError),
}

/// Maximizes `f` on `[lo, hi]`: a 64-point pre-scan locates the best cell
/// (ties within 1e-12 go to the smaller `x`), then golden-section search
/// shrinks the bracket around it to `2·tol`.
pub fn maximize_scalar<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<(f64, f64), OptimizeError> {
    if !(lo < hi) || !(tol > 0.0) || !lo.is_finite() || !hi.is_finite() {
        return Err(OptimizeError::InvalidBracket { lo, hi, tol });
    }
    let eval = |x: f64| {
        let y = f(x);
        if y.is_nan() {
            Err(OptimizeError::NonFinite(x))
        } else {
            Ok(y)
        }
    };
    let step = (hi - lo) / (PRESCAN_POINTS - 1) as f64;
    let grid_x = |i: usize| if i == PRESCAN_POINTS - 1 { hi } else { lo + step * i as f64 };
    let mut best_i = 0;
    let mut best_f = eval(lo)?;
    for i in 1..PRESCAN_POINTS {
        let y = eval(grid_x(i))?;
        if y > best_f + 1e-12 {
            best_i = i;
            best_f = y;
        }
    }
    let mut a = grid_x(best_i.saturating_sub(1));
    let mut b = grid_x((best_i + 1).min(PRESCAN_POINTS - 1));
    let mut c = b - GOLDEN * (b - a);
    let mut d = a + GOLDEN * (b - a);
    let mut fc = eval(c)?;
    let mut fd = eval(d)?;
    let mut guard = 0;
    while b - a > 2.0 * tol && guard < 500 {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - GOLDEN * (b - a);
            fc = eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + GOLDEN * (b - a);
            fd = eval(d)?;
        }
        guard += 1;
    }
    let mid = 0.5 * (a + b);
    let fm = eval(mid)?;
    let grid_best = grid_x(best_i);
    if fm >= best_f {
        Ok((mid, fm))
    } else {
        Ok((grid_best, best_f))
    }
}

fn rm_box(model: &ProgressModel, p: f64) -> f64 {
    RM_BOX_SCALE / model.k(p).sqrt()
}

fn stationarity_at(model: &ProgressModel, p: f64, r_m: f64) -> Option<StationarityResiduals> {
    match model.variant {
        ProtocolVariant::Directional => stationarity_residuals(p, model.k(p) * r_m * r_m, model.t).ok(),
        ProtocolVariant::Omnidirectional => None,
    }
}

/// Newton iterations on `∂lnE/∂r_m` at fixed `p`, kept only while they do not lose objective.
fn newton_polish_rm(model: &ProgressModel, p: f64, mut r: f64, hi: f64) -> (f64, usize) {
    let grad = |r: f64| model.log_gradient(p, r)[1];
    let mut iters = 0;
    for _ in 0..30 {
        let g = grad(r);
        let h = 1e-6 * r.max(1e-3);
        let curvature = (grad(r + h) - grad(r - h)) / (2.0 * h);
        if !(curvature < 0.0) {
            break;
        }
        let step = -g / curvature;
        let next = (r + step).clamp(0.0, hi);
        if model.log_shape(p, next) < model.log_shape(p, r) - 1e-14 {
            break;
        }
        iters += 1;
        let moved = (next - r).abs();
        r = next;
        if moved <= 1e-15 * (1.0 + r) {
            break;
        }
    }
    (r, iters)
}

/// Best `r_m` at fixed `p` for an arbitrary model.
pub fn optimize_rm_with(model: &ProgressModel, p: f64, opts: &OptimizeOptions) -> Result<OptimizationResult, OptimizeError> {
    if !(p > 0.0 && p < 1.0) {
        return Err(OptimizeError::Model(ModelError::Invalid(vec![crate::model::Violation {
            field: "p",
            message: format!("p out of range (0, 1): {p}"),
        }])));
    }
    let hi = rm_box(model, p);
    let (r0, _) = maximize_scalar(|r| model.log_shape(p, r), 0.0, hi, opts.argmax_tol)?;
    let (r, newton_iters) = newton_polish_rm(model, p, r0, hi);
    let grad = model.log_gradient(p, r);
    let residuals = stationarity_at(model, p, r);
    let scaled = [0.0, r * grad[1]];
    let converged = match residuals {
        Some(res) => res.res_rm.abs() <= opts.residual_tol,
        None => scaled[1].abs() <= opts.residual_tol,
    };
    let result = OptimizationResult {
        p_star: None,
        rm_star: r,
        objective: model.density(p, r),
        iterations: newton_iters + 1,
        converged,
        tolerance_used: opts.argmax_tol,
        scaled_gradient: scaled,
        residuals,
    };
    if converged {
        Ok(result)
    } else {
        Err(OptimizeError::NotConverged(Box::new(result)))
    }
}

/// Best `r_m` for the directional protocol at transmission probability `p`.
pub fn optimize_rm(params: &NetworkParams, p: f64) -> Result<OptimizationResult, OptimizeError> {
    let params = validate(NetworkParams { p, ..*params })?;
    optimize_rm_with(
        &ProgressModel::new(ProtocolVariant::Directional, &params),
        p,
        &OptimizeOptions::default(),
    )
}

/// Downhill simplex minimization of `f` from `x0` with initial edge lengths `step`.
pub(crate) fn nelder_mead<const N: usize, F>(f: F, x0: [f64; N], step: [f64; N], xtol: f64, max_iter: usize) -> ([f64; N], f64, usize)
where
    F: Fn(&[f64; N]) -> f64,
{
    let mut simplex: Vec<([f64; N], f64)> = Vec::with_capacity(N + 1);
    simplex.push((x0, f(&x0)));
    for i in 0..N {
        let mut x = x0;
        x[i] += step[i];
        simplex.push((x, f(&x)));
    }
    let combine = |a: &[f64; N], b: &[f64; N], t: f64| {
        let mut out = [0.0; N];
        for i in 0..N {
            out[i] = a[i] + t * (b[i] - a[i]);
        }
        out
    };
    let mut iter = 0;
    while iter < max_iter {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let size = simplex[1..]
            .iter()
            .map(|(x, _)| (0..N).map(|i| (x[i] - simplex[0].0[i]).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if size <= xtol {
            break;
        }
        iter += 1;
        let mut centroid = [0.0; N];
        for (x, _) in &simplex[..N] {
            for i in 0..N {
                centroid[i] += x[i] / N as f64;
            }
        }
        let (worst, f_worst) = simplex[N];
        let reflected = combine(&centroid, &worst, -1.0);
        let f_r = f(&reflected);
        if f_r < simplex[0].1 {
            let expanded = combine(&centroid, &worst, -2.0);
            let f_e = f(&expanded);
            simplex[N] = if f_e < f_r { (expanded, f_e) } else { (reflected, f_r) };
        } else if f_r < simplex[N - 1].1 {
            simplex[N] = (reflected, f_r);
        } else {
            let (target, f_t) = if f_r < f_worst { (reflected, f_r) } else { (worst, f_worst) };
            let contracted = combine(&centroid, &target, 0.5);
            let f_c = f(&contracted);
            if f_c < f_t {
                simplex[N] = (contracted, f_c);
            } else {
                let best = simplex[0].0;
                for entry in simplex.iter_mut().skip(1) {
                    let x = combine(&best, &entry.0, 0.5);
                    *entry = (x, f(&x));
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    (simplex[0].0, simplex[0].1, iter)
}

fn clamp_point(model: &ProgressModel, x: [f64; 2]) -> [f64; 2] {
    let p = x[0].clamp(P_MIN, P_MAX);
    [p, x[1].clamp(0.0, rm_box(model, p))]
}

/// Newton steps on the analytic gradient of `ln E` in `(p, r_m)`.
fn newton_polish_joint(model: &ProgressModel, mut x: [f64; 2]) -> ([f64; 2], usize) {
    let obj = |x: &[f64; 2]| model.log_shape(x[0], x[1]);
    let mut iters = 0;
    for _ in 0..30 {
        let g = model.log_gradient(x[0], x[1]);
        let mut hess = [[0.0; 2]; 2];
        for j in 0..2 {
            let h = 1e-6 * x[j].abs().max(1e-3);
            let mut up = x;
            let mut down = x;
            up[j] += h;
            down[j] -= h;
            let gu = model.log_gradient(up[0], up[1]);
            let gd = model.log_gradient(down[0], down[1]);
            for i in 0..2 {
                hess[i][j] = (gu[i] - gd[i]) / (2.0 * h);
            }
        }
        let off = 0.5 * (hess[0][1] + hess[1][0]);
        let det = hess[0][0] * hess[1][1] - off * off;
        // concave only
        if !(hess[0][0] < 0.0 && det > 0.0) {
            break;
        }
        let step = [-(hess[1][1] * g[0] - off * g[1]) / det, -(-off * g[0] + hess[0][0] * g[1]) / det];
        let next = clamp_point(model, [x[0] + step[0], x[1] + step[1]]);
        if obj(&next) < obj(&x) - 1e-14 {
            break;
        }
        iters += 1;
        let moved = (next[0] - x[0]).abs().max((next[1] - x[1]).abs());
        x = next;
        if moved <= 1e-15 {
            break;
        }
    }
    (x, iters)
}

/// Joint maximization over `(p, r_m)` for an arbitrary model.
pub fn optimize_joint_with(model: &ProgressModel, opts: &OptimizeOptions) -> Result<OptimizationResult, OptimizeError> {
    let tol = opts.argmax_tol;
    let mut p = 0.1;
    let mut r = maximize_scalar(|r| model.log_shape(p, r), 0.0, rm_box(model, p), tol)?.0;
    let mut rounds = 0;
    let mut settled = false;
    while rounds < opts.max_rounds {
        rounds += 1;
        let p_next = maximize_scalar(|q| model.log_shape(q, r), P_MIN, P_MAX, tol)?.0;
        let r_next = maximize_scalar(|s| model.log_shape(p_next, s), 0.0, rm_box(model, p_next), tol)?.0;
        let moved = (p_next - p).abs().max((r_next - r).abs());
        p = p_next;
        r = r_next;
        if moved < tol {
            settled = true;
            break;
        }
    }

    let neg = |x: &[f64; 2]| {
        let c = clamp_point(model, *x);
        if c != *x {
            return f64::INFINITY;
        }
        -model.log_shape(x[0], x[1])
    };
    let (polished, _, nm_iters) = nelder_mead(neg, [p, r], [1e-3, 1e-3 * r.max(1e-2)], 1e-12, 2000);
    let start = if -neg(&polished) >= model.log_shape(p, r) {
        polished
    } else {
        [p, r]
    };
    let ([p, r], newton_iters) = newton_polish_joint(model, start);

    let g = model.log_gradient(p, r);
    let scaled = [p * g[0], r * g[1]];
    let residuals = stationarity_at(model, p, r);
    let first_order_ok = scaled[0].abs().max(scaled[1].abs()) <= opts.residual_tol;
    let stationarity_ok = residuals.is_none_or(|res| res.max_abs() <= opts.residual_tol);
    let converged = settled && first_order_ok && stationarity_ok;
    let result = OptimizationResult {
        p_star: Some(p),
        rm_star: r,
        objective: model.density(p, r),
        iterations: rounds + nm_iters + newton_iters,
        converged,
        tolerance_used: opts.residual_tol,
        scaled_gradient: scaled,
        residuals,
    };
    if converged {
        Ok(result)
    } else {
        Err(OptimizeError::NotConverged(Box::new(result)))
    }
}

/// Joint optimum of the directional protocol; `p` and `r_m` inputs are ignored.
pub fn optimize_joint(params: &NetworkParams) -> Result<OptimizationResult, OptimizeError> {
    let params = validate(*params)?;
    optimize_joint_with(
        &ProgressModel::new(ProtocolVariant::Directional, &params),
        &OptimizeOptions::default(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StationaryPoint {
    pub p_star: f64,
    /// `k·r_m²` at the optimum.
    pub u_star: f64,
    pub residuals: StationarityResiduals,
    /// True when the Newton iteration failed and nested bisection was used.
    pub used_fallback: bool,
    pub t: f64,
}

impl StationaryPoint {
    /// Reference distance `√(u*/k(p*))` for a concrete beamwidth and density.
    pub fn rm_star(&self, lambda: f64, phi: f64) -> f64 {
        let k = crate::model::exponent_coefficient(lambda, phi, self.p_star, self.t);
        (self.u_star / k).sqrt()
    }
}

const BOX_P: (f64, f64) = (0.0, 0.5);
const BOX_U: (f64, f64) = (0.0, 10.0);
const ROOT_TOL: f64 = 1e-10;

fn residual_vec(p: f64, u: f64, t: f64) -> Option<[f64; 2]> {
    stationarity_residuals(p, u, t).ok().map(|r| [r.res_rm, r.res_p])
}

fn inside(p: f64, u: f64) -> bool {
    p > BOX_P.0 && p < BOX_P.1 && u > BOX_U.0 && u < BOX_U.1
}

fn damped_newton(t: f64, mut p: f64, mut u: f64) -> Option<(f64, f64)> {
    let norm = |r: [f64; 2]| r[0].abs().max(r[1].abs());
    let mut res = residual_vec(p, u, t)?;
    for _ in 0..100 {
        if norm(res) <= 1e-14 {
            break;
        }
        let hp = 1e-7 * p;
        let hu = 1e-7 * u.max(1e-3);
        let rp = residual_vec(p + hp, u, t)?;
        let rpm = residual_vec(p - hp, u, t)?;
        let ru = residual_vec(p, u + hu, t)?;
        let rum = residual_vec(p, (u - hu).max(0.0), t)?;
        let du_eff = u + hu - (u - hu).max(0.0);
        let j = [
            [(rp[0] - rpm[0]) / (2.0 * hp), (ru[0] - rum[0]) / du_eff],
            [(rp[1] - rpm[1]) / (2.0 * hp), (ru[1] - rum[1]) / du_eff],
        ];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let dp = -(j[1][1] * res[0] - j[0][1] * res[1]) / det;
        let du = -(-j[1][0] * res[0] + j[0][0] * res[1]) / det;
        let mut scale = 1.0;
        let mut accepted = false;
        for _ in 0..40 {
            let (np, nu) = (p + scale * dp, u + scale * du);
            if inside(np, nu) {
                if let Some(nr) = residual_vec(np, nu, t) {
                    if norm(nr) < norm(res) {
                        p = np;
                        u = nu;
                        res = nr;
                        accepted = true;
                        break;
                    }
                }
            }
            scale *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    (norm(res) <= ROOT_TOL).then_some((p, u))
}

fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// For fixed `p`, the r_m condition is strictly decreasing in `u` from a
/// positive value at `u = 0`; returns its unique root in the box, if any.
fn rm_condition_root(p: f64, t: f64) -> Option<f64> {
    let f = |u: f64| residual_vec(p, u, t).map_or(f64::NAN, |r| r[0]);
    if f(BOX_U.1) > 0.0 {
        return None;
    }
    Some(bisect(f, BOX_U.0, BOX_U.1))
}

fn nested_bisection(t: f64) -> Option<(f64, f64)> {
    let g = |p: f64| rm_condition_root(p, t).and_then(|u| residual_vec(p, u, t)).map(|r| r[1]);
    let n = 200;
    let mut prev: Option<(f64, f64)> = None;
    for i in 1..n {
        let p = BOX_P.0 + (BOX_P.1 - BOX_P.0) * i as f64 / n as f64;
        let Some(v) = g(p) else {
            prev = None;
            continue;
        };
        if let Some((pp, pv)) = prev {
            if (pv > 0.0) != (v > 0.0) {
                let root = bisect(|q| g(q).unwrap_or(f64::NAN), pp, p);
                let u = rm_condition_root(root, t)?;
                return Some((root, u));
            }
        }
        prev = Some((p, v));
    }
    None
}

fn sign_map(t: f64) -> String {
    let mut out = String::from("sign(res_rm),sign(res_p) over p∈(0,0.5) rows × u∈(0,10) cols:\n");
    for i in 1..10 {
        let p = 0.05 * i as f64;
        for j in 0..10 {
            let u = 0.05 + j as f64;
            let cell = match residual_vec(p, u, t) {
                Some([a, b]) => format!("{}{} ", if a > 0.0 { '+' } else { '-' }, if b > 0.0 { '+' } else { '-' }),
                None => "?? ".into(),
            };
            out.push_str(&cell);
        }
        out.push('\n');
    }
    out
}

/// Root of the beamwidth-free first-order system for spatial constant `t`.
pub fn solve_stationary_system(t: f64) -> Result<StationaryPoint, OptimizeError> {
    if !(t > PI) || !t.is_finite() {
        return Err(OptimizeError::Analytic(AnalyticError::Domain(format!("t must exceed π, got {t}"))));
    }
    // coarse guess: smallest residual on a grid
    let mut guess = (0.1, 1.0);
    let mut best = f64::INFINITY;
    for i in 1..50 {
        let p = 0.01 * i as f64;
        for j in 1..100 {
            let u = 0.1 * j as f64;
            if let Some(r) = residual_vec(p, u, t) {
                let n = r[0].abs().max(r[1].abs());
                if n < best {
                    best = n;
                    guess = (p, u);
                }
            }
        }
    }
    let (root, used_fallback) = match damped_newton(t, guess.0, guess.1) {
        Some(root) => (root, false),
        None => {
            let (p, u) = nested_bisection(t).ok_or_else(|| OptimizeError::NoRoot(sign_map(t)))?;
            (damped_newton(t, p, u).unwrap_or((p, u)), true)
        }
    };
    let residuals = stationarity_residuals(root.0, root.1, t)?;
    if residuals.max_abs() > ROOT_TOL {
        return Err(OptimizeError::NoRoot(format!(
            "best point p={}, u={} has residuals {:?}\n{}",
            root.0,
            root.1,
            residuals,
            sign_map(t)
        )));
    }
    Ok(StationaryPoint {
        p_star: root.0,
        u_star: root.1,
        residuals,
        used_fallback,
        t,
    })
}

/// One beamwidth of the constancy study.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PConstancyRow {
    pub phi: f64,
    pub p_star: Option<f64>,
    pub rm_star: Option<f64>,
    pub p_star_omni: Option<f64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PConstancyReport {
    pub t: f64,
    pub rows: Vec<PConstancyRow>,
    /// max − min of the directional `p*` over successful rows.
    pub spread: f64,
    pub spread_omni: f64,
}

fn spread(values: impl Iterator<Item = f64>) -> f64 {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if lo.is_finite() {
        hi - lo
    } else {
        f64::NAN
    }
}

/// Jointly optimizes `p` at each beamwidth (unit density; `p*` is density free)
/// for both protocol variants.
pub fn p_constancy_report(t: f64, phis: &[f64]) -> Result<PConstancyReport, OptimizeError> {
    if phis.is_empty() {
        return Err(OptimizeError::InvalidBracket {
            lo: f64::NAN,
            hi: f64::NAN,
            tol: 0.0,
        });
    }
    if !(t > PI) {
        return Err(OptimizeError::Analytic(AnalyticError::Domain(format!("t must exceed π, got {t}"))));
    }
    use rayon::prelude::*;
    let opts = OptimizeOptions::default();
    let rows: Vec<PConstancyRow> = phis
        .par_iter()
        .map(|&phi| {
            let model = |variant| ProgressModel {
                variant,
                lambda: 1.0,
                phi,
                t,
            };
            let dir = optimize_joint_with(&model(ProtocolVariant::Directional), &opts);
            let omni = optimize_joint_with(&model(ProtocolVariant::Omnidirectional), &opts);
            let mut errors = Vec::new();
            if let Err(e) = &dir {
                errors.push(format!("directional: {e}"));
            }
            if let Err(e) = &omni {
                errors.push(format!("omnidirectional: {e}"));
            }
            PConstancyRow {
                phi,
                p_star: dir.as_ref().ok().and_then(|r| r.p_star),
                rm_star: dir.as_ref().ok().map(|r| r.rm_star),
                p_star_omni: omni.as_ref().ok().and_then(|r| r.p_star),
                error: (!errors.is_empty()).then(|| errors.join("; ")),
            }
        })
        .collect();
    Ok(PConstancyReport {
        t,
        spread: spread(rows.iter().filter_map(|r| r.p_star)),
        spread_omni: spread(rows.iter().filter_map(|r| r.p_star_omni)),
        rows,
    })
}

/// `t` for a parameter set, for callers that only hold `NetworkParams`.
pub fn spatial_constant_of(params: &NetworkParams) -> f64 {
    spatial_constant(params.alpha, params.beta)
}
