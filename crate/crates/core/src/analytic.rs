//! Closed forms for the per-hop link and the expected density of progress.
//!
//! Everything is interference limited (no thermal noise) with Rayleigh
//! fading, so the SIR success probability of a link of length `d` is
//! `exp(-c·d²)` with `c = p·(φ/2π)·λ·t` for directional transmitters and
//! `c = p·λ·t` for the omnidirectional baseline.
//!
//! With the relay drawn as the nearest receiver in the selection region,
//! the expected density of progress is
//!
//! ```text
//! E = λ² p (1−p) Γ(3/2, k r_m²) k^{-3/2} exp(λ(1−p)(φ/2) r_m²) sin(φ/2)
//! ```
//!
//! where `k` is the sum of the interference coefficient `c` and the
//! receiver-density coefficient `λ(1−p)φ/2`. All evaluation happens in log
//! space with the scaled incomplete gamma function, so large `k·r_m²` never
//! underflows before the final `exp`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{spatial_constant, NetworkParams, ProtocolVariant};
use crate::specfun::{self, integrate_semi_infinite, SpecfunError};

/// Relative tolerance used by the quadrature oracles.
pub const ORACLE_REL_TOL: f64 = 1e-11;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("reference-distance bound is vacuous: discriminant {discriminant:e} < 0")]
    VacuousBound { discriminant: f64 },
    #[error(transparent)]
    Quadrature(#[from] SpecfunError),
}

/// The objective as a function of `(p, r_m)` for a fixed beamwidth, density and `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProgressModel {
    pub variant: ProtocolVariant,
    pub lambda: f64,
    pub phi: f64,
    pub t: f64,
}

impl ProgressModel {
    pub fn new(variant: ProtocolVariant, params: &NetworkParams) -> Self {
        Self {
            variant,
            lambda: params.lambda,
            phi: params.phi,
            t: spatial_constant(params.alpha, params.beta),
        }
    }

    /// Coefficient `c` in `P_s(d) = exp(-c d²)`.
    pub fn interference_coefficient(&self, p: f64) -> f64 {
        match self.variant {
            ProtocolVariant::Directional => p * self.phi / (2.0 * PI) * self.lambda * self.t,
            ProtocolVariant::Omnidirectional => p * self.lambda * self.t,
        }
    }

    /// Receiver term `λ(1−p)φ/2` of the relay-distance law.
    pub fn receiver_coefficient(&self, p: f64) -> f64 {
        0.5 * self.lambda * (1.0 - p) * self.phi
    }

    pub fn k(&self, p: f64) -> f64 {
        self.interference_coefficient(p) + self.receiver_coefficient(p)
    }

    /// `dk/dp`, constant because `k` is affine in `p`.
    pub fn dk_dp(&self) -> f64 {
        match self.variant {
            ProtocolVariant::Directional => self.phi * self.lambda * (self.t - PI) / (2.0 * PI),
            ProtocolVariant::Omnidirectional => self.lambda * (self.t - 0.5 * self.phi),
        }
    }

    /// `ln E - ln sin(φ/2)`; the dropped term is constant in `(p, r_m)`,
    /// which keeps maximizers well-conditioned at φ = 2π.
    pub fn log_shape(&self, p: f64, r_m: f64) -> f64 {
        let k = self.k(p);
        let r2 = r_m * r_m;
        let u = k * r2;
        2.0 * self.lambda.ln() + p.ln() + (1.0 - p).ln() + specfun::upper_3half_scaled(u).ln()
            - self.interference_coefficient(p) * r2
            - 1.5 * k.ln()
    }

    pub fn log_density(&self, p: f64, r_m: f64) -> f64 {
        self.log_shape(p, r_m) + (0.5 * self.phi).sin().ln()
    }

    pub fn density(&self, p: f64, r_m: f64) -> f64 {
        self.log_density(p, r_m).exp()
    }

    /// Analytic gradient `(∂/∂p, ∂/∂r_m)` of `ln E`.
    pub fn log_gradient(&self, p: f64, r_m: f64) -> [f64; 2] {
        let k = self.k(p);
        let r2 = r_m * r_m;
        let u = k * r2;
        // d ln Γ(3/2,u) / du
        let dlg = -u.sqrt() / specfun::upper_3half_scaled(u);
        let a = self.receiver_coefficient(p);
        let dr = dlg * 2.0 * k * r_m + 2.0 * a * r_m;
        let dk = self.dk_dp();
        let dp = 1.0 / p - 1.0 / (1.0 - p) + dlg * dk * r2 - 1.5 * dk / k - 0.5 * self.lambda * self.phi * r2;
        [dp, dr]
    }

    /// Success probability of a link of length `d`.
    pub fn success_probability(&self, p: f64, d: f64) -> f64 {
        (-self.interference_coefficient(p) * d * d).exp()
    }

    /// `E` by one-dimensional quadrature over the relay distance, composed from
    /// the link success probability and the relay-distance density.
    pub fn density_by_quadrature(&self, p: f64, r_m: f64) -> Result<f64, AnalyticError> {
        let half = 0.5 * self.phi;
        // E[cos θ] for θ uniform on [-φ/2, φ/2]
        let mean_cos = half.sin() / half;
        let a = self.receiver_coefficient(p);
        let pdf = |x: f64| 2.0 * a * x * (-a * (x * x - r_m * r_m)).exp();
        let q = integrate_semi_infinite(|x| self.success_probability(p, x) * x * pdf(x), r_m, ORACLE_REL_TOL)?;
        Ok(p * self.lambda * mean_cos * q.value)
    }
}

fn directional(params: &NetworkParams) -> ProgressModel {
    ProgressModel::new(ProtocolVariant::Directional, params)
}

/// `exp(-p (φ/2π) λ t d²)`.
pub fn success_probability(params: &NetworkParams, d: f64) -> f64 {
    directional(params).success_probability(params.p, d)
}

fn check_relay_distance(params: &NetworkParams, r: f64) -> Result<(), AnalyticError> {
    if r.is_nan() || r < params.r_m {
        return Err(AnalyticError::Domain(format!(
            "relay distance {r} is inside the reference distance {}",
            params.r_m
        )));
    }
    Ok(())
}

/// `Pr(d ≤ r) = 1 − exp[−λ(1−p)(φ/2)(r² − r_m²)]` for `r ≥ r_m`.
pub fn relay_distance_cdf(params: &NetworkParams, r: f64) -> Result<f64, AnalyticError> {
    check_relay_distance(params, r)?;
    let a = 0.5 * params.lambda * (1.0 - params.p) * params.phi;
    Ok(-(-a * (r * r - params.r_m * params.r_m)).exp_m1())
}

pub fn relay_distance_pdf(params: &NetworkParams, r: f64) -> Result<f64, AnalyticError> {
    check_relay_distance(params, r)?;
    let c = params.lambda * (1.0 - params.p) * params.phi;
    Ok(c * r * (-0.5 * c * (r * r - params.r_m * params.r_m)).exp())
}

pub fn expected_density(variant: ProtocolVariant, params: &NetworkParams) -> f64 {
    ProgressModel::new(variant, params).density(params.p, params.r_m)
}

pub fn expected_density_closed(params: &NetworkParams) -> f64 {
    expected_density(ProtocolVariant::Directional, params)
}

/// Quadrature oracle for [`expected_density_closed`].
pub fn expected_density_numeric(params: &NetworkParams) -> Result<f64, AnalyticError> {
    directional(params).density_by_quadrature(params.p, params.r_m)
}

/// Omnidirectional baseline: identical selection region, interferer density `pλ`.
pub fn omni_expected_density(params: &NetworkParams) -> f64 {
    expected_density(ProtocolVariant::Omnidirectional, params)
}

pub fn omni_expected_density_numeric(params: &NetworkParams) -> Result<f64, AnalyticError> {
    ProgressModel::new(ProtocolVariant::Omnidirectional, params).density_by_quadrature(params.p, params.r_m)
}

/// Which quadratic the reference-distance bound is taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum BoundForm {
    /// `c·k·r² − 4k^{3/2}·r + 2c > 0` with `c = λ(1−p)φ`, obtained from the
    /// r_m first-order condition and `Γ(3/2,u) < ½e^{−u}(2+u)`. Its smaller
    /// root is `(2k^{3/2} − √(4k³ − 2kc²))/(kc)`.
    #[default]
    Rederived,
    /// `c·k·r² − 4k^{3/2}·r + c > 0`, i.e. with the constant term halved.
    /// Kept for comparison only; its smaller root undercuts the true optimum.
    HalvedConstant,
}

/// Both roots of the bound quadratic, ascending.
pub fn rm_bound_roots(params: &NetworkParams, form: BoundForm) -> Result<(f64, f64), AnalyticError> {
    let k = directional(params).k(params.p);
    let c = params.lambda * (1.0 - params.p) * params.phi;
    let constant = match form {
        BoundForm::Rederived => 2.0 * c,
        BoundForm::HalvedConstant => c,
    };
    // a r² + b r + constant with a = c k, b = -4 k^{3/2}
    let a = c * k;
    let b = -4.0 * k.powf(1.5);
    let discriminant = b * b - 4.0 * a * constant;
    if discriminant < 0.0 {
        return Err(AnalyticError::VacuousBound { discriminant });
    }
    let sq = discriminant.sqrt();
    // stable pairing: the larger root directly, the smaller through Vieta
    let larger = (-b + sq) / (2.0 * a);
    let smaller = constant / (a * larger);
    Ok((smaller, larger))
}

/// Upper bound on the r_m maximizing the density of progress at fixed `p`.
pub fn rm_upper_bound(params: &NetworkParams) -> Result<f64, AnalyticError> {
    rm_upper_bound_with(params, BoundForm::Rederived)
}

pub fn rm_upper_bound_with(params: &NetworkParams, form: BoundForm) -> Result<f64, AnalyticError> {
    rm_bound_roots(params, form).map(|(lo, _)| lo)
}

/// Radicand of the joint-optimum relation `r_m² · φλ = R(p, t)`.
pub fn joint_rm_radicand(p: f64, t: f64) -> f64 {
    2.0 * (p * (t - PI) + PI) * (1.0 - 2.0 * p) / (p * (1.0 - p) * t) - 3.0 * (t - PI) / t
}

/// Reference distance on the joint-optimum curve:
/// `r_m = (φλ)^{-1/2} · √(2[p(t−π)+π](1−2p)/(p(1−p)t) − 3(t−π)/t)`.
pub fn rm_from_p(params: &NetworkParams, p: f64) -> Result<f64, AnalyticError> {
    if !(p > 0.0 && p < 1.0) {
        return Err(AnalyticError::Domain(format!("p out of range (0, 1): {p}")));
    }
    let t = spatial_constant(params.alpha, params.beta);
    let radicand = joint_rm_radicand(p, t);
    if !(radicand > 0.0) {
        return Err(AnalyticError::Domain(format!(
            "no real reference distance for p = {p}: radicand {radicand:e} <= 0"
        )));
    }
    Ok((radicand / (params.phi * params.lambda)).sqrt())
}

/// First-order conditions of the joint maximization written in `u = k·r_m²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StationarityResiduals {
    /// ∂/∂r_m condition: `Γ(3/2,u)(1−p) − [pt/π + 1−p]·√u·e^{−u}`.
    pub res_rm: f64,
    /// ∂/∂p condition (taken through `k`), multiplied by `k·Γ·e^u`.
    pub res_p: f64,
}

impl StationarityResiduals {
    pub fn max_abs(&self) -> f64 {
        self.res_rm.abs().max(self.res_p.abs())
    }
}

/// Both residuals depend on `(p, u, t)` only; the beamwidth cancels.
pub fn stationarity_residuals(p: f64, u: f64, t: f64) -> Result<StationarityResiduals, AnalyticError> {
    if !(p > 0.0 && p < 1.0) {
        return Err(AnalyticError::Domain(format!("p out of range (0, 1): {p}")));
    }
    if !(u >= 0.0 && u.is_finite()) {
        return Err(AnalyticError::Domain(format!("u must be finite and >= 0, got {u}")));
    }
    if !(t > PI) {
        return Err(AnalyticError::Domain(format!("t must exceed π, got {t}")));
    }
    let gamma = specfun::upper_3half(u);
    let res_rm = gamma * (1.0 - p) - (p * t / PI + (1.0 - p)) * u.sqrt() * (-u).exp();
    let gamma_e = specfun::upper_3half_scaled(u);
    let bracket = -t * u / (t - PI) - 1.5 + (1.0 - 2.0 * p) * (p * t + PI * (1.0 - p)) / (p * (1.0 - p) * (t - PI));
    let res_p = bracket * gamma_e + gamma_e * u - u.powf(1.5);
    Ok(StationarityResiduals { res_rm, res_p })
}
