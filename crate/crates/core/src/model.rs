//! Scenario parameters, validation and the derived constants every formula uses.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One network scenario.
///
/// `beta` is stored linear; see [`beta_from_db`] for the dB conversion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NetworkParams {
    /// Node density (nodes per unit area).
    pub lambda: f64,
    /// Path-loss exponent.
    pub alpha: f64,
    /// SIR threshold, linear.
    pub beta: f64,
    /// Rate of the exponential fading power (1 / mean).
    pub mu: f64,
    /// ALOHA transmission probability.
    pub p: f64,
    /// Beamwidth in radians, `(0, 2π]`.
    pub phi: f64,
    /// Reference distance: inner exclusion radius of the selection region.
    pub r_m: f64,
}

impl Default for NetworkParams {
    /// λ = 1, α = 3, β = 10 dB, μ = 1, p = 0.1, φ = π/2, r_m = 0.2.
    fn default() -> Self {
        Self {
            lambda: 1.0,
            alpha: 3.0,
            beta: beta_from_db(10.0),
            mu: 1.0,
            p: 0.1,
            phi: PI / 2.0,
            r_m: 0.2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ProtocolVariant {
    /// Transmitters beamform into a sector of width φ; receivers are omnidirectional.
    #[default]
    Directional,
    /// Baseline: same selection region, but every transmitter interferes everywhere.
    Omnidirectional,
}

impl fmt::Display for ProtocolVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProtocolVariant::Directional => f.write_str("directional"),
            ProtocolVariant::Omnidirectional => f.write_str("omnidirectional"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub field: &'static str,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("invalid parameters: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("unknown parameter key `{0}`")]
    UnknownKey(String),
    #[error("parameter `{key}`: cannot parse `{value}` as a number")]
    BadValue { key: String, value: String },
    #[error("config: {0}")]
    Syntax(String),
}

impl ModelError {
    /// Names of every offending field, in validation order.
    pub fn fields(&self) -> Vec<&str> {
        match self {
            ModelError::Invalid(v) => v.iter().map(|v| v.field).collect(),
            ModelError::UnknownKey(k) | ModelError::BadValue { key: k, .. } => vec![k.as_str()],
            ModelError::Syntax(_) => Vec::new(),
        }
    }
}

pub fn beta_from_db(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn beta_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

/// Checks every parameter invariant; reports all violations, not just the first.
pub fn validate(params: NetworkParams) -> Result<NetworkParams, ModelError> {
    let mut v = Vec::new();
    let mut bad = |field: &'static str, message: String| v.push(Violation { field, message });
    let NetworkParams {
        lambda,
        alpha,
        beta,
        mu,
        p,
        phi,
        r_m,
    } = params;
    if !(lambda > 0.0 && lambda.is_finite()) {
        bad("lambda", format!("density must be finite and > 0, got {lambda}"));
    }
    if !alpha.is_finite() {
        bad("alpha", format!("path-loss exponent must be finite, got {alpha}"));
    } else if alpha <= 2.0 {
        bad(
            "alpha",
            format!("t undefined: path-loss exponent must exceed 2 (sin(2π/α) ≤ 0), got {alpha}"),
        );
    }
    if !(beta > 0.0 && beta.is_finite()) {
        bad("beta", format!("threshold must be finite and > 0, got {beta}"));
    }
    if !(mu > 0.0 && mu.is_finite()) {
        bad("mu", format!("fading rate must be finite and > 0, got {mu}"));
    }
    if !(p > 0.0 && p < 1.0) {
        bad("p", format!("p out of range (0, 1): {p}"));
    }
    if !(phi > 0.0 && phi <= 2.0 * PI) {
        bad("phi", format!("beamwidth out of range (0, 2π]: {phi}"));
    }
    if !(r_m >= 0.0 && r_m.is_finite()) {
        bad("r_m", format!("reference distance must be finite and >= 0, got {r_m}"));
    }
    if v.is_empty() {
        Ok(params)
    } else {
        Err(ModelError::Invalid(v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedConstants {
    /// Spatial constant from the interference Laplace functional.
    pub t: f64,
    /// Gaussian exponent coefficient of the progress integrand, 1/length².
    pub k: f64,
}

/// `t = (2π²/α)/sin(2π/α) · β^{2/α}`.
pub fn spatial_constant(alpha: f64, beta: f64) -> f64 {
    (2.0 * PI * PI / alpha) / (2.0 * PI / alpha).sin() * beta.powf(2.0 / alpha)
}

/// `k = (λφ/2)(pt/π + 1 − p)`.
pub fn exponent_coefficient(lambda: f64, phi: f64, p: f64, t: f64) -> f64 {
    0.5 * lambda * phi * (p * t / PI + (1.0 - p))
}

pub fn derive_constants(params: &NetworkParams) -> DerivedConstants {
    let t = spatial_constant(params.alpha, params.beta);
    DerivedConstants {
        t,
        k: exponent_coefficient(params.lambda, params.phi, params.p, t),
    }
}

/// Keys accepted in flat key-value configs and on the command line.
pub const PARAM_KEYS: [&str; 8] = ["lambda", "alpha", "beta_db", "beta", "mu", "p", "phi", "r_m"];

impl NetworkParams {
    /// Sets one field by its config key. `beta_db` is converted to linear.
    pub fn set(&mut self, key: &str, value: f64) -> Result<(), ModelError> {
        match key {
            "lambda" => self.lambda = value,
            "alpha" => self.alpha = value,
            "beta_db" => self.beta = beta_from_db(value),
            "beta" => self.beta = value,
            "mu" => self.mu = value,
            "p" => self.p = value,
            "phi" => self.phi = value,
            "r_m" => self.r_m = value,
            other => return Err(ModelError::UnknownKey(other.to_string())),
        }
        Ok(())
    }

    pub fn get(&self, key: &str) -> Result<f64, ModelError> {
        Ok(match key {
            "lambda" => self.lambda,
            "alpha" => self.alpha,
            "beta_db" => beta_to_db(self.beta),
            "beta" => self.beta,
            "mu" => self.mu,
            "p" => self.p,
            "phi" => self.phi,
            "r_m" => self.r_m,
            other => return Err(ModelError::UnknownKey(other.to_string())),
        })
    }

    /// Applies `key = value` pairs on top of `self`.
    pub fn with_overrides<'a, I>(mut self, pairs: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        for (key, raw) in pairs {
            let value = parse_number(key, raw)?;
            self.set(key, value)?;
        }
        Ok(self)
    }

    /// Parses a flat `key = value` config (`#` comments, blank lines ignored)
    /// or, if the text starts with `{`, a JSON object with the same keys.
    pub fn from_config_str(text: &str) -> Result<Self, ModelError> {
        let trimmed = text.trim_start();
        let pairs = if trimmed.starts_with('{') {
            parse_json_pairs(trimmed)?
        } else {
            parse_kv_pairs(text)?
        };
        Self::default().with_overrides(pairs.iter().map(|(k, v)| (k.as_str(), v.as_str())))
    }

    /// Flat key-value rendering. `beta` is written linear so the text round-trips exactly.
    pub fn to_config_string(&self) -> String {
        format!(
            "lambda = {}\nalpha = {}\nbeta = {}\nmu = {}\np = {}\nphi = {}\nr_m = {}\n",
            self.lambda, self.alpha, self.beta, self.mu, self.p, self.phi, self.r_m
        )
    }
}

/// Parses a number, also accepting multiples of π such as `pi/3` or `2pi`.
pub fn parse_number(key: &str, raw: &str) -> Result<f64, ModelError> {
    let s = raw.trim();
    let lower = s.to_ascii_lowercase();
    // allow "pi", "pi/2", "2pi", "2*pi" for beamwidths
    let value = if let Some(rest) = lower.strip_suffix("pi") {
        let coeff = rest.trim_end_matches('*').trim();
        let c = if coeff.is_empty() {
            1.0
        } else {
            coeff.parse::<f64>().ok().unwrap_or(f64::NAN)
        };
        Some(c * PI)
    } else if let Some((num, den)) = lower.split_once("pi/") {
        let c = num.trim_end_matches('*').trim();
        let c = if c.is_empty() { Some(1.0) } else { c.parse::<f64>().ok() };
        match (c, den.trim().parse::<f64>().ok()) {
            (Some(c), Some(d)) => Some(c * PI / d),
            _ => None,
        }
    } else {
        s.parse::<f64>().ok()
    };
    match value {
        Some(v) if !v.is_nan() => Ok(v),
        _ => Err(ModelError::BadValue {
            key: key.to_string(),
            value: raw.to_string(),
        }),
    }
}

fn parse_kv_pairs(text: &str) -> Result<Vec<(String, String)>, ModelError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .or_else(|| line.split_once(':'))
            .ok_or_else(|| ModelError::Syntax(format!("line {}: expected `key = value`", n + 1)))?;
        let key = k.trim();
        if !PARAM_KEYS.contains(&key) {
            return Err(ModelError::UnknownKey(key.to_string()));
        }
        out.push((key.to_string(), v.trim().to_string()));
    }
    Ok(out)
}

fn parse_json_pairs(text: &str) -> Result<Vec<(String, String)>, ModelError> {
    let map: BTreeMap<String, serde_json::Value> = serde_json::from_str(text).map_err(|e| ModelError::Syntax(e.to_string()))?;
    let mut out = Vec::new();
    for (k, v) in map {
        if !PARAM_KEYS.contains(&k.as_str()) {
            return Err(ModelError::UnknownKey(k));
        }
        let raw = match &v {
            serde_json::Value::Number(n) => n.to_string(),
            serde_json::Value::String(s) => s.clone(),
            other => {
                return Err(ModelError::BadValue {
                    key: k,
                    value: other.to_string(),
                })
            }
        };
        out.push((k, raw));
    }
    Ok(out)
}
