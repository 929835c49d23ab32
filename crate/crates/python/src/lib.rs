use dirrelay::analytic::{self, BoundForm};
use dirrelay::model::{self, ProtocolVariant};
use dirrelay::optimize;
use dirrelay::simulate::{self, SimConfig};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_variant(name: &str) -> PyResult<ProtocolVariant> {
    match name {
        "directional" => Ok(ProtocolVariant::Directional),
        "omnidirectional" | "omni" => Ok(ProtocolVariant::Omnidirectional),
        other => Err(PyValueError::new_err(format!("unknown variant `{other}`"))),
    }
}

/// Network scenario. `beta` is linear; pass `beta_db` to the constructor to give it in dB.
#[pyclass(name = "NetworkParams", from_py_object)]
#[derive(Clone)]
struct PyParams {
    inner: model::NetworkParams,
}

#[pymethods]
impl PyParams {
    #[new]
    #[pyo3(signature = (lambda_=1.0, alpha=3.0, beta=None, beta_db=None, mu=1.0, p=0.1, phi=std::f64::consts::FRAC_PI_2, r_m=0.2))]
    #[allow(clippy::too_many_arguments)]
    fn new(lambda_: f64, alpha: f64, beta: Option<f64>, beta_db: Option<f64>, mu: f64, p: f64, phi: f64, r_m: f64) -> PyResult<Self> {
        let beta = match (beta, beta_db) {
            (Some(_), Some(_)) => return Err(PyValueError::new_err("give beta or beta_db, not both")),
            (Some(b), None) => b,
            (None, Some(db)) => model::beta_from_db(db),
            (None, None) => model::beta_from_db(10.0),
        };
        let inner = model::NetworkParams {
            lambda: lambda_,
            alpha,
            beta,
            mu,
            p,
            phi,
            r_m,
        };
        model::validate(inner).map(|inner| Self { inner }).map_err(value_err)
    }

    /// Parses flat `key = value` text or a JSON object.
    #[staticmethod]
    fn from_config(text: &str) -> PyResult<Self> {
        let inner = model::NetworkParams::from_config_str(text).map_err(value_err)?;
        model::validate(inner).map(|inner| Self { inner }).map_err(value_err)
    }

    fn to_config(&self) -> String {
        self.inner.to_config_string()
    }

    fn get(&self, key: &str) -> PyResult<f64> {
        self.inner.get(key).map_err(value_err)
    }

    /// Copy with one field replaced and the result validated.
    fn replace(&self, key: &str, value: f64) -> PyResult<Self> {
        let mut inner = self.inner;
        inner.set(key, value).map_err(value_err)?;
        model::validate(inner).map(|inner| Self { inner }).map_err(value_err)
    }

    #[getter]
    fn lambda_(&self) -> f64 {
        self.inner.lambda
    }
    #[getter]
    fn alpha(&self) -> f64 {
        self.inner.alpha
    }
    #[getter]
    fn beta(&self) -> f64 {
        self.inner.beta
    }
    #[getter]
    fn mu(&self) -> f64 {
        self.inner.mu
    }
    #[getter]
    fn p(&self) -> f64 {
        self.inner.p
    }
    #[getter]
    fn phi(&self) -> f64 {
        self.inner.phi
    }
    #[getter]
    fn r_m(&self) -> f64 {
        self.inner.r_m
    }

    /// Spatial constant of the interference field.
    #[getter]
    fn t(&self) -> f64 {
        model::derive_constants(&self.inner).t
    }

    #[getter]
    fn k(&self) -> f64 {
        model::derive_constants(&self.inner).k
    }

    fn __repr__(&self) -> String {
        let p = &self.inner;
        format!(
            "NetworkParams(lambda_={}, alpha={}, beta={}, mu={}, p={}, phi={}, r_m={})",
            p.lambda, p.alpha, p.beta, p.mu, p.p, p.phi, p.r_m
        )
    }
}

#[pyclass(name = "OptimizationResult", frozen, skip_from_py_object)]
struct PyOptimization {
    #[pyo3(get)]
    p_star: Option<f64>,
    #[pyo3(get)]
    rm_star: f64,
    #[pyo3(get)]
    objective: f64,
    #[pyo3(get)]
    iterations: usize,
    #[pyo3(get)]
    converged: bool,
    #[pyo3(get)]
    tolerance_used: f64,
}

impl From<dirrelay::OptimizationResult> for PyOptimization {
    fn from(r: dirrelay::OptimizationResult) -> Self {
        Self {
            p_star: r.p_star,
            rm_star: r.rm_star,
            objective: r.objective,
            iterations: r.iterations,
            converged: r.converged,
            tolerance_used: r.tolerance_used,
        }
    }
}

#[pymethods]
impl PyOptimization {
    fn __repr__(&self) -> String {
        format!(
            "OptimizationResult(p_star={:?}, rm_star={}, objective={}, converged={})",
            self.p_star, self.rm_star, self.objective, self.converged
        )
    }
}

#[pyclass(name = "ProgressEstimate", frozen, skip_from_py_object)]
struct PyEstimate {
    #[pyo3(get)]
    mean: f64,
    #[pyo3(get)]
    std_error: f64,
    #[pyo3(get)]
    trials_used: usize,
    #[pyo3(get)]
    relay_found_fraction: f64,
}

#[pymethods]
impl PyEstimate {
    fn __repr__(&self) -> String {
        format!(
            "ProgressEstimate(mean={}, std_error={}, trials_used={})",
            self.mean, self.std_error, self.trials_used
        )
    }
}

#[pyfunction]
fn spatial_constant(alpha: f64, beta: f64) -> f64 {
    model::spatial_constant(alpha, beta)
}

#[pyfunction]
fn success_probability(params: &PyParams, d: f64) -> f64 {
    analytic::success_probability(&params.inner, d)
}

#[pyfunction]
fn relay_distance_cdf(params: &PyParams, r: f64) -> PyResult<f64> {
    analytic::relay_distance_cdf(&params.inner, r).map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (params, variant="directional"))]
fn expected_density(params: &PyParams, variant: &str) -> PyResult<f64> {
    Ok(analytic::expected_density(parse_variant(variant)?, &params.inner))
}

/// Expected density of progress by direct numerical integration.
#[pyfunction]
#[pyo3(signature = (params, variant="directional"))]
fn expected_density_numeric(params: &PyParams, variant: &str) -> PyResult<f64> {
    let result = match parse_variant(variant)? {
        ProtocolVariant::Directional => analytic::expected_density_numeric(&params.inner),
        ProtocolVariant::Omnidirectional => analytic::omni_expected_density_numeric(&params.inner),
    };
    result.map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Upper bound on the optimal reference distance; `halved_constant=True` selects the weaker variant.
#[pyfunction]
#[pyo3(signature = (params, halved_constant=false))]
fn rm_upper_bound(params: &PyParams, halved_constant: bool) -> PyResult<f64> {
    let form = if halved_constant {
        BoundForm::HalvedConstant
    } else {
        BoundForm::Rederived
    };
    analytic::rm_upper_bound_with(&params.inner, form).map_err(value_err)
}

#[pyfunction]
fn rm_from_p(params: &PyParams, p: f64) -> PyResult<f64> {
    analytic::rm_from_p(&params.inner, p).map_err(value_err)
}

#[pyfunction]
fn stationarity_residuals(p: f64, u: f64, t: f64) -> PyResult<(f64, f64)> {
    analytic::stationarity_residuals(p, u, t)
        .map(|r| (r.res_rm, r.res_p))
        .map_err(value_err)
}

fn optimization(result: Result<dirrelay::OptimizationResult, dirrelay::OptimizeError>) -> PyResult<PyOptimization> {
    result.map(PyOptimization::from).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Best reference distance at `p` (defaults to `params.p`).
#[pyfunction]
#[pyo3(signature = (params, p=None, variant="directional"))]
fn optimize_rm(params: &PyParams, p: Option<f64>, variant: &str) -> PyResult<PyOptimization> {
    let model = analytic::ProgressModel::new(parse_variant(variant)?, &params.inner);
    let p = p.unwrap_or(params.inner.p);
    optimization(optimize::optimize_rm_with(&model, p, &optimize::OptimizeOptions::default()))
}

#[pyfunction]
#[pyo3(signature = (params, variant="directional"))]
fn optimize_joint(params: &PyParams, variant: &str) -> PyResult<PyOptimization> {
    let model = analytic::ProgressModel::new(parse_variant(variant)?, &params.inner);
    optimization(optimize::optimize_joint_with(&model, &optimize::OptimizeOptions::default()))
}

/// `(p_star, u_star)` of the beamwidth-free first-order system.
#[pyfunction]
fn solve_stationary_system(t: f64) -> PyResult<(f64, f64)> {
    optimize::solve_stationary_system(t)
        .map(|s| (s.p_star, s.u_star))
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pyfunction]
#[pyo3(signature = (params, trials=20_000, seed=1, variant="directional"))]
fn simulate_progress(py: Python<'_>, params: &PyParams, trials: usize, seed: u64, variant: &str) -> PyResult<PyEstimate> {
    let sim = SimConfig::for_density(params.inner.lambda, trials, seed).with_variant(parse_variant(variant)?);
    let inner = params.inner;
    let est = py
        .detach(|| simulate::estimate_density_of_progress(&sim, &inner))
        .map_err(value_err)?;
    Ok(PyEstimate {
        mean: est.mean,
        std_error: est.std_error,
        trials_used: est.trials_used,
        relay_found_fraction: est.relay_found_fraction,
    })
}

#[pymodule]
#[pyo3(name = "dirrelay")]
fn dirrelay_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyParams>()?;
    m.add_class::<PyOptimization>()?;
    m.add_class::<PyEstimate>()?;
    m.add_function(wrap_pyfunction!(spatial_constant, m)?)?;
    m.add_function(wrap_pyfunction!(success_probability, m)?)?;
    m.add_function(wrap_pyfunction!(relay_distance_cdf, m)?)?;
    m.add_function(wrap_pyfunction!(expected_density, m)?)?;
    m.add_function(wrap_pyfunction!(expected_density_numeric, m)?)?;
    m.add_function(wrap_pyfunction!(rm_upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(rm_from_p, m)?)?;
    m.add_function(wrap_pyfunction!(stationarity_residuals, m)?)?;
    m.add_function(wrap_pyfunction!(optimize_rm, m)?)?;
    m.add_function(wrap_pyfunction!(optimize_joint, m)?)?;
    m.add_function(wrap_pyfunction!(solve_stationary_system, m)?)?;
    m.add_function(wrap_pyfunction!(simulate_progress, m)?)?;
    Ok(())
}
