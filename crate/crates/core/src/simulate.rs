//! Seeded Monte-Carlo realization of the network.
//!
//! Each trial conditions on a typical transmitter at the origin facing angle
//! 0, overlays independent Poisson fields of other transmitters and of
//! receivers, picks the relay, draws Rayleigh fading and records the progress
//! made. Trial `i` draws from its own ChaCha stream, so results do not depend
//! on scheduling and parallel runs equal serial ones bit for bit.

use std::f64::consts::PI;
use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{validate, ModelError, NetworkParams, ProtocolVariant};
use crate::stats::mean_and_variance;

pub type Point = [f64; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    Transmitter,
    Receiver,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointConfiguration {
    pub positions: Vec<Point>,
    pub roles: Vec<Role>,
    /// Beam heading for transmitters, `None` for receivers.
    pub orientations: Vec<Option<f64>>,
    pub window_radius: f64,
}

impl PointConfiguration {
    /// All nodes given as transmitters with the listed headings.
    pub fn transmitters(positions: Vec<Point>, orientations: Vec<f64>, window_radius: f64) -> Self {
        Self {
            roles: vec![Role::Transmitter; positions.len()],
            orientations: orientations.into_iter().map(Some).collect(),
            positions,
            window_radius,
        }
    }

    pub fn transmitter_positions(&self) -> Vec<Point> {
        self.iter_role(Role::Transmitter).map(|(p, _)| p).collect()
    }

    pub fn receiver_positions(&self) -> Vec<Point> {
        self.iter_role(Role::Receiver).map(|(p, _)| p).collect()
    }

    fn iter_role(&self, role: Role) -> impl Iterator<Item = (Point, Option<f64>)> + '_ {
        self.positions
            .iter()
            .zip(&self.roles)
            .zip(&self.orientations)
            .filter(move |((_, r), _)| **r == role)
            .map(|((p, _), o)| (*p, *o))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    /// Radius of the disk holding candidate relays.
    pub window_radius: f64,
    /// Extra ring beyond the window where only interferers are placed.
    pub guard_radius: f64,
    pub trials: usize,
    pub seed: u64,
    pub variant: ProtocolVariant,
    /// Add the mean interference of the plane beyond the guard ring. Without
    /// it the truncated field biases success upward by a few percent at α = 3,
    /// since the tail only decays like `radius^(2−α)`.
    pub far_field_mean: bool,
}

impl SimConfig {
    /// Default sizing for density `lambda`: window `15/√λ`, guard `10/√λ`.
    pub fn for_density(lambda: f64, trials: usize, seed: u64) -> Self {
        Self {
            window_radius: 15.0 / lambda.sqrt(),
            guard_radius: 10.0 / lambda.sqrt(),
            trials,
            seed,
            variant: ProtocolVariant::Directional,
            far_field_mean: true,
        }
    }

    pub fn with_variant(self, variant: ProtocolVariant) -> Self {
        Self { variant, ..self }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        if self.trials == 0 {
            return Err(SimError::InvalidConfig("trials must be at least 1".into()));
        }
        if !(self.window_radius > 0.0 && self.window_radius.is_finite()) {
            return Err(SimError::InvalidConfig(format!(
                "window_radius must be positive, got {}",
                self.window_radius
            )));
        }
        if !(self.guard_radius >= 0.0 && self.guard_radius.is_finite()) {
            return Err(SimError::InvalidConfig(format!(
                "guard_radius must be non-negative, got {}",
                self.guard_radius
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("no usable trials: all {0} were rejected")]
    NoUsableTrials(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProgressEstimate {
    /// Estimated expected density of progress.
    pub mean: f64,
    pub std_error: f64,
    pub trials_used: usize,
    pub relay_found_fraction: f64,
    /// Trials discarded because a receiver coincided with an interferer.
    pub rejected: usize,
}

/// One trial's outcome. Geometry fields are NaN when no relay was found.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialSample {
    pub trial: usize,
    pub relay_found: bool,
    pub d: f64,
    pub cos_offset: f64,
    pub sir: f64,
    pub success: bool,
    /// `1{SIR > β}·d·cos(offset)`; 0 without a relay.
    pub progress: f64,
    pub rejected: bool,
}

/// Independent stream for trial `index` under `seed`.
pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Homogeneous Poisson points of intensity `density` in the disk of radius `window_radius`.
pub fn sample_ppp<R: Rng>(density: f64, window_radius: f64, rng: &mut R) -> Vec<Point> {
    let mean = density * PI * window_radius * window_radius;
    let count = match Poisson::new(mean) {
        Ok(dist) => dist.sample(rng) as usize,
        Err(_) => 0,
    };
    (0..count)
        .map(|_| {
            let radius = window_radius * rng.random::<f64>().sqrt();
            let angle = 2.0 * PI * rng.random::<f64>();
            [radius * angle.cos(), radius * angle.sin()]
        })
        .collect()
}

/// Independent ALOHA roles; transmitters get a uniform beam heading.
pub fn assign_roles<R: Rng>(points: Vec<Point>, p: f64, window_radius: f64, rng: &mut R) -> PointConfiguration {
    let mut roles = Vec::with_capacity(points.len());
    let mut orientations = Vec::with_capacity(points.len());
    for _ in &points {
        if rng.random::<f64>() < p {
            roles.push(Role::Transmitter);
            orientations.push(Some(2.0 * PI * rng.random::<f64>()));
        } else {
            roles.push(Role::Receiver);
            orientations.push(None);
        }
    }
    PointConfiguration {
        positions: points,
        roles,
        orientations,
        window_radius,
    }
}

/// Absolute angle between `heading` and the direction `from → to`, in `[0, π]`.
pub fn angular_offset(from: Point, heading: f64, to: Point) -> f64 {
    let bearing = (to[1] - from[1]).atan2(to[0] - from[0]);
    let diff = (bearing - heading).rem_euclid(2.0 * PI);
    diff.min(2.0 * PI - diff)
}

fn covers(from: Point, heading: f64, phi: f64, to: Point) -> bool {
    angular_offset(from, heading, to) <= 0.5 * phi
}

/// Nearest receiver inside the sector of half-angle `φ/2` around
/// `tx_orientation` and strictly farther than `r_m`; ties go to the lowest index.
pub fn select_relay(tx_position: Point, tx_orientation: f64, receivers: &[Point], phi: f64, r_m: f64) -> Option<(usize, Point)> {
    let mut best: Option<(usize, f64)> = None;
    for (i, rx) in receivers.iter().enumerate() {
        let d = (rx[0] - tx_position[0]).hypot(rx[1] - tx_position[1]);
        if d > r_m && covers(tx_position, tx_orientation, phi, *rx) && best.is_none_or(|(_, bd)| d < bd) {
            best = Some((i, d));
        }
    }
    best.map(|(i, _)| (i, receivers[i]))
}

/// Link physics shared by every SIR draw.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Channel {
    pub alpha: f64,
    pub mu: f64,
    pub phi: f64,
    pub variant: ProtocolVariant,
    /// Deterministic interference added to every draw; 0 for a bare field.
    pub background: f64,
}

impl Channel {
    pub fn new(params: &NetworkParams, variant: ProtocolVariant) -> Self {
        Self {
            alpha: params.alpha,
            mu: params.mu,
            phi: params.phi,
            variant,
            background: 0.0,
        }
    }

    /// Channel for a simulated field of radius `field_radius`, with the
    /// expected interference from transmitters beyond it added when asked.
    /// The tail is taken about the field centre; a receiver at distance `x`
    /// sees it off by a relative `O((x/field_radius)²)`.
    pub fn for_field(params: &NetworkParams, sim: &SimConfig) -> Self {
        let mut channel = Self::new(params, sim.variant);
        if sim.far_field_mean {
            let coverage = match sim.variant {
                ProtocolVariant::Directional => params.phi / (2.0 * PI),
                ProtocolVariant::Omnidirectional => 1.0,
            };
            let radius = sim.window_radius + sim.guard_radius;
            channel.background =
                params.p * params.lambda * coverage / params.mu * 2.0 * PI * radius.powf(2.0 - params.alpha) / (params.alpha - 2.0);
        }
        channel
    }

    /// Whether a transmitter at `from` heading `heading` is heard at `to`.
    pub fn interferes(&self, from: Point, heading: f64, to: Point) -> bool {
        match self.variant {
            ProtocolVariant::Directional => covers(from, heading, self.phi, to),
            ProtocolVariant::Omnidirectional => true,
        }
    }

    /// Exponential fading power by inversion, so the uniform draws do not depend on `mu`.
    fn fading<R: Rng>(&self, rng: &mut R) -> f64 {
        -(1.0 - rng.random::<f64>()).ln() / self.mu
    }
}

/// Raised when a receiver sits exactly on an interferer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("receiver coincides with an interferer")]
pub struct CoincidentInterferer;

/// SIR at `receiver` served by `serving_tx`, with interference from the
/// transmitters of `config` that the channel rule lets through. Returns
/// `+∞` when nobody interferes.
pub fn sir_at<R: Rng>(
    receiver: Point,
    serving_tx: Point,
    config: &PointConfiguration,
    channel: &Channel,
    rng: &mut R,
) -> Result<f64, CoincidentInterferer> {
    let link = (receiver[0] - serving_tx[0]).hypot(receiver[1] - serving_tx[1]);
    let signal = channel.fading(rng) * link.powf(-channel.alpha);
    let mut interference = channel.background;
    for (pos, heading) in config.iter_role(Role::Transmitter) {
        if !channel.interferes(pos, heading.unwrap_or(0.0), receiver) {
            continue;
        }
        let d = (receiver[0] - pos[0]).hypot(receiver[1] - pos[1]);
        if d == 0.0 {
            return Err(CoincidentInterferer);
        }
        interference += channel.fading(rng) * d.powf(-channel.alpha);
    }
    Ok(if interference > 0.0 { signal / interference } else { f64::INFINITY })
}

/// The other transmitters seen by one trial, over the guard-extended disk.
fn interferer_field<R: Rng>(sim: &SimConfig, params: &NetworkParams, rng: &mut R) -> PointConfiguration {
    let radius = sim.window_radius + sim.guard_radius;
    let positions = sample_ppp(params.p * params.lambda, radius, rng);
    let orientations = positions.iter().map(|_| 2.0 * PI * rng.random::<f64>()).collect();
    PointConfiguration::transmitters(positions, orientations, radius)
}

/// One Palm realization for the typical transmitter.
pub fn run_trial(sim: &SimConfig, params: &NetworkParams, trial_index: usize) -> TrialSample {
    let mut rng = trial_rng(sim.seed, trial_index);
    let receivers = sample_ppp((1.0 - params.p) * params.lambda, sim.window_radius, &mut rng);
    let interferers = interferer_field(sim, params, &mut rng);
    let mut sample = TrialSample {
        trial: trial_index,
        relay_found: false,
        d: f64::NAN,
        cos_offset: f64::NAN,
        sir: f64::NAN,
        success: false,
        progress: 0.0,
        rejected: false,
    };
    let origin = [0.0, 0.0];
    let Some((_, relay)) = select_relay(origin, 0.0, &receivers, params.phi, params.r_m) else {
        return sample;
    };
    sample.relay_found = true;
    sample.d = relay[0].hypot(relay[1]);
    sample.cos_offset = relay[0] / sample.d;
    let channel = Channel::for_field(params, sim);
    match sir_at(relay, origin, &interferers, &channel, &mut rng) {
        Ok(sir) => {
            sample.sir = sir;
            sample.success = sir > params.beta;
            if sample.success {
                sample.progress = sample.d * sample.cos_offset;
            }
        }
        Err(CoincidentInterferer) => sample.rejected = true,
    }
    sample
}

/// All trials in index order; `parallel` only changes scheduling.
pub fn simulate_trials(sim: &SimConfig, params: &NetworkParams, parallel: bool) -> Result<Vec<TrialSample>, SimError> {
    sim.validate()?;
    let params = validate(*params)?;
    Ok(if parallel {
        (0..sim.trials).into_par_iter().map(|i| run_trial(sim, &params, i)).collect()
    } else {
        (0..sim.trials).map(|i| run_trial(sim, &params, i)).collect()
    })
}

/// Reduces trial samples to the density-of-progress estimate `pλ·E[progress]`.
pub fn summarize(samples: &[TrialSample], params: &NetworkParams) -> Result<ProgressEstimate, SimError> {
    let used: Vec<&TrialSample> = samples.iter().filter(|s| !s.rejected).collect();
    if used.is_empty() {
        return Err(SimError::NoUsableTrials(samples.len()));
    }
    let progress: Vec<f64> = used.iter().map(|s| s.progress).collect();
    let (mean, var) = mean_and_variance(&progress);
    let scale = params.p * params.lambda;
    let n = used.len();
    Ok(ProgressEstimate {
        mean: scale * mean,
        std_error: scale * (var / n as f64).sqrt(),
        trials_used: n,
        relay_found_fraction: used.iter().filter(|s| s.relay_found).count() as f64 / n as f64,
        rejected: samples.len() - n,
    })
}

pub fn estimate_density_of_progress(sim: &SimConfig, params: &NetworkParams) -> Result<ProgressEstimate, SimError> {
    summarize(&simulate_trials(sim, params, true)?, params)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuccessEstimate {
    pub probability: f64,
    pub std_error: f64,
    pub trials_used: usize,
}

/// Empirical success probability of a link of length `d` pointing along
/// the typical transmitter's beam.
pub fn estimate_link_success(sim: &SimConfig, params: &NetworkParams, d: f64) -> Result<SuccessEstimate, SimError> {
    sim.validate()?;
    let params = validate(*params)?;
    if !(d > 0.0) {
        return Err(SimError::InvalidConfig(format!("link length must be positive, got {d}")));
    }
    let channel = Channel::for_field(&params, sim);
    let outcomes: Vec<Option<bool>> = (0..sim.trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(sim.seed, i);
            let interferers = interferer_field(sim, &params, &mut rng);
            sir_at([d, 0.0], [0.0, 0.0], &interferers, &channel, &mut rng)
                .ok()
                .map(|sir| sir > params.beta)
        })
        .collect();
    let used = outcomes.iter().flatten().count();
    if used == 0 {
        return Err(SimError::NoUsableTrials(sim.trials));
    }
    let hits = outcomes.iter().flatten().filter(|s| **s).count();
    let prob = hits as f64 / used as f64;
    Ok(SuccessEstimate {
        probability: prob,
        std_error: (prob * (1.0 - prob) / used as f64).sqrt(),
        trials_used: used,
    })
}

/// Mean number per trial of other transmitters whose beam covers the origin
/// (all of them for the omnidirectional rule), over the guard-extended disk.
pub fn covering_interferer_count(sim: &SimConfig, params: &NetworkParams) -> Result<f64, SimError> {
    sim.validate()?;
    let params = validate(*params)?;
    let channel = Channel::new(&params, sim.variant);
    let counts: Vec<f64> = (0..sim.trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(sim.seed, i);
            let field = interferer_field(sim, &params, &mut rng);
            field
                .iter_role(Role::Transmitter)
                .filter(|(pos, h)| channel.interferes(*pos, h.unwrap_or(0.0), [0.0, 0.0]))
                .count() as f64
        })
        .collect();
    Ok(mean_and_variance(&counts).0)
}

pub const TRIAL_CSV_HEADER: &str = "trial,relay_found,d,cos_offset,sir,success,progress";

/// Writes one row per trial; rejected trials are skipped.
pub fn write_trial_csv<W: Write>(mut out: W, samples: &[TrialSample]) -> io::Result<()> {
    writeln!(out, "{TRIAL_CSV_HEADER}")?;
    for s in samples.iter().filter(|s| !s.rejected) {
        writeln!(
            out,
            "{},{},{:.16e},{:.16e},{:.16e},{},{:.16e}",
            s.trial, s.relay_found as u8, s.d, s.cos_offset, s.sir, s.success as u8, s.progress
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{expected_density, expected_density_closed, relay_distance_cdf, success_probability};
    use crate::stats::{csr_pvalue, kolmogorov_pvalue, ks_statistic};

    fn params(p: f64, phi: f64, r_m: f64) -> NetworkParams {
        NetworkParams {
            p,
            phi,
            r_m,
            ..NetworkParams::default()
        }
    }

    #[test]
    fn ppp_count_mean() {
        let draws = 10_000;
        let total: usize = (0..draws).map(|i| sample_ppp(1.0, 15.0, &mut trial_rng(11, i)).len()).sum();
        let expected = PI * 225.0;
        assert!((total as f64 / draws as f64 / expected - 1.0).abs() < 0.01);
        let empty = (0..1000)
            .filter(|&i| sample_ppp(1e-12, 1.0, &mut trial_rng(3, i)).is_empty())
            .count();
        assert_eq!(empty, 1000);
    }

    #[test]
    fn ppp_points_pass_csr() {
        let mut rng = trial_rng(5, 0);
        let pts = sample_ppp(1.0, 15.0, &mut rng);
        assert!(pts.iter().all(|q| q[0].hypot(q[1]) <= 15.0));
        assert!(csr_pvalue(&pts, 15.0, &[0.5, 1.0, 1.5, 2.0, 3.0], 199, 99) > 0.01);
    }

    #[test]
    fn roles_thin_independently() {
        let mut rng = trial_rng(21, 0);
        let pts: Vec<Point> = (0..100_000).map(|i| [i as f64, 0.0]).collect();
        let config = assign_roles(pts, 0.12, 1.0, &mut rng);
        let tx = config.roles.iter().filter(|r| **r == Role::Transmitter).count() as f64 / 1e5;
        assert!((tx - 0.12).abs() < 0.003);
        assert!(config
            .roles
            .iter()
            .zip(&config.orientations)
            .all(|(r, o)| (*r == Role::Transmitter) == o.is_some()));

        let pts = sample_ppp(1.0, 15.0, &mut rng);
        let config = assign_roles(pts, 0.3, 15.0, &mut rng);
        let tx = config.transmitter_positions();
        assert!(csr_pvalue(&tx, 15.0, &[1.0, 2.0, 3.0], 199, 5) > 0.01);
        assert_eq!(tx.len() + config.receiver_positions().len(), config.positions.len());

        let none = assign_roles(vec![[0.0, 0.0]; 1000], 1e-12, 1.0, &mut rng);
        assert!(none.roles.iter().all(|r| *r == Role::Receiver));
    }

    #[test]
    fn relay_region_boundaries() {
        let phi = PI / 2.0;
        let eps = 1e-9;
        assert!(select_relay([0.0, 0.0], 0.0, &[[0.2 + eps, 0.0]], phi, 0.2).is_some());
        assert!(select_relay([0.0, 0.0], 0.0, &[[0.2, 0.0]], phi, 0.2).is_none());
        let a = phi / 2.0 + 1e-6;
        assert!(select_relay([0.0, 0.0], 0.0, &[[a.cos(), a.sin()]], phi, 0.0).is_none());
        let a = phi / 2.0 - 1e-6;
        assert!(select_relay([0.0, 0.0], 0.0, &[[a.cos(), a.sin()]], phi, 0.0).is_some());
        // nearest wins, ties to lowest index
        let rx = [[2.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 0.0]];
        assert_eq!(select_relay([0.0, 0.0], 0.0, &rx, phi, 0.0).unwrap().0, 1);
        assert_eq!(select_relay([0.0, 0.0], 0.0, &rx, 2.0 * PI, 0.0).unwrap().0, 1);
        assert!(select_relay([0.0, 0.0], 0.0, &[], phi, 0.0).is_none());
    }

    #[test]
    fn no_interference_gives_infinite_sir() {
        let channel = Channel::new(&NetworkParams::default(), ProtocolVariant::Directional);
        let empty = PointConfiguration::transmitters(vec![], vec![], 1.0);
        assert_eq!(
            sir_at([1.0, 0.0], [0.0, 0.0], &empty, &channel, &mut trial_rng(0, 0)).unwrap(),
            f64::INFINITY
        );
        let away = PointConfiguration::transmitters(vec![[2.0, 0.0]], vec![0.0], 3.0);
        assert_eq!(
            sir_at([1.0, 0.0], [0.0, 0.0], &away, &channel, &mut trial_rng(0, 0)).unwrap(),
            f64::INFINITY
        );
        let on_top = PointConfiguration::transmitters(vec![[1.0, 0.0]], vec![0.0], 3.0);
        assert!(sir_at([1.0, 0.0], [0.0, 0.0], &on_top, &channel, &mut trial_rng(0, 0)).is_err());
    }

    #[test]
    fn equal_distance_interferer_matches_fading_ratio() {
        let params = NetworkParams::default();
        let channel = Channel::new(&params, ProtocolVariant::Directional);
        // interferer at (2, 0) facing back toward the receiver at (1, 0)
        let config = PointConfiguration::transmitters(vec![[2.0, 0.0]], vec![PI], 3.0);
        let n = 100_000;
        let hits = (0..n)
            .filter(|&i| sir_at([1.0, 0.0], [0.0, 0.0], &config, &channel, &mut trial_rng(8, i)).unwrap() > params.beta)
            .count();
        assert!((hits as f64 / n as f64 - 1.0 / 11.0).abs() < 0.003);
    }

    #[test]
    fn link_success_matches_closed_form() {
        let params = params(0.12, PI / 2.0, 0.2);
        let sim = SimConfig::for_density(1.0, 100_000, 2024);
        for d in [0.1, 0.2, 0.3] {
            let est = estimate_link_success(&sim, &params, d).unwrap();
            let exact = success_probability(&params, d);
            assert!(
                (est.probability / exact - 1.0).abs() < 0.02,
                "d={d}: {} vs {exact}",
                est.probability
            );
        }
    }

    #[test]
    fn covering_interferers_are_thinned_by_beamwidth() {
        let params = params(0.12, PI / 2.0, 0.2);
        let sim = SimConfig::for_density(1.0, 10_000, 4);
        let area = PI * (sim.window_radius + sim.guard_radius).powi(2);
        let dir = covering_interferer_count(&sim, &params).unwrap();
        assert!((dir / (0.12 * 0.25 * area) - 1.0).abs() < 0.01);
        let omni = covering_interferer_count(&sim.with_variant(ProtocolVariant::Omnidirectional), &params).unwrap();
        assert!((omni / (0.12 * area) - 1.0).abs() < 0.01);
    }

    #[test]
    fn relay_distance_follows_its_law() {
        let params = params(0.12, PI / 2.0, 0.3);
        let sim = SimConfig::for_density(1.0, 10_000, 31);
        let samples = simulate_trials(&sim, &params, true).unwrap();
        let d: Vec<f64> = samples.iter().filter(|s| s.relay_found).map(|s| s.d).collect();
        assert!(d.len() > 9_990);
        let ks = ks_statistic(&d, |r| relay_distance_cdf(&params, r).unwrap());
        assert!(kolmogorov_pvalue(ks, d.len()) > 0.01);

        // full circle, no exclusion: nearest-neighbour law
        let full = params_full();
        let samples = simulate_trials(&sim, &full, true).unwrap();
        let d: Vec<f64> = samples.iter().map(|s| s.d).collect();
        let ks = ks_statistic(&d, |r| 1.0 - (-(1.0 - full.p) * PI * r * r).exp());
        assert!(kolmogorov_pvalue(ks, d.len()) > 0.01);
    }

    fn params_full() -> NetworkParams {
        params(0.12, 2.0 * PI, 0.0)
    }

    #[test]
    fn trials_are_deterministic_and_order_free() {
        let params = params(0.12, PI / 2.0, 0.3);
        let sim = SimConfig::for_density(1.0, 500, 77);
        let par = simulate_trials(&sim, &params, true).unwrap();
        let ser = simulate_trials(&sim, &params, false).unwrap();
        let bits = |v: &[TrialSample]| {
            v.iter()
                .map(|s| (s.d.to_bits(), s.sir.to_bits(), s.progress.to_bits()))
                .collect::<Vec<_>>()
        };
        assert_eq!(bits(&par), bits(&ser));
        assert_eq!(summarize(&par, &params).unwrap(), summarize(&ser, &params).unwrap());
        assert_eq!(run_trial(&sim, &params, 3), run_trial(&sim, &params, 3));
    }

    #[test]
    fn unreachable_region_yields_nothing() {
        let sim = SimConfig::for_density(1.0, 2_000, 1);
        let est = estimate_density_of_progress(&sim, &params(0.12, PI / 2.0, 20.0)).unwrap();
        assert_eq!(est.relay_found_fraction, 0.0);
        assert_eq!(est.mean, 0.0);
        // k·r_m² ≈ 44: relays exist but almost never succeed
        let est = estimate_density_of_progress(&sim, &params(0.12, PI / 2.0, 5.0)).unwrap();
        assert!(est.relay_found_fraction > 0.99);
        assert!(est.mean < 1e-6);
    }

    #[test]
    fn progress_estimate_matches_closed_form() {
        let params = params(0.12, PI / 2.0, 0.36);
        let sim = SimConfig::for_density(1.0, 20_000, 123);
        let est = estimate_density_of_progress(&sim, &params).unwrap();
        let exact = expected_density_closed(&params);
        assert!(
            (est.mean - exact).abs() < 3.0 * est.std_error,
            "{} ± {} vs {exact}",
            est.mean,
            est.std_error
        );
        assert!(est.std_error / est.mean < 0.02);
        assert!(est.std_error >= 0.0 && (0.0..=1.0).contains(&est.relay_found_fraction));
    }

    #[test]
    fn directional_beats_omni_and_p_half_is_worse() {
        let base = params(0.12, PI / 2.0, 0.36);
        let sim = SimConfig::for_density(1.0, 20_000, 9);
        let dir = estimate_density_of_progress(&sim, &base).unwrap();
        let omni_sim = sim.with_variant(ProtocolVariant::Omnidirectional);
        let omni = estimate_density_of_progress(&omni_sim, &base).unwrap();
        let gap = dir.mean - omni.mean;
        assert!(gap > 3.0 * dir.std_error.hypot(omni.std_error));
        let exact_omni = expected_density(ProtocolVariant::Omnidirectional, &base);
        assert!((omni.mean - exact_omni).abs() < 3.0 * omni.std_error);
        let half = estimate_density_of_progress(&sim, &NetworkParams { p: 0.5, ..base }).unwrap();
        assert!(half.mean < dir.mean);
    }

    #[test]
    fn fading_mean_cancels() {
        let base = params(0.12, PI / 2.0, 0.36);
        let sim = SimConfig::for_density(1.0, 5_000, 55);
        let a = estimate_density_of_progress(&sim, &base).unwrap();
        let b = estimate_density_of_progress(&sim, &NetworkParams { mu: 5.0, ..base }).unwrap();
        assert!((a.mean - b.mean).abs() < 3.0 * a.std_error);
    }

    #[test]
    fn doubling_guard_barely_moves_estimate() {
        let base = params(0.12, PI / 2.0, 0.36);
        let sim = SimConfig::for_density(1.0, 20_000, 66);
        let a = estimate_density_of_progress(&sim, &base).unwrap();
        let wide = SimConfig {
            guard_radius: 2.0 * sim.guard_radius,
            ..sim
        };
        let b = estimate_density_of_progress(&wide, &base).unwrap();
        assert!((a.mean - b.mean).abs() < a.std_error);
    }

    #[test]
    fn config_validation_and_csv() {
        let p = NetworkParams::default();
        assert!(simulate_trials(&SimConfig::for_density(1.0, 0, 0), &p, false).is_err());
        let bad = SimConfig {
            guard_radius: -1.0,
            ..SimConfig::for_density(1.0, 1, 0)
        };
        assert!(bad.validate().is_err());
        let samples = simulate_trials(&SimConfig::for_density(1.0, 3, 0), &p, false).unwrap();
        let mut buf = Vec::new();
        write_trial_csv(&mut buf, &samples).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.starts_with(TRIAL_CSV_HEADER));
    }

    #[test]
    fn angular_offset_wraps() {
        assert!((angular_offset([0.0, 0.0], 0.1, [-1.0, -1e-12]) - (PI - 0.1)).abs() < 1e-9);
        assert!((angular_offset([0.0, 0.0], 6.2, [1.0, 0.0]) - (2.0 * PI - 6.2)).abs() < 1e-12);
    }
}
