//! Goodness-of-fit tools used to check the simulator against known laws.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Sum with pairwise splitting; result depends only on the order of `values`.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= 32 {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Sample mean and unbiased sample variance (two-pass).
pub fn mean_and_variance(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    if n == 0 {
        return (f64::NAN, f64::NAN);
    }
    let mean = pairwise_sum(values) / n as f64;
    if n == 1 {
        return (mean, 0.0);
    }
    let squares: Vec<f64> = values.iter().map(|v| (v - mean) * (v - mean)).collect();
    (mean, pairwise_sum(&squares) / (n - 1) as f64)
}

/// One-sample Kolmogorov–Smirnov distance between `samples` and `cdf`.
pub fn ks_statistic<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> f64 {
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    sorted.iter().enumerate().fold(0.0, |d, (i, &x)| {
        let f = cdf(x);
        d.max(f - i as f64 / n).max((i + 1) as f64 / n - f)
    })
}

/// Asymptotic p-value of a KS distance `d` from `n` samples, with Stephens' small-sample correction.
pub fn kolmogorov_pvalue(d: f64, n: usize) -> f64 {
    let sn = (n as f64).sqrt();
    let x = (sn + 0.12 + 0.11 / sn) * d;
    if x < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for k in 1..=100 {
        let term = (-2.0 * (k * k) as f64 * x * x).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Largest `|L(r) − r|` over `radii`, where `L = √(K/π)` is Ripley's
/// K function estimated in a disk with border correction (only points at
/// least `r` from the boundary serve as centres).
pub fn ripley_l_deviation(points: &[[f64; 2]], window_radius: f64, radii: &[f64]) -> f64 {
    let n = points.len();
    if n < 2 {
        return f64::NAN;
    }
    let intensity = n as f64 / (PI * window_radius * window_radius);
    let mut worst: f64 = 0.0;
    for &r in radii {
        let centres: Vec<&[f64; 2]> = points.iter().filter(|q| q[0].hypot(q[1]) <= window_radius - r).collect();
        if centres.is_empty() {
            continue;
        }
        let r2 = r * r;
        let pairs: usize = centres
            .iter()
            .map(|c| {
                points
                    .iter()
                    .filter(|q| {
                        let d2 = (q[0] - c[0]).powi(2) + (q[1] - c[1]).powi(2);
                        d2 > 0.0 && d2 <= r2
                    })
                    .count()
            })
            .sum();
        let k = pairs as f64 / (centres.len() as f64 * intensity);
        worst = worst.max(((k / PI).sqrt() - r).abs());
    }
    worst
}

/// `n` independent uniform points in the disk by rejection from the bounding square.
fn binomial_pattern(n: usize, window_radius: f64, rng: &mut ChaCha8Rng) -> Vec<[f64; 2]> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = window_radius * (2.0 * rng.random::<f64>() - 1.0);
        let y = window_radius * (2.0 * rng.random::<f64>() - 1.0);
        if x * x + y * y <= window_radius * window_radius {
            out.push([x, y]);
        }
    }
    out
}

/// Monte-Carlo test of complete spatial randomness: ranks the observed
/// Ripley deviation among `simulations` uniform patterns with the same count.
/// Returns the p-value `(1 + #{sim ≥ obs}) / (simulations + 1)`.
pub fn csr_pvalue(points: &[[f64; 2]], window_radius: f64, radii: &[f64], simulations: usize, seed: u64) -> f64 {
    let observed = ripley_l_deviation(points, window_radius, radii);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let exceed = (0..simulations)
        .filter(|_| ripley_l_deviation(&binomial_pattern(points.len(), window_radius, &mut rng), window_radius, radii) >= observed)
        .count();
    (1 + exceed) as f64 / (simulations + 1) as f64
}
