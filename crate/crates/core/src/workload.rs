//! Pareto-distributed task sizes, per-device normalization and edge/cloud
//! allocation.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, HecError, Result};
use crate::model::SplitPolicy;
use crate::units::Gb;

/// Shape and scale of the task-size distribution
/// `f(x) = alpha * x_min^alpha / x^(alpha + 1)` on `x >= x_min`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ParetoRepr", into = "ParetoRepr")]
pub struct ParetoParams {
    alpha: f64,
    x_min: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParetoRepr {
    alpha: f64,
    x_min: f64,
}

impl TryFrom<ParetoRepr> for ParetoParams {
    type Error = HecError;
    fn try_from(r: ParetoRepr) -> Result<Self> {
        Self::new(r.alpha, r.x_min)
    }
}

impl From<ParetoParams> for ParetoRepr {
    fn from(p: ParetoParams) -> Self {
        Self {
            alpha: p.alpha,
            x_min: p.x_min,
        }
    }
}

impl Default for ParetoParams {
    fn default() -> Self {
        Self {
            alpha: 2.0,
            x_min: 1.0,
        }
    }
}

impl ParetoParams {
    /// Rejects `alpha <= 1`: the mean is infinite there and a normalized
    /// annual total has no meaningful per-task scale.
    pub fn new(alpha: f64, x_min: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 1.0 {
            return Err(invalid(format!(
                "pareto alpha must be finite and > 1 (alpha <= 1 has an infinite mean), got {alpha}"
            )));
        }
        if !x_min.is_finite() || x_min <= 0.0 {
            return Err(invalid(format!("pareto x_min must be finite and > 0, got {x_min}")));
        }
        Ok(Self { alpha, x_min })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn mean(&self) -> f64 {
        self.alpha * self.x_min / (self.alpha - 1.0)
    }

    /// `1 - (x_min / x)^alpha`, zero below the support.
    pub fn cdf(&self, x: f64) -> f64 {
        if x < self.x_min {
            0.0
        } else {
            1.0 - (self.x_min / x).powf(self.alpha)
        }
    }
}

pub fn pareto_pdf(x: f64, pp: &ParetoParams) -> Result<f64> {
    if x.is_nan() || x < pp.x_min {
        return Err(HecError::Domain(format!(
            "pareto density is defined for x >= x_min = {}, got {x}",
            pp.x_min
        )));
    }
    Ok(pp.alpha * pp.x_min.powf(pp.alpha) / x.powf(pp.alpha + 1.0))
}

pub fn pareto_cdf(x: f64, pp: &ParetoParams) -> f64 {
    pp.cdf(x)
}

/// Inverse CDF: `x_min * (1 - u)^(-1/alpha)` for `u` in `[0, 1)`.
pub fn pareto_quantile(u: f64, pp: &ParetoParams) -> Result<f64> {
    if !(0.0..1.0).contains(&u) {
        return Err(HecError::Domain(format!("quantile level must lie in [0, 1), got {u}")));
    }
    Ok(pp.x_min * (1.0 - u).powf(-1.0 / pp.alpha))
}

/// Draws `n_tasks` independent sizes by inverse-CDF sampling.
pub fn sample_tasks<R: Rng + ?Sized>(rng: &mut R, n_tasks: usize, pp: &ParetoParams) -> Result<Vec<Gb>> {
    if n_tasks == 0 {
        return Err(invalid("n_tasks must be >= 1"));
    }
    (0..n_tasks)
        .map(|_| pareto_quantile(rng.random::<f64>(), pp).map(Gb))
        .collect()
}

/// Rescales `sizes` so they sum to `d_total`, preserving proportions.
pub fn normalize_to_annual(sizes: &[Gb], d_total: Gb) -> Result<Vec<Gb>> {
    if sizes.is_empty() {
        return Err(invalid("cannot normalize an empty task list"));
    }
    if !d_total.0.is_finite() || d_total.0 <= 0.0 {
        return Err(invalid(format!("target volume must be finite and > 0, got {}", d_total.0)));
    }
    if let Some(bad) = sizes.iter().find(|s| !(s.0.is_finite() && s.0 > 0.0)) {
        return Err(invalid(format!("task sizes must be finite and > 0, got {}", bad.0)));
    }
    let sum: Gb = sizes.iter().copied().sum();
    if !sum.0.is_finite() || sum.0 <= 0.0 {
        return Err(invalid(format!("task sizes sum to {}, cannot normalize", sum.0)));
    }
    let scale = d_total.0 / sum.0;
    Ok(sizes.iter().map(|&s| s * scale).collect())
}

/// Where a task is processed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Placement {
    Edge,
    Cloud,
}

/// Task sizes with one placement per task.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskSet {
    sizes: Vec<Gb>,
    assignments: Vec<Placement>,
}

impl TaskSet {
    pub fn new(sizes: Vec<Gb>, assignments: Vec<Placement>) -> Result<Self> {
        if sizes.len() != assignments.len() {
            return Err(invalid(format!(
                "task set has {} sizes but {} assignments",
                sizes.len(),
                assignments.len()
            )));
        }
        if let Some(bad) = sizes.iter().find(|s| !(s.0.is_finite() && s.0 > 0.0)) {
            return Err(invalid(format!("task sizes must be finite and > 0, got {}", bad.0)));
        }
        Ok(Self { sizes, assignments })
    }

    pub fn sizes(&self) -> &[Gb] {
        &self.sizes
    }

    pub fn assignments(&self) -> &[Placement] {
        &self.assignments
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.assignments.iter().filter(|&&a| a == Placement::Edge).count()
    }
}

/// Labels each task edge with probability `p_edge`, independently.
///
/// Placement is per task, not per GB: the realized GB share on the edge is
/// random and only equals `p_edge` in expectation.
pub fn allocate<R: Rng + ?Sized>(rng: &mut R, sizes: &[Gb], split: &SplitPolicy) -> Result<TaskSet> {
    if sizes.is_empty() {
        return Err(invalid("cannot allocate an empty task list"));
    }
    let p = split.p_edge();
    let assignments = sizes
        .iter()
        .map(|_| {
            if rng.random::<f64>() < p {
                Placement::Edge
            } else {
                Placement::Cloud
            }
        })
        .collect();
    TaskSet::new(sizes.to_vec(), assignments)
}

/// Sums of edge-placed and cloud-placed sizes.
pub fn edge_cloud_volumes(ts: &TaskSet) -> (Gb, Gb) {
    ts.sizes
        .iter()
        .zip(&ts.assignments)
        .fold((Gb::ZERO, Gb::ZERO), |(edge, cloud), (&size, placement)| match placement {
            Placement::Edge => (edge + size, cloud),
            Placement::Cloud => (edge, cloud + size),
        })
}

/// One-sample Kolmogorov-Smirnov statistic of `samples` against `cdf`.
pub fn ks_statistic(samples: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            let above = (i + 1) as f64 / n - f;
            let below = f - i as f64 / n;
            above.max(below)
        })
        .fold(0.0, f64::max)
}

/// Kolmogorov-Smirnov threshold: the larger of 0.01 and the 1% critical
/// value `1.628 / sqrt(n)`, so small samples are not held to the 100k bar.
pub fn ks_threshold(samples: usize) -> f64 {
    (1.628 / (samples as f64).sqrt()).max(0.01)
}

/// Empirical check of the sampler against the closed-form distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplerCheck {
    pub alpha: f64,
    pub x_min: f64,
    pub samples: usize,
    pub seed: u64,
    pub analytic_mean: f64,
    pub sample_mean: f64,
    pub ks_statistic: f64,
    pub ks_threshold: f64,
    pub sample_min: f64,
    pub passed: bool,
}

pub fn check_sampler(pp: &ParetoParams, samples: usize, seed: u64) -> Result<SamplerCheck> {
    let mut rng = crate::rng::stream(seed, 0);
    let xs: Vec<f64> = sample_tasks(&mut rng, samples, pp)?.into_iter().map(|g| g.0).collect();
    let sample_mean = xs.iter().sum::<f64>() / xs.len() as f64;
    let sample_min = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let ks = ks_statistic(&xs, |x| pp.cdf(x));
    let threshold = ks_threshold(samples);
    Ok(SamplerCheck {
        alpha: pp.alpha,
        x_min: pp.x_min,
        samples,
        seed,
        analytic_mean: pp.mean(),
        sample_mean,
        ks_statistic: ks,
        ks_threshold: threshold,
        sample_min,
        passed: ks < threshold && sample_min >= pp.x_min,
    })
}
