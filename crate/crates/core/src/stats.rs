//! Single-pass mean/variance accumulation with a deterministic merge.

use serde::{Deserialize, Serialize};

/// z-score of a two-sided 95% normal interval.
pub const Z_95: f64 = 1.96;

/// Welford accumulator. `merge` uses the pairwise update of Chan et al., so
/// fixed-order merges of fixed-size blocks give bit-identical results no
/// matter which thread produced each block.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RunningStats {
    n: u64,
    mean: f64,
    m2: f64,
}

impl RunningStats {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, x: f64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn merge(&mut self, other: &Self) {
        if other.n == 0 {
            return;
        }
        if self.n == 0 {
            *self = *other;
            return;
        }
        let n = self.n + other.n;
        let delta = other.mean - self.mean;
        self.mean += delta * (other.n as f64 / n as f64);
        self.m2 += other.m2 + delta * delta * (self.n as f64 * other.n as f64 / n as f64);
        self.n = n;
    }

    pub fn count(&self) -> u64 {
        self.n
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Sample variance (n - 1 denominator); zero below two observations.
    pub fn variance(&self) -> f64 {
        if self.n < 2 {
            0.0
        } else {
            (self.m2 / (self.n - 1) as f64).max(0.0)
        }
    }

    pub fn std_dev(&self) -> f64 {
        self.variance().sqrt()
    }

    pub fn summary(&self) -> Summary {
        let std = self.std_dev();
        let half = if self.n == 0 {
            0.0
        } else {
            Z_95 * std / (self.n as f64).sqrt()
        };
        Summary {
            mean: self.mean,
            std,
            ci95_low: self.mean - half,
            ci95_high: self.mean + half,
        }
    }
}

/// Mean, sample standard deviation and normal-approximation 95% interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub mean: f64,
    pub std: f64,
    pub ci95_low: f64,
    pub ci95_high: f64,
}

impl Summary {
    pub fn half_width(&self) -> f64 {
        0.5 * (self.ci95_high - self.ci95_low)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.ci95_low <= x && x <= self.ci95_high
    }
}
