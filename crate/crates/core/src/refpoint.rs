//! Reference-point strategies.
//!
//! Every strategy keeps the running componentwise minimum `z_min` current via
//! [`RefPointState::observe`]; they differ only in which point
//! [`RefPointState::select_z`] hands to the scalarizer:
//!
//! * `Min`       - the running minimum itself.
//! * `TrueIdeal` - the problem's analytic ideal point, fixed for the run
//!                 (an ablation device; unknowable in practice).
//! * `Drp`       - the running minimum shifted down by a scalar epsilon that
//!                 decays linearly from 1 to 0.001 over the evaluation budget.
//! * `NormW`     - a three-way mix driven by a Gaussian CDF schedule over the
//!                 budget: early draws favour `z_w`, the point where the
//!                 sphere of radius |z_min| around the origin meets the
//!                 current subproblem's weight ray (one reference point per
//!                 weight direction, which is what restores spread); the rest
//!                 of the probability mass goes to the origin in the first
//!                 half of the run and to `z_min` in the second.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::normal::standard_normal_cdf;
use crate::rng::RunRng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RefPointKind {
    Min,
    TrueIdeal,
    Drp,
    NormW,
}

impl std::fmt::Display for RefPointKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RefPointKind::Min => "min",
            RefPointKind::TrueIdeal => "ideal",
            RefPointKind::Drp => "drp",
            RefPointKind::NormW => "normw",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for RefPointKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "min" => Ok(RefPointKind::Min),
            "ideal" | "trueideal" | "true-ideal" => Ok(RefPointKind::TrueIdeal),
            "drp" => Ok(RefPointKind::Drp),
            "normw" | "norm-w" => Ok(RefPointKind::NormW),
            other => Err(Error::InvalidConfig(format!(
                "unknown reference-point strategy '{other}' (expected min|ideal|drp|normw)"
            ))),
        }
    }
}

pub const DRP_EPS_INI: f64 = 1.0;
pub const DRP_EPS_END: f64 = 0.001;

#[derive(Debug, Clone)]
pub struct RefPointState {
    kind: RefPointKind,
    z_min: Vec<f64>,
    z_ideal: Vec<f64>,
    max_fe: usize,
    /// Gaussian schedule: mu = maxFE/2, sigma = mu/5.
    mu: f64,
    sigma: f64,
    drp_eps_ini: f64,
    drp_eps_end: f64,
}

impl RefPointState {
    pub fn init(
        kind: RefPointKind,
        initial_objectives: &[Vec<f64>],
        max_fe: usize,
        true_ideal: &[f64],
    ) -> Result<Self> {
        let first = initial_objectives.first().ok_or(Error::EmptyPopulation)?;
        let m = first.len();
        let mut z_min = vec![f64::INFINITY; m];
        for f in initial_objectives {
            if f.len() != m {
                return Err(Error::DimensionMismatch(
                    "objective vectors of mixed lengths".into(),
                ));
            }
            for (z, &fi) in z_min.iter_mut().zip(f) {
                if !fi.is_finite() {
                    return Err(Error::NonFinite(format!("initial objective {fi}")));
                }
                *z = z.min(fi);
            }
        }
        let mu = max_fe as f64 / 2.0;
        Ok(Self {
            kind,
            z_min,
            z_ideal: true_ideal.to_vec(),
            max_fe,
            mu,
            sigma: mu / 5.0,
            drp_eps_ini: DRP_EPS_INI,
            drp_eps_end: DRP_EPS_END,
        })
    }

    pub fn kind(&self) -> RefPointKind {
        self.kind
    }

    /// Running componentwise minimum of everything observed so far.
    pub fn z_min(&self) -> &[f64] {
        &self.z_min
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Fold a fresh offspring's objectives into the running minimum. All
    /// strategies track it, even those that ignore it for selection.
    pub fn observe(&mut self, f: &[f64]) -> Result<()> {
        if f.len() != self.z_min.len() {
            return Err(Error::DimensionMismatch(format!(
                "observe: expected {}, got {}",
                self.z_min.len(),
                f.len()
            )));
        }
        for (z, &fi) in self.z_min.iter_mut().zip(f) {
            if !fi.is_finite() {
                return Err(Error::NonFinite(format!("observed objective {fi}")));
            }
            *z = z.min(fi);
        }
        Ok(())
    }

    /// Reference point for one offspring event at evaluation count `fe`, for
    /// subproblem `i` with weight vector `w_i`. Drawn once per offspring and
    /// reused across all its neighborhood comparisons.
    pub fn select_z(&self, fe: usize, _i: usize, w_i: &[f64], rng: &mut RunRng) -> Vec<f64> {
        match self.kind {
            RefPointKind::Min => self.z_min.clone(),
            RefPointKind::TrueIdeal => self.z_ideal.clone(),
            RefPointKind::Drp => {
                let eps = self.drp_epsilon(fe);
                self.z_min.iter().map(|&z| z - eps).collect()
            }
            RefPointKind::NormW => {
                let pro = gauss_cdf(fe as f64, self.mu, self.sigma);
                let u = rng.next_f64();
                if u > pro {
                    z_w(&self.z_min, w_i).expect("weight vectors are nonzero")
                } else if pro < 0.5 {
                    vec![0.0; self.z_min.len()]
                } else {
                    self.z_min.clone()
                }
            }
        }
    }

    /// Linear decay from eps_ini at FE=1 to eps_end at FE=maxFE; clamped at
    /// eps_end if the final sweep overshoots the budget.
    pub fn drp_epsilon(&self, fe: usize) -> f64 {
        if self.max_fe <= 1 {
            return self.drp_eps_end;
        }
        let frac = (self.max_fe as f64 - fe as f64) / (self.max_fe as f64 - 1.0);
        let eps = (self.drp_eps_ini - self.drp_eps_end) * frac + self.drp_eps_end;
        eps.max(self.drp_eps_end)
    }
}

/// Gaussian CDF used by the NormW schedule: the probability that a normal
/// draw with the given mean and deviation lies below `y`.
pub fn gauss_cdf(y: f64, mu: f64, sigma: f64) -> f64 {
    debug_assert!(sigma > 0.0);
    standard_normal_cdf((y - mu) / sigma)
}

/// Intersection of the origin-centered sphere of radius |z_min| with the ray
/// along `w`: |z_min| * w / |w|.
pub fn z_w(z_min: &[f64], w: &[f64]) -> Result<Vec<f64>> {
    let w_norm = w.iter().map(|c| c * c).sum::<f64>().sqrt();
    if w_norm == 0.0 {
        return Err(Error::InvalidConfig("zero weight vector".into()));
    }
    let radius = z_min.iter().map(|c| c * c).sum::<f64>().sqrt();
    Ok(w.iter().map(|&c| radius * c / w_norm).collect())
}
