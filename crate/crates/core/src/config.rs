//! Run configuration and run records.

use serde::{Deserialize, Serialize};

use crate::decomposition::{DecompositionKind, DEFAULT_THETA};
use crate::error::{Error, Result};
use crate::operators::OperatorParams;
use crate::problems::{ProblemId, ProblemSpec};
use crate::refpoint::RefPointKind;
use crate::solution::Population;
use crate::weights::effective_n;

pub const DEFAULT_RECORD_INTERVAL: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub problem: ProblemSpec,
    /// Requested population size; the run adopts the smallest simplex-lattice
    /// size of at least this many vectors (e.g. 100 -> 105 for M = 3).
    pub requested_n: usize,
    pub max_fe: usize,
    /// Neighborhood size; `None` means ceil(N/10) of the effective N.
    pub neighborhood_size: Option<usize>,
    pub decomposition: DecompositionKind,
    pub theta: f64,
    pub strategy: RefPointKind,
    pub seed: u64,
    /// `None` means the standard defaults for the problem dimension.
    pub operators: Option<OperatorParams>,
    /// Evaluations between metric snapshots.
    pub record_interval: usize,
    /// Record per-sweep neighbor-replacement counts.
    pub audit: bool,
}

impl RunConfig {
    /// Standard setup for a problem: N = 100, the problem's preset budget
    /// (20000, or 30000 for the WFG group), M-TCH scalarization.
    pub fn preset(problem: ProblemId, strategy: RefPointKind, seed: u64) -> Self {
        let spec = ProblemSpec::preset(problem);
        let max_fe = match problem {
            ProblemId::Wfg1 | ProblemId::Wfg2 | ProblemId::Wfg3 | ProblemId::Wfg4 => 30_000,
            _ => 20_000,
        };
        Self {
            problem: spec,
            requested_n: 100,
            max_fe,
            neighborhood_size: None,
            decomposition: DecompositionKind::Mtch,
            theta: DEFAULT_THETA,
            strategy,
            seed,
            operators: None,
            record_interval: DEFAULT_RECORD_INTERVAL,
            audit: false,
        }
    }

    pub fn effective_n(&self) -> Result<usize> {
        effective_n(self.problem.m, self.requested_n)
    }

    pub fn neighborhood_or_default(&self, n: usize) -> usize {
        self.neighborhood_size.unwrap_or(n.div_ceil(10))
    }

    pub fn operators_or_default(&self) -> OperatorParams {
        self.operators
            .unwrap_or_else(|| OperatorParams::defaults(self.problem.d))
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.effective_n()?;
        if self.max_fe < n {
            return Err(Error::InvalidConfig(format!(
                "max_fe {} below the effective population size {n}",
                self.max_fe
            )));
        }
        let t = self.neighborhood_or_default(n);
        if t < 2 || t > n {
            return Err(Error::InvalidConfig(format!(
                "neighborhood size {t} outside 2..={n}"
            )));
        }
        if !(self.theta > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "theta must be positive, got {}",
                self.theta
            )));
        }
        if self.record_interval == 0 {
            return Err(Error::InvalidConfig("record_interval must be positive".into()));
        }
        self.operators_or_default().validate()?;
        Ok(())
    }
}

/// One metric snapshot of a running population.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub fe: usize,
    pub hv: f64,
    pub igd: f64,
}

/// The record of one completed run.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub config: RunConfig,
    pub history: Vec<Snapshot>,
    pub final_population: Population,
    pub wall_time_s: f64,
    pub(crate) replacement_counts: Option<Vec<usize>>,
}

impl RunResult {
    pub fn final_hv(&self) -> f64 {
        self.history.last().map(|s| s.hv).unwrap_or(0.0)
    }

    pub fn final_igd(&self) -> f64 {
        self.history.last().map(|s| s.igd).unwrap_or(f64::INFINITY)
    }

    /// Per-sweep neighbor-replacement counts; only present when the run was
    /// configured with `audit: true`.
    pub fn replacement_count_audit(&self) -> Result<&[usize]> {
        self.replacement_counts
            .as_deref()
            .ok_or(Error::AuditDisabled)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_budgets_follow_problem_family() {
        let c = RunConfig::preset(ProblemId::Imop2, RefPointKind::Min, 1);
        assert_eq!(c.max_fe, 20_000);
        assert_eq!(c.problem.m, 2);
        assert_eq!(c.problem.d, 10);
        let c = RunConfig::preset(ProblemId::Wfg1, RefPointKind::Min, 1);
        assert_eq!(c.max_fe, 30_000);
        assert_eq!(c.problem.d, 12);
        let c = RunConfig::preset(ProblemId::Dtlz1, RefPointKind::Min, 1);
        assert_eq!(c.problem.d, 7);
    }

    #[test]
    fn effective_population_snaps_to_lattice() {
        let c = RunConfig::preset(ProblemId::Dtlz2, RefPointKind::Min, 1);
        assert_eq!(c.effective_n().unwrap(), 105);
        assert_eq!(c.neighborhood_or_default(105), 11); // ceil(105/10)
        let c = RunConfig::preset(ProblemId::Imop2, RefPointKind::Min, 1);
        assert_eq!(c.effective_n().unwrap(), 100);
        assert_eq!(c.neighborhood_or_default(100), 10);
    }

    #[test]
    fn validation_catches_bad_budget_and_theta() {
        let mut c = RunConfig::preset(ProblemId::Imop2, RefPointKind::Min, 1);
        c.max_fe = 50;
        assert!(c.validate().is_err());
        let mut c = RunConfig::preset(ProblemId::Imop2, RefPointKind::Min, 1);
        c.theta = 0.0;
        assert!(c.validate().is_err());
        assert!(RunConfig::preset(ProblemId::Imop2, RefPointKind::Min, 1)
            .validate()
            .is_ok());
    }

    #[test]
    fn audit_disabled_by_default() {
        let c = RunConfig::preset(ProblemId::Imop2, RefPointKind::Min, 1);
        assert!(!c.audit);
    }
}
