//! Decomposition-based multi-objective optimization with pluggable
//! reference-point strategies.
//!
//! The crate provides the full experimental stack: benchmark problems
//! (IMOP, DTLZ, WFG), simplex-lattice weights and neighborhoods, the
//! scalarizers (WS/TCH/M-TCH/PBI), four reference-point strategies
//! (running minimum, fixed true ideal, a decaying offset, and the
//! weight-ray/Gaussian hybrid), the main loop, hypervolume and IGD
//! indicators with a rank-sum comparison harness, and numeric sweeps for
//! the geometric acceptance statements on the quartic front.

pub mod config;
pub mod decomposition;
pub mod error;
pub mod geometry;
pub mod metrics;
pub mod moead;
pub mod normal;
pub mod operators;
pub mod problems;
pub mod refpoint;
pub mod rng;
pub mod solution;
pub mod weights;

pub use config::{RunConfig, RunResult, Snapshot};
pub use decomposition::{scalarize, DecompositionKind, ScalarizerParams};
pub use error::{Error, Result};
pub use metrics::{hypervolume, igd, rank_sum_compare, MetricContext, Outcome};
pub use moead::{moead_run, moead_run_with_context};
pub use problems::{ProblemId, ProblemSpec};
pub use refpoint::{gauss_cdf, z_w, RefPointKind, RefPointState};
pub use rng::RunRng;
pub use solution::{dominates, Population, Solution};
pub use weights::{build_neighborhoods, generate_weights, WeightSet};
