//! Benchmark problems: objective evaluation, box bounds, analytic Pareto-front
//! samplers, and true ideal points.

mod dtlz;
mod imop;
mod wfg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::solution::nondominated_indices;
use crate::weights::generate_weights;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemId {
    Imop1,
    Imop2,
    Imop3,
    Imop4,
    Imop5,
    Imop6,
    Imop7,
    Imop8,
    Dtlz1,
    Dtlz2,
    Dtlz3,
    Dtlz4,
    Wfg1,
    Wfg2,
    Wfg3,
    Wfg4,
}

pub const ALL_PROBLEMS: [ProblemId; 16] = [
    ProblemId::Imop1,
    ProblemId::Imop2,
    ProblemId::Imop3,
    ProblemId::Imop4,
    ProblemId::Imop5,
    ProblemId::Imop6,
    ProblemId::Imop7,
    ProblemId::Imop8,
    ProblemId::Dtlz1,
    ProblemId::Dtlz2,
    ProblemId::Dtlz3,
    ProblemId::Dtlz4,
    ProblemId::Wfg1,
    ProblemId::Wfg2,
    ProblemId::Wfg3,
    ProblemId::Wfg4,
];

impl std::fmt::Display for ProblemId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ProblemId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        ALL_PROBLEMS
            .into_iter()
            .find(|p| p.name() == lower)
            .ok_or_else(|| Error::UnsupportedProblem(s.to_string()))
    }
}

impl ProblemId {
    pub fn name(&self) -> &'static str {
        match self {
            ProblemId::Imop1 => "imop1",
            ProblemId::Imop2 => "imop2",
            ProblemId::Imop3 => "imop3",
            ProblemId::Imop4 => "imop4",
            ProblemId::Imop5 => "imop5",
            ProblemId::Imop6 => "imop6",
            ProblemId::Imop7 => "imop7",
            ProblemId::Imop8 => "imop8",
            ProblemId::Dtlz1 => "dtlz1",
            ProblemId::Dtlz2 => "dtlz2",
            ProblemId::Dtlz3 => "dtlz3",
            ProblemId::Dtlz4 => "dtlz4",
            ProblemId::Wfg1 => "wfg1",
            ProblemId::Wfg2 => "wfg2",
            ProblemId::Wfg3 => "wfg3",
            ProblemId::Wfg4 => "wfg4",
        }
    }
}

/// Parameters of the IMOP family: K position variables (the first K), L
/// distance variables, and the two bias exponents. The small `a1` biases the
/// first position parameter towards 1; the large `a2` biases the second
/// towards 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImopParams {
    pub k: usize,
    pub l: usize,
    pub a1: f64,
    pub a2: f64,
}

impl Default for ImopParams {
    fn default() -> Self {
        Self {
            k: 5,
            l: 5,
            a1: 0.05,
            a2: 10.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub id: ProblemId,
    pub m: usize,
    pub d: usize,
    pub bounds: Vec<(f64, f64)>,
    pub imop: Option<ImopParams>,
}

impl ProblemSpec {
    /// The standard experimental configuration of each problem:
    /// IMOP M=2/3 D=10, DTLZ1 D=7, DTLZ2-4 D=12, WFG D=12 (k=4, l=8).
    pub fn preset(id: ProblemId) -> Self {
        use ProblemId::*;
        let (m, d) = match id {
            Imop1 | Imop2 | Imop3 => (2, 10),
            Imop4 | Imop5 | Imop6 | Imop7 | Imop8 => (3, 10),
            Dtlz1 => (3, 7),
            Dtlz2 | Dtlz3 | Dtlz4 => (3, 12),
            Wfg1 | Wfg2 | Wfg3 | Wfg4 => (3, 12),
        };
        let bounds = match id {
            Wfg1 | Wfg2 | Wfg3 | Wfg4 => (0..d).map(|i| (0.0, 2.0 * (i + 1) as f64)).collect(),
            _ => vec![(0.0, 1.0); d],
        };
        let imop = match id {
            Imop1 | Imop2 | Imop3 | Imop4 | Imop5 | Imop6 | Imop7 | Imop8 => {
                Some(ImopParams::default())
            }
            _ => None,
        };
        Self {
            id,
            m,
            d,
            bounds,
            imop,
        }
    }

    fn imop(&self) -> &ImopParams {
        self.imop.as_ref().expect("IMOP problems carry parameters")
    }

    fn is_wfg(&self) -> bool {
        matches!(
            self.id,
            ProblemId::Wfg1 | ProblemId::Wfg2 | ProblemId::Wfg3 | ProblemId::Wfg4
        )
    }

    /// Objective vector of `x`. Rejects vectors of the wrong length or
    /// outside the box bounds; variation operators clamp before evaluating.
    pub fn evaluate(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.d {
            return Err(Error::DimensionMismatch(format!(
                "{}: expected {} decision variables, got {}",
                self.id.name(),
                self.d,
                x.len()
            )));
        }
        for (i, (&xi, &(lo, hi))) in x.iter().zip(&self.bounds).enumerate() {
            if !xi.is_finite() {
                return Err(Error::NonFinite(format!("x[{i}] = {xi}")));
            }
            if xi < lo || xi > hi {
                return Err(Error::OutOfBounds {
                    index: i,
                    value: xi,
                    lower: lo,
                    upper: hi,
                });
            }
        }
        use ProblemId::*;
        let f = match self.id {
            Imop1 => imop::imop1(x, self.imop()),
            Imop2 => imop::imop2(x, self.imop()),
            Imop3 => imop::imop3(x, self.imop()),
            Imop4 => imop::imop4(x, self.imop()),
            Imop5 => imop::imop5(x, self.imop()),
            Imop6 => imop::imop6(x, self.imop()),
            Imop7 => imop::imop7(x, self.imop()),
            Imop8 => imop::imop8(x, self.imop()),
            Dtlz1 => dtlz::dtlz1(x, self.m),
            Dtlz2 => dtlz::dtlz2(x, self.m, 1.0),
            Dtlz3 => dtlz::dtlz3(x, self.m),
            Dtlz4 => dtlz::dtlz2(x, self.m, 100.0),
            Wfg1 => wfg::wfg1(x, wfg::POSITION_VARS, self.m),
            Wfg2 => wfg::wfg2(x, wfg::POSITION_VARS, self.m),
            Wfg3 => wfg::wfg3(x, wfg::POSITION_VARS, self.m),
            Wfg4 => wfg::wfg4(x, wfg::POSITION_VARS, self.m),
        };
        Ok(f)
    }

    /// Deterministic sample of the analytic Pareto front, roughly `count`
    /// points. Problems with non-monotone front parametrizations are filtered
    /// to the nondominated subset, so the exact size varies slightly.
    pub fn pf_sample(&self, count: usize) -> Result<Vec<Vec<f64>>> {
        let count = count.max(2);
        use ProblemId::*;
        let pts = match self.id {
            Imop1 => imop::pf_imop1(count),
            Imop2 => imop::pf_imop2(count),
            Imop3 => filter(imop::pf_imop3(2 * count)),
            Imop4 => filter(imop::pf_imop4(2 * count)),
            Imop5 => imop::pf_imop5(count),
            Imop6 => filter(imop::pf_imop6(count)),
            Imop7 => imop::pf_imop7(count),
            Imop8 => filter(imop::pf_imop8(count)),
            Dtlz1 => generate_weights(3, count)?
                .into_iter()
                .map(|w| w.iter().map(|c| 0.5 * c).collect())
                .collect(),
            Dtlz2 | Dtlz3 | Dtlz4 => sphere_lattice(count)?,
            Wfg1 => filter(wfg::pf_wfg1(count)),
            Wfg2 => filter(wfg::pf_wfg2(count)),
            Wfg3 => wfg::pf_wfg3(count),
            Wfg4 => sphere_lattice(count)?
                .into_iter()
                .map(|p| p.iter().enumerate().map(|(m, c)| 2.0 * (m + 1) as f64 * c).collect())
                .collect(),
        };
        Ok(pts)
    }

    /// Componentwise minimum of each objective over the feasible set. Known in
    /// closed form (the zero vector) for every problem except IMOP3, whose
    /// first objective dips below zero; that one is resolved numerically.
    pub fn true_ideal(&self) -> Vec<f64> {
        match self.id {
            ProblemId::Imop3 => vec![imop::imop3_f1_min(), 0.0],
            _ => vec![0.0; self.m],
        }
    }
}

fn filter(points: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let keep = nondominated_indices(&points);
    keep.into_iter().map(|i| points[i].clone()).collect()
}

/// Das-Dennis lattice radially projected onto the unit sphere octant.
fn sphere_lattice(count: usize) -> Result<Vec<Vec<f64>>> {
    Ok(generate_weights(3, count)?
        .into_iter()
        .map(|w| {
            let norm = w.iter().map(|c| c * c).sum::<f64>().sqrt();
            w.iter().map(|c| c / norm).collect()
        })
        .collect())
}
