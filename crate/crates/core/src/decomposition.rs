//! Scalarizing functions: map (objectives, weight, reference point) to the
//! scalar each subproblem minimizes.
//!
//! PBI uses the unit-direction convention: d1 is the Euclidean length of the
//! projection of f - Z onto the normalized weight direction, d2 the distance
//! from f to that projection. Simplex-lattice corner weights contain zeros,
//! so components below `weight_floor` are floored before use (M-TCH divides
//! by them).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecompositionKind {
    /// Weighted sum.
    Ws,
    /// Tchebycheff: max_i W_i |f_i - z_i|.
    Tch,
    /// Modified Tchebycheff: max_i (f_i - z_i) / W_i.
    Mtch,
    /// Penalty-based boundary intersection: d1 + theta * d2.
    Pbi,
}

impl std::fmt::Display for DecompositionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DecompositionKind::Ws => "ws",
            DecompositionKind::Tch => "tch",
            DecompositionKind::Mtch => "mtch",
            DecompositionKind::Pbi => "pbi",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for DecompositionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ws" => Ok(DecompositionKind::Ws),
            "tch" => Ok(DecompositionKind::Tch),
            "mtch" | "m-tch" => Ok(DecompositionKind::Mtch),
            "pbi" => Ok(DecompositionKind::Pbi),
            other => Err(Error::InvalidConfig(format!(
                "unknown scalarizer '{other}' (expected ws|tch|mtch|pbi)"
            ))),
        }
    }
}

pub const DEFAULT_THETA: f64 = 5.0;
pub const DEFAULT_WEIGHT_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy)]
pub struct ScalarizerParams {
    pub kind: DecompositionKind,
    pub theta: f64,
    pub weight_floor: f64,
}

impl ScalarizerParams {
    pub fn new(kind: DecompositionKind, theta: f64) -> Result<Self> {
        let params = Self {
            kind,
            theta,
            weight_floor: DEFAULT_WEIGHT_FLOOR,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn mtch() -> Self {
        Self::new(DecompositionKind::Mtch, DEFAULT_THETA).expect("defaults are valid")
    }

    pub fn pbi(theta: f64) -> Result<Self> {
        Self::new(DecompositionKind::Pbi, theta)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.theta > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "theta must be positive, got {}",
                self.theta
            )));
        }
        if !(self.weight_floor > 0.0 && self.weight_floor <= 1e-3) {
            return Err(Error::InvalidConfig(format!(
                "weight_floor must lie in (0, 1e-3], got {}",
                self.weight_floor
            )));
        }
        Ok(())
    }
}

#[inline]
fn floored(w: f64, floor: f64) -> f64 {
    if w < floor {
        floor
    } else {
        w
    }
}

/// Scalar fitness of objective vector `f` for weight `w` and reference point
/// `z` under the selected scalarizer. Smaller is better.
pub fn scalarize(f: &[f64], w: &[f64], z: &[f64], params: &ScalarizerParams) -> Result<f64> {
    if f.len() != w.len() || f.len() != z.len() {
        return Err(Error::DimensionMismatch(format!(
            "scalarize: |f|={}, |w|={}, |z|={}",
            f.len(),
            w.len(),
            z.len()
        )));
    }
    if f.is_empty() {
        return Err(Error::DimensionMismatch("scalarize: empty vectors".into()));
    }
    for (name, v) in [("f", f), ("w", w), ("z", z)] {
        if v.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite(format!("scalarize: {name} = {v:?}")));
        }
    }
    let floor = params.weight_floor;
    let g = match params.kind {
        DecompositionKind::Ws => f
            .iter()
            .zip(w)
            .map(|(&fi, &wi)| floored(wi, floor) * fi)
            .sum(),
        DecompositionKind::Tch => f
            .iter()
            .zip(w)
            .zip(z)
            .map(|((&fi, &wi), &zi)| floored(wi, floor) * (fi - zi).abs())
            .fold(f64::NEG_INFINITY, f64::max),
        DecompositionKind::Mtch => f
            .iter()
            .zip(w)
            .zip(z)
            .map(|((&fi, &wi), &zi)| (fi - zi) / floored(wi, floor))
            .fold(f64::NEG_INFINITY, f64::max),
        DecompositionKind::Pbi => {
            let norm: f64 = w
                .iter()
                .map(|&wi| {
                    let wi = floored(wi, floor);
                    wi * wi
                })
                .sum::<f64>()
                .sqrt();
            let d1: f64 = f
                .iter()
                .zip(w)
                .zip(z)
                .map(|((&fi, &wi), &zi)| (fi - zi) * floored(wi, floor) / norm)
                .sum();
            let d2_sq: f64 = f
                .iter()
                .zip(w)
                .zip(z)
                .map(|((&fi, &wi), &zi)| {
                    let r = (fi - zi) - d1 * floored(wi, floor) / norm;
                    r * r
                })
                .sum();
            d1 + params.theta * d2_sq.sqrt()
        }
    };
    Ok(g)
}

/// The (d1, d2) pair of the PBI decomposition, exposed for the geometry
/// checks, which reason about them as segment lengths.
pub fn pbi_components(f: &[f64], w: &[f64], z: &[f64], floor: f64) -> (f64, f64) {
    let norm: f64 = w
        .iter()
        .map(|&wi| {
            let wi = floored(wi, floor);
            wi * wi
        })
        .sum::<f64>()
        .sqrt();
    let d1: f64 = f
        .iter()
        .zip(w)
        .zip(z)
        .map(|((&fi, &wi), &zi)| (fi - zi) * floored(wi, floor) / norm)
        .sum();
    let d2_sq: f64 = f
        .iter()
        .zip(w)
        .zip(z)
        .map(|((&fi, &wi), &zi)| {
            let r = (fi - zi) - d1 * floored(wi, floor) / norm;
            r * r
        })
        .sum();
    (d1, d2_sq.sqrt())
}
