//! Solutions, populations, and Pareto dominance.

use crate::error::{Error, Result};
use crate::problems::ProblemSpec;

/// A decision vector together with its cached objective values.
///
/// The cache is coherent by construction: the only way to build a `Solution`
/// is [`Solution::evaluated`], which runs the problem's objective function on
/// a bounds-checked decision vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub x: Vec<f64>,
    pub f: Vec<f64>,
}

impl Solution {
    pub fn evaluated(x: Vec<f64>, problem: &ProblemSpec) -> Result<Self> {
        let f = problem.evaluate(&x)?;
        Ok(Self { x, f })
    }
}

/// Ordered list of solutions; index i is permanently paired with weight
/// vector i of the run's `WeightSet`.
#[derive(Debug, Clone)]
pub struct Population {
    members: Vec<Solution>,
}

impl Population {
    pub fn new(members: Vec<Solution>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyPopulation);
        }
        Ok(Self { members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Solution] {
        &self.members
    }

    pub fn objectives(&self) -> Vec<Vec<f64>> {
        self.members.iter().map(|s| s.f.clone()).collect()
    }
}

/// Pareto dominance for minimization: `a` dominates `b` when no component is
/// worse and at least one is strictly better.
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let mut strictly_better = false;
    for (&ai, &bi) in a.iter().zip(b) {
        if ai > bi {
            return false;
        }
        if ai < bi {
            strictly_better = true;
        }
    }
    strictly_better
}

/// Indices of the mutually nondominated points in `points`.
pub fn nondominated_indices(points: &[Vec<f64>]) -> Vec<usize> {
    let mut keep = Vec::new();
    'outer: for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate() {
            if i != j && (dominates(q, p) || (q == p && j < i)) {
                continue 'outer;
            }
        }
        keep.push(i);
    }
    keep
}
