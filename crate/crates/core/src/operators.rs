//! Variation operators: neighborhood mating selection, simulated binary
//! crossover (one child), and polynomial mutation. All offspring are clamped
//! to the box bounds before evaluation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RunRng;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OperatorParams {
    pub crossover_prob: f64,
    pub crossover_eta: f64,
    pub mutation_prob: f64,
    pub mutation_eta: f64,
}

impl OperatorParams {
    /// The de facto standard settings for decomposition-based runs:
    /// pc = 1, eta_c = 20, pm = 1/D, eta_m = 20.
    pub fn defaults(dimension: usize) -> Self {
        Self {
            crossover_prob: 1.0,
            crossover_eta: 20.0,
            mutation_prob: 1.0 / dimension as f64,
            mutation_eta: 20.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let in_unit = |v: f64| (0.0..=1.0).contains(&v);
        if !in_unit(self.crossover_prob) || !in_unit(self.mutation_prob) {
            return Err(Error::InvalidConfig(format!(
                "operator probabilities must lie in [0,1]: pc={}, pm={}",
                self.crossover_prob, self.mutation_prob
            )));
        }
        if !(self.crossover_eta > 0.0) || !(self.mutation_eta > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "distribution indices must be positive: eta_c={}, eta_m={}",
                self.crossover_eta, self.mutation_eta
            )));
        }
        Ok(())
    }
}

/// Two distinct indices drawn uniformly from the neighborhood.
pub fn select_parents(nb: &[usize], rng: &mut RunRng) -> Result<(usize, usize)> {
    if nb.len() < 2 {
        return Err(Error::InvalidConfig(format!(
            "mating needs a neighborhood of at least 2, got {}",
            nb.len()
        )));
    }
    let first = nb[rng.index(nb.len())];
    loop {
        let second = nb[rng.index(nb.len())];
        if second != first {
            return Ok((first, second));
        }
    }
}

/// One child by simulated binary crossover. The whole-vector gate fires with
/// `crossover_prob`; otherwise the child is a copy of the first parent. The
/// per-variable spread beta comes from the polynomial distribution with index
/// `crossover_eta`, and beta = 1 (u = 1/2) reproduces the first parent's
/// variable exactly.
pub fn sbx_crossover(
    x1: &[f64],
    x2: &[f64],
    bounds: &[(f64, f64)],
    params: &OperatorParams,
    rng: &mut RunRng,
) -> Vec<f64> {
    debug_assert_eq!(x1.len(), x2.len());
    if !(rng.next_f64() < params.crossover_prob) {
        return x1.to_vec();
    }
    let exponent = 1.0 / (params.crossover_eta + 1.0);
    x1.iter()
        .zip(x2)
        .zip(bounds)
        .map(|((&a, &b), &(lo, hi))| {
            let u = rng.next_f64();
            let beta = if u <= 0.5 {
                (2.0 * u).powf(exponent)
            } else {
                (2.0 * (1.0 - u)).powf(-exponent)
            };
            let child = 0.5 * ((1.0 + beta) * a + (1.0 - beta) * b);
            child.clamp(lo, hi)
        })
        .collect()
}

/// Polynomial mutation: each variable mutates with `mutation_prob`, drawing
/// the perturbation from the bounded polynomial distribution with index
/// `mutation_eta`. Variables at a bound never cross it.
pub fn polynomial_mutation(
    mut x: Vec<f64>,
    bounds: &[(f64, f64)],
    params: &OperatorParams,
    rng: &mut RunRng,
) -> Vec<f64> {
    let exponent = 1.0 / (params.mutation_eta + 1.0);
    for (xi, &(lo, hi)) in x.iter_mut().zip(bounds) {
        if !(rng.next_f64() < params.mutation_prob) {
            continue;
        }
        let span = hi - lo;
        if span <= 0.0 {
            continue;
        }
        let u = rng.next_f64();
        let d1 = (*xi - lo) / span;
        let d2 = (hi - *xi) / span;
        let delta = if u < 0.5 {
            let v = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - d1).powf(params.mutation_eta + 1.0);
            v.powf(exponent) - 1.0
        } else {
            let v = 2.0 * (1.0 - u) + (2.0 * u - 1.0) * (1.0 - d2).powf(params.mutation_eta + 1.0);
            1.0 - v.powf(exponent)
        };
        *xi = (*xi + delta * span).clamp(lo, hi);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_bounds(d: usize) -> Vec<(f64, f64)> {
        vec![(0.0, 1.0); d]
    }

    #[test]
    fn parents_distinct_and_from_neighborhood() {
        let mut rng = RunRng::from_seed(1);
        let nb = vec![3, 9, 14, 2, 7];
        for _ in 0..1000 {
            let (a, b) = select_parents(&nb, &mut rng).unwrap();
            assert_ne!(a, b);
            assert!(nb.contains(&a) && nb.contains(&b));
        }
        let pair = vec![0, 1];
        let (a, b) = select_parents(&pair, &mut rng).unwrap();
        assert_eq!((a.min(b), a.max(b)), (0, 1));
        assert!(select_parents(&[5], &mut rng).is_err());
    }

    #[test]
    fn parent_selection_is_uniform() {
        let mut rng = RunRng::from_seed(2);
        let nb: Vec<usize> = (0..10).collect();
        let mut counts = [0usize; 10];
        let draws = 10_000;
        for _ in 0..draws {
            let (a, b) = select_parents(&nb, &mut rng).unwrap();
            counts[a] += 1;
            counts[b] += 1;
        }
        for &c in &counts {
            let freq = c as f64 / draws as f64;
            assert!((freq - 0.2).abs() < 0.02, "frequency {freq}");
        }
    }

    #[test]
    fn zero_crossover_prob_copies_first_parent() {
        let mut rng = RunRng::from_seed(3);
        let params = OperatorParams {
            crossover_prob: 0.0,
            ..OperatorParams::defaults(4)
        };
        let x1 = vec![0.1, 0.2, 0.3, 0.4];
        let x2 = vec![0.9, 0.8, 0.7, 0.6];
        assert_eq!(sbx_crossover(&x1, &x2, &unit_bounds(4), &params, &mut rng), x1);
    }

    #[test]
    fn offspring_always_within_bounds() {
        let mut rng = RunRng::from_seed(4);
        let params = OperatorParams::defaults(6);
        let bounds: Vec<(f64, f64)> = (0..6).map(|i| (0.0, (i + 1) as f64)).collect();
        let mut x1: Vec<f64> = bounds.iter().map(|&(_, hi)| 0.9 * hi).collect();
        let x2: Vec<f64> = bounds.iter().map(|&(_, hi)| 0.05 * hi).collect();
        for _ in 0..2000 {
            let child = sbx_crossover(&x1, &x2, &bounds, &params, &mut rng);
            let child = polynomial_mutation(child, &bounds, &params, &mut rng);
            for (c, &(lo, hi)) in child.iter().zip(&bounds) {
                assert!(*c >= lo && *c <= hi);
            }
            x1 = child;
        }
    }

    #[test]
    fn zero_mutation_prob_is_identity() {
        let mut rng = RunRng::from_seed(5);
        let params = OperatorParams {
            mutation_prob: 0.0,
            ..OperatorParams::defaults(4)
        };
        let x = vec![0.3, 0.5, 0.7, 0.9];
        assert_eq!(
            polynomial_mutation(x.clone(), &unit_bounds(4), &params, &mut rng),
            x
        );
    }

    #[test]
    fn mutation_at_lower_bound_stays_feasible() {
        let mut rng = RunRng::from_seed(6);
        let params = OperatorParams {
            mutation_prob: 1.0,
            ..OperatorParams::defaults(1)
        };
        for _ in 0..1000 {
            let y = polynomial_mutation(vec![0.0], &unit_bounds(1), &params, &mut rng);
            assert!(y[0] >= 0.0);
        }
    }

    #[test]
    fn per_variable_mutation_rate_matches_probability() {
        let d = 10;
        let mut rng = RunRng::from_seed(7);
        let params = OperatorParams::defaults(d); // pm = 1/10
        let x = vec![0.5; d];
        let trials = 100_000;
        let mut mutated = 0usize;
        for _ in 0..trials {
            let y = polynomial_mutation(x.clone(), &unit_bounds(d), &params, &mut rng);
            mutated += y.iter().zip(&x).filter(|(a, b)| a != b).count();
        }
        let rate = mutated as f64 / (trials * d) as f64;
        let expect = 1.0 / d as f64;
        assert!(
            (rate - expect).abs() < 0.1 * expect,
            "rate {rate} vs {expect}"
        );
    }

    #[test]
    fn degenerate_config_reproduces_first_parent() {
        let mut rng = RunRng::from_seed(8);
        let params = OperatorParams {
            crossover_prob: 0.0,
            mutation_prob: 0.0,
            ..OperatorParams::defaults(4)
        };
        let x1 = vec![0.11, 0.22, 0.33, 0.44];
        let x2 = vec![0.99, 0.88, 0.77, 0.66];
        let child = sbx_crossover(&x1, &x2, &unit_bounds(4), &params, &mut rng);
        let child = polynomial_mutation(child, &unit_bounds(4), &params, &mut rng);
        assert_eq!(child, x1);
    }
}
