//! The decomposition main loop, parameterized by scalarizer and
//! reference-point strategy.
//!
//! Per generation it sweeps the subproblems in index order; each visit mates
//! two neighborhood parents, evaluates one offspring, refreshes the
//! reference-point state, draws the reference point for this offspring event,
//! and lets the offspring replace every neighbor it beats on that neighbor's
//! own scalarized subproblem (no replacement cap). The sweep always completes;
//! the run stops at the first sweep boundary at or past the evaluation
//! budget, so the final count lands in [maxFE, maxFE + N).

use std::time::Instant;

use crate::config::{RunConfig, RunResult, Snapshot};
use crate::decomposition::{scalarize, ScalarizerParams};
use crate::error::Result;
use crate::metrics::{hypervolume, igd, MetricContext};
use crate::operators::{polynomial_mutation, sbx_crossover, select_parents};
use crate::refpoint::RefPointState;
use crate::rng::RunRng;
use crate::solution::{Population, Solution};
use crate::weights::{build_neighborhoods, generate_weights};

/// Run with a metric context built on the fly. Prefer
/// [`moead_run_with_context`] when running replicates of the same problem.
pub fn moead_run(config: &RunConfig) -> Result<RunResult> {
    let ctx = MetricContext::for_problem(&config.problem)?;
    moead_run_with_context(config, &ctx)
}

pub fn moead_run_with_context(config: &RunConfig, ctx: &MetricContext) -> Result<RunResult> {
    config.validate()?;
    let started = Instant::now();
    let spec = &config.problem;

    let vectors = generate_weights(spec.m, config.requested_n)?;
    let n = vectors.len();
    let t = config.neighborhood_or_default(n);
    let neighborhoods = build_neighborhoods(&vectors, t)?;
    let ops = config.operators_or_default();
    ops.validate()?;
    let scal = ScalarizerParams::new(config.decomposition, config.theta)?;
    let mut rng = RunRng::from_seed(config.seed);

    let mut population: Vec<Solution> = (0..n)
        .map(|_| {
            let x = spec
                .bounds
                .iter()
                .map(|&(lo, hi)| rng.range_f64(lo, hi))
                .collect();
            Solution::evaluated(x, spec)
        })
        .collect::<Result<_>>()?;
    let mut fe = n;

    let initial_objectives: Vec<Vec<f64>> = population.iter().map(|s| s.f.clone()).collect();
    let mut state = RefPointState::init(
        config.strategy,
        &initial_objectives,
        config.max_fe,
        &spec.true_ideal(),
    )?;

    let mut history = Vec::new();
    let snapshot = |pop: &[Solution], fe: usize, history: &mut Vec<Snapshot>| -> Result<()> {
        let objs: Vec<Vec<f64>> = pop.iter().map(|s| s.f.clone()).collect();
        history.push(Snapshot {
            fe,
            hv: hypervolume(&objs, ctx)?,
            igd: igd(&objs, ctx)?,
        });
        Ok(())
    };
    snapshot(&population, fe, &mut history)?;
    let mut next_record = fe - fe % config.record_interval + config.record_interval;

    let mut replacement_counts = config.audit.then(Vec::new);

    while fe < config.max_fe {
        let mut sweep_replacements = 0usize;
        for i in 0..n {
            let (p1, p2) = select_parents(&neighborhoods[i], &mut rng)?;
            let child_x = sbx_crossover(
                &population[p1].x,
                &population[p2].x,
                &spec.bounds,
                &ops,
                &mut rng,
            );
            let child_x = polynomial_mutation(child_x, &spec.bounds, &ops, &mut rng);
            let child = Solution::evaluated(child_x, spec)?;
            fe += 1;
            state.observe(&child.f)?;
            let z = state.select_z(fe, i, &vectors[i], &mut rng);
            for &j in &neighborhoods[i] {
                let g_child = scalarize(&child.f, &vectors[j], &z, &scal)?;
                let g_incumbent = scalarize(&population[j].f, &vectors[j], &z, &scal)?;
                if g_child < g_incumbent {
                    population[j] = child.clone();
                    sweep_replacements += 1;
                }
            }
            if fe >= next_record {
                snapshot(&population, fe, &mut history)?;
                while next_record <= fe {
                    next_record += config.record_interval;
                }
            }
        }
        if let Some(counts) = replacement_counts.as_mut() {
            counts.push(sweep_replacements);
        }
    }

    if history.last().map(|s| s.fe) != Some(fe) {
        snapshot(&population, fe, &mut history)?;
    }

    Ok(RunResult {
        config: config.clone(),
        history,
        final_population: Population::new(population)?,
        wall_time_s: started.elapsed().as_secs_f64(),
        replacement_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::ProblemId;
    use crate::refpoint::RefPointKind;

    fn small_config(strategy: RefPointKind, seed: u64) -> RunConfig {
        let mut c = RunConfig::preset(ProblemId::Imop2, strategy, seed);
        c.requested_n = 20;
        c.max_fe = 600;
        c.record_interval = 100;
        c
    }

    #[test]
    fn budget_equal_to_population_skips_variation() {
        let mut c = small_config(RefPointKind::Min, 7);
        c.max_fe = 20;
        let r = moead_run(&c).unwrap();
        assert!(!r.history.is_empty());
        assert_eq!(r.history.last().unwrap().fe, 20);
        assert_eq!(r.final_population.len(), 20);
    }

    #[test]
    fn same_seed_reproduces_the_run_exactly() {
        let c = small_config(RefPointKind::NormW, 42);
        let a = moead_run(&c).unwrap();
        let b = moead_run(&c).unwrap();
        assert_eq!(a.history.len(), b.history.len());
        for (sa, sb) in a.history.iter().zip(&b.history) {
            assert_eq!(sa.fe, sb.fe);
            assert_eq!(sa.hv.to_bits(), sb.hv.to_bits());
            assert_eq!(sa.igd.to_bits(), sb.igd.to_bits());
        }
        for (ma, mb) in a
            .final_population
            .members()
            .iter()
            .zip(b.final_population.members())
        {
            assert_eq!(ma, mb);
        }
    }

    #[test]
    fn fe_accounting_and_history_shape() {
        for (n_req, max_fe) in [(20usize, 600usize), (20, 613), (10, 1000)] {
            let mut c = small_config(RefPointKind::Min, 5);
            c.requested_n = n_req;
            c.max_fe = max_fe;
            let r = moead_run(&c).unwrap();
            let last = r.history.last().unwrap().fe;
            assert!(last >= max_fe && last < max_fe + n_req, "last={last}");
            let mut prev = 0;
            for s in &r.history {
                assert!(s.fe > prev || prev == 0);
                prev = s.fe;
            }
        }
    }

    #[test]
    fn population_stays_within_bounds() {
        let c = small_config(RefPointKind::Drp, 3);
        let r = moead_run(&c).unwrap();
        for s in r.final_population.members() {
            for (&xi, &(lo, hi)) in s.x.iter().zip(&c.problem.bounds) {
                assert!(xi >= lo && xi <= hi);
            }
            assert_eq!(s.f, c.problem.evaluate(&s.x).unwrap());
        }
    }

    #[test]
    fn fixed_reference_point_makes_own_subproblem_monotone() {
        // with a fixed Z, solution i's own scalarized value never worsens;
        // replaying the run per generation via the audit counts is indirect,
        // so just re-run with a tiny budget and track the best-so-far by hand
        let mut c = small_config(RefPointKind::TrueIdeal, 11);
        c.max_fe = 2_000;
        c.record_interval = 10_000;
        let r = moead_run(&c).unwrap();
        // end-state sanity: own scalarized value beats the initial population's
        let scal = ScalarizerParams::new(c.decomposition, c.theta).unwrap();
        let vectors = generate_weights(2, c.requested_n).unwrap();
        let ideal = c.problem.true_ideal();
        let mut init_rng = RunRng::from_seed(c.seed);
        let initial: Vec<Solution> = (0..vectors.len())
            .map(|_| {
                let x = c
                    .problem
                    .bounds
                    .iter()
                    .map(|&(lo, hi)| init_rng.range_f64(lo, hi))
                    .collect();
                Solution::evaluated(x, &c.problem).unwrap()
            })
            .collect();
        for (i, member) in r.final_population.members().iter().enumerate() {
            let now = scalarize(&member.f, &vectors[i], &ideal, &scal).unwrap();
            let before = scalarize(&initial[i].f, &vectors[i], &ideal, &scal).unwrap();
            assert!(now <= before + 1e-12, "subproblem {i}: {now} vs {before}");
        }
    }

    #[test]
    fn audit_counts_present_only_when_enabled() {
        let mut c = small_config(RefPointKind::Min, 9);
        c.audit = true;
        let r = moead_run(&c).unwrap();
        let counts = r.replacement_count_audit().unwrap();
        // (maxFE - N) / N sweeps
        assert_eq!(counts.len(), (600 - 20) / 20);
        let c2 = small_config(RefPointKind::Min, 9);
        let r2 = moead_run(&c2).unwrap();
        assert!(r2.replacement_count_audit().is_err());
    }

    #[test]
    fn zero_variation_run_never_replaces() {
        let mut c = small_config(RefPointKind::Min, 13);
        c.audit = true;
        c.operators = Some(crate::operators::OperatorParams {
            crossover_prob: 0.0,
            mutation_prob: 0.0,
            crossover_eta: 20.0,
            mutation_eta: 20.0,
        });
        let r = moead_run(&c).unwrap();
        // offspring equals its first parent, never strictly better
        for count in r.replacement_count_audit().unwrap() {
            assert_eq!(*count, 0);
        }
    }

    #[test]
    #[ignore = "stagnation diagnostics at the full budget; run with --ignored"]
    fn replacement_rate_contrast_between_min_and_normw() {
        let mut min_cfg = RunConfig::preset(ProblemId::Imop2, RefPointKind::Min, 800);
        min_cfg.audit = true;
        min_cfg.record_interval = 20_000;
        let mut normw_cfg = RunConfig::preset(ProblemId::Imop2, RefPointKind::NormW, 800);
        normw_cfg.audit = true;
        normw_cfg.record_interval = 20_000;
        let ctx = MetricContext::for_problem(&min_cfg.problem).unwrap();
        let min_run = moead_run_with_context(&min_cfg, &ctx).unwrap();
        let normw_run = moead_run_with_context(&normw_cfg, &ctx).unwrap();
        let late = |r: &RunResult| -> f64 {
            let counts = r.replacement_count_audit().unwrap();
            let tail = &counts[counts.len() - counts.len() / 4..];
            tail.iter().sum::<usize>() as f64 / tail.len() as f64
        };
        let min_late = late(&min_run);
        let normw_late = late(&normw_run);
        // per sweep there are N * T comparisons
        let comparisons = 100.0 * 10.0;
        assert!(
            min_late / comparisons < 0.01,
            "min late replacement rate {min_late} of {comparisons}"
        );
        assert!(normw_late > min_late, "{normw_late} vs {min_late}");
    }
}
