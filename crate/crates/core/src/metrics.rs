//! Quality indicators (hypervolume, IGD) and the rank-sum comparison used by
//! the experiment tables.
//!
//! Hypervolume convention: objectives are normalized against the true front's
//! ideal and nadir, points not strictly dominating the reference point
//! (1.1, ..., 1.1) are dropped, and the dominated volume is divided by the
//! reference box volume. A population collapsed onto one corner of a
//! normalized front scores exactly 1/11 under this convention regardless of
//! the objective count.

use crate::error::{Error, Result};
use crate::normal::standard_normal_cdf;
use crate::problems::ProblemSpec;

pub const HV_REF_COORD: f64 = 1.1;
pub const PF_REFERENCE_SIZE: usize = 10_000;

#[derive(Debug, Clone)]
pub struct MetricContext {
    pub pf_reference: Vec<Vec<f64>>,
    pub ideal: Vec<f64>,
    pub nadir: Vec<f64>,
}

impl MetricContext {
    /// Context for a problem: a 10k-point front sample with its componentwise
    /// extremes.
    pub fn for_problem(spec: &ProblemSpec) -> Result<Self> {
        Self::from_reference(spec.pf_sample(PF_REFERENCE_SIZE)?)
    }

    pub fn from_reference(pf_reference: Vec<Vec<f64>>) -> Result<Self> {
        let first = pf_reference.first().ok_or(Error::EmptyPopulation)?;
        let m = first.len();
        let mut ideal = vec![f64::INFINITY; m];
        let mut nadir = vec![f64::NEG_INFINITY; m];
        for p in &pf_reference {
            if p.len() != m {
                return Err(Error::DimensionMismatch(
                    "reference points of mixed lengths".into(),
                ));
            }
            for i in 0..m {
                ideal[i] = ideal[i].min(p[i]);
                nadir[i] = nadir[i].max(p[i]);
            }
        }
        for i in 0..m {
            if !(ideal[i] < nadir[i]) {
                return Err(Error::InvalidConfig(format!(
                    "degenerate reference range in objective {i}: [{}, {}]",
                    ideal[i], nadir[i]
                )));
            }
        }
        Ok(Self {
            pf_reference,
            ideal,
            nadir,
        })
    }

    pub fn m(&self) -> usize {
        self.ideal.len()
    }

    fn normalize(&self, p: &[f64]) -> Vec<f64> {
        p.iter()
            .zip(&self.ideal)
            .zip(&self.nadir)
            .map(|((&v, &lo), &hi)| (v - lo) / (hi - lo))
            .collect()
    }
}

/// Normalized hypervolume of `points` under the context's convention.
pub fn hypervolume(points: &[Vec<f64>], ctx: &MetricContext) -> Result<f64> {
    let m = ctx.m();
    if !(m == 2 || m == 3) {
        return Err(Error::UnsupportedDimension(m));
    }
    let mut inside: Vec<Vec<f64>> = Vec::with_capacity(points.len());
    for p in points {
        if p.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "hypervolume: point of length {} in an M={m} context",
                p.len()
            )));
        }
        let q = ctx.normalize(p);
        if q.iter().all(|&c| c < HV_REF_COORD) {
            inside.push(q);
        }
    }
    if inside.is_empty() {
        return Ok(0.0);
    }
    let raw = match m {
        2 => {
            let pts: Vec<(f64, f64)> = inside.iter().map(|q| (q[0], q[1])).collect();
            hv2d(pts, HV_REF_COORD, HV_REF_COORD)
        }
        3 => hv3d(&inside, HV_REF_COORD),
        _ => unreachable!(),
    };
    Ok(raw / HV_REF_COORD.powi(m as i32))
}

/// Sweep over the Pareto staircase of `pts` against the box corner (rx, ry).
fn hv2d(mut pts: Vec<(f64, f64)>, rx: f64, ry: f64) -> f64 {
    pts.sort_by(|a, b| a.partial_cmp(b).expect("normalized points are finite"));
    let mut area = 0.0;
    let mut best_y = f64::INFINITY;
    let mut stairs: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    for (x, y) in pts {
        if y < best_y {
            best_y = y;
            stairs.push((x, y));
        }
    }
    for (i, &(x, y)) in stairs.iter().enumerate() {
        let next_x = stairs.get(i + 1).map(|&(nx, _)| nx).unwrap_or(rx);
        area += (next_x.min(rx) - x) * (ry - y);
    }
    area
}

/// Dimension sweep: sort on the third objective and integrate 2-D slabs.
fn hv3d(points: &[Vec<f64>], r: f64) -> f64 {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        points[a][2]
            .partial_cmp(&points[b][2])
            .expect("normalized points are finite")
    });
    let mut volume = 0.0;
    for (pos, &idx) in order.iter().enumerate() {
        let z = points[idx][2];
        let z_next = order.get(pos + 1).map(|&j| points[j][2]).unwrap_or(r);
        if z_next > z {
            let slab: Vec<(f64, f64)> = order[..=pos]
                .iter()
                .map(|&j| (points[j][0], points[j][1]))
                .collect();
            volume += hv2d(slab, r, r) * (z_next - z);
        }
    }
    volume
}

/// Inverted generational distance: mean over the reference sample of the
/// distance to the closest population point, in raw objective space.
pub fn igd(points: &[Vec<f64>], ctx: &MetricContext) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::EmptyPopulation);
    }
    let m = ctx.m();
    for p in points {
        if p.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "igd: point of length {} in an M={m} context",
                p.len()
            )));
        }
    }
    let total: f64 = ctx
        .pf_reference
        .iter()
        .map(|r| {
            points
                .iter()
                .map(|p| {
                    r.iter()
                        .zip(p)
                        .map(|(a, b)| (a - b) * (a - b))
                        .sum::<f64>()
                })
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        })
        .sum();
    Ok(total / ctx.pf_reference.len() as f64)
}

/// Outcome of a two-sample comparison: is `a` significantly better, worse, or
/// statistically indistinguishable from `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Plus,
    Minus,
    Approx,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Outcome::Plus => "+",
            Outcome::Minus => "-",
            Outcome::Approx => "=",
        };
        f.write_str(s)
    }
}

/// Two-sided Wilcoxon rank-sum with the normal approximation, midranks for
/// ties, tie-corrected variance, and a 1/2 continuity correction. Direction
/// comes from the rank sums; `larger_is_better` maps it onto +/-.
pub fn rank_sum_compare(
    a: &[f64],
    b: &[f64],
    alpha: f64,
    larger_is_better: bool,
) -> Result<Outcome> {
    let (n, m) = (a.len(), b.len());
    if n < 5 || m < 5 {
        return Err(Error::InsufficientSamples(format!(
            "rank-sum needs at least 5 samples per side, got {n} and {m}"
        )));
    }
    let total = n + m;
    let mut all: Vec<(f64, bool)> = a
        .iter()
        .map(|&v| (v, true))
        .chain(b.iter().map(|&v| (v, false)))
        .collect();
    if all.iter().any(|(v, _)| !v.is_finite()) {
        return Err(Error::NonFinite("rank-sum sample".into()));
    }
    all.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("finite samples"));

    let mut rank_sum_a = 0.0;
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < total {
        let mut j = i;
        while j + 1 < total && all[j + 1].0 == all[i].0 {
            j += 1;
        }
        let group = (j - i + 1) as f64;
        let midrank = (i + j) as f64 / 2.0 + 1.0;
        for item in &all[i..=j] {
            if item.1 {
                rank_sum_a += midrank;
            }
        }
        tie_term += group * group * group - group;
        i = j + 1;
    }

    let n_f = n as f64;
    let m_f = m as f64;
    let total_f = total as f64;
    let mean = n_f * (total_f + 1.0) / 2.0;
    let variance =
        n_f * m_f / 12.0 * ((total_f + 1.0) - tie_term / (total_f * (total_f - 1.0)));
    if variance <= 0.0 {
        return Ok(Outcome::Approx); // all values identical
    }
    let mut d = rank_sum_a - mean;
    d -= 0.5 * d.signum();
    let z = d / variance.sqrt();
    let p = 2.0 * (1.0 - standard_normal_cdf(z.abs()));
    if p >= alpha {
        return Ok(Outcome::Approx);
    }
    let a_larger = rank_sum_a > mean;
    Ok(if a_larger == larger_is_better {
        Outcome::Plus
    } else {
        Outcome::Minus
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RunRng;

    fn ctx2d() -> MetricContext {
        // unit-square normalization: ideal (0,0), nadir (1,1)
        MetricContext::from_reference(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()
    }

    fn ctx3d() -> MetricContext {
        MetricContext::from_reference(vec![
            vec![0.0, 0.0, 1.0],
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 0.0],
        ])
        .unwrap()
    }

    #[test]
    fn single_point_rectangle() {
        let hv = hypervolume(&[vec![0.5, 0.5]], &ctx2d()).unwrap();
        assert!((hv - 0.36 / 1.21).abs() < 1e-12);
    }

    #[test]
    fn single_point_box_3d() {
        let hv = hypervolume(&[vec![0.5, 0.5, 0.5]], &ctx3d()).unwrap();
        assert!((hv - 0.216 / 1.331).abs() < 1e-12);
    }

    #[test]
    fn empty_after_filtering_scores_zero() {
        let hv = hypervolume(&[vec![1.2, 1.2]], &ctx2d()).unwrap();
        assert_eq!(hv, 0.0);
        let hv = hypervolume(&[], &ctx2d()).unwrap();
        assert_eq!(hv, 0.0);
    }

    #[test]
    fn corner_collapse_scores_one_eleventh() {
        let hv = hypervolume(&[vec![0.0, 1.0]], &ctx2d()).unwrap();
        assert!((hv - 1.0 / 11.0).abs() < 1e-12);
        let hv = hypervolume(&[vec![0.0, 0.0, 1.0]], &ctx3d()).unwrap();
        assert!((hv - 1.0 / 11.0).abs() < 1e-12);
    }

    #[test]
    fn dominated_points_do_not_change_hv() {
        let base = vec![vec![0.2, 0.7], vec![0.5, 0.4], vec![0.8, 0.1]];
        let hv1 = hypervolume(&base, &ctx2d()).unwrap();
        let mut more = base.clone();
        more.push(vec![0.6, 0.8]);
        more.push(vec![0.9, 0.9]);
        let hv2 = hypervolume(&more, &ctx2d()).unwrap();
        assert!((hv1 - hv2).abs() < 1e-14);
        // a fresh nondominated point strictly increases it
        more.push(vec![0.05, 0.9]);
        let hv3 = hypervolume(&more, &ctx2d()).unwrap();
        assert!(hv3 > hv2);
    }

    /// Monte Carlo estimate of the normalized hypervolume over [0, 1.1]^3.
    fn mc_hv3d(points: &[Vec<f64>], samples: usize, seed: u64) -> f64 {
        let mut rng = RunRng::from_seed(seed);
        let mut hits = 0usize;
        for _ in 0..samples {
            let u = [
                 rng.next_f64() * HV_REF_COORD,
                 rng.next_f64() * HV_REF_COORD,
                 rng.next_f64() * HV_REF_COORD,
            ];
            if points
                .iter()
                .any(|p| p[0] <= u[0] && p[1] <= u[1] && p[2] <= u[2])
            {
                hits += 1;
            }
        }
        hits as f64 / samples as f64
    }

    #[test]
    fn hv3d_matches_monte_carlo_oracle() {
        let mut rng = RunRng::from_seed(99);
        for trial in 0..20 {
            let count = 5 + rng.index(40);
            let pts: Vec<Vec<f64>> = (0..count)
                .map(|_| vec![rng.next_f64(), rng.next_f64(), rng.next_f64()])
                .collect();
            let exact = hypervolume(&pts, &ctx3d()).unwrap();
            let mc = mc_hv3d(&pts, 200_000, 1000 + trial);
            assert!(
                (exact - mc).abs() < 0.01,
                "trial {trial}: exact {exact} vs mc {mc}"
            );
        }
    }

    #[test]
    fn igd_identity_and_hand_value() {
        let ctx = ctx2d();
        let zero = igd(&ctx.pf_reference.clone(), &ctx).unwrap();
        assert_eq!(zero, 0.0);
        let one_sided = igd(&[vec![0.0, 1.0]], &ctx).unwrap();
        assert!((one_sided - std::f64::consts::SQRT_2 / 2.0).abs() < 1e-12);
        assert!(igd(&[], &ctx).is_err());
    }

    #[test]
    fn igd_never_increases_with_more_points() {
        let ctx = ctx2d();
        let mut pts = vec![vec![0.1, 0.9]];
        let mut prev = igd(&pts, &ctx).unwrap();
        for p in [vec![0.9, 0.1], vec![0.5, 0.5], vec![0.2, 0.2]] {
            pts.push(p);
            let now = igd(&pts, &ctx).unwrap();
            assert!(now <= prev + 1e-15);
            prev = now;
        }
    }

    #[test]
    fn rank_sum_basic_directions() {
        let a: Vec<f64> = (10..40).map(f64::from).collect();
        let b: Vec<f64> = (50..80).map(f64::from).collect();
        // HV mode: larger is better, a is clearly worse
        assert_eq!(rank_sum_compare(&a, &b, 0.05, true).unwrap(), Outcome::Minus);
        // IGD mode: smaller is better, a is clearly better
        assert_eq!(rank_sum_compare(&a, &b, 0.05, false).unwrap(), Outcome::Plus);
        assert_eq!(rank_sum_compare(&b, &a, 0.05, true).unwrap(), Outcome::Plus);
        let same = vec![1.0; 30];
        assert_eq!(rank_sum_compare(&same, &same, 0.05, true).unwrap(), Outcome::Approx);
        assert!(rank_sum_compare(&[1.0; 3], &[2.0; 3], 0.05, true).is_err());
    }

    /// Exact two-sided permutation test on the rank-sum statistic.
    fn exact_permutation_significant(a: &[f64], b: &[f64], alpha: f64) -> bool {
        let n = a.len();
        let total = n + b.len();
        let mut all: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
        let mut idx: Vec<usize> = (0..total).collect();
        idx.sort_by(|&x, &y| all[x].partial_cmp(&all[y]).unwrap());
        let mut ranks = vec![0.0; total];
        let sorted: Vec<f64> = idx.iter().map(|&i| all[i]).collect();
        let mut i = 0;
        while i < total {
            let mut j = i;
            while j + 1 < total && sorted[j + 1] == sorted[i] {
                j += 1;
            }
            let midrank = (i + j) as f64 / 2.0 + 1.0;
            for k in i..=j {
                ranks[idx[k]] = midrank;
            }
            i = j + 1;
        }
        all.truncate(total);
        let observed: f64 = ranks[..n].iter().sum();
        let mean = n as f64 * (total as f64 + 1.0) / 2.0;

        fn next_combination(comb: &mut [usize], total: usize) -> bool {
            let n = comb.len();
            let mut i = n;
            while i > 0 {
                i -= 1;
                if comb[i] != i + total - n {
                    comb[i] += 1;
                    for j in i + 1..n {
                        comb[j] = comb[j - 1] + 1;
                    }
                    return true;
                }
            }
            false
        }

        // enumerate all C(total, n) assignments of ranks to group a
        let mut extreme = 0usize;
        let mut count = 0usize;
        let mut comb: Vec<usize> = (0..n).collect();
        loop {
            let s: f64 = comb.iter().map(|&i| ranks[i]).sum();
            if (s - mean).abs() >= (observed - mean).abs() - 1e-9 {
                extreme += 1;
            }
            count += 1;
            if !next_combination(&mut comb, total) {
                break;
            }
        }
        (extreme as f64 / count as f64) < alpha
    }

    #[test]
    fn normal_approximation_agrees_with_exact_permutation_at_n8() {
        let fixtures: Vec<(Vec<f64>, Vec<f64>)> = vec![
            ((10..18).map(f64::from).collect(), (50..58).map(f64::from).collect()),
            (vec![1.0; 8], vec![1.0; 8]),
            (
                vec![1.0, 3.0, 5.0, 7.0, 9.0, 11.0, 13.0, 15.0],
                vec![2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0],
            ),
            (
                vec![1.0, 1.0, 2.0, 2.0, 3.0, 3.0, 4.0, 4.0],
                vec![3.0, 3.0, 4.0, 4.0, 5.0, 5.0, 6.0, 6.0],
            ),
            (
                vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0],
                vec![1.5, 2.5, 3.5, 4.5, 5.5, 6.5, 7.5, 8.5],
            ),
            (
                vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0],
                vec![5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0],
            ),
            (
                vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 100.0],
                vec![9.0, 10.0, 11.0, 12.0, 13.0, 14.0, 15.0, 16.0],
            ),
            (
                vec![1.0, 2.0, 2.0, 3.0, 3.0, 3.0, 4.0, 9.0],
                vec![2.0, 3.0, 3.0, 4.0, 4.0, 5.0, 5.0, 6.0],
            ),
        ];
        for (i, (a, b)) in fixtures.iter().enumerate() {
            let approx = rank_sum_compare(a, b, 0.05, true).unwrap();
            let approx_significant = approx != Outcome::Approx;
            let exact_significant = exact_permutation_significant(a, b, 0.05);
            assert_eq!(
                approx_significant, exact_significant,
                "fixture {i}: approx {approx:?} vs exact sig {exact_significant}"
            );
        }
    }

    #[test]
    fn rank_sum_is_antisymmetric() {
        let mut rng = RunRng::from_seed(5);
        for _ in 0..50 {
            let a: Vec<f64> = (0..12).map(|_| rng.next_f64()).collect();
            let b: Vec<f64> = (0..12).map(|_| rng.next_f64() + 0.3).collect();
            let ab = rank_sum_compare(&a, &b, 0.05, true).unwrap();
            let ba = rank_sum_compare(&b, &a, 0.05, true).unwrap();
            match ab {
                Outcome::Plus => assert_eq!(ba, Outcome::Minus),
                Outcome::Minus => assert_eq!(ba, Outcome::Plus),
                Outcome::Approx => assert_eq!(ba, Outcome::Approx),
            }
        }
    }
}
