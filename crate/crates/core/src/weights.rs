//! Simplex-lattice weight vectors and subproblem neighborhoods.

use crate::error::{Error, Result};

/// Weight vectors plus, for each subproblem, the indices of the T subproblems
/// with the closest weight vectors (always including itself).
#[derive(Debug, Clone)]
pub struct WeightSet {
    pub vectors: Vec<Vec<f64>>,
    pub neighborhoods: Vec<Vec<usize>>,
}

impl WeightSet {
    pub fn new(m: usize, n_requested: usize, t: usize) -> Result<Self> {
        let vectors = generate_weights(m, n_requested)?;
        let neighborhoods = build_neighborhoods(&vectors, t)?;
        Ok(Self {
            vectors,
            neighborhoods,
        })
    }
}

/// Number of simplex-lattice points for `m` objectives and `h` divisions:
/// C(h+m-1, m-1).
pub fn lattice_size(m: usize, h: usize) -> usize {
    match m {
        2 => h + 1,
        3 => (h + 1) * (h + 2) / 2,
        _ => unreachable!("dimension validated by caller"),
    }
}

/// Effective population size: the smallest lattice with at least `n_requested`
/// points. Callers adopt this as N so the index <-> weight pairing stays exact.
pub fn effective_n(m: usize, n_requested: usize) -> Result<usize> {
    if !(m == 2 || m == 3) {
        return Err(Error::UnsupportedDimension(m));
    }
    if n_requested < m {
        return Err(Error::InvalidConfig(format!(
            "requested population {n_requested} below objective count {m}"
        )));
    }
    let mut h = 1;
    while lattice_size(m, h) < n_requested {
        h += 1;
    }
    Ok(lattice_size(m, h))
}

/// Das-Dennis simplex lattice: all vectors with nonnegative components in
/// multiples of 1/H summing to 1, for the smallest H whose lattice holds at
/// least `n_requested` points. Sorted lexicographically for determinism.
pub fn generate_weights(m: usize, n_requested: usize) -> Result<Vec<Vec<f64>>> {
    if !(m == 2 || m == 3) {
        return Err(Error::UnsupportedDimension(m));
    }
    if n_requested < m {
        return Err(Error::InvalidConfig(format!(
            "requested population {n_requested} below objective count {m}"
        )));
    }
    let mut h = 1;
    while lattice_size(m, h) < n_requested {
        h += 1;
    }
    let mut vectors = Vec::with_capacity(lattice_size(m, h));
    match m {
        2 => {
            for i in 0..=h {
                vectors.push(vec![i as f64 / h as f64, (h - i) as f64 / h as f64]);
            }
        }
        3 => {
            for i in 0..=h {
                for j in 0..=(h - i) {
                    let k = h - i - j;
                    vectors.push(vec![
                        i as f64 / h as f64,
                        j as f64 / h as f64,
                        k as f64 / h as f64,
                    ]);
                }
            }
        }
        _ => unreachable!(),
    }
    vectors.sort_by(|a, b| a.partial_cmp(b).expect("lattice weights are finite"));
    Ok(vectors)
}

/// For each vector, the indices of its T nearest vectors by Euclidean
/// distance, ties broken by lower index. Distance zero to itself means
/// `i` is always a member of `neighborhoods[i]`.
pub fn build_neighborhoods(vectors: &[Vec<f64>], t: usize) -> Result<Vec<Vec<usize>>> {
    let n = vectors.len();
    if t == 0 || t > n {
        return Err(Error::InvalidConfig(format!(
            "neighborhood size {t} outside 1..={n}"
        )));
    }
    let mut result = Vec::with_capacity(n);
    for wi in vectors {
        let mut by_dist: Vec<(f64, usize)> = vectors
            .iter()
            .enumerate()
            .map(|(j, wj)| {
                let d2: f64 = wi
                    .iter()
                    .zip(wj)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                (d2, j)
            })
            .collect();
        by_dist.sort_by(|a, b| a.partial_cmp(b).expect("distances are finite"));
        result.push(by_dist.into_iter().take(t).map(|(_, j)| j).collect());
    }
    Ok(result)
}
