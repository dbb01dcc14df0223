//! DTLZ1-4 (Deb, Thiele, Laumanns, Zitzler scalable test problems).
//!
//! The last D - M + 1 variables are distance variables; the front is reached
//! when all of them equal 1/2.

use std::f64::consts::{FRAC_PI_2, PI};

fn g_rastrigin(xm: &[f64]) -> f64 {
    100.0
        * (xm.len() as f64
            + xm.iter()
                .map(|&v| (v - 0.5) * (v - 0.5) - (20.0 * PI * (v - 0.5)).cos())
                .sum::<f64>())
}

fn g_sphere(xm: &[f64]) -> f64 {
    xm.iter().map(|&v| (v - 0.5) * (v - 0.5)).sum()
}

/// Linear front f1 + ... + fM = 1/2 with a multimodal distance function.
pub fn dtlz1(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_rastrigin(&x[m - 1..]);
    (0..m)
        .map(|i| {
            let mut v = 0.5 * (1.0 + g);
            for &xj in &x[..m - 1 - i] {
                v *= xj;
            }
            if i > 0 {
                v *= 1.0 - x[m - 1 - i];
            }
            v
        })
        .collect()
}

/// Spherical front; `alpha` = 1 is DTLZ2, `alpha` = 100 is DTLZ4 (which
/// biases solutions towards the f3 = 0 plane).
pub fn dtlz2(x: &[f64], m: usize, alpha: f64) -> Vec<f64> {
    let g = g_sphere(&x[m - 1..]);
    spherical(x, m, 1.0 + g, alpha)
}

/// DTLZ2's sphere with DTLZ1's multimodal distance function.
pub fn dtlz3(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_rastrigin(&x[m - 1..]);
    spherical(x, m, 1.0 + g, 1.0)
}

fn spherical(x: &[f64], m: usize, scale: f64, alpha: f64) -> Vec<f64> {
    (0..m)
        .map(|i| {
            let mut v = scale;
            for &xj in &x[..m - 1 - i] {
                v *= (FRAC_PI_2 * xj.powf(alpha)).cos();
            }
            if i > 0 {
                v *= (FRAC_PI_2 * x[m - 1 - i].powf(alpha)).sin();
            }
            v
        })
        .collect()
}
