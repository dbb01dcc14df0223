//! The IMOP family: box-bounded problems whose position parameters are
//! raised to strongly biased exponents (a1 = 0.05, a2 = 10), so uniform
//! decision sampling lands very unevenly on the front. That bias is what
//! drags decomposition methods into one corner of the front.
//!
//! Structure shared by the family: the first K variables are position
//! variables, compressed into one or two parameters
//!
//!   y1 = mean(position vars)^a1        (two-objective members, IMOP1-4)
//!   y1 = mean(odd-position vars)^a1    (three-objective members, IMOP5-8)
//!   y2 = mean(even-position vars)^a2
//!
//! and the remaining L variables form the distance part
//! g = sum (x_i - 1/2)^2, which vanishes on the front.

use std::f64::consts::{FRAC_PI_2, PI};

use super::ImopParams;

fn mean_pow(xs: &[f64], a: f64) -> f64 {
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    mean.powf(a)
}

fn g_dist(x: &[f64], k: usize) -> f64 {
    x[k..].iter().map(|&v| (v - 0.5) * (v - 0.5)).sum()
}

fn y1_single(x: &[f64], p: &ImopParams) -> f64 {
    mean_pow(&x[..p.k], p.a1)
}

fn y_split(x: &[f64], p: &ImopParams) -> (f64, f64) {
    let odd: Vec<f64> = x[..p.k].iter().copied().step_by(2).collect();
    let even: Vec<f64> = x[..p.k].iter().copied().skip(1).step_by(2).collect();
    (mean_pow(&odd, p.a1), mean_pow(&even, p.a2))
}

// -- two objectives ---------------------------------------------------------

pub fn imop1(x: &[f64], p: &ImopParams) -> Vec<f64> {
    let (y, g) = (y1_single(x, p), g_dist(x, p.k));
    vec![
        g + (FRAC_PI_2 * y).cos().powi(8),
        g + (FRAC_PI_2 * y).sin().powi(8),
    ]
}

pub fn imop2(x: &[f64], p: &ImopParams) -> Vec<f64> {
    let (y, g) = (y1_single(x, p), g_dist(x, p.k));
    vec![
        g + (FRAC_PI_2 * y).cos().sqrt(),
        g + (FRAC_PI_2 * y).sin().sqrt(),
    ]
}

pub fn imop3(x: &[f64], p: &ImopParams) -> Vec<f64> {
    let (y, g) = (y1_single(x, p), g_dist(x, p.k));
    vec![g + 1.0 + (10.0 * PI * y).cos() / 5.0 - y, g + y]
}

// -- three objectives --------------------------------------------------------

/// Degenerate wavy curve from (0,0,2) to (1,1+.,0).
pub fn imop4(x: &[f64], p: &ImopParams) -> Vec<f64> {
    let (y, g) = (y1_single(x, p), g_dist(x, p.k));
    let s = 1.0 + g;
    vec![
        s * y,
        s * (y + (10.0 * PI * y).sin() / 10.0),
        s * (2.0 - 2.0 * y),
    ]
}

/// Unit sphere restricted to eight disjoint azimuth strips: a disconnected
/// front. y1 picks the strip and the offset inside it, y2 the polar angle.
pub fn imop5(x: &[f64], p: &ImopParams) -> Vec<f64> {
    let (y1, y2) = y_split(x, p);
    let g = g_dist(x, p.k);
    let (psi, theta) = imop5_angles(y1, y2);
    sphere_point(theta, psi, 1.0 + g)
}

fn imop5_angles(y1: f64, y2: f64) -> (f64, f64) {
    let scaled = y1 * 8.0;
    let strip = (scaled.ceil().max(1.0)).min(8.0);
    let frac = (scaled - (strip - 1.0)).clamp(0.0, 1.0);
    // strip u covers azimuth fractions ((u-0.85)/8, (u-0.15)/8): gaps between
    let psi = FRAC_PI_2 * (strip - 0.5 + 0.7 * (frac - 0.5)) / 8.0;
    (psi, FRAC_PI_2 * y2)
}

/// Simplex plane with a superimposed ripple; the nondominated set collapses
/// onto the grid lines where the ripple vanishes.
pub fn imop6(x: &[f64], p: &ImopParams) -> Vec<f64> {
    let (y1, y2) = y_split(x, p);
    let g = g_dist(x, p.k);
    imop6_front(y1, y2).into_iter().map(|v| (1.0 + g) * v).collect()
}

fn imop6_front(y1: f64, y2: f64) -> Vec<f64> {
    let p1 = y1;
    let p2 = (1.0 - y1) * y2;
    let ripple = 0.05 * ((6.0 * PI * p1).sin() * (6.0 * PI * p2).sin()).abs();
    vec![p1 + ripple, p2 + ripple, 1.0 - p1 - p2 + ripple]
}

/// Quarter-sphere lune: the full polar range but a compressed azimuth window,
/// with the pole (0,0,1) reachable. The a1 bias pushes populations towards
/// that pole.
pub fn imop7(x: &[f64], p: &ImopParams) -> Vec<f64> {
    let (y1, y2) = y_split(x, p);
    let g = g_dist(x, p.k);
    let (theta, psi) = imop7_angles(y1, y2);
    sphere_point(theta, psi, 1.0 + g)
}

fn imop7_angles(y1: f64, y2: f64) -> (f64, f64) {
    (FRAC_PI_2 * y1, FRAC_PI_2 * (0.25 + 0.5 * y2))
}

/// Simplex plane with a grid of square holes: points inside a hole are lifted
/// off the plane and dominated by the surviving plane points nearby.
pub fn imop8(x: &[f64], p: &ImopParams) -> Vec<f64> {
    let (y1, y2) = y_split(x, p);
    let g = g_dist(x, p.k);
    imop8_front(y1, y2).into_iter().map(|v| (1.0 + g) * v).collect()
}

fn imop8_front(y1: f64, y2: f64) -> Vec<f64> {
    let p1 = y1;
    let p2 = (1.0 - y1) * y2;
    let in_band = |v: f64| {
        let t = (3.0 * v).fract();
        t > 0.25 && t < 0.75
    };
    let lift = if in_band(p1) && in_band(p2) { 0.2 } else { 0.0 };
    vec![p1 + lift, p2 + lift, 1.0 - p1 - p2 + lift]
}

fn sphere_point(theta: f64, psi: f64, scale: f64) -> Vec<f64> {
    vec![
        scale * theta.cos() * psi.cos(),
        scale * theta.cos() * psi.sin(),
        scale * theta.sin(),
    ]
}

// -- front samplers (g = 0 slices of the above) ------------------------------

fn grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}

pub fn pf_imop1(count: usize) -> Vec<Vec<f64>> {
    grid(count)
        .into_iter()
        .map(|t| {
            vec![
                (FRAC_PI_2 * t).cos().powi(8),
                (FRAC_PI_2 * t).sin().powi(8),
            ]
        })
        .collect()
}

pub fn pf_imop2(count: usize) -> Vec<Vec<f64>> {
    grid(count)
        .into_iter()
        .map(|t| {
            vec![
                (FRAC_PI_2 * t).cos().sqrt(),
                (FRAC_PI_2 * t).sin().sqrt(),
            ]
        })
        .collect()
}

pub fn pf_imop3(count: usize) -> Vec<Vec<f64>> {
    grid(count)
        .into_iter()
        .map(|t| vec![1.0 + (10.0 * PI * t).cos() / 5.0 - t, t])
        .collect()
}

pub fn pf_imop4(count: usize) -> Vec<Vec<f64>> {
    grid(count)
        .into_iter()
        .map(|t| {
            vec![
                t,
                t + (10.0 * PI * t).sin() / 10.0,
                2.0 - 2.0 * t,
            ]
        })
        .collect()
}

pub fn pf_imop5(count: usize) -> Vec<Vec<f64>> {
    // sphere points are mutually nondominated, no filtering needed
    let per_strip = (count / 8).max(4);
    let a = (per_strip as f64).sqrt().ceil() as usize;
    let mut pts = Vec::new();
    for strip in 0..8 {
        for fv in grid(a) {
            let y1 = (strip as f64 + fv.min(1.0 - 1e-12)) / 8.0 + 1e-12;
            for tv in grid(a) {
                let (psi, theta) = imop5_angles(y1, tv);
                pts.push(sphere_point(theta, psi, 1.0));
            }
        }
    }
    pts
}

pub fn pf_imop6(count: usize) -> Vec<Vec<f64>> {
    let a = ((1.3 * count as f64).sqrt().ceil() as usize).max(8);
    let mut pts = Vec::with_capacity(a * a);
    for y1 in grid(a) {
        for y2 in grid(a) {
            pts.push(imop6_front(y1, y2));
        }
    }
    pts
}

pub fn pf_imop7(count: usize) -> Vec<Vec<f64>> {
    let a = (count as f64).sqrt().ceil() as usize;
    let mut pts = Vec::with_capacity(a * a);
    for y1 in grid(a) {
        for y2 in grid(a) {
            let (theta, psi) = imop7_angles(y1, y2);
            pts.push(sphere_point(theta, psi, 1.0));
        }
    }
    pts
}

pub fn pf_imop8(count: usize) -> Vec<Vec<f64>> {
    let a = ((1.3 * count as f64).sqrt().ceil() as usize).max(8);
    let mut pts = Vec::with_capacity(a * a);
    for y1 in grid(a) {
        for y2 in grid(a) {
            pts.push(imop8_front(y1, y2));
        }
    }
    pts
}

/// Minimum of IMOP3's first objective over the feasible set: the distance
/// part is nonnegative, so this is min over y of 1 + cos(10 pi y)/5 - y,
/// resolved by a dense grid plus ternary refinement.
pub fn imop3_f1_min() -> f64 {
    let h = |y: f64| 1.0 + (10.0 * PI * y).cos() / 5.0 - y;
    let n = 20_000;
    let mut best_y = 0.0;
    let mut best = h(0.0);
    for i in 1..=n {
        let y = i as f64 / n as f64;
        let v = h(y);
        if v < best {
            best = v;
            best_y = y;
        }
    }
    let (mut lo, mut hi) = ((best_y - 1e-3).max(0.0), (best_y + 1e-3).min(1.0));
    for _ in 0..100 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if h(m1) < h(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    h(0.5 * (lo + hi))
}
