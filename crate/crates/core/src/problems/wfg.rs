//! WFG1-4 (Huband, Hingston, Barone, While walking-fish-group toolkit).
//!
//! Variables z_i live in [0, 2i] and are normalized before the per-problem
//! chain of transition functions (bias/shift/reduction) and the final shape
//! functions. Here k position and l distance variables with k = 2(M-1).

use std::f64::consts::PI;

/// Position-variable count used by the presets (M = 3).
pub const POSITION_VARS: usize = 4;

// -- transition functions -----------------------------------------------------

fn b_poly(y: f64, a: f64) -> f64 {
    y.powf(a)
}

fn b_flat(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let v = a + 0.0f64.min((y - b).floor()) * a * (b - y) / b
        - 0.0f64.min((c - y).floor()) * (1.0 - a) * (y - c) / (1.0 - c);
    v.clamp(0.0, 1.0)
}

fn s_linear(y: f64, a: f64) -> f64 {
    (y - a).abs() / ((a - y).floor() + a).abs()
}

fn s_multi(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let tmp = (y - c).abs() / (2.0 * ((c - y).floor() + c));
    (1.0 + ((4.0 * a + 2.0) * PI * (0.5 - tmp)).cos() + 4.0 * b * tmp * tmp) / (b + 2.0)
}

fn r_sum(ys: &[f64], ws: &[f64]) -> f64 {
    let num: f64 = ys.iter().zip(ws).map(|(y, w)| y * w).sum();
    num / ws.iter().sum::<f64>()
}

fn r_nonsep(ys: &[f64], a: usize) -> f64 {
    let n = ys.len();
    let mut num = 0.0;
    for j in 0..n {
        num += ys[j];
        for p in 0..a - 1 {
            num += (ys[j] - ys[(j + 1 + p) % n]).abs();
        }
    }
    let a_f = a as f64;
    let half_up = (a_f / 2.0).ceil();
    let den = (n as f64 / a_f) * half_up * (1.0 + 2.0 * a_f - 2.0 * half_up);
    num / den
}

// -- shape functions, x = (x_1..x_{M-1}), 1-based m --------------------------

fn shape_linear(x: &[f64], m: usize) -> f64 {
    let big_m = x.len() + 1;
    let mut v: f64 = x[..big_m - m].iter().product();
    if m > 1 {
        v *= 1.0 - x[big_m - m];
    }
    v
}

fn shape_convex(x: &[f64], m: usize) -> f64 {
    let big_m = x.len() + 1;
    let mut v: f64 = x[..big_m - m]
        .iter()
        .map(|&xi| 1.0 - (xi * PI / 2.0).cos())
        .product();
    if m > 1 {
        v *= 1.0 - (x[big_m - m] * PI / 2.0).sin();
    }
    v
}

fn shape_concave(x: &[f64], m: usize) -> f64 {
    let big_m = x.len() + 1;
    let mut v: f64 = x[..big_m - m]
        .iter()
        .map(|&xi| (xi * PI / 2.0).sin())
        .product();
    if m > 1 {
        v *= (x[big_m - m] * PI / 2.0).cos();
    }
    v
}

fn shape_mixed(x1: f64, alpha: f64, a: f64) -> f64 {
    (1.0 - x1 - (2.0 * a * PI * x1 + PI / 2.0).cos() / (2.0 * a * PI)).powf(alpha)
}

fn shape_disc(x1: f64, alpha: f64, beta: f64, a: f64) -> f64 {
    1.0 - x1.powf(alpha) * (a * x1.powf(beta) * PI).cos().powi(2)
}

/// x_m = max(t_M, A_m)(t_m - 1/2) + 1/2 for the position part; x_M = t_M.
fn finish(t: &[f64], degenerate: &[f64]) -> (Vec<f64>, f64) {
    let m = t.len();
    let xm = t[m - 1];
    let x = (0..m - 1)
        .map(|i| xm.max(degenerate[i]) * (t[i] - 0.5) + 0.5)
        .collect();
    (x, xm)
}

fn normalize(z: &[f64]) -> Vec<f64> {
    z.iter()
        .enumerate()
        .map(|(i, &zi)| zi / (2.0 * (i + 1) as f64))
        .collect()
}

fn scale(xm: f64, h: &[f64]) -> Vec<f64> {
    h.iter()
        .enumerate()
        .map(|(m, &hm)| xm + 2.0 * (m + 1) as f64 * hm)
        .collect()
}

fn position_reduction(t: &[f64], k: usize, m: usize, weighted: bool) -> Vec<f64> {
    let gap = k / (m - 1);
    (1..m)
        .map(|j| {
            let head = (j - 1) * gap;
            let tail = j * gap;
            let ws: Vec<f64> = if weighted {
                (head..tail).map(|i| 2.0 * (i + 1) as f64).collect()
            } else {
                vec![1.0; gap]
            };
            r_sum(&t[head..tail], &ws)
        })
        .collect()
}

pub fn wfg1(z: &[f64], k: usize, m: usize) -> Vec<f64> {
    let n = z.len();
    let y = normalize(z);
    let t1: Vec<f64> = y
        .iter()
        .enumerate()
        .map(|(i, &v)| if i < k { v } else { s_linear(v, 0.35) })
        .collect();
    let t2: Vec<f64> = t1
        .iter()
        .enumerate()
        .map(|(i, &v)| if i < k { v } else { b_flat(v, 0.8, 0.75, 0.85) })
        .collect();
    let t3: Vec<f64> = t2.iter().map(|&v| b_poly(v, 0.02)).collect();
    let mut t4 = position_reduction(&t3, k, m, true);
    let tail_ws: Vec<f64> = (k..n).map(|i| 2.0 * (i + 1) as f64).collect();
    t4.push(r_sum(&t3[k..], &tail_ws));
    let (x, xm) = finish(&t4, &vec![1.0; m - 1]);
    let mut h: Vec<f64> = (1..m).map(|j| shape_convex(&x, j)).collect();
    h.push(shape_mixed(x[0], 1.0, 5.0));
    scale(xm, &h)
}

fn wfg2_t(z: &[f64], k: usize, m: usize) -> Vec<f64> {
    let y = normalize(z);
    let l = z.len() - k;
    let t1: Vec<f64> = y
        .iter()
        .enumerate()
        .map(|(i, &v)| if i < k { v } else { s_linear(v, 0.35) })
        .collect();
    let mut t2: Vec<f64> = t1[..k].to_vec();
    for i in k..k + l / 2 {
        let a = t1[k + 2 * (i - k)];
        let b = t1[k + 2 * (i - k) + 1];
        t2.push(r_nonsep(&[a, b], 2));
    }
    let mut t3 = position_reduction(&t2, k, m, false);
    t3.push(r_sum(&t2[k..], &vec![1.0; l / 2]));
    t3
}

pub fn wfg2(z: &[f64], k: usize, m: usize) -> Vec<f64> {
    let t = wfg2_t(z, k, m);
    let (x, xm) = finish(&t, &vec![1.0; m - 1]);
    let mut h: Vec<f64> = (1..m).map(|j| shape_convex(&x, j)).collect();
    h.push(shape_disc(x[0], 1.0, 1.0, 5.0));
    scale(xm, &h)
}

pub fn wfg3(z: &[f64], k: usize, m: usize) -> Vec<f64> {
    let t = wfg2_t(z, k, m);
    let mut degenerate = vec![0.0; m - 1];
    degenerate[0] = 1.0;
    let (x, xm) = finish(&t, &degenerate);
    let h: Vec<f64> = (1..=m).map(|j| shape_linear(&x, j)).collect();
    scale(xm, &h)
}

pub fn wfg4(z: &[f64], k: usize, m: usize) -> Vec<f64> {
    let n = z.len();
    let y = normalize(z);
    let t1: Vec<f64> = y.iter().map(|&v| s_multi(v, 30.0, 10.0, 0.35)).collect();
    let mut t2 = position_reduction(&t1, k, m, false);
    t2.push(r_sum(&t1[k..], &vec![1.0; n - k]));
    let (x, xm) = finish(&t2, &vec![1.0; m - 1]);
    let h: Vec<f64> = (1..=m).map(|j| shape_concave(&x, j)).collect();
    scale(xm, &h)
}

// -- front samplers ------------------------------------------------------------
//
// On the front the distance part is at its optimum, so x_M = 0 and
// f_m = 2m h_m(x_1, x_2) with (x_1, x_2) spanning [0,1]^2. Shapes with
// oscillating terms produce dominated patches, which the caller filters.

fn unit_grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}

pub fn pf_wfg1(count: usize) -> Vec<Vec<f64>> {
    let a = ((1.5 * count as f64).sqrt().ceil() as usize).max(8);
    let mut pts = Vec::with_capacity(a * a);
    for x1 in unit_grid(a) {
        for x2 in unit_grid(a) {
            let x = [x1, x2];
            let h = [
                shape_convex(&x, 1),
                shape_convex(&x, 2),
                shape_mixed(x1, 1.0, 5.0),
            ];
            pts.push(scale(0.0, &h));
        }
    }
    pts
}

pub fn pf_wfg2(count: usize) -> Vec<Vec<f64>> {
    let a = ((1.5 * count as f64).sqrt().ceil() as usize).max(8);
    let mut pts = Vec::with_capacity(a * a);
    for x1 in unit_grid(a) {
        for x2 in unit_grid(a) {
            let x = [x1, x2];
            let h = [
                shape_convex(&x, 1),
                shape_convex(&x, 2),
                shape_disc(x1, 1.0, 1.0, 5.0),
            ];
            pts.push(scale(0.0, &h));
        }
    }
    pts
}

pub fn pf_wfg3(count: usize) -> Vec<Vec<f64>> {
    // degenerate: x2 pinned at 1/2, the front is a line
    unit_grid(count)
        .into_iter()
        .map(|x1| {
            let x = [x1, 0.5];
            let h = [
                shape_linear(&x, 1),
                shape_linear(&x, 2),
                shape_linear(&x, 3),
            ];
            scale(0.0, &h)
        })
        .collect()
}
