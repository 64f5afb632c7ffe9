//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's evaluation paths it is used to check.

#![allow(dead_code)]

use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64;

/// `(0.06 / 4 pi)^2`
pub const ALPHA: f64 = 2.279_726_631_952_599_4e-5;
pub const LAMBDA: f64 = 0.06;
pub const SPACING: f64 = 0.03;

/// `sum_{k2,k1} r_k2 phi2_k2 S_k2k1 phi1_k1 t_k1` by plain triple-product loops.
pub fn brute_cascade(
    r: &[Complex64],
    phi2: &[Complex64],
    s: &[Vec<Complex64>],
    phi1: &[Complex64],
    t: &[Complex64],
) -> Complex64 {
    let mut h = Complex64::new(0.0, 0.0);
    for k2 in 0..r.len() {
        for k1 in 0..t.len() {
            h += r[k2] * phi2[k2] * s[k2][k1] * phi1[k1] * t[k1];
        }
    }
    h
}

/// Element positions of a `ca x cb` grid, `ka` fastest, computed with arrays.
pub fn grid_positions(anchor: [f64; 3], a: [f64; 3], b: [f64; 3], ca: usize, cb: usize) -> Vec<[f64; 3]> {
    let mut out = Vec::new();
    for kb in 0..cb {
        for ka in 0..ca {
            let mut p = anchor;
            for i in 0..3 {
                p[i] += ka as f64 * SPACING * a[i] + kb as f64 * SPACING * b[i];
            }
            out.push(p);
        }
    }
    out
}

pub fn dist(p: [f64; 3], q: [f64; 3]) -> f64 {
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2) + (p[2] - q[2]).powi(2)).sqrt()
}

pub fn los_entry(d: f64) -> Complex64 {
    Complex64::from_polar(ALPHA.sqrt() / d, -2.0 * PI * d / LAMBDA)
}

/// Largest divisor not above the square root.
pub fn near_square(k: usize) -> (usize, usize) {
    let a = (1..=k).filter(|d| d * d <= k && k.is_multiple_of(*d)).max().unwrap();
    (a, k / a)
}

pub const H: f64 = 0.866_025_403_784_438_6;
pub const BS: [f64; 3] = [0.87, 0.5, 0.0];
pub const USER: [f64; 3] = [13.0, 92.5, 0.0];
pub const V1: [f64; 3] = [0.0, 0.0, 0.0];
pub const V2: [f64; 3] = [0.0, 100.0, 0.0];
pub const N1A: [f64; 3] = [0.0, 0.0, 1.0];
pub const N1B: [f64; 3] = [H, -0.5, 0.0];
pub const N2A: [f64; 3] = [H, 0.5, 0.0];
pub const N2B: [f64; 3] = [0.0, 0.0, 1.0];

/// Expected double-IRS power gain under Rician inter-panel fading with the
/// beamformer fixed: `w |h_los|^2 + (1 - w) sum |r_k2 t_k1|^2 alpha / d^2`,
/// `w = tau / (tau + 1)`, from the independence of the scattered entries.
pub fn rician_second_moment(h_los: Complex64, r: &[Complex64], t: &[Complex64], d: &[Vec<f64>], tau: f64) -> f64 {
    let w = tau / (tau + 1.0);
    let mut scat = 0.0;
    for k2 in 0..r.len() {
        for k1 in 0..t.len() {
            scat += r[k2].norm_sqr() * t[k1].norm_sqr() * ALPHA / d[k2][k1].powi(2);
        }
    }
    w * h_los.norm_sqr() + (1.0 - w) * scat
}

/// Parses a CSV with a header into rows of string fields.
pub fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<String>>) {
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    (header, rows)
}

pub fn col(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"))
}
