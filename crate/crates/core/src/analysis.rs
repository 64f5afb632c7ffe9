//! Closed-form power gains and deployment arithmetic.
//!
//! All gains are linear power ratios. Element counts are taken as `f64` so the
//! scaling laws can be evaluated at non-integer budgets such as the crossover
//! point. With every per-element path loss flattened to its anchor distance:
//!
//! * two cooperating panels: `|h|^2 = alpha^3 (K1 K2)^2 / (d_r d_S d_t)^2`
//! * one panel near the user: `|h|^2 = alpha^2 K^2 / (d_r d_S)^2`
//!
//! so the balanced double deployment overtakes the single one once
//! `K >= 4 d_t / sqrt(alpha)`.

use serde::Serialize;

use crate::error::{invalid, Result};

/// Anchor-to-anchor distances of the double reflection link, in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinkDistances {
    /// BS to IRS 1 element (0,0).
    pub d_t: f64,
    /// IRS 1 element (0,0) to IRS 2 element (0,0).
    pub d_s: f64,
    /// IRS 2 element (0,0) to user.
    pub d_r: f64,
}

impl LinkDistances {
    pub fn new(d_t: f64, d_s: f64, d_r: f64) -> Result<Self> {
        for (name, v) in [("d_t", d_t), ("d_s", d_s), ("d_r", d_r)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(invalid(name, format!("must be positive, got {v}")));
            }
        }
        Ok(LinkDistances { d_t, d_s, d_r })
    }

    fn product(&self) -> f64 {
        self.d_t * self.d_s * self.d_r
    }
}

pub fn to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

pub fn from_db(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// `alpha^3 (K1 K2)^2 / (d_r d_S d_t)^2`.
pub fn double_gain_closed_form(k1: f64, k2: f64, d: &LinkDistances, alpha: f64) -> f64 {
    let kk = k1 * k2;
    alpha.powi(3) * kk * kk / d.product().powi(2)
}

/// Integer split of `k` maximizing `K1^2 (k - K1)^2`. Odd budgets return the
/// `(floor, ceil)` ordering.
pub fn optimal_split(k: usize) -> Result<(usize, usize)> {
    if k < 2 {
        return Err(invalid("k", format!("need at least 2 elements, got {k}")));
    }
    let k1 = k / 2;
    Ok((k1, k - k1))
}

/// `alpha^3 K^4 / (4 d_r d_S d_t)^2`, the balanced-split gain.
pub fn optimal_double_gain(k: f64, d: &LinkDistances, alpha: f64) -> Result<f64> {
    if !(k >= 2.0) {
        return Err(invalid("k", format!("need at least 2 elements, got {k}")));
    }
    let k2 = k * k;
    Ok(alpha.powi(3) * k2 * k2 / (4.0 * d.product()).powi(2))
}

/// `alpha^2 K^2 / (d_r d_S)^2`, taking the BS-to-panel distance as `d_S`.
pub fn single_gain_closed_form(k: f64, d: &LinkDistances, alpha: f64) -> f64 {
    alpha * alpha * k * k / (d.d_r * d.d_s).powi(2)
}

/// Budget at which [`optimal_double_gain`] equals [`single_gain_closed_form`]:
/// `4 d_t / sqrt(alpha)`, which is `4 / sqrt(alpha)` for `d_t = 1 m`.
pub fn crossover_elements(alpha: f64, d_t: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(invalid("alpha", format!("must be positive, got {alpha}")));
    }
    if !(d_t > 0.0) {
        return Err(invalid("d_t", format!("must be positive, got {d_t}")));
    }
    Ok(4.0 * d_t / alpha.sqrt())
}
