//! Scenario assembly and the reproduction studies.
//!
//! Every study evaluates the exact per-element channels: the BS and user
//! channels and the inter-panel matrix come from exact element distances,
//! while the two-IRS reflection phases are designed from the far-field
//! signature vectors. Closed forms from [`crate::analysis`] are reported next
//! to the simulated values, never substituted for them.

mod links;
mod rician;
mod scenario;
mod search;
mod sweep;

pub use links::{evaluate_double, evaluate_single, DoubleIrsLink, SingleIrsLink};
pub use rician::{run_rician_study, Case, McResult, RicianStudy};
pub use scenario::ScenarioConfig;
pub use search::{
    run_crossover_search, run_doubling_deltas, CrossoverOutcome, CrossoverRow, CrossoverSearch, DoublingDeltas,
};
pub use sweep::{run_split_sweep, SweepResult, SweepRow};

use crate::beamforming::EffectiveChannel;
use crate::error::{invalid, Result};
use crate::geometry::PanelGeometry;

/// Received SNR `P |h|^2 / sigma^2` in dB. A zero channel gives `-inf`.
pub fn received_snr(h: &EffectiveChannel, tx_power_dbm: f64, noise_power_dbm: f64) -> f64 {
    if h.power_gain == 0.0 {
        return f64::NEG_INFINITY;
    }
    tx_power_dbm - noise_power_dbm + 10.0 * h.power_gain.log10()
}

/// Grid shape for `count` elements: the largest divisor not exceeding
/// `sqrt(count)` along `a`, the cofactor along `b`.
pub fn factor_grid(count: usize) -> (usize, usize) {
    let mut a = 1;
    let mut d = 1;
    while d * d <= count {
        if count.is_multiple_of(d) {
            a = d;
        }
        d += 1;
    }
    (a, count / a)
}

/// Panels with `k1` and `k2` elements, keeping the template anchors,
/// directions and spacing.
pub fn build_panels(base: &ScenarioConfig, k1: usize, k2: usize) -> Result<(PanelGeometry, PanelGeometry)> {
    if k1 == 0 {
        return Err(invalid("k1", "must be at least 1"));
    }
    if k2 == 0 {
        return Err(invalid("k2", "must be at least 1"));
    }
    let (a1, b1) = factor_grid(k1);
    let (a2, b2) = factor_grid(k2);
    Ok((base.irs1.with_counts(a1, b1)?, base.irs2.with_counts(a2, b2)?))
}
