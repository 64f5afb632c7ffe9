use rayon::prelude::*;

use crate::analysis::{double_gain_closed_form, optimal_split, single_gain_closed_form, to_db};
use crate::error::{invalid, Result};

use super::{evaluate_double, evaluate_single, received_snr, ScenarioConfig};

/// SNR gains from doubling the element budget, simulated and closed-form.
#[derive(Debug, Clone, PartialEq)]
pub struct DoublingDeltas {
    pub k_small: usize,
    pub seed: u64,
    pub snr_single_db: [f64; 2],
    pub snr_double_db: [f64; 2],
    pub delta_single_db: f64,
    pub delta_double_db: f64,
    pub closed_delta_single_db: f64,
    pub closed_delta_double_db: f64,
}

/// Exact SNR change from `k_small` to `2 * k_small` elements, balanced split
/// for the two-IRS case and all elements on one panel for the benchmark.
/// Deterministic; `seed` is only recorded.
pub fn run_doubling_deltas(scenario: &ScenarioConfig, k_small: usize, seed: u64) -> Result<DoublingDeltas> {
    if k_small < 2 || !k_small.is_multiple_of(2) {
        return Err(invalid("k", format!("must be even and at least 2, got {k_small}")));
    }
    scenario.validate()?;
    let (p, n) = (scenario.tx_power_dbm, scenario.noise_power_dbm);
    let snr_at = |k: usize| -> Result<(f64, f64)> {
        let (k1, k2) = optimal_split(k)?;
        let double = received_snr(&evaluate_double(scenario, k1, k2)?, p, n);
        let single = received_snr(&evaluate_single(scenario, k)?, p, n);
        Ok((single, double))
    };
    let (s_small, d_small) = snr_at(k_small)?;
    let (s_large, d_large) = snr_at(2 * k_small)?;

    let d = scenario.link_distances()?;
    let alpha = scenario.prop.ref_gain();
    let ks = k_small as f64;
    let closed_double = to_db(
        double_gain_closed_form(ks, ks, &d, alpha) / double_gain_closed_form(ks / 2.0, ks / 2.0, &d, alpha),
    );
    let closed_single = to_db(single_gain_closed_form(2.0 * ks, &d, alpha) / single_gain_closed_form(ks, &d, alpha));

    Ok(DoublingDeltas {
        k_small,
        seed,
        snr_single_db: [s_small, s_large],
        snr_double_db: [d_small, d_large],
        delta_single_db: s_large - s_small,
        delta_double_db: d_large - d_small,
        closed_delta_single_db: closed_single,
        closed_delta_double_db: closed_double,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossoverRow {
    pub k: usize,
    pub snr_double_db: f64,
    pub snr_single_db: f64,
}

impl CrossoverRow {
    fn margin(&self) -> f64 {
        self.snr_double_db - self.snr_single_db
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CrossoverOutcome {
    /// The double deployment first wins at `k_above`; `k_star` interpolates
    /// the SNR margin linearly between `k_below` and `k_above`.
    Bracketed { k_star: f64, k_below: usize, k_above: usize },
    /// Already winning at the first budget in range.
    AtLowerBound { k: usize },
    NotFound,
}

impl CrossoverOutcome {
    pub fn estimate(&self) -> Option<f64> {
        match *self {
            CrossoverOutcome::Bracketed { k_star, .. } => Some(k_star),
            CrossoverOutcome::AtLowerBound { k } => Some(k as f64),
            CrossoverOutcome::NotFound => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossoverSearch {
    pub k_min: usize,
    pub k_max: usize,
    pub step: usize,
    pub rows: Vec<CrossoverRow>,
    pub outcome: CrossoverOutcome,
}

/// Scans even budgets `k_min, k_min + step, .. <= k_max` (with `k_min` rounded
/// up to even) for the first where the balanced two-IRS SNR reaches the
/// one-IRS SNR.
pub fn run_crossover_search(scenario: &ScenarioConfig, k_min: usize, k_max: usize, step: usize) -> Result<CrossoverSearch> {
    if step == 0 || !step.is_multiple_of(2) {
        return Err(invalid("step", format!("must be a positive even number, got {step}")));
    }
    let start = (k_min + k_min % 2).max(2);
    if start > k_max {
        return Err(invalid("k_max", format!("empty range {k_min}..={k_max}")));
    }
    scenario.validate()?;
    let (p, n) = (scenario.tx_power_dbm, scenario.noise_power_dbm);
    let budgets: Vec<usize> = (start..=k_max).step_by(step).collect();
    let rows = budgets
        .par_iter()
        .map(|&k| {
            let (k1, k2) = optimal_split(k)?;
            Ok(CrossoverRow {
                k,
                snr_double_db: received_snr(&evaluate_double(scenario, k1, k2)?, p, n),
                snr_single_db: received_snr(&evaluate_single(scenario, k)?, p, n),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let outcome = match rows.iter().position(|r| r.margin() >= 0.0) {
        None => CrossoverOutcome::NotFound,
        Some(0) => CrossoverOutcome::AtLowerBound { k: rows[0].k },
        Some(i) => {
            let (lo, hi) = (&rows[i - 1], &rows[i]);
            let (m_lo, m_hi) = (lo.margin(), hi.margin());
            let frac = -m_lo / (m_hi - m_lo);
            CrossoverOutcome::Bracketed {
                k_star: lo.k as f64 + frac * (hi.k - lo.k) as f64,
                k_below: lo.k,
                k_above: hi.k,
            }
        }
    };
    Ok(CrossoverSearch {
        k_min,
        k_max,
        step,
        rows,
        outcome,
    })
}
