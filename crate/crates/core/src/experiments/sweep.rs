use rayon::prelude::*;

use crate::analysis::double_gain_closed_form;
use crate::error::{invalid, Result};

use super::{evaluate_double, evaluate_single, received_snr, ScenarioConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub k1: usize,
    pub k2: usize,
    pub snr_exact_db: f64,
    pub snr_closed_form_db: f64,
    /// One-IRS benchmark with all `k1 + k2` elements; identical on every row.
    pub snr_single_irs_db: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub k_total: usize,
    pub step: usize,
    pub seed: u64,
    pub scenario_digest: String,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// Row with the highest exact SNR (first one on ties).
    pub fn best_row(&self) -> Option<&SweepRow> {
        self.rows
            .iter()
            .reduce(|best, row| if row.snr_exact_db > best.snr_exact_db { row } else { best })
    }
}

/// SNR over every split `k1 = step, 2*step, ..` with `k1 < k_total`.
///
/// The sweep is deterministic; `seed` is only recorded.
pub fn run_split_sweep(scenario: &ScenarioConfig, k_total: usize, step: usize, seed: u64) -> Result<SweepResult> {
    if step == 0 {
        return Err(invalid("step", "must be at least 1"));
    }
    if k_total < 2 {
        return Err(invalid("k", format!("need at least 2 elements, got {k_total}")));
    }
    scenario.validate()?;
    let d = scenario.link_distances()?;
    let alpha = scenario.prop.ref_gain();
    let offset = scenario.snr_offset_db();

    let single = evaluate_single(scenario, k_total)?;
    let snr_single = received_snr(&single, scenario.tx_power_dbm, scenario.noise_power_dbm);

    let splits: Vec<usize> = (1..).map(|i| i * step).take_while(|&k1| k1 < k_total).collect();
    let rows = splits
        .par_iter()
        .map(|&k1| {
            let k2 = k_total - k1;
            let h = evaluate_double(scenario, k1, k2)?;
            let closed = double_gain_closed_form(k1 as f64, k2 as f64, &d, alpha);
            Ok(SweepRow {
                k1,
                k2,
                snr_exact_db: received_snr(&h, scenario.tx_power_dbm, scenario.noise_power_dbm),
                snr_closed_form_db: offset + 10.0 * closed.log10(),
                snr_single_irs_db: snr_single,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SweepResult {
        k_total,
        step,
        seed,
        scenario_digest: scenario.digest(),
        rows,
    })
}
