use std::fmt;

use rayon::prelude::*;

use crate::analysis::from_db;
use crate::channel::{rician_vector, RicianFactor, RngStream};
use crate::error::{invalid, Result};

use super::{received_snr, DoubleIrsLink, ScenarioConfig, SingleIrsLink};

/// Seed offset separating the one-IRS draws from the two-IRS draws.
const SINGLE_CASE_SEED_TAG: u64 = 0x5349_4e47_4c45_0001;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    Double,
    Single,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Double => "double",
            Case::Single => "single",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct McResult {
    pub tau: RicianFactor,
    pub case: Case,
    pub trials: usize,
    /// `10 log10` of the mean linear SNR.
    pub mean_snr_db: f64,
    /// Standard error of the linear mean mapped to dB (first-order).
    pub std_err_db: f64,
    pub per_trial_snr_db: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RicianStudy {
    pub k1: usize,
    pub k2: usize,
    pub taus: Vec<RicianFactor>,
    pub trials: usize,
    pub seed: u64,
    pub keep_trials: bool,
}

impl RicianStudy {
    pub fn new(k1: usize, k2: usize, taus: Vec<RicianFactor>, trials: usize, seed: u64) -> Self {
        RicianStudy {
            k1,
            k2,
            taus,
            trials,
            seed,
            keep_trials: false,
        }
    }
}

/// Average SNR under Rician inter-panel fading, one result per `(tau, case)`
/// in the order `taus[0]/double, taus[0]/single, taus[1]/double, ..`.
///
/// Two-IRS case: the beamformer stays fixed to the LoS far-field design while
/// the inter-panel matrix is redrawn each trial; BS and user channels stay LoS.
/// One-IRS case: the BS channel is redrawn with the same `tau` and the panel
/// re-aligns to each realization.
///
/// Trial `i` draws from stream `i` (`seed` for the two-IRS case, a tagged
/// seed for the one-IRS case), so results do not depend on thread count and
/// each tau sees the same underlying normal variates.
pub fn run_rician_study(scenario: &ScenarioConfig, study: &RicianStudy) -> Result<Vec<McResult>> {
    if study.trials == 0 {
        return Err(invalid("trials", "must be at least 1"));
    }
    if study.taus.is_empty() {
        return Err(invalid("taus", "at least one Rician factor is required"));
    }
    scenario.validate()?;
    let double = DoubleIrsLink::new(scenario, study.k1, study.k2)?;
    let single = SingleIrsLink::new(scenario, study.k1 + study.k2)?;
    let (p, n) = (scenario.tx_power_dbm, scenario.noise_power_dbm);
    let single_seed = study.seed ^ SINGLE_CASE_SEED_TAG;

    let mut out = Vec::with_capacity(2 * study.taus.len());
    for &tau in &study.taus {
        let double_snr = if tau.is_los() {
            vec![received_snr(&double.los_channel()?, p, n); study.trials]
        } else {
            (0..study.trials as u64)
                .into_par_iter()
                .map(|i| {
                    let mut rng = RngStream::new(study.seed, i).rng();
                    let s = double.inter.rician(tau, &mut rng);
                    Ok(received_snr(&double.through(&s)?, p, n))
                })
                .collect::<Result<Vec<_>>>()?
        };
        out.push(summarize(tau, Case::Double, double_snr, study.keep_trials));

        let single_snr = if tau.is_los() {
            vec![received_snr(&single.los_channel(scenario)?, p, n); study.trials]
        } else {
            (0..study.trials as u64)
                .into_par_iter()
                .map(|i| {
                    let mut rng = RngStream::new(single_seed, i).rng();
                    let t = rician_vector(&single.panel, scenario.bs_pos, &scenario.prop, tau, &mut rng)?;
                    Ok(received_snr(&single.aligned_channel(&t)?, p, n))
                })
                .collect::<Result<Vec<_>>>()?
        };
        out.push(summarize(tau, Case::Single, single_snr, study.keep_trials));
    }
    Ok(out)
}

fn summarize(tau: RicianFactor, case: Case, snr_db: Vec<f64>, keep: bool) -> McResult {
    let trials = snr_db.len();
    let (mean_snr_db, std_err_db) = if snr_db.windows(2).all(|w| w[0] == w[1]) {
        (snr_db[0], 0.0)
    } else {
        let linear: Vec<f64> = snr_db.iter().map(|&x| from_db(x)).collect();
        let n = trials as f64;
        let mean = linear.iter().sum::<f64>() / n;
        let var = linear.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
        let se = (var / n).sqrt();
        (10.0 * mean.log10(), 10.0 / std::f64::consts::LN_10 * se / mean)
    };
    McResult {
        tau,
        case,
        trials,
        mean_snr_db,
        std_err_db,
        per_trial_snr_db: keep.then_some(snr_db),
    }
}
