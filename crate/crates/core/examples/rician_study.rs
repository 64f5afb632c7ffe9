//! Average SNR when the inter-panel channel has a scattered component.
//! Pass the number of trials as the first argument (default 200).

use double_irs::channel::RicianFactor;
use double_irs::experiments::{run_rician_study, RicianStudy, ScenarioConfig};

fn main() -> Result<(), double_irs::error::Error> {
    let trials = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(200);
    let taus = ["inf", "10", "3", "1", "0"]
        .iter()
        .map(|t| t.parse::<RicianFactor>())
        .collect::<Result<Vec<_>, _>>()?;
    let s = ScenarioConfig::reference();
    let study = RicianStudy::new(400, 400, taus, trials, 7);
    for r in run_rician_study(&s, &study)? {
        println!(
            "tau = {:>4} {:<6} {:>8.3} dB  (+- {:.3})",
            r.tau.to_string(),
            r.case,
            r.mean_snr_db,
            r.std_err_db
        );
    }
    Ok(())
}
