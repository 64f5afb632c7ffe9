//! Smallest element budget at which two cooperating IRSs beat one.

use double_irs::analysis::crossover_elements;
use double_irs::experiments::{run_crossover_search, CrossoverOutcome, ScenarioConfig};

fn main() -> Result<(), double_irs::error::Error> {
    let s = ScenarioConfig::reference();
    let res = run_crossover_search(&s, 600, 1100, 20)?;
    for r in &res.rows {
        let mark = if r.snr_double_db >= r.snr_single_db { "two" } else { "one" };
        println!("K = {:>5}: two IRSs {:>8.3} dB, one IRS {:>8.3} dB  {mark}", r.k, r.snr_double_db, r.snr_single_db);
    }
    let predicted = crossover_elements(s.prop.ref_gain(), s.link_distances()?.d_t)?;
    match res.outcome {
        CrossoverOutcome::Bracketed { k_star, .. } => println!("K* = {k_star:.1}, closed form {predicted:.1}"),
        other => println!("{other:?}, closed form {predicted:.1}"),
    }
    Ok(())
}
