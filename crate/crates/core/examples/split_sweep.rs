//! Received SNR for every split of 1600 elements between the two panels.

use double_irs::experiments::{run_split_sweep, ScenarioConfig};

fn main() -> Result<(), double_irs::error::Error> {
    let s = ScenarioConfig::reference();
    let res = run_split_sweep(&s, 1600, 100, 0)?;
    println!("{:>6} {:>6} {:>10} {:>10} {:>10}", "K1", "K2", "exact", "closed", "one IRS");
    for r in &res.rows {
        println!(
            "{:>6} {:>6} {:>10.3} {:>10.3} {:>10.3}",
            r.k1, r.k2, r.snr_exact_db, r.snr_closed_form_db, r.snr_single_irs_db
        );
    }
    if let Some(best) = res.best_row() {
        println!("best split: K1 = {}, K2 = {}", best.k1, best.k2);
    }
    Ok(())
}
