//! Closed-form received power of one and two IRSs versus the element budget.

use double_irs::analysis::{crossover_elements, optimal_double_gain, single_gain_closed_form, to_db, LinkDistances};
use double_irs::channel::free_space_gain;

fn main() -> Result<(), double_irs::error::Error> {
    let alpha = free_space_gain(0.06);
    let d = LinkDistances::new(1.0, 100.0, 15.0)?;
    let k_star = crossover_elements(alpha, d.d_t)?;
    println!("alpha = {:.4} dB, crossover K* = {k_star:.1}", to_db(alpha));
    println!("{:>6} {:>12} {:>12}", "K", "one IRS", "two IRSs");
    for k in [100.0, 200.0, 400.0, 800.0, 1600.0, 3200.0] {
        println!(
            "{k:>6} {:>12.3} {:>12.3}",
            to_db(single_gain_closed_form(k, &d, alpha)),
            to_db(optimal_double_gain(k, &d, alpha)?)
        );
    }
    Ok(())
}
