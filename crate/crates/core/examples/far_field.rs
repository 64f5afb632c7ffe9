//! How well the rank-one far-field model reproduces the exact inter-panel
//! channel as the panels grow.

use double_irs::channel::{far_field_matrix, los_matrix_exact, rank_one_margin, signature_decomposition};
use double_irs::experiments::{build_panels, ScenarioConfig};

fn main() -> Result<(), double_irs::error::Error> {
    let s = ScenarioConfig::reference();
    let d_s = s.irs1.anchor().distance(s.irs2.anchor());
    println!("{:>6} {:>8} {:>14} {:>12}", "K", "margin", "max |dmod|", "max |dphase|");
    for k in [4, 16, 64, 256, 800] {
        let (p1, p2) = build_panels(&s, k, k)?;
        let exact = los_matrix_exact(&p1, &p2, &s.prop)?;
        let ff = far_field_matrix(&signature_decomposition(&p1, &p2, &s.prop)?);
        let (mut dm, mut dp) = (0.0f64, 0.0f64);
        for (a, b) in ff.as_slice().iter().zip(exact.as_slice()) {
            let r = a / b;
            dm = dm.max((r.norm() - 1.0).abs());
            dp = dp.max(r.arg().abs());
        }
        println!(
            "{k:>6} {:>8.1} {dm:>14.3e} {dp:>12.4}",
            rank_one_margin(&p2, d_s, &s.prop)
        );
    }
    Ok(())
}
