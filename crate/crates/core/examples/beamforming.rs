//! Joint passive beamforming for one element split: the far-field design
//! evaluated over the exact channel, against random phases.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use double_irs::beamforming::{cascade_double, ReflectionConfig};
use double_irs::channel::far_field_matrix;
use double_irs::experiments::{received_snr, DoubleIrsLink, ScenarioConfig};

fn main() -> Result<(), double_irs::error::Error> {
    let s = ScenarioConfig::reference();
    let link = DoubleIrsLink::new(&s, 400, 400)?;
    let snr = |h| received_snr(&h, s.tx_power_dbm, s.noise_power_dbm);

    let exact = link.los_channel()?;
    let ideal = link.through(&far_field_matrix(&link.signatures))?;
    println!("designed, exact channel:      {:.3} dB", snr(exact));
    println!("designed, far-field channel:  {:.3} dB", snr(ideal));

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut random = |n: usize| {
        let a: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect();
        ReflectionConfig::from_angles(&a)
    };
    let (p1, p2) = (random(400), random(400));
    let h = cascade_double(&link.r, &p2, link.inter.los(), &p1, &link.t)?;
    println!("random phases, exact channel: {:.3} dB", snr(h));

    let mut out = Vec::new();
    link.phi1.write_csv(&mut out)?;
    println!("\nfirst IRS 1 phases:\n{}", String::from_utf8_lossy(&out).lines().take(4).collect::<Vec<_>>().join("\n"));
    Ok(())
}
