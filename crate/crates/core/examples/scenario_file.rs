//! Loading a scenario from TOML, changing it and comparing digests.

use double_irs::cli::{parse_scenario, REFERENCE_SCENARIO};
use double_irs::experiments::evaluate_double;

const CLOSER_USER: &str = r#"
bs = [0.87, 0.5, 0.0]
user = [5.0, 97.0, 0.0]
irs1.anchor = [0.0, 0.0, 0.0]
irs1.dir_a = [0.0, 0.0, 1.0]
irs1.dir_b = [0.8660254037844386, -0.5, 0.0]
irs2.anchor = [0.0, 100.0, 0.0]
irs2.dir_a = [0.8660254037844386, 0.5, 0.0]
irs2.dir_b = [0.0, 0.0, 1.0]
"#;

fn main() -> Result<(), double_irs::error::Error> {
    let shipped = parse_scenario(REFERENCE_SCENARIO)?;
    let closer = parse_scenario(CLOSER_USER)?;
    for (name, s) in [("shipped", &shipped), ("closer user", &closer)] {
        let d = s.link_distances()?;
        let h = evaluate_double(s, 400, 400)?;
        println!(
            "{name:<12} digest {}..  d_r = {:.2} m  |h|^2 = {:.3e}",
            &s.digest()[..12],
            d.d_r,
            h.power_gain
        );
    }

    let broken = CLOSER_USER.replace("irs1.dir_b = [0.8660254037844386", "irs1.dir_b = [0.9");
    match parse_scenario(&broken) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
