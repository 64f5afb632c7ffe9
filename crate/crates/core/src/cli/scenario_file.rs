//! Scenario files.
//!
//! TOML with flat, dotted keys. `bs`, `user` and each panel's `anchor`,
//! `dir_a` and `dir_b` are required three-element arrays; everything else has
//! a default:
//!
//! | key               | default                    |
//! |-------------------|----------------------------|
//! | `irsN.count_a`    | 1                          |
//! | `irsN.count_b`    | 1                          |
//! | `irsN.spacing`    | `prop.wavelength / 2`      |
//! | `prop.wavelength` | 0.06                       |
//! | `prop.ref_gain`   | `(prop.wavelength/4 pi)^2` |
//! | `power.tx_dbm`    | 43                         |
//! | `power.noise_dbm` | -60                        |
//!
//! Unknown keys are rejected. Orientation is given only through the base
//! direction vectors, which must be orthonormal to within 1e-9.

use std::path::Path;

use serde::Deserialize;

use crate::channel::{free_space_gain, PropagationParams};
use crate::error::{Error, Result};
use crate::experiments::ScenarioConfig;
use crate::geometry::{validate_panel, PanelGeometry, PanelViolation, Point3};

pub const DEFAULT_WAVELENGTH: f64 = 0.06;
pub const DEFAULT_TX_POWER_DBM: f64 = 43.0;
pub const DEFAULT_NOISE_POWER_DBM: f64 = -60.0;

/// The scenario shipped with the crate.
pub const REFERENCE_SCENARIO: &str = include_str!("../../scenarios/reference.toml");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    bs: [f64; 3],
    user: [f64; 3],
    irs1: RawPanel,
    irs2: RawPanel,
    #[serde(default)]
    prop: RawProp,
    #[serde(default)]
    power: RawPower,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPanel {
    anchor: [f64; 3],
    dir_a: [f64; 3],
    dir_b: [f64; 3],
    count_a: Option<i64>,
    count_b: Option<i64>,
    spacing: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProp {
    wavelength: Option<f64>,
    ref_gain: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPower {
    tx_dbm: Option<f64>,
    noise_dbm: Option<f64>,
}

fn bad(key: &str, msg: impl std::fmt::Display) -> Error {
    Error::Scenario(format!("`{key}`: {msg}"))
}

fn count(name: &str, field: &str, v: Option<i64>) -> Result<usize> {
    match v.unwrap_or(1) {
        c if c >= 1 => Ok(c as usize),
        c => Err(bad(&format!("{name}.{field}"), format!("must be at least 1, got {c}"))),
    }
}

fn build_panel(name: &str, raw: &RawPanel, wavelength: f64) -> Result<PanelGeometry> {
    let spacing = raw.spacing.unwrap_or(wavelength / 2.0);
    if !(spacing > 0.0 && spacing.is_finite()) {
        return Err(bad(&format!("{name}.spacing"), format!("must be positive, got {spacing}")));
    }
    let count_a = count(name, "count_a", raw.count_a)?;
    let count_b = count(name, "count_b", raw.count_b)?;
    let panel = PanelGeometry::new(
        raw.anchor.into(),
        raw.dir_a.into(),
        raw.dir_b.into(),
        count_a,
        count_b,
        spacing,
    );
    panel.map_err(|e| match e {
        Error::InvalidPanel(v) => {
            let key = match v.first() {
                Some(PanelViolation::DirANotUnit { .. }) => "dir_a",
                Some(PanelViolation::DirBNotUnit { .. }) => "dir_b",
                Some(PanelViolation::NotOrthogonal { .. }) => "dir_b",
                Some(PanelViolation::NonFinite(field)) => field,
                _ => "",
            };
            let msgs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            bad(&format!("{name}.{key}"), msgs.join("; "))
        }
        other => other,
    })
}

/// Parses and validates scenario text.
pub fn parse_scenario(text: &str) -> Result<ScenarioConfig> {
    let raw: RawScenario = toml::from_str(text).map_err(|e| Error::Scenario(e.message().to_string()))?;

    let wavelength = raw.prop.wavelength.unwrap_or(DEFAULT_WAVELENGTH);
    if !(wavelength > 0.0 && wavelength.is_finite()) {
        return Err(bad("prop.wavelength", format!("must be positive, got {wavelength}")));
    }
    let ref_gain = raw.prop.ref_gain.unwrap_or_else(|| free_space_gain(wavelength));
    if !(ref_gain > 0.0 && ref_gain.is_finite()) {
        return Err(bad("prop.ref_gain", format!("must be positive, got {ref_gain}")));
    }
    let prop = PropagationParams::new(wavelength, ref_gain)?;

    let irs1 = build_panel("irs1", &raw.irs1, wavelength)?;
    let irs2 = build_panel("irs2", &raw.irs2, wavelength)?;
    debug_assert!(validate_panel(&irs1).is_empty() && validate_panel(&irs2).is_empty());

    let scenario = ScenarioConfig {
        bs_pos: Point3::from(raw.bs),
        user_pos: Point3::from(raw.user),
        irs1,
        irs2,
        prop,
        tx_power_dbm: raw.power.tx_dbm.unwrap_or(DEFAULT_TX_POWER_DBM),
        noise_power_dbm: raw.power.noise_dbm.unwrap_or(DEFAULT_NOISE_POWER_DBM),
    };
    scenario.validate()?;
    Ok(scenario)
}

/// Reads a scenario file; `None` loads the shipped scenario.
pub fn load_scenario(path: Option<&Path>) -> Result<ScenarioConfig> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::Scenario(format!("cannot read {}: {e}", p.display())))?;
            parse_scenario(&text)
        }
        None => parse_scenario(REFERENCE_SCENARIO),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::to_db;

    const POSITIONS_ONLY: &str = r#"
bs = [0.87, 0.5, 0.0]
user = [13.0, 92.5, 0.0]
irs1.anchor = [0.0, 0.0, 0.0]
irs1.dir_a = [0.0, 0.0, 1.0]
irs1.dir_b = [0.8660254037844386, -0.5, 0.0]
irs2.anchor = [0.0, 100.0, 0.0]
irs2.dir_a = [0.8660254037844386, 0.5, 0.0]
irs2.dir_b = [0.0, 0.0, 1.0]
"#;

    #[test]
    fn shipped_scenario_matches_builtin() {
        let s = parse_scenario(REFERENCE_SCENARIO).unwrap();
        assert_eq!(s, ScenarioConfig::reference());
        assert_eq!(s.bs_pos, Point3::new(0.87, 0.5, 0.0));
        assert_eq!(s.user_pos, Point3::new(13.0, 92.5, 0.0));
        assert_eq!(s.irs1.anchor(), Point3::ORIGIN);
        assert_eq!(s.irs2.anchor(), Point3::new(0.0, 100.0, 0.0));
    }

    #[test]
    fn defaults_fill_in() {
        let s = parse_scenario(POSITIONS_ONLY).unwrap();
        assert_eq!(s.prop.wavelength(), 0.06);
        assert!((to_db(s.prop.ref_gain()) + 46.421_172_272_769).abs() < 1e-9);
        assert_eq!(s.irs1.spacing(), 0.03);
        assert_eq!(s.tx_power_dbm, 43.0);
        assert_eq!(s.noise_power_dbm, -60.0);
        assert_eq!(s.irs2.len(), 1);
    }

    #[test]
    fn non_positive_spacing_names_key() {
        let text = format!("{POSITIONS_ONLY}irs1.spacing = 0.0\n");
        let err = parse_scenario(&text).unwrap_err().to_string();
        assert!(err.contains("irs1.spacing"), "{err}");
        let text = format!("{POSITIONS_ONLY}irs2.spacing = -0.03\n");
        let err = parse_scenario(&text).unwrap_err().to_string();
        assert!(err.contains("irs2.spacing"), "{err}");
    }

    #[test]
    fn skewed_directions_name_key() {
        let text = POSITIONS_ONLY.replace("irs1.dir_b = [0.8660254037844386, -0.5, 0.0]", "irs1.dir_b = [0.866, -0.5, 0.0]");
        let err = parse_scenario(&text).unwrap_err().to_string();
        assert!(err.contains("irs1.dir_b"), "{err}");
    }

    #[test]
    fn parse_errors_name_key() {
        let err = parse_scenario("user = [1.0, 2.0, 3.0]").unwrap_err().to_string();
        assert!(err.contains("bs"), "{err}");
        let text = format!("{POSITIONS_ONLY}power.tx_dbn = 3.0\n");
        let err = parse_scenario(&text).unwrap_err().to_string();
        assert!(err.contains("tx_dbn"), "{err}");
        let text = format!("{POSITIONS_ONLY}irs1.count_a = 0\n");
        let err = parse_scenario(&text).unwrap_err().to_string();
        assert!(err.contains("irs1.count_a"), "{err}");
        let text = format!("{POSITIONS_ONLY}prop.wavelength = 0.0\n");
        let err = parse_scenario(&text).unwrap_err().to_string();
        assert!(err.contains("prop.wavelength"), "{err}");
    }

    #[test]
    fn missing_file_is_an_error() {
        assert!(load_scenario(Some(Path::new("/nonexistent/scenario.toml"))).is_err());
    }
}
