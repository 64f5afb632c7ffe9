use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::analysis::LinkDistances;
use crate::channel::PropagationParams;
use crate::error::{Error, Result};
use crate::geometry::{PanelGeometry, Point3};

/// A deployment: BS and user positions, the two panel templates and the link
/// budget. The template grid shapes are only used where a study does not set
/// its own element counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioConfig {
    pub bs_pos: Point3,
    pub user_pos: Point3,
    pub irs1: PanelGeometry,
    pub irs2: PanelGeometry,
    pub prop: PropagationParams,
    pub tx_power_dbm: f64,
    pub noise_power_dbm: f64,
}

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

impl ScenarioConfig {
    /// BS at `[0.87, 0.5, 0]`, user at `[13, 92.5, 0]`, panels anchored at the
    /// origin and `[0, 100, 0]`, 5 GHz carrier, half-wavelength spacing,
    /// 43 dBm transmit and -60 dBm noise power. Both panel templates are 25x32.
    pub fn reference() -> ScenarioConfig {
        let wavelength = 0.06;
        let spacing = wavelength / 2.0;
        let irs1 = PanelGeometry::new(
            Point3::ORIGIN,
            Point3::new(0.0, 0.0, 1.0),
            Point3::new(SQRT3_2, -0.5, 0.0),
            25,
            32,
            spacing,
        )
        .expect("valid IRS 1 template");
        let irs2 = PanelGeometry::new(
            Point3::new(0.0, 100.0, 0.0),
            Point3::new(SQRT3_2, 0.5, 0.0),
            Point3::new(0.0, 0.0, 1.0),
            25,
            32,
            spacing,
        )
        .expect("valid IRS 2 template");
        ScenarioConfig {
            bs_pos: Point3::new(0.87, 0.5, 0.0),
            user_pos: Point3::new(13.0, 92.5, 0.0),
            irs1,
            irs2,
            prop: PropagationParams::free_space(wavelength).expect("positive wavelength"),
            tx_power_dbm: 43.0,
            noise_power_dbm: -60.0,
        }
    }

    /// Checks positions and powers; panel invariants already hold by construction.
    pub fn validate(&self) -> Result<()> {
        for (key, p) in [("bs", self.bs_pos), ("user", self.user_pos)] {
            if !p.is_finite() {
                return Err(Error::Scenario(format!("`{key}` has non-finite coordinates")));
            }
        }
        for (key, v) in [
            ("power.tx_dbm", self.tx_power_dbm),
            ("power.noise_dbm", self.noise_power_dbm),
        ] {
            if !v.is_finite() {
                return Err(Error::Scenario(format!("`{key}` must be finite")));
            }
        }
        for (who, p) in [("bs", self.bs_pos), ("user", self.user_pos)] {
            for (name, panel) in [("irs1", &self.irs1), ("irs2", &self.irs2)] {
                if panel.positions().iter().any(|e| e.distance(p) == 0.0) {
                    return Err(Error::Scenario(format!("`{who}` coincides with an element of `{name}`")));
                }
            }
        }
        if self.irs1.anchor() == self.irs2.anchor() {
            return Err(Error::Scenario("`irs1.anchor` and `irs2.anchor` coincide".into()));
        }
        Ok(())
    }

    /// Anchor distances `(|v1 - u1|, |v2 - v1|, |u2 - v2|)`.
    pub fn link_distances(&self) -> Result<LinkDistances> {
        LinkDistances::new(
            self.irs1.anchor().distance(self.bs_pos),
            self.irs2.anchor().distance(self.irs1.anchor()),
            self.user_pos.distance(self.irs2.anchor()),
        )
    }

    pub fn snr_offset_db(&self) -> f64 {
        self.tx_power_dbm - self.noise_power_dbm
    }

    /// Hex SHA-256 of the canonical JSON form.
    pub fn digest(&self) -> String {
        let json = serde_json::to_vec(self).expect("scenario serializes");
        let hash = Sha256::digest(&json);
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }
}
