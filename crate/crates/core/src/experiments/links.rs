use crate::beamforming::{
    cascade_double, cascade_single, irs1_phases, irs2_phases, single_irs_phases, EffectiveChannel, ReflectionConfig,
};
use crate::channel::{los_vector, signature_decomposition, ChannelMatrix, ChannelVector, InterPanelLink, SignatureDecomposition};
use crate::error::Result;
use crate::geometry::PanelGeometry;

use super::{build_panels, factor_grid, ScenarioConfig};

/// The double reflection link for one element split, with the joint
/// beamformer designed from the far-field model.
#[derive(Debug, Clone)]
pub struct DoubleIrsLink {
    pub irs1: PanelGeometry,
    pub irs2: PanelGeometry,
    pub t: ChannelVector,
    pub r: ChannelVector,
    pub inter: InterPanelLink,
    pub signatures: SignatureDecomposition,
    pub phi1: ReflectionConfig,
    pub phi2: ReflectionConfig,
}

impl DoubleIrsLink {
    pub fn new(scenario: &ScenarioConfig, k1: usize, k2: usize) -> Result<Self> {
        let (irs1, irs2) = build_panels(scenario, k1, k2)?;
        let t = los_vector(&irs1, scenario.bs_pos, &scenario.prop)?;
        let r = los_vector(&irs2, scenario.user_pos, &scenario.prop)?;
        let inter = InterPanelLink::new(&irs1, &irs2, &scenario.prop)?;
        let signatures = signature_decomposition(&irs1, &irs2, &scenario.prop)?;
        let phi1 = irs1_phases(&signatures.g1, &t)?;
        let phi2 = irs2_phases(&signatures.g2, &r)?;
        Ok(DoubleIrsLink {
            irs1,
            irs2,
            t,
            r,
            inter,
            signatures,
            phi1,
            phi2,
        })
    }

    /// Effective channel over the exact LoS inter-panel matrix.
    pub fn los_channel(&self) -> Result<EffectiveChannel> {
        self.through(self.inter.los())
    }

    /// Effective channel over an arbitrary inter-panel matrix with the
    /// beamformer held fixed.
    pub fn through(&self, s: &ChannelMatrix) -> Result<EffectiveChannel> {
        cascade_double(&self.r, &self.phi2, s, &self.phi1, &self.t)
    }
}

/// The one-IRS benchmark: all `k` elements on a panel at IRS 2's site.
#[derive(Debug, Clone)]
pub struct SingleIrsLink {
    pub panel: PanelGeometry,
    pub r: ChannelVector,
}

impl SingleIrsLink {
    pub fn new(scenario: &ScenarioConfig, k: usize) -> Result<Self> {
        let (a, b) = factor_grid(k);
        let panel = scenario.irs2.with_counts(a, b)?;
        let r = los_vector(&panel, scenario.user_pos, &scenario.prop)?;
        Ok(SingleIrsLink { panel, r })
    }

    /// Aligns the panel to the given BS channel and evaluates the cascade.
    pub fn aligned_channel(&self, t: &ChannelVector) -> Result<EffectiveChannel> {
        let phi = single_irs_phases(t, &self.r)?;
        cascade_single(&self.r, &phi, t)
    }

    pub fn los_channel(&self, scenario: &ScenarioConfig) -> Result<EffectiveChannel> {
        let t = los_vector(&self.panel, scenario.bs_pos, &scenario.prop)?;
        self.aligned_channel(&t)
    }
}

/// Exact LoS effective channel of the double reflection link.
pub fn evaluate_double(scenario: &ScenarioConfig, k1: usize, k2: usize) -> Result<EffectiveChannel> {
    DoubleIrsLink::new(scenario, k1, k2)?.los_channel()
}

/// Exact LoS effective channel of the one-IRS benchmark.
pub fn evaluate_single(scenario: &ScenarioConfig, k: usize) -> Result<EffectiveChannel> {
    SingleIrsLink::new(scenario, k)?.los_channel(scenario)
}
