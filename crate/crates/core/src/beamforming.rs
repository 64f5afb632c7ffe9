//! Reflection configurations and cascaded effective channels.
//!
//! IRS 1 conjugates `g1 * t / |t|` so its reflections leave towards IRS 2 with
//! the signature phase ramp undone; IRS 2 conjugates `r * g2 / |r|` so they
//! arrive at the user in phase. The one-IRS benchmark conjugates
//! `r * t / (|r| |t|)` directly.

use std::io::Write;

use num_complex::Complex64;

use crate::channel::{ChannelMatrix, ChannelVector};
use crate::error::{Error, Result};

/// Unit-modulus tolerance enforced on every configuration.
pub const UNIT_MODULUS_TOL: f64 = 1e-12;

/// Diagonal of a reflection coefficient matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectionConfig {
    phases: Vec<Complex64>,
}

impl ReflectionConfig {
    /// Rejects any coefficient whose modulus is not 1 within [`UNIT_MODULUS_TOL`].
    pub fn new(phases: Vec<Complex64>) -> Result<Self> {
        if let Some(k) = phases
            .iter()
            .position(|p| !((p.norm() - 1.0).abs() <= UNIT_MODULUS_TOL))
        {
            return Err(Error::NotUnitModulus {
                index: k,
                modulus: phases[k].norm(),
            });
        }
        Ok(ReflectionConfig { phases })
    }

    /// Coefficients `exp(j*theta_k)`.
    pub fn from_angles(angles: &[f64]) -> Self {
        ReflectionConfig {
            phases: angles.iter().map(|&a| Complex64::from_polar(1.0, a)).collect(),
        }
    }

    /// All coefficients equal to 1.
    pub fn identity(len: usize) -> Self {
        ReflectionConfig {
            phases: vec![Complex64::new(1.0, 0.0); len],
        }
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.phases
    }

    /// Inspection export, header `k,re,im` with 1-based element indices.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "k,re,im")?;
        for (k, p) in self.phases.iter().enumerate() {
            writeln!(w, "{},{:e},{:e}", k + 1, p.re, p.im)?;
        }
        Ok(())
    }
}

impl std::ops::Index<usize> for ReflectionConfig {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.phases[i]
    }
}

/// Effective BS-to-user scalar channel and its power gain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveChannel {
    pub value: Complex64,
    pub power_gain: f64,
}

impl EffectiveChannel {
    pub fn new(value: Complex64) -> Self {
        EffectiveChannel {
            value,
            power_gain: value.norm_sqr(),
        }
    }
}

fn unit(z: Complex64, index: usize) -> Result<Complex64> {
    let m = z.norm();
    if m > 0.0 && m.is_finite() {
        Ok(z / m)
    } else {
        Err(Error::UndefinedPhase { index })
    }
}

fn check_len(what: &str, a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("{what}: {a} vs {b}")))
    }
}

/// Builds `conj(sig_k * ch_k / |ch_k|)` for each element, renormalized so the
/// result is unit modulus to machine precision.
fn conjugate_alignment(signature: &[Complex64], channel: &ChannelVector) -> Result<ReflectionConfig> {
    check_len("signature vs channel length", signature.len(), channel.len())?;
    let phases = signature
        .iter()
        .zip(channel.iter())
        .enumerate()
        .map(|(k, (&g, &c))| Ok(unit(g * unit(c, k)?, k)?.conj()))
        .collect::<Result<Vec<_>>>()?;
    ReflectionConfig::new(phases)
}

/// IRS 1 configuration from the transmit-side signature `g1` and BS channel `t`.
pub fn irs1_phases(g1: &[Complex64], t: &ChannelVector) -> Result<ReflectionConfig> {
    conjugate_alignment(g1, t)
}

/// IRS 2 configuration from the receive-side signature `g2` and user channel `r`.
pub fn irs2_phases(g2: &[Complex64], r: &ChannelVector) -> Result<ReflectionConfig> {
    conjugate_alignment(g2, r)
}

/// One-IRS configuration aligning every `r_k * t_k` to the positive real axis.
pub fn single_irs_phases(t: &ChannelVector, r: &ChannelVector) -> Result<ReflectionConfig> {
    check_len("t vs r length", t.len(), r.len())?;
    let phases = t
        .iter()
        .zip(r.iter())
        .enumerate()
        .map(|(k, (&tk, &rk))| Ok(unit(unit(rk, k)? * unit(tk, k)?, k)?.conj()))
        .collect::<Result<Vec<_>>>()?;
    ReflectionConfig::new(phases)
}

/// `h = r^T Phi2 S Phi1 t`, evaluated right to left without forming any
/// intermediate matrix.
pub fn cascade_double(
    r: &ChannelVector,
    phi2: &ReflectionConfig,
    s: &ChannelMatrix,
    phi1: &ReflectionConfig,
    t: &ChannelVector,
) -> Result<EffectiveChannel> {
    check_len("phi1 vs t", phi1.len(), t.len())?;
    check_len("S columns vs t", s.cols(), t.len())?;
    check_len("S rows vs r", s.rows(), r.len())?;
    check_len("phi2 vs r", phi2.len(), r.len())?;

    let reflected: Vec<Complex64> = phi1
        .as_slice()
        .iter()
        .zip(t.iter())
        .map(|(p, x)| p * x)
        .collect();
    let mut h = Complex64::new(0.0, 0.0);
    for (k2, (&rk, &pk)) in r.iter().zip(phi2.as_slice()).enumerate() {
        let arriving: Complex64 = s.row(k2).iter().zip(&reflected).map(|(a, b)| a * b).sum();
        h += rk * pk * arriving;
    }
    Ok(EffectiveChannel::new(h))
}

/// `h = sum_k r_k phi_k t_k`.
pub fn cascade_single(r: &ChannelVector, phi: &ReflectionConfig, t: &ChannelVector) -> Result<EffectiveChannel> {
    check_len("phi vs t", phi.len(), t.len())?;
    check_len("r vs t", r.len(), t.len())?;
    let h = r
        .iter()
        .zip(phi.as_slice())
        .zip(t.iter())
        .map(|((a, b), c)| a * b * c)
        .sum();
    Ok(EffectiveChannel::new(h))
}
