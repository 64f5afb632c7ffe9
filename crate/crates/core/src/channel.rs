//! Per-element complex baseband channels.
//!
//! Line-of-sight entries are `(sqrt(alpha)/d) * exp(-j*2*pi*d/lambda)` with the
//! exact element distance `d`. The inter-panel matrix can also be built from
//! its far-field rank-one form `scale * g2 * g1^T`, where `g1`, `g2` are
//! unit-modulus signature vectors determined by the panel geometry alone.
//!
//! Stochastic channels draw from a [`RngStream`]: ChaCha8 keyed by `seed`
//! with `stream_id` selecting the ChaCha stream, and standard normals from
//! `rand_distr::StandardNormal` (ziggurat). A `CN(0, 1)` sample is
//! `(n1 + j*n2)/sqrt(2)` with the real part drawn first.

use std::f64::consts::{PI, TAU};
use std::io::Write;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{invalid, Error, Result};
use crate::geometry::{boresight_angles, PanelGeometry, Point3};

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PropagationParams {
    wavelength: f64,
    ref_gain: f64,
}

impl PropagationParams {
    pub fn new(wavelength: f64, ref_gain: f64) -> Result<Self> {
        if !(wavelength > 0.0 && wavelength.is_finite()) {
            return Err(invalid("wavelength", format!("must be positive, got {wavelength}")));
        }
        if !(ref_gain > 0.0 && ref_gain.is_finite()) {
            return Err(invalid("ref_gain", format!("must be positive, got {ref_gain}")));
        }
        Ok(PropagationParams {
            wavelength,
            ref_gain,
        })
    }

    /// Free-space reference gain at 1 m: `alpha = (lambda / 4 pi)^2`.
    pub fn free_space(wavelength: f64) -> Result<Self> {
        PropagationParams::new(wavelength, free_space_gain(wavelength))
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    pub fn ref_gain(&self) -> f64 {
        self.ref_gain
    }

    /// Amplitude `sqrt(alpha)/d`.
    pub fn amplitude(&self, d: f64) -> f64 {
        self.ref_gain.sqrt() / d
    }

    /// LoS gain `(sqrt(alpha)/d) exp(-j 2 pi d / lambda)`.
    pub fn los_gain(&self, d: f64) -> Complex64 {
        Complex64::from_polar(self.amplitude(d), -propagation_phase(d, self.wavelength))
    }
}

pub fn free_space_gain(wavelength: f64) -> f64 {
    (wavelength / (4.0 * PI)).powi(2)
}

/// `2 pi d / lambda` reduced to `[0, 2 pi)`.
fn propagation_phase(d: f64, wavelength: f64) -> f64 {
    let cycles = d / wavelength;
    TAU * (cycles - cycles.floor())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChannelVector(Vec<Complex64>);

impl ChannelVector {
    pub fn new(entries: Vec<Complex64>) -> Self {
        ChannelVector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.0.iter()
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.0
    }

    /// Multiplies every entry by `c`.
    pub fn scaled(&self, c: Complex64) -> ChannelVector {
        ChannelVector(self.0.iter().map(|&x| x * c).collect())
    }
}

impl std::ops::Index<usize> for ChannelVector {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.0[i]
    }
}

/// Row-major `rows x cols` matrix. Row `i` is receiving element `i + 1`,
/// column `j` transmitting element `j + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ChannelMatrix {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(ChannelMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ChannelMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Complex64] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn transpose(&self) -> ChannelMatrix {
        ChannelMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Debug export, header `k2,k1,re,im` with 1-based element indices.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "k2,k1,re,im")?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                writeln!(w, "{},{},{:e},{:e}", i + 1, j + 1, v.re, v.im)?;
            }
        }
        Ok(())
    }
}

/// Far-field factors of the inter-panel channel: `S ~ scale * g2 * g1^T`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignatureDecomposition {
    pub g1: Vec<Complex64>,
    pub g2: Vec<Complex64>,
    pub scale: Complex64,
}

/// Identifies an independent random stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RngStream {
    pub seed: u64,
    pub stream_id: u64,
}

impl RngStream {
    pub const fn new(seed: u64, stream_id: u64) -> Self {
        RngStream { seed, stream_id }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream_id);
        rng
    }
}

/// One `CN(0, 1)` draw.
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Rician K-factor `tau`: power ratio of LoS to scattered component.
/// `f64::INFINITY` is pure LoS, `0` pure Rayleigh.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RicianFactor(f64);

impl RicianFactor {
    pub const LOS: RicianFactor = RicianFactor(f64::INFINITY);

    pub fn new(tau: f64) -> Result<Self> {
        if tau >= 0.0 {
            Ok(RicianFactor(tau))
        } else {
            Err(invalid("tau", format!("must be >= 0 or inf, got {tau}")))
        }
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    pub fn is_los(&self) -> bool {
        self.0.is_infinite()
    }

    /// `(sqrt(tau/(tau+1)), sqrt(1/(tau+1)))`, exactly `(1, 0)` for infinite tau.
    pub fn weights(&self) -> (f64, f64) {
        if self.is_los() {
            (1.0, 0.0)
        } else {
            let t = self.0;
            ((t / (t + 1.0)).sqrt(), (1.0 / (t + 1.0)).sqrt())
        }
    }
}

impl std::fmt::Display for RicianFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_los() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl std::str::FromStr for RicianFactor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            return Ok(RicianFactor::LOS);
        }
        let v: f64 = s
            .parse()
            .map_err(|_| invalid("tau", format!("cannot parse `{s}`")))?;
        RicianFactor::new(v)
    }
}

fn element_distances(point: Point3, panel: &PanelGeometry) -> Result<Vec<f64>> {
    panel
        .positions()
        .into_iter()
        .map(|p| {
            let d = point.distance(p);
            if d > 0.0 {
                Ok(d)
            } else {
                Err(Error::SingularDistance)
            }
        })
        .collect()
}

/// Exact LoS channel between a point and every element of `panel`.
pub fn los_vector(panel: &PanelGeometry, point: Point3, prop: &PropagationParams) -> Result<ChannelVector> {
    let d = element_distances(point, panel)?;
    Ok(ChannelVector(d.into_iter().map(|d| prop.los_gain(d)).collect()))
}

/// Rician channel between a point and a panel: LoS part as [`los_vector`],
/// scattered part `(sqrt(alpha)/d_k) CN(0, 1)` per element.
pub fn rician_vector<R: Rng + ?Sized>(
    panel: &PanelGeometry,
    point: Point3,
    prop: &PropagationParams,
    tau: RicianFactor,
    rng: &mut R,
) -> Result<ChannelVector> {
    let d = element_distances(point, panel)?;
    let (w_los, w_scat) = tau.weights();
    Ok(ChannelVector(
        d.into_iter()
            .map(|d| {
                let los = prop.los_gain(d);
                if tau.is_los() {
                    los
                } else {
                    w_los * los + w_scat * prop.amplitude(d) * complex_normal(rng)
                }
            })
            .collect(),
    ))
}

/// Pairwise element distances and the exact LoS matrix between two panels,
/// precomputed for repeated stochastic sampling.
#[derive(Debug, Clone)]
pub struct InterPanelLink {
    prop: PropagationParams,
    distances: Vec<f64>,
    los: ChannelMatrix,
}

impl InterPanelLink {
    pub fn new(tx: &PanelGeometry, rx: &PanelGeometry, prop: &PropagationParams) -> Result<Self> {
        let tx_pos = tx.positions();
        let rx_pos = rx.positions();
        let mut distances = Vec::with_capacity(tx_pos.len() * rx_pos.len());
        for &r in &rx_pos {
            for &t in &tx_pos {
                let d = r.distance(t);
                if !(d > 0.0) {
                    return Err(Error::SingularDistance);
                }
                distances.push(d);
            }
        }
        let data = distances.iter().map(|&d| prop.los_gain(d)).collect();
        let los = ChannelMatrix::from_vec(rx_pos.len(), tx_pos.len(), data)?;
        Ok(InterPanelLink {
            prop: *prop,
            distances,
            los,
        })
    }

    pub fn los(&self) -> &ChannelMatrix {
        &self.los
    }

    /// Exact element-to-element distances, row-major like the matrices.
    pub fn distances(&self) -> &[f64] {
        &self.distances
    }

    pub fn rayleigh<R: Rng + ?Sized>(&self, rng: &mut R) -> ChannelMatrix {
        let data = self
            .distances
            .iter()
            .map(|&d| self.prop.amplitude(d) * complex_normal(rng))
            .collect();
        ChannelMatrix {
            rows: self.los.rows,
            cols: self.los.cols,
            data,
        }
    }

    /// `sqrt(tau/(tau+1)) S + sqrt(1/(tau+1)) S_rayleigh`. Consumes the same
    /// random draws as [`InterPanelLink::rayleigh`] unless `tau` is infinite.
    pub fn rician<R: Rng + ?Sized>(&self, tau: RicianFactor, rng: &mut R) -> ChannelMatrix {
        if tau.is_los() {
            return self.los.clone();
        }
        let (w_los, w_scat) = tau.weights();
        if w_los == 0.0 {
            return self.rayleigh(rng);
        }
        let data = self
            .distances
            .iter()
            .zip(&self.los.data)
            .map(|(&d, &s)| w_los * s + w_scat * self.prop.amplitude(d) * complex_normal(rng))
            .collect();
        ChannelMatrix {
            rows: self.los.rows,
            cols: self.los.cols,
            data,
        }
    }
}

/// Exact LoS matrix from `tx_panel` to `rx_panel` (shape `K_rx x K_tx`).
pub fn los_matrix_exact(
    tx_panel: &PanelGeometry,
    rx_panel: &PanelGeometry,
    prop: &PropagationParams,
) -> Result<ChannelMatrix> {
    Ok(InterPanelLink::new(tx_panel, rx_panel, prop)?.los)
}

pub fn rayleigh_matrix(
    tx_panel: &PanelGeometry,
    rx_panel: &PanelGeometry,
    prop: &PropagationParams,
    stream: RngStream,
) -> Result<ChannelMatrix> {
    let link = InterPanelLink::new(tx_panel, rx_panel, prop)?;
    Ok(link.rayleigh(&mut stream.rng()))
}

pub fn rician_matrix(
    tx_panel: &PanelGeometry,
    rx_panel: &PanelGeometry,
    prop: &PropagationParams,
    tau: RicianFactor,
    stream: RngStream,
) -> Result<ChannelMatrix> {
    let link = InterPanelLink::new(tx_panel, rx_panel, prop)?;
    Ok(link.rician(tau, &mut stream.rng()))
}

/// Signature vectors of the far-field inter-panel channel.
///
/// Angles are measured between the anchor-to-anchor direction `v_rx - v_tx`
/// and each panel's base directions.
pub fn signature_decomposition(
    tx_panel: &PanelGeometry,
    rx_panel: &PanelGeometry,
    prop: &PropagationParams,
) -> Result<SignatureDecomposition> {
    let link = rx_panel.anchor() - tx_panel.anchor();
    let d_s = link.norm();
    if !(d_s > 0.0) {
        return Err(Error::SingularDistance);
    }
    let tx_angles = boresight_angles(tx_panel, link)?;
    let rx_angles = boresight_angles(rx_panel, link)?;
    let lambda = prop.wavelength();

    let ramp = |panel: &PanelGeometry, ca: f64, cb: f64, sign: f64| -> Vec<Complex64> {
        let l = panel.spacing();
        panel
            .grid_indices()
            .map(|g| {
                let path = g.ka as f64 * l * ca + g.kb as f64 * l * cb;
                Complex64::from_polar(1.0, sign * TAU * path / lambda)
            })
            .collect()
    };

    Ok(SignatureDecomposition {
        g1: ramp(tx_panel, tx_angles.omega_a.cos(), tx_angles.omega_b.cos(), 1.0),
        g2: ramp(rx_panel, rx_angles.omega_a.cos(), rx_angles.omega_b.cos(), -1.0),
        scale: prop.los_gain(d_s),
    })
}

/// Rank-one reconstruction `scale * g2 * g1^T`.
pub fn far_field_matrix(dec: &SignatureDecomposition) -> ChannelMatrix {
    ChannelMatrix::from_fn(dec.g2.len(), dec.g1.len(), |i, j| dec.scale * dec.g2[i] * dec.g1[j])
}

/// `d_S / (sqrt(K_rx) l^2 / lambda)`: how far the inter-panel distance exceeds
/// the rank-one threshold. Larger is better; nothing is enforced here.
pub fn rank_one_margin(rx_panel: &PanelGeometry, d_s: f64, prop: &PropagationParams) -> f64 {
    let l = rx_panel.spacing();
    let threshold = (rx_panel.len() as f64).sqrt() * l * l / prop.wavelength();
    d_s / threshold
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point_to_element_distance;

    const H: f64 = 0.866_025_403_784_438_6;

    fn prop() -> PropagationParams {
        PropagationParams::free_space(0.06).unwrap()
    }

    fn irs1(ca: usize, cb: usize) -> PanelGeometry {
        PanelGeometry::new(
            Point3::ORIGIN,
            Point3::new(0.0, 0.0, 1.0),
            Point3::new(H, -0.5, 0.0),
            ca,
            cb,
            0.03,
        )
        .unwrap()
    }

    fn irs2(ca: usize, cb: usize) -> PanelGeometry {
        PanelGeometry::new(
            Point3::new(0.0, 100.0, 0.0),
            Point3::new(H, 0.5, 0.0),
            Point3::new(0.0, 0.0, 1.0),
            ca,
            cb,
            0.03,
        )
        .unwrap()
    }

    #[test]
    fn param_validation() {
        assert!(PropagationParams::new(0.0, 1.0).is_err());
        assert!(PropagationParams::new(0.06, -1.0).is_err());
        let p = prop();
        assert!((p.ref_gain() - 2.279_726_631_952_599_4e-5).abs() < 1e-18);
    }

    #[test]
    fn los_vector_unit_reference() {
        let prop = PropagationParams::new(0.06, 1.0).unwrap();
        let panel = irs1(1, 1);
        let v = los_vector(&panel, Point3::new(0.0, 1.0, 0.0), &prop).unwrap();
        let expected = Complex64::from_polar(1.0, -TAU / 0.06);
        assert!((v[0] - expected).norm() < 1e-12);
    }

    #[test]
    fn los_vector_user_side_modulus() {
        let v = los_vector(&irs2(1, 1), Point3::new(13.0, 92.5, 0.0), &prop()).unwrap();
        assert!((v[0].norm() - 3.181_331_945_875_038e-4).abs() < 1e-15);
    }

    #[test]
    fn los_vector_modulus_and_phase_law() {
        let p = prop();
        let panel = irs1(5, 4);
        let bs = Point3::new(0.87, 0.5, 0.0);
        let v = los_vector(&panel, bs, &p).unwrap();
        for (i, g) in panel.grid_indices().enumerate() {
            let d = point_to_element_distance(bs, &panel, g).unwrap();
            assert!((v[i].norm() * d / p.ref_gain().sqrt() - 1.0).abs() < 1e-12);
            let implied = (-v[i].arg() * p.wavelength() / TAU).rem_euclid(p.wavelength());
            let want = d.rem_euclid(p.wavelength());
            let diff = (implied - want).abs();
            assert!(diff.min(p.wavelength() - diff) < 1e-9);
        }
    }

    #[test]
    fn los_vector_rejects_coincident_point() {
        assert!(matches!(
            los_vector(&irs1(2, 2), Point3::ORIGIN, &prop()),
            Err(Error::SingularDistance)
        ));
    }

    #[test]
    fn los_matrix_single_pair_modulus() {
        let s = los_matrix_exact(&irs1(1, 1), &irs2(1, 1), &prop()).unwrap();
        assert_eq!((s.rows(), s.cols()), (1, 1));
        assert!((s.get(0, 0).norm() - 4.774_648_292_756_86e-5).abs() < 1e-17);
    }

    #[test]
    fn los_matrix_entrywise_vs_distances() {
        let (a, b) = (irs1(2, 2), irs2(2, 2));
        let p = prop();
        let link = InterPanelLink::new(&a, &b, &p).unwrap();
        let s = link.los();
        for (i, gr) in b.grid_indices().enumerate() {
            for (j, gt) in a.grid_indices().enumerate() {
                let from = crate::geometry::element_position(&a, gt).unwrap();
                let d = point_to_element_distance(from, &b, gr).unwrap();
                let want = Complex64::from_polar(p.ref_gain().sqrt() / d, -TAU * d / p.wavelength());
                // identical distances; the phase of a ~1e4 rad argument is only
                // reproducible to ~1e-12 rad across evaluation orders
                assert_eq!(link.distances()[i * a.len() + j], d);
                assert!((s.get(i, j) - want).norm() / want.norm() < 1e-11);
            }
        }
    }

    #[test]
    fn los_matrix_reciprocity() {
        let (a, b) = (irs1(3, 2), irs2(2, 4));
        let ab = los_matrix_exact(&a, &b, &prop()).unwrap();
        let ba = los_matrix_exact(&b, &a, &prop()).unwrap();
        assert_eq!(ab.transpose(), ba);
    }

    #[test]
    fn signature_examples() {
        let dec = signature_decomposition(&irs1(2, 2), &irs2(2, 2), &prop()).unwrap();
        assert_eq!(dec.g1[0], Complex64::new(1.0, 0.0));
        // (ka, kb) = (0, 1) is linear index 3
        assert!((dec.g1[2] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        // (ka, kb) = (1, 0) is linear index 2
        assert!((dec.g2[1] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((dec.scale.norm() - prop().ref_gain().sqrt() / 100.0).abs() < 1e-12);
        for g in dec.g1.iter().chain(&dec.g2) {
            assert!((g.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn far_field_rank_one_and_anchor_entry() {
        let dec = signature_decomposition(&irs1(3, 3), &irs2(2, 4), &prop()).unwrap();
        let f = far_field_matrix(&dec);
        assert_eq!(f.get(0, 0), dec.scale);
        let norm = dec.scale.norm();
        for i in 0..f.rows() {
            for k in i + 1..f.rows() {
                for j in 0..f.cols() {
                    for m in j + 1..f.cols() {
                        let minor = f.get(i, j) * f.get(k, m) - f.get(i, m) * f.get(k, j);
                        assert!(minor.norm() / (norm * norm) < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn far_field_tracks_exact_for_small_panels() {
        let (a, b) = (irs1(2, 2), irs2(2, 2));
        let exact = los_matrix_exact(&a, &b, &prop()).unwrap();
        let approx = far_field_matrix(&signature_decomposition(&a, &b, &prop()).unwrap());
        for (e, f) in exact.as_slice().iter().zip(approx.as_slice()) {
            assert!((e - f).norm() / e.norm() < 1e-3);
        }
    }

    #[test]
    fn rank_one_margin_examples() {
        let p = prop();
        let m = rank_one_margin(&irs2(25, 32), 100.0, &p);
        assert!((m - 235.702_260_395_515_85).abs() < 1e-9);
        let one = rank_one_margin(&irs2(1, 1), 100.0, &p);
        assert!((one - 100.0 * 0.06 / 0.0009).abs() < 1e-9);
        assert!((rank_one_margin(&irs2(25, 32), 200.0, &p) - 2.0 * m).abs() < 1e-9);
    }

    #[test]
    fn rician_factor_parsing() {
        assert!("inf".parse::<RicianFactor>().unwrap().is_los());
        assert_eq!("3".parse::<RicianFactor>().unwrap().value(), 3.0);
        assert!("-1".parse::<RicianFactor>().is_err());
        assert!("nan".parse::<RicianFactor>().is_err());
        assert_eq!(RicianFactor::LOS.weights(), (1.0, 0.0));
        assert_eq!(RicianFactor::new(0.0).unwrap().weights(), (0.0, 1.0));
    }

    #[test]
    fn rician_endpoints() {
        let (a, b) = (irs1(2, 3), irs2(3, 2));
        let p = prop();
        let stream = RngStream::new(11, 4);
        let los = rician_matrix(&a, &b, &p, RicianFactor::LOS, stream).unwrap();
        assert_eq!(los, los_matrix_exact(&a, &b, &p).unwrap());
        let zero = rician_matrix(&a, &b, &p, RicianFactor::new(0.0).unwrap(), stream).unwrap();
        assert_eq!(zero, rayleigh_matrix(&a, &b, &p, stream).unwrap());
    }

    #[test]
    fn rayleigh_is_deterministic_per_stream() {
        let (a, b) = (irs1(2, 2), irs2(2, 2));
        let p = prop();
        let x = rayleigh_matrix(&a, &b, &p, RngStream::new(5, 1)).unwrap();
        let y = rayleigh_matrix(&a, &b, &p, RngStream::new(5, 1)).unwrap();
        let z = rayleigh_matrix(&a, &b, &p, RngStream::new(5, 2)).unwrap();
        assert_eq!(x, y);
        assert_ne!(x, z);
    }

    #[test]
    fn csv_export_header_and_rows() {
        let s = los_matrix_exact(&irs1(1, 2), &irs2(1, 1), &prop()).unwrap();
        let mut buf = Vec::new();
        s.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "k2,k1,re,im");
        assert_eq!(lines.len(), 3);
        assert!(lines[2].starts_with("1,2,"));
    }
}
