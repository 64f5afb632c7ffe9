//! Rectangular reflecting panels in 3D space.
//!
//! A panel is a `count_a x count_b` grid of elements spaced `spacing` meters
//! apart along two orthonormal base directions. Element `(ka, kb)` sits at
//! `anchor + ka*spacing*dir_a + kb*spacing*dir_b`.
//!
//! Internally elements are addressed by 0-based [`GridIndex`] pairs. The
//! 1-based linear index `k = ka + 1 + kb*count_a` only appears through
//! [`index_map`] and [`grid_index`]; vectors indexed by element store element
//! `k` at position `k - 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for the unit-norm and orthogonality checks on base directions.
pub const ORTHONORMAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const ORIGIN: Point3 = Point3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn dot(self, other: Point3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Point3) -> Point3 {
        Point3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn distance(self, other: Point3) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f64; 3]> for Point3 {
    fn from(v: [f64; 3]) -> Self {
        Point3::new(v[0], v[1], v[2])
    }
}

impl Add for Point3 {
    type Output = Point3;
    fn add(self, o: Point3) -> Point3 {
        Point3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point3 {
    type Output = Point3;
    fn sub(self, o: Point3) -> Point3 {
        Point3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<Point3> for f64 {
    type Output = Point3;
    fn mul(self, p: Point3) -> Point3 {
        Point3::new(self * p.x, self * p.y, self * p.z)
    }
}

impl Neg for Point3 {
    type Output = Point3;
    fn neg(self) -> Point3 {
        Point3::new(-self.x, -self.y, -self.z)
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.x, self.y, self.z)
    }
}

/// A violated panel invariant, as reported by [`validate_panel`].
#[derive(Debug, Clone, PartialEq)]
pub enum PanelViolation {
    NonFinite(&'static str),
    DirANotUnit { norm: f64 },
    DirBNotUnit { norm: f64 },
    NotOrthogonal { dot: f64 },
    ZeroCount(&'static str),
    NonPositiveSpacing { spacing: f64 },
}

impl fmt::Display for PanelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PanelViolation::NonFinite(field) => write!(f, "{field} is not finite"),
            PanelViolation::DirANotUnit { norm } => {
                write!(f, "dir_a not unit norm (norm {norm})")
            }
            PanelViolation::DirBNotUnit { norm } => {
                write!(f, "dir_b not unit norm (norm {norm})")
            }
            PanelViolation::NotOrthogonal { dot } => {
                write!(f, "directions not orthogonal (dot product {dot})")
            }
            PanelViolation::ZeroCount(field) => write!(f, "{field} must be at least 1"),
            PanelViolation::NonPositiveSpacing { spacing } => {
                write!(f, "spacing must be positive (got {spacing})")
            }
        }
    }
}

/// A rectangular reflecting panel. Constructed only through [`PanelGeometry::new`],
/// which rejects non-orthonormal base directions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PanelGeometry {
    anchor: Point3,
    dir_a: Point3,
    dir_b: Point3,
    count_a: usize,
    count_b: usize,
    spacing: f64,
}

impl PanelGeometry {
    pub fn new(
        anchor: Point3,
        dir_a: Point3,
        dir_b: Point3,
        count_a: usize,
        count_b: usize,
        spacing: f64,
    ) -> Result<Self> {
        let panel = PanelGeometry {
            anchor,
            dir_a,
            dir_b,
            count_a,
            count_b,
            spacing,
        };
        let violations = validate_panel(&panel);
        if violations.is_empty() {
            Ok(panel)
        } else {
            Err(Error::InvalidPanel(violations))
        }
    }

    /// Same anchor, directions and spacing with a different grid.
    pub fn with_counts(&self, count_a: usize, count_b: usize) -> Result<Self> {
        PanelGeometry::new(
            self.anchor,
            self.dir_a,
            self.dir_b,
            count_a,
            count_b,
            self.spacing,
        )
    }

    pub fn anchor(&self) -> Point3 {
        self.anchor
    }

    pub fn dir_a(&self) -> Point3 {
        self.dir_a
    }

    pub fn dir_b(&self) -> Point3 {
        self.dir_b
    }

    pub fn count_a(&self) -> usize {
        self.count_a
    }

    pub fn count_b(&self) -> usize {
        self.count_b
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Total number of elements.
    pub fn len(&self) -> usize {
        self.count_a * self.count_b
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Unit normal `dir_a x dir_b`.
    pub fn normal(&self) -> Point3 {
        self.dir_a.cross(self.dir_b)
    }

    /// All grid indices in linear-index order (`ka` varies fastest).
    pub fn grid_indices(&self) -> impl Iterator<Item = GridIndex> + '_ {
        (0..self.count_b).flat_map(move |kb| (0..self.count_a).map(move |ka| GridIndex { ka, kb }))
    }

    /// Element positions in linear-index order.
    pub fn positions(&self) -> Vec<Point3> {
        self.grid_indices().map(|g| self.position_unchecked(g)).collect()
    }

    fn contains(&self, g: GridIndex) -> bool {
        g.ka < self.count_a && g.kb < self.count_b
    }

    fn check(&self, g: GridIndex) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::IndexOutOfBounds {
                ka: g.ka,
                kb: g.kb,
                count_a: self.count_a,
                count_b: self.count_b,
            })
        }
    }

    fn position_unchecked(&self, g: GridIndex) -> Point3 {
        let l = self.spacing;
        self.anchor + (g.ka as f64 * l) * self.dir_a + (g.kb as f64 * l) * self.dir_b
    }
}

/// 0-based position of an element on its panel's grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridIndex {
    pub ka: usize,
    pub kb: usize,
}

impl GridIndex {
    pub const fn new(ka: usize, kb: usize) -> Self {
        GridIndex { ka, kb }
    }
}

/// Angles between a direction and the panel's two base directions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnglePair {
    pub omega_a: f64,
    pub omega_b: f64,
}

/// Maps a grid index to the 1-based linear element index `ka + 1 + kb*count_a`.
pub fn index_map(panel: &PanelGeometry, g: GridIndex) -> Result<usize> {
    panel.check(g)?;
    Ok(g.ka + 1 + g.kb * panel.count_a)
}

/// Inverse of [`index_map`].
pub fn grid_index(panel: &PanelGeometry, k: usize) -> Result<GridIndex> {
    if k == 0 || k > panel.len() {
        return Err(Error::LinearIndexOutOfRange {
            k,
            total: panel.len(),
        });
    }
    let zero_based = k - 1;
    Ok(GridIndex {
        ka: zero_based % panel.count_a,
        kb: zero_based / panel.count_a,
    })
}

pub fn element_position(panel: &PanelGeometry, g: GridIndex) -> Result<Point3> {
    panel.check(g)?;
    Ok(panel.position_unchecked(g))
}

/// Angles between `direction` and each base direction, both in `[0, pi]`.
/// Invariant to positive scaling of `direction`.
pub fn boresight_angles(panel: &PanelGeometry, direction: Point3) -> Result<AnglePair> {
    let n = direction.norm();
    if !(n > 0.0) || !n.is_finite() {
        return Err(Error::ZeroDirection);
    }
    let angle = |base: Point3| {
        let c = direction.dot(base) / (n * base.norm());
        c.clamp(-1.0, 1.0).acos()
    };
    Ok(AnglePair {
        omega_a: angle(panel.dir_a),
        omega_b: angle(panel.dir_b),
    })
}

/// Euclidean distance from `point` to element `g`. Zero distance is an error
/// since the path loss `sqrt(alpha)/d` is undefined there.
pub fn point_to_element_distance(point: Point3, panel: &PanelGeometry, g: GridIndex) -> Result<f64> {
    let p = element_position(panel, g)?;
    let d = point.distance(p);
    if d > 0.0 {
        Ok(d)
    } else {
        Err(Error::SingularDistance)
    }
}

/// Distance between element `g_tx` of `tx` and element `g_rx` of `rx`.
pub fn element_to_element_distance(
    tx: &PanelGeometry,
    g_tx: GridIndex,
    rx: &PanelGeometry,
    g_rx: GridIndex,
) -> Result<f64> {
    let p = element_position(tx, g_tx)?;
    point_to_element_distance(p, rx, g_rx)
}

/// Every violated panel invariant; empty when the panel is valid.
pub fn validate_panel(panel: &PanelGeometry) -> Vec<PanelViolation> {
    let mut out = Vec::new();
    for (name, p) in [
        ("anchor", panel.anchor),
        ("dir_a", panel.dir_a),
        ("dir_b", panel.dir_b),
    ] {
        if !p.is_finite() {
            out.push(PanelViolation::NonFinite(name));
        }
    }
    let na = panel.dir_a.norm();
    if !((na - 1.0).abs() <= ORTHONORMAL_TOL) {
        out.push(PanelViolation::DirANotUnit { norm: na });
    }
    let nb = panel.dir_b.norm();
    if !((nb - 1.0).abs() <= ORTHONORMAL_TOL) {
        out.push(PanelViolation::DirBNotUnit { norm: nb });
    }
    let dot = panel.dir_a.dot(panel.dir_b);
    if !(dot.abs() <= ORTHONORMAL_TOL) {
        out.push(PanelViolation::NotOrthogonal { dot });
    }
    if panel.count_a == 0 {
        out.push(PanelViolation::ZeroCount("count_a"));
    }
    if panel.count_b == 0 {
        out.push(PanelViolation::ZeroCount("count_b"));
    }
    if !(panel.spacing > 0.0 && panel.spacing.is_finite()) {
        out.push(PanelViolation::NonPositiveSpacing {
            spacing: panel.spacing,
        });
    }
    out
}
