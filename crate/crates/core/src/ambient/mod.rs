//! The ambient space: Sol3 as R^3 with the left-invariant metric
//! `e^{2z} dx^2 + e^{-2z} dy^2 + dz^2` and the group law
//! `(x, y, z) * (x', y', z') = (x + e^{-z} x', y + e^{z} y', z + z')`.
//!
//! Points and vectors carry model coordinates. Tangent vectors exist in two
//! flavours: [`CoordVector`] (components on `d/dx, d/dy, d/dz`) and
//! [`FrameVector`] (components on the orthonormal frame
//! `E1 = e^{-z} d/dx, E2 = e^{z} d/dy, E3 = d/dz`).

mod christoffel;
mod frame;
mod group;
mod isometry;

pub use christoffel::{
    coordinate_christoffel_exact, coordinate_christoffel_fd, frame_connection_fd, metric_tensor,
    Christoffel,
};
pub use frame::{
    ambient_covariant_derivative, connection, coord_to_frame, frame_to_coord, metric,
    ConnectionTable, SOL3_CONNECTION,
};
pub use group::{group_inv, group_mul, left_translation_differential};
pub use isometry::{apply_isometry, isometry_differential, killing_fields, IsometryElement, IsometryKind};

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Result, Sol3Error};

/// Largest |z| accepted by any operation. `e^{2z}` overflows an f64 a little
/// above z = 354; 300 leaves room for products with moderate coordinates.
pub const Z_LIMIT: f64 = 300.0;

/// A point of Sol3 in model coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point {
    pub const ORIGIN: Point = Point::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// Builds a point, rejecting non-finite coordinates and |z| > [`Z_LIMIT`].
    pub fn try_new(x: f64, y: f64, z: f64) -> Result<Self> {
        Point::new(x, y, z).validated()
    }

    pub fn validated(self) -> Result<Self> {
        if !(self.x.is_finite() && self.y.is_finite() && self.z.is_finite()) {
            return Err(Sol3Error::Domain(format!("non-finite point {self:?}")));
        }
        check_height(self.z)?;
        Ok(self)
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

pub(crate) fn check_height(z: f64) -> Result<()> {
    if !z.is_finite() || z.abs() > Z_LIMIT {
        return Err(Sol3Error::Domain(format!("|z| = {} exceeds {Z_LIMIT}", z.abs())));
    }
    Ok(())
}

/// Tangent vector with components in the coordinate basis `d/dx, d/dy, d/dz`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct CoordVector {
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
}

impl CoordVector {
    pub const ZERO: CoordVector = CoordVector::new(0.0, 0.0, 0.0);

    pub const fn new(dx: f64, dy: f64, dz: f64) -> Self {
        Self { dx, dy, dz }
    }

    /// The `i`-th coordinate basis vector, `i` in 0..3.
    pub fn basis(i: usize) -> Self {
        let mut c = [0.0; 3];
        c[i] = 1.0;
        Self::from_array(c)
    }

    pub const fn from_array(c: [f64; 3]) -> Self {
        Self::new(c[0], c[1], c[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.dx, self.dy, self.dz]
    }

    pub fn is_finite(self) -> bool {
        self.dx.is_finite() && self.dy.is_finite() && self.dz.is_finite()
    }

    /// Euclidean cross product of the component arrays. Used by the
    /// coordinate-route oracle, where it yields the normal covector.
    pub fn euclidean_cross(self, rhs: Self) -> [f64; 3] {
        [
            self.dy * rhs.dz - self.dz * rhs.dy,
            self.dz * rhs.dx - self.dx * rhs.dz,
            self.dx * rhs.dy - self.dy * rhs.dx,
        ]
    }
}

impl Add for CoordVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.dx + rhs.dx, self.dy + rhs.dy, self.dz + rhs.dz)
    }
}

impl Sub for CoordVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.dx - rhs.dx, self.dy - rhs.dy, self.dz - rhs.dz)
    }
}

impl Mul<f64> for CoordVector {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.dx * k, self.dy * k, self.dz * k)
    }
}

impl Neg for CoordVector {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

/// Tangent vector with components on the orthonormal frame `E1, E2, E3`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct FrameVector {
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
}

impl FrameVector {
    pub const ZERO: FrameVector = FrameVector::new(0.0, 0.0, 0.0);

    pub const fn new(v1: f64, v2: f64, v3: f64) -> Self {
        Self { v1, v2, v3 }
    }

    pub const fn from_array(c: [f64; 3]) -> Self {
        Self::new(c[0], c[1], c[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.v1, self.v2, self.v3]
    }

    /// Component `i` in 0..3.
    pub fn get(self, i: usize) -> f64 {
        self.to_array()[i]
    }

    /// Metric inner product; the frame is orthonormal.
    pub fn dot(self, rhs: Self) -> f64 {
        self.v1 * rhs.v1 + self.v2 * rhs.v2 + self.v3 * rhs.v3
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Cross product in the oriented orthonormal frame.
    pub fn cross(self, rhs: Self) -> Self {
        Self::new(
            self.v2 * rhs.v3 - self.v3 * rhs.v2,
            self.v3 * rhs.v1 - self.v1 * rhs.v3,
            self.v1 * rhs.v2 - self.v2 * rhs.v1,
        )
    }
}

impl Add for FrameVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.v1 + rhs.v1, self.v2 + rhs.v2, self.v3 + rhs.v3)
    }
}

impl Sub for FrameVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.v1 - rhs.v1, self.v2 - rhs.v2, self.v3 - rhs.v3)
    }
}

impl Mul<f64> for FrameVector {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.v1 * k, self.v2 * k, self.v3 * k)
    }
}

impl Neg for FrameVector {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}
