//! Frame vectors in double-double arithmetic. The minimality residual is a
//! difference of terms that nearly cancel on (near-)minimal surfaces, so the
//! kernel carries its products and sums at roughly twice `f64` precision.

use std::ops::{Add, Mul};

use twofloat::TwoFloat;

use crate::ambient::{FrameVector, SOL3_CONNECTION};

#[derive(Debug, Clone, Copy)]
pub(crate) struct Dd3(pub [TwoFloat; 3]);

pub(crate) fn round(x: TwoFloat) -> f64 {
    x.hi() + x.lo()
}

impl Dd3 {
    /// `(a0 * b0, a1 * b1, a2 * b2)` with each product exact.
    pub fn scaled(a: [f64; 3], b: [f64; 3]) -> Self {
        Dd3([
            TwoFloat::new_mul(a[0], b[0]),
            TwoFloat::new_mul(a[1], b[1]),
            TwoFloat::new_mul(a[2], b[2]),
        ])
    }

    pub fn dot(self, rhs: Self) -> TwoFloat {
        self.0[0] * rhs.0[0] + self.0[1] * rhs.0[1] + self.0[2] * rhs.0[2]
    }

    pub fn cross(self, rhs: Self) -> Self {
        let (a, b) = (self.0, rhs.0);
        Dd3([
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ])
    }

    pub fn to_frame(self) -> FrameVector {
        FrameVector::new(round(self.0[0]), round(self.0[1]), round(self.0[2]))
    }

    /// `nabla_U V` from the frame components of `U`, `V` and the directional
    /// derivative `dv` of the components of `V`.
    pub fn covariant(u: Self, v: Self, dv: Self) -> Self {
        let mut out = dv;
        for (i, row) in SOL3_CONNECTION.0.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let uv = u.0[i] * v.0[j];
                for (k, c) in entry.to_array().into_iter().enumerate() {
                    if c != 0.0 {
                        out.0[k] += uv * c;
                    }
                }
            }
        }
        out
    }
}

impl Add for Dd3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Dd3([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl Mul<TwoFloat> for Dd3 {
    type Output = Self;
    fn mul(self, k: TwoFloat) -> Self {
        Dd3([self.0[0] * k, self.0[1] * k, self.0[2] * k])
    }
}
