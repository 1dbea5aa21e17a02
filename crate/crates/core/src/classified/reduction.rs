use serde::Serialize;

use crate::error::{Result, Sol3Error};

/// Constants `(a, b)` of the general type-III reduction; `a = 0` would force
/// `1 + e^{2g} g'^2 = 0`, so it is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Type3ReductionParams {
    a: f64,
    b: f64,
}

impl Type3ReductionParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || a == 0.0 || !b.is_finite() {
            return Err(Sol3Error::InvalidParameter(format!(
                "reduction constants need finite b and nonzero a, got a = {a}, b = {b}"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// `(b - a) g'^2 e^{6g} + (a + b - 2 a t g' + g'^2) e^{4g} + (1 + t^2 g'^2) e^{2g} + t^2`.
///
/// Any type-III minimal surface outside the known families has a height
/// function `g` that zeroes this for all `t`. `g''` does not enter; it is
/// accepted so callers can pass a curve jet unchanged.
pub fn type3_reduction_residual(params: Type3ReductionParams, g: f64, g1: f64, _g2: f64, t: f64) -> f64 {
    let (a, b) = (params.a, params.b);
    let e2 = (2.0 * g).exp();
    let (e4, e6) = (e2 * e2, e2 * e2 * e2);
    (b - a) * g1 * g1 * e6 + (a + b - 2.0 * a * t * g1 + g1 * g1) * e4 + (1.0 + t * t * g1 * g1) * e2 + t * t
}
