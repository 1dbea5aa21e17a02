use super::{check_height, CoordVector, Point};
use crate::error::{Result, Sol3Error};

/// The group law `p * q = (p.x + e^{-p.z} q.x, p.y + e^{p.z} q.y, p.z + q.z)`.
pub fn group_mul(p: Point, q: Point) -> Result<Point> {
    let p = p.validated()?;
    let q = q.validated()?;
    Point::new(
        p.x + (-p.z).exp() * q.x,
        p.y + p.z.exp() * q.y,
        p.z + q.z,
    )
    .validated()
    .map_err(|e| overflow(e, "group_mul"))
}

/// Inverse element, `(-e^{z} x, -e^{-z} y, -z)`.
pub fn group_inv(p: Point) -> Result<Point> {
    let p = p.validated()?;
    Point::new(-p.z.exp() * p.x, -(-p.z).exp() * p.y, -p.z)
        .validated()
        .map_err(|e| overflow(e, "group_inv"))
}

/// Differential of the left translation `L_p` applied to a vector based at
/// any `q`; the result is based at `p * q`. It does not depend on `q`.
pub fn left_translation_differential(p: Point, u: CoordVector) -> Result<CoordVector> {
    check_height(p.z)?;
    Ok(CoordVector::new((-p.z).exp() * u.dx, p.z.exp() * u.dy, u.dz))
}

fn overflow(err: Sol3Error, op: &str) -> Sol3Error {
    match err {
        Sol3Error::Domain(msg) => Sol3Error::Domain(format!("{op} overflow: {msg}")),
        other => other,
    }
}
