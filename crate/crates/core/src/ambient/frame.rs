use super::{check_height, CoordVector, FrameVector, Point};
use crate::error::{Result, Sol3Error};

/// `<u, v>_p = e^{2z} u.dx v.dx + e^{-2z} u.dy v.dy + u.dz v.dz`.
pub fn metric(p: Point, u: CoordVector, v: CoordVector) -> Result<f64> {
    check_height(p.z)?;
    Ok((2.0 * p.z).exp() * u.dx * v.dx + (-2.0 * p.z).exp() * u.dy * v.dy + u.dz * v.dz)
}

/// Components of `u` on the orthonormal frame at `p`:
/// `(e^{z} u.dx, e^{-z} u.dy, u.dz)`.
pub fn coord_to_frame(p: Point, u: CoordVector) -> Result<FrameVector> {
    check_height(p.z)?;
    Ok(FrameVector::new(p.z.exp() * u.dx, (-p.z).exp() * u.dy, u.dz))
}

/// Inverse of [`coord_to_frame`].
pub fn frame_to_coord(p: Point, w: FrameVector) -> Result<CoordVector> {
    check_height(p.z)?;
    Ok(CoordVector::new((-p.z).exp() * w.v1, p.z.exp() * w.v2, w.v3))
}

/// Levi-Civita connection on the left-invariant frame; entry `(i, j)` holds
/// the frame components of `nabla_{E_i} E_j`. All entries are constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionTable(pub [[FrameVector; 3]; 3]);

const O: FrameVector = FrameVector::ZERO;

pub const SOL3_CONNECTION: ConnectionTable = ConnectionTable([
    [FrameVector::new(0.0, 0.0, -1.0), O, FrameVector::new(1.0, 0.0, 0.0)],
    [O, FrameVector::new(0.0, 0.0, 1.0), FrameVector::new(0.0, -1.0, 0.0)],
    [O, O, O],
]);

impl ConnectionTable {
    /// One-based lookup, matching the `E1, E2, E3` labels.
    pub fn get(&self, i: usize, j: usize) -> Result<FrameVector> {
        if !(1..=3).contains(&i) || !(1..=3).contains(&j) {
            return Err(Sol3Error::IndexOutOfRange { i, j });
        }
        Ok(self.0[i - 1][j - 1])
    }
}

/// `nabla_{E_i} E_j` for one-based indices.
pub fn connection(i: usize, j: usize) -> Result<FrameVector> {
    SOL3_CONNECTION.get(i, j)
}

/// `nabla_U V` for frame components `u`, `v`, where `dv` holds the
/// directional derivative `U[v_k]` of the frame components of `V`.
pub fn ambient_covariant_derivative(u: FrameVector, v: FrameVector, dv: FrameVector) -> FrameVector {
    let mut out = dv;
    for (i, row) in SOL3_CONNECTION.0.iter().enumerate() {
        let ui = u.get(i);
        if ui == 0.0 {
            continue;
        }
        for (j, entry) in row.iter().enumerate() {
            out = out + *entry * (ui * v.get(j));
        }
    }
    out
}
