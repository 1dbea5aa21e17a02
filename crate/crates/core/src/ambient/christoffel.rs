//! Coordinate Christoffel symbols of the Sol3 metric, computed from the
//! metric tensor alone. This route never touches the frame connection table,
//! so it serves as the independent check of that table and as the connection
//! used by the finite-difference mean-curvature oracle.

use super::{coord_to_frame, frame_to_coord, metric, CoordVector, FrameVector, Point};
use crate::error::Result;
use crate::fd;

/// `gamma[k][i][j]` is the symbol `Gamma^k_{ij}` in model coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Christoffel {
    pub gamma: [[[f64; 3]; 3]; 3],
}

impl Christoffel {
    /// `Gamma^k_{ij} u^i v^j` as a coordinate vector.
    pub fn contract(&self, u: CoordVector, v: CoordVector) -> CoordVector {
        let (u, v) = (u.to_array(), v.to_array());
        let mut out = [0.0; 3];
        for (k, slot) in out.iter_mut().enumerate() {
            for (row, ui) in self.gamma[k].iter().zip(u) {
                for (g, vj) in row.iter().zip(v) {
                    *slot += g * ui * vj;
                }
            }
        }
        CoordVector::from_array(out)
    }
}

/// Metric tensor `g_ij` at `p`, assembled from [`metric`] on basis vectors.
pub fn metric_tensor(p: Point) -> Result<[[f64; 3]; 3]> {
    let mut g = [[0.0; 3]; 3];
    for (i, row) in g.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = metric(p, CoordVector::basis(i), CoordVector::basis(j))?;
        }
    }
    Ok(g)
}

fn invert3(m: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let cof = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    let adj = [
        [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ];
    let det = m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0];
    let mut inv = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            inv[i][j] = adj[i][j] / det;
        }
    }
    inv
}

fn shifted(p: Point, axis: usize, h: f64) -> Point {
    let mut c = p.to_array();
    c[axis] += h;
    Point::new(c[0], c[1], c[2])
}

/// Christoffel symbols from central differences of the metric tensor.
pub fn coordinate_christoffel_fd(p: Point) -> Result<Christoffel> {
    let g = metric_tensor(p)?;
    let ginv = invert3(&g);
    // dg[l][i][j] = d g_ij / d x^l
    let mut dg = [[[0.0; 3]; 3]; 3];
    let coords = p.to_array();
    for (l, slab) in dg.iter_mut().enumerate() {
        let h = fd::step(coords[l]);
        let ahead = metric_tensor(shifted(p, l, h))?;
        let behind = metric_tensor(shifted(p, l, -h))?;
        for i in 0..3 {
            for j in 0..3 {
                slab[i][j] = (ahead[i][j] - behind[i][j]) / (2.0 * h);
            }
        }
    }
    let mut gamma = [[[0.0; 3]; 3]; 3];
    for (k, gk) in gamma.iter_mut().enumerate() {
        for i in 0..3 {
            for j in 0..3 {
                gk[i][j] = 0.5
                    * (0..3)
                        .map(|l| ginv[k][l] * (dg[i][l][j] + dg[j][l][i] - dg[l][i][j]))
                        .sum::<f64>();
            }
        }
    }
    Ok(Christoffel { gamma })
}

/// Closed-form symbols: `Gamma^x_{xz} = 1`, `Gamma^y_{yz} = -1`,
/// `Gamma^z_{xx} = -e^{2z}`, `Gamma^z_{yy} = e^{-2z}`, symmetric in `i, j`.
pub fn coordinate_christoffel_exact(p: Point) -> Christoffel {
    let mut gamma = [[[0.0; 3]; 3]; 3];
    gamma[0][0][2] = 1.0;
    gamma[0][2][0] = 1.0;
    gamma[1][1][2] = -1.0;
    gamma[1][2][1] = -1.0;
    gamma[2][0][0] = -(2.0 * p.z).exp();
    gamma[2][1][1] = (-2.0 * p.z).exp();
    Christoffel { gamma }
}

/// Frame components of `nabla_{E_i} E_j` (zero-based indices) rebuilt from
/// finite-difference Christoffel symbols and finite differences of the frame
/// fields themselves.
pub fn frame_connection_fd(p: Point) -> Result<[[FrameVector; 3]; 3]> {
    let gamma = coordinate_christoffel_fd(p)?;
    let frame_field = |q: Point, j: usize| {
        let mut c = [0.0; 3];
        c[j] = 1.0;
        frame_to_coord(q, FrameVector::from_array(c))
    };
    let coords = p.to_array();
    let mut table = [[FrameVector::ZERO; 3]; 3];
    for (i, row) in table.iter_mut().enumerate() {
        let ei = frame_field(p, i)?;
        for (j, slot) in row.iter_mut().enumerate() {
            let ej = frame_field(p, j)?;
            // E_i^a d_a E_j
            let mut deriv = CoordVector::ZERO;
            for (a, &weight) in ei.to_array().iter().enumerate() {
                if weight == 0.0 {
                    continue;
                }
                let h = fd::step(coords[a]);
                let diff = frame_field(shifted(p, a, h), j)? - frame_field(shifted(p, a, -h), j)?;
                deriv = deriv + diff * (weight / (2.0 * h));
            }
            *slot = coord_to_frame(p, deriv + gamma.contract(ei, ej))?;
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::SOL3_CONNECTION;

    #[test]
    fn fd_symbols_match_closed_form() {
        for p in [Point::ORIGIN, Point::new(1.0, -2.0, 2.5), Point::new(-3.0, 3.0, -3.0)] {
            let fd = coordinate_christoffel_fd(p).unwrap();
            let exact = coordinate_christoffel_exact(p);
            for k in 0..3 {
                for i in 0..3 {
                    for j in 0..3 {
                        let (a, b) = (fd.gamma[k][i][j], exact.gamma[k][i][j]);
                        assert!((a - b).abs() < 1e-7 * b.abs().max(1.0), "{k}{i}{j}: {a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn fd_frame_connection_matches_table_at_a_point() {
        let p = Point::new(0.4, -1.0, 1.3);
        let table = frame_connection_fd(p).unwrap();
        for (i, (row, exact)) in table.iter().zip(SOL3_CONNECTION.0).enumerate() {
            for (j, (got, want)) in row.iter().zip(exact).enumerate() {
                let d = *got - want;
                assert!(d.norm() < 1e-7, "({i},{j}) off by {d:?}");
            }
        }
    }

    #[test]
    fn inverse_of_diagonal_and_dense() {
        let m = [[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 4.0]];
        let inv = invert3(&m);
        for (i, mi) in m.iter().enumerate() {
            for j in 0..3 {
                let e: f64 = mi.iter().zip(&inv).map(|(a, row)| a * row[j]).sum();
                assert!((e - if i == j { 1.0 } else { 0.0 }).abs() < 1e-14);
            }
        }
    }
}
