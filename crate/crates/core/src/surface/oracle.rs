//! Independent mean-curvature route: position samples only, finite-difference
//! derivatives, coordinate Christoffel symbols differenced from the metric,
//! and the normal obtained by raising the Euclidean cross-product covector.
//! Nothing here goes through the frame or the connection table.

use super::{fd_jet, Immersion};
use crate::ambient::{coordinate_christoffel_fd, metric_tensor, CoordVector};
use crate::error::{Result, Sol3Error};

fn quad(g: &[[f64; 3]; 3], u: [f64; 3], v: [f64; 3]) -> f64 {
    (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| g[i][j] * u[i] * v[j])
        .sum()
}

fn solve_sym3(g: &[[f64; 3]; 3], b: [f64; 3]) -> [f64; 3] {
    // Cramer's rule; g is a metric tensor, so it is well conditioned here.
    let det3 = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det3(*g);
    let mut out = [0.0; 3];
    for (col, slot) in out.iter_mut().enumerate() {
        let mut m = *g;
        for row in 0..3 {
            m[row][col] = b[row];
        }
        *slot = det3(m) / d;
    }
    out
}

/// Mean curvature from position samples alone. Sign convention matches
/// [`super::mean_curvature`].
pub fn fd_mean_curvature<I: Immersion + ?Sized>(imm: &I, s: f64, t: f64) -> Result<f64> {
    let jet = fd_jet(imm, s, t)?;
    let g = metric_tensor(jet.point)?;
    let gamma = coordinate_christoffel_fd(jet.point)?;
    let (xs, xt) = (jet.xs.to_array(), jet.xt.to_array());

    let e = quad(&g, xs, xs);
    let f = quad(&g, xs, xt);
    let gg = quad(&g, xt, xt);
    let det = e * gg - f * f;
    if det.is_nan() || det <= 1e-12 * e * gg {
        return Err(Sol3Error::Singular { s, t, det });
    }

    // Covector annihilating both tangents; raising it with g^{-1} gives the
    // normal with the same orientation as e1 x e2 (det g = 1).
    let covector = jet.xs.euclidean_cross(jet.xt);
    let normal = solve_sym3(&g, covector);
    let norm = quad(&g, normal, normal).sqrt();

    let accel = |xab: CoordVector, xa: CoordVector, xb: CoordVector| {
        let v = (xab + gamma.contract(xa, xb)).to_array();
        covector[0] * v[0] + covector[1] * v[1] + covector[2] * v[2]
    };
    let l = accel(jet.xss, jet.xs, jet.xs);
    let m = accel(jet.xst, jet.xs, jet.xt);
    let n = accel(jet.xtt, jet.xt, jet.xt);

    Ok((gg * l - 2.0 * f * m + e * n) / (2.0 * det * norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::Point;
    use crate::surface::{mean_curvature, PositionFn};

    #[test]
    fn horizontal_plane() {
        let imm = PositionFn::new(|s, t| Point::new(s, t, 0.8));
        assert!(fd_mean_curvature(&imm, 0.3, -1.2).unwrap().abs() < 1e-8);
    }

    #[test]
    fn agrees_with_kernel_on_a_generic_patch() {
        let imm = PositionFn::new(|s: f64, t: f64| Point::new(s + 0.2 * t * t, t - s * s, (s * t).sin()));
        for (s, t) in [(0.1, 0.2), (-0.7, 0.5), (1.1, -0.9)] {
            let exact = mean_curvature(&imm, s, t).unwrap().h;
            let oracle = fd_mean_curvature(&imm, s, t).unwrap();
            assert!((exact - oracle).abs() < 1e-5, "{exact} vs {oracle}");
        }
    }
}
