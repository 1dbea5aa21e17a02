use serde::Serialize;

use twofloat::TwoFloat;

use super::extended::{round, Dd3};
use super::{Immersion, SurfaceJet};
use crate::ambient::{CoordVector, FrameVector};
use crate::error::{Result, Sol3Error};

/// A point is singular when `EG - F^2 <= 0` or `EG - F^2 < REGULARITY_THRESHOLD * E * G`,
/// i.e. when the angle between `X_s` and `X_t` has `sin^2 < 1e-12`.
pub const REGULARITY_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FirstForm {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

impl FirstForm {
    pub fn det(&self) -> f64 {
        self.e * self.g - self.f * self.f
    }
}

/// Products of the unnormalized normal `e1 x e2` with the ambient covariant
/// derivatives of the coordinate tangents.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SecondFormScaled {
    /// `<N, nabla_{e1} e1>`
    pub l: f64,
    /// `<N, nabla_{e1} e2>`
    pub m: f64,
    /// `<N, nabla_{e2} e1>`; equals `m` for a torsion-free connection.
    pub m_transposed: f64,
    /// `<N, nabla_{e2} e2>`
    pub n: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvatureReport {
    /// Mean curvature with respect to the unit normal `N / |N|`, `N = e1 x e2`.
    pub h: f64,
    /// `G l - 2F m + E n`
    pub residual: f64,
    pub norm_n: f64,
    /// `EG - F^2`
    pub det1: f64,
}

pub(crate) struct LocalGeometry {
    pub e1: FrameVector,
    pub e2: FrameVector,
    pub first: FirstForm,
    pub normal: FrameVector,
    wide: WideGeometry,
}

struct WideGeometry {
    e1: Dd3,
    e2: Dd3,
    e: TwoFloat,
    f: TwoFloat,
    g: TwoFloat,
    det: TwoFloat,
    normal: Dd3,
    ez: f64,
    emz: f64,
}

/// Frame components of `X_b` and of their parameter derivatives.
///
/// The frame depends on height, so differentiating `(e^z u.dx, e^{-z} u.dy, u.dz)`
/// along a parameter picks up `z_a` terms.
fn frame_derivative(ez: f64, emz: f64, za: f64, xb: CoordVector, xab: CoordVector) -> Dd3 {
    Dd3([
        (TwoFloat::new_mul(za, xb.dx) + xab.dx) * ez,
        (TwoFloat::from(xab.dy) - TwoFloat::new_mul(za, xb.dy)) * emz,
        TwoFloat::from(xab.dz),
    ])
}

pub(crate) fn local_geometry(jet: &SurfaceJet, s: f64, t: f64) -> Result<LocalGeometry> {
    let p = jet.point.validated()?;
    let (ez, emz) = (p.z.exp(), (-p.z).exp());
    let factors = [ez, emz, 1.0];
    let e1 = Dd3::scaled(factors, jet.xs.to_array());
    let e2 = Dd3::scaled(factors, jet.xt.to_array());
    let (e, f, g) = (e1.dot(e1), e1.dot(e2), e2.dot(e2));
    let det = e * g - f * f;
    let first = FirstForm {
        e: round(e),
        f: round(f),
        g: round(g),
    };
    let det_f64 = round(det);
    if !det_f64.is_finite() || det_f64 <= 0.0 || det_f64 < REGULARITY_THRESHOLD * first.e * first.g {
        return Err(Sol3Error::Singular { s, t, det: det_f64 });
    }
    let normal = e1.cross(e2);
    Ok(LocalGeometry {
        e1: e1.to_frame(),
        e2: e2.to_frame(),
        first,
        normal: normal.to_frame(),
        wide: WideGeometry {
            e1,
            e2,
            e,
            f,
            g,
            det,
            normal,
            ez,
            emz,
        },
    })
}

/// `(l, m, m_transposed, n)` at double-double precision.
fn second_form_wide(jet: &SurfaceJet, w: &WideGeometry) -> [TwoFloat; 4] {
    let (zs, zt) = (jet.xs.dz, jet.xt.dz);
    let d = |za, xb, xab| frame_derivative(w.ez, w.emz, za, xb, xab);
    let d11 = Dd3::covariant(w.e1, w.e1, d(zs, jet.xs, jet.xss));
    let d12 = Dd3::covariant(w.e1, w.e2, d(zs, jet.xt, jet.xst));
    let d21 = Dd3::covariant(w.e2, w.e1, d(zt, jet.xs, jet.xst));
    let d22 = Dd3::covariant(w.e2, w.e2, d(zt, jet.xt, jet.xtt));
    let n = w.normal;
    [n.dot(d11), n.dot(d12), n.dot(d21), n.dot(d22)]
}

pub(crate) fn second_form_from_jet(jet: &SurfaceJet, geo: &LocalGeometry) -> SecondFormScaled {
    let [l, m, m_transposed, n] = second_form_wide(jet, &geo.wide).map(round);
    SecondFormScaled { l, m, m_transposed, n }
}

pub(crate) fn report_from_jet(jet: &SurfaceJet, s: f64, t: f64) -> Result<CurvatureReport> {
    let geo = local_geometry(jet, s, t)?;
    let w = &geo.wide;
    let [l, m, _, n] = second_form_wide(jet, w);
    let residual = round(w.g * l - w.f * m * 2.0 + w.e * n);
    let det1 = round(w.det);
    let norm_n = round(w.normal.dot(w.normal)).sqrt();
    Ok(CurvatureReport {
        h: residual / (2.0 * det1 * norm_n),
        residual,
        norm_n,
        det1,
    })
}

/// Frame components of `x_s` and `x_t`.
pub fn tangent_frame<I: Immersion + ?Sized>(imm: &I, s: f64, t: f64) -> Result<(FrameVector, FrameVector)> {
    let geo = local_geometry(&imm.jet(s, t)?, s, t)?;
    Ok((geo.e1, geo.e2))
}

pub fn first_form<I: Immersion + ?Sized>(imm: &I, s: f64, t: f64) -> Result<FirstForm> {
    Ok(local_geometry(&imm.jet(s, t)?, s, t)?.first)
}

/// The unnormalized normal `e1 x e2`; `|N|^2 = EG - F^2`.
pub fn normal_scaled<I: Immersion + ?Sized>(imm: &I, s: f64, t: f64) -> Result<FrameVector> {
    Ok(local_geometry(&imm.jet(s, t)?, s, t)?.normal)
}

pub fn second_form_scaled<I: Immersion + ?Sized>(imm: &I, s: f64, t: f64) -> Result<SecondFormScaled> {
    let jet = imm.jet(s, t)?;
    let geo = local_geometry(&jet, s, t)?;
    Ok(second_form_from_jet(&jet, &geo))
}

/// `G <N, nabla_{e1} e1> - 2F <N, nabla_{e1} e2> + E <N, nabla_{e2} e2>`;
/// zero exactly where the surface is minimal.
pub fn minimality_residual<I: Immersion + ?Sized>(imm: &I, s: f64, t: f64) -> Result<f64> {
    Ok(report_from_jet(&imm.jet(s, t)?, s, t)?.residual)
}

pub fn mean_curvature<I: Immersion + ?Sized>(imm: &I, s: f64, t: f64) -> Result<CurvatureReport> {
    report_from_jet(&imm.jet(s, t)?, s, t)
}
