//! Closed-form minimality residuals of types I-III, written in terms of the
//! generating functions only. They agree with the kernel residual up to the
//! normal scaling: factor 1 for types I and II, `-e^{f(s)}` for type III.

use twofloat::TwoFloat;

use super::{build_surface, CurveFn, CurveJet, TranslationType};
use crate::error::{Result, Sol3Error};
use crate::surface::minimality_residual;

fn jets(f: &CurveFn, g: &CurveFn, s: f64, t: f64) -> Result<(CurveJet, CurveJet)> {
    Ok((f.eval(s)?, g.eval(t)?))
}

fn wide(x: f64) -> TwoFloat {
    TwoFloat::from(x)
}

fn round(x: TwoFloat) -> f64 {
    x.hi() + x.lo()
}

/// `-f'' g'^3 - e^{2g} (f'' g' + f' g'^2 + f' g'') + e^{-2g} f'^3 (g'^2 - g'')`
pub fn residual_type1(f: &CurveFn, g: &CurveFn, s: f64, t: f64) -> Result<f64> {
    let (fj, gj) = jets(f, g, s, t)?;
    let (f1, f2) = (wide(fj.d1), wide(fj.d2));
    let (g1, g2) = (wide(gj.d1), wide(gj.d2));
    let g1sq = g1 * g1;
    let r = -f2 * g1sq * g1 - (f2 * g1 + f1 * g1sq + f1 * g2) * (2.0 * gj.value).exp()
        + f1 * f1 * f1 * (g1sq - g2) * (-2.0 * gj.value).exp();
    Ok(round(r))
}

/// `-f'' g'^3 + e^{-2g} (f'^2 (g'' - g'^2) - f'' g') + e^{2g} (g'' + g'^2)`
pub fn residual_type2(f: &CurveFn, g: &CurveFn, s: f64, t: f64) -> Result<f64> {
    let (fj, gj) = jets(f, g, s, t)?;
    let (f1, f2) = (wide(fj.d1), wide(fj.d2));
    let (g1, g2) = (wide(gj.d1), wide(gj.d2));
    let g1sq = g1 * g1;
    let r = -f2 * g1sq * g1
        + (f1 * f1 * (g2 - g1sq) - f2 * g1) * (-2.0 * gj.value).exp()
        + (g2 + g1sq) * (2.0 * gj.value).exp();
    Ok(round(r))
}

/// Type III residual (depends on `t` explicitly through `y = t e^{f}`).
pub fn residual_type3(f: &CurveFn, g: &CurveFn, s: f64, t: f64) -> Result<f64> {
    let (fj, gj) = jets(f, g, s, t)?;
    let (f1, f2) = (wide(fj.d1), wide(fj.d2));
    let (g1, g2) = (wide(gj.d1), wide(gj.d2));
    let tw = wide(t);
    let ff = f1 * f1;
    let g1sq = g1 * g1;
    let bracket = tw * tw * ff * g1sq + ff - tw * tw * ff * g2 - tw * ff * g1 * 3.0 + tw * f2 * g1 - f2;
    let r = -(g2 + g1sq) * (2.0 * (fj.value + gj.value)).exp() + bracket * (-2.0 * gj.value).exp()
        - ff * g1sq * 2.0
        + tw * ff * g1sq * g1
        + tw * f2 * g1sq * g1
        - f2 * g1sq
        - ff * g2;
    Ok(round(r))
}

/// The closed-form residual of a type in I-III.
pub fn residual_for(kind: TranslationType, f: &CurveFn, g: &CurveFn, s: f64, t: f64) -> Result<f64> {
    match kind {
        TranslationType::I => residual_type1(f, g, s, t),
        TranslationType::II => residual_type2(f, g, s, t),
        TranslationType::III => residual_type3(f, g, s, t),
        other => Err(Sol3Error::InvalidParameter(format!(
            "no closed-form residual for type {other}"
        ))),
    }
}

/// The factor the kernel residual must carry relative to the closed form:
/// `1` for types I and II, `-e^{f(s)}` for type III.
pub fn expected_agreement_factor(kind: TranslationType, f: &CurveFn, s: f64) -> Result<f64> {
    match kind {
        TranslationType::I | TranslationType::II => Ok(1.0),
        TranslationType::III => Ok(-f.value(s)?.exp()),
        other => Err(Sol3Error::InvalidParameter(format!(
            "no closed-form residual for type {other}"
        ))),
    }
}

/// Smallest closed-form residual for which the ratio is computed.
pub const AGREEMENT_GUARD: f64 = 1e-12;

/// `minimality_residual(build_surface(kind, f, g)) / residual_kind(f, g)`.
pub fn kernel_agreement_factor(kind: TranslationType, f: &CurveFn, g: &CurveFn, s: f64, t: f64) -> Result<f64> {
    let closed = residual_for(kind, f, g, s, t)?;
    if closed.abs() <= AGREEMENT_GUARD {
        return Err(Sol3Error::InvalidParameter(format!(
            "closed-form residual {closed:e} too close to zero at ({s}, {t}) for a ratio"
        )));
    }
    let kernel = minimality_residual(&build_surface(kind, f.clone(), g.clone()), s, t)?;
    Ok(kernel / closed)
}
