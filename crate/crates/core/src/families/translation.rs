use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{CurveFn, CurveJet};
use crate::ambient::{CoordVector, Point};
use crate::error::{Result, Sol3Error};
use crate::surface::{DerivativeSource, Immersion, ParamDomain, SurfaceJet};

/// Which coordinate plane a generating curve lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoordPlane {
    /// `{z = 0}`, curve `(u, f(u), 0)`
    Z0,
    /// `{y = 0}`, curve `(u, 0, f(u))`
    Y0,
    /// `{x = 0}`, curve `(0, u, f(u))`
    X0,
}

impl CoordPlane {
    /// Position, velocity and acceleration of the embedded graph curve.
    fn embed(self, u: f64, j: CurveJet) -> [[f64; 3]; 3] {
        match self {
            CoordPlane::Z0 => [[u, j.value, 0.0], [1.0, j.d1, 0.0], [0.0, j.d2, 0.0]],
            CoordPlane::Y0 => [[u, 0.0, j.value], [1.0, 0.0, j.d1], [0.0, 0.0, j.d2]],
            CoordPlane::X0 => [[0.0, u, j.value], [0.0, 1.0, j.d1], [0.0, 0.0, j.d2]],
        }
    }
}

/// The six translation-surface types. `alpha` carries `f(s)`, `beta`
/// carries `g(t)`; types I-III are `alpha * beta`, IV-VI are `beta * alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TranslationType {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl TranslationType {
    pub const ALL: [TranslationType; 6] = [Self::I, Self::II, Self::III, Self::IV, Self::V, Self::VI];

    /// Planes holding `(alpha, beta)`.
    pub fn planes(self) -> (CoordPlane, CoordPlane) {
        match self {
            Self::I | Self::IV => (CoordPlane::Z0, CoordPlane::Y0),
            Self::II | Self::V => (CoordPlane::Z0, CoordPlane::X0),
            Self::III | Self::VI => (CoordPlane::Y0, CoordPlane::X0),
        }
    }

    /// True for `beta * alpha` (types IV-VI).
    pub fn reversed(self) -> bool {
        matches!(self, Self::IV | Self::V | Self::VI)
    }

    pub fn numeral(self) -> &'static str {
        match self {
            Self::I => "I",
            Self::II => "II",
            Self::III => "III",
            Self::IV => "IV",
            Self::V => "V",
            Self::VI => "VI",
        }
    }
}

impl fmt::Display for TranslationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.numeral())
    }
}

impl FromStr for TranslationType {
    type Err = Sol3Error;

    /// Accepts roman numerals (any case) or the digits 1-6.
    fn from_str(s: &str) -> Result<Self> {
        let t = match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Self::I,
            "II" | "2" => Self::II,
            "III" | "3" => Self::III,
            "IV" | "4" => Self::IV,
            "V" | "5" => Self::V,
            "VI" | "6" => Self::VI,
            _ => return Err(Sol3Error::parse(0, format!("unknown translation type {s:?} (expected I..VI)"))),
        };
        Ok(t)
    }
}

/// `X(s, t) = alpha(s) * beta(t)` (or `beta(t) * alpha(s)` for IV-VI).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TranslationSurface {
    pub kind: TranslationType,
    pub f: CurveFn,
    pub g: CurveFn,
}

pub fn build_surface(kind: TranslationType, f: CurveFn, g: CurveFn) -> TranslationSurface {
    TranslationSurface { kind, f, g }
}

/// Derivatives of `P = p * q` where `p` depends on one parameter and `q` on
/// another: returns `[P, P_p, P_q, P_pp, P_pq, P_qq]`.
fn product_jet(p: [[f64; 3]; 3], q: [[f64; 3]; 3]) -> [[f64; 3]; 6] {
    let [p0, p1, p2] = p;
    let [q0, q1, q2] = q;
    let (em, ep) = ((-p0[2]).exp(), p0[2].exp());
    let pos = [p0[0] + em * q0[0], p0[1] + ep * q0[1], p0[2] + q0[2]];
    let dp = [
        p1[0] - p1[2] * em * q0[0],
        p1[1] + p1[2] * ep * q0[1],
        p1[2],
    ];
    let dq = [em * q1[0], ep * q1[1], q1[2]];
    let dpp = [
        p2[0] + (p1[2] * p1[2] - p2[2]) * em * q0[0],
        p2[1] + (p1[2] * p1[2] + p2[2]) * ep * q0[1],
        p2[2],
    ];
    let dpq = [-p1[2] * em * q1[0], p1[2] * ep * q1[1], 0.0];
    let dqq = [em * q2[0], ep * q2[1], q2[2]];
    [pos, dp, dq, dpp, dpq, dqq]
}

/// Position, first and second derivative of a curve in a coordinate plane.
type CurvePoint = [[f64; 3]; 3];

impl TranslationSurface {
    fn curves(&self, s: f64, t: f64) -> Result<(CurvePoint, CurvePoint)> {
        let (pa, pb) = self.kind.planes();
        let alpha = pa.embed(s, self.f.eval(s)?);
        let beta = pb.embed(t, self.g.eval(t)?);
        Ok((alpha, beta))
    }
}

impl Immersion for TranslationSurface {
    fn position(&self, s: f64, t: f64) -> Result<Point> {
        self.jet(s, t).map(|j| j.point)
    }

    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet> {
        let (alpha, beta) = self.curves(s, t)?;
        let v = CoordVector::from_array;
        let jet = if self.kind.reversed() {
            let [pos, dt, ds, dtt, dst, dss] = product_jet(beta, alpha);
            SurfaceJet {
                point: Point::new(pos[0], pos[1], pos[2]),
                xs: v(ds),
                xt: v(dt),
                xss: v(dss),
                xst: v(dst),
                xtt: v(dtt),
            }
        } else {
            let [pos, ds, dt, dss, dst, dtt] = product_jet(alpha, beta);
            SurfaceJet {
                point: Point::new(pos[0], pos[1], pos[2]),
                xs: v(ds),
                xt: v(dt),
                xss: v(dss),
                xst: v(dst),
                xtt: v(dtt),
            }
        };
        jet.point.validated()?;
        let all_finite = [jet.xs, jet.xt, jet.xss, jet.xst, jet.xtt].iter().all(|c| c.is_finite());
        if !all_finite {
            return Err(Sol3Error::Domain(format!("non-finite derivatives at ({s}, {t})")));
        }
        Ok(jet)
    }

    fn derivative_source(&self) -> DerivativeSource {
        DerivativeSource::Analytic
    }

    fn domain(&self) -> ParamDomain {
        ParamDomain {
            s_singular: self.f.singular_points(),
            t_singular: self.g.singular_points(),
            ..ParamDomain::default()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::group_mul;
    use crate::surface::fd_jet;

    fn curves() -> (CurveFn, CurveFn) {
        (
            CurveFn::Polynomial(vec![0.3, -0.5, 0.2, 0.1]),
            CurveFn::Polynomial(vec![-0.2, 0.4, -0.3, 0.05]),
        )
    }

    #[test]
    fn explicit_coordinates_of_types_one_to_three() {
        let (f, g) = curves();
        let (s, t) = (0.7, -1.1);
        let (fv, gv) = (f.value(s).unwrap(), g.value(t).unwrap());
        let p1 = build_surface(TranslationType::I, f.clone(), g.clone()).position(s, t).unwrap();
        assert_eq!(p1, Point::new(s + t, fv, gv));
        let p2 = build_surface(TranslationType::II, f.clone(), g.clone()).position(s, t).unwrap();
        assert_eq!(p2, Point::new(s, t + fv, gv));
        let p3 = build_surface(TranslationType::III, f.clone(), g.clone()).position(s, t).unwrap();
        assert!((p3.y - t * fv.exp()).abs() < 1e-15);
        assert_eq!((p3.x, p3.z), (s, fv + gv));
    }

    #[test]
    fn simple_type_one_example() {
        let imm = build_surface(TranslationType::I, CurveFn::Affine { slope: 1.0, intercept: 0.0 }, CurveFn::Constant(0.0));
        assert_eq!(imm.position(0.5, 2.0).unwrap(), Point::new(2.5, 0.5, 0.0));
    }

    #[test]
    fn reversed_types_use_beta_times_alpha() {
        let (f, g) = curves();
        let (s, t) = (-0.4, 0.9);
        for kind in [TranslationType::IV, TranslationType::V, TranslationType::VI] {
            let (pa, pb) = kind.planes();
            let a = pa.embed(s, f.eval(s).unwrap())[0];
            let b = pb.embed(t, g.eval(t).unwrap())[0];
            let want = group_mul(Point::new(b[0], b[1], b[2]), Point::new(a[0], a[1], a[2])).unwrap();
            let got = build_surface(kind, f.clone(), g.clone()).position(s, t).unwrap();
            assert_eq!(got, want, "{kind}");
        }
        // type IV closed form
        let (fv, gv) = (f.value(s).unwrap(), g.value(t).unwrap());
        let p = build_surface(TranslationType::IV, f, g).position(s, t).unwrap();
        assert!((p.x - (t + (-gv).exp() * s)).abs() < 1e-15);
        assert!((p.y - gv.exp() * fv).abs() < 1e-15);
    }

    #[test]
    fn analytic_jet_matches_finite_differences() {
        let (f, g) = curves();
        for kind in TranslationType::ALL {
            let imm = build_surface(kind, f.clone(), g.clone());
            for (s, t) in [(0.2, 0.3), (-1.3, 1.7), (1.9, -0.8)] {
                let a = imm.jet(s, t).unwrap();
                let n = fd_jet(&imm, s, t).unwrap();
                let pairs = [(a.xs, n.xs), (a.xt, n.xt), (a.xss, n.xss), (a.xst, n.xst), (a.xtt, n.xtt)];
                for (k, (x, y)) in pairs.iter().enumerate() {
                    for (u, v) in x.to_array().iter().zip(y.to_array()) {
                        assert!((u - v).abs() < 1e-6 * u.abs().max(1.0), "{kind} slot {k}: {u} vs {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn type_tags_parse() {
        assert_eq!("iii".parse::<TranslationType>().unwrap(), TranslationType::III);
        assert_eq!("5".parse::<TranslationType>().unwrap(), TranslationType::V);
        assert!("VII".parse::<TranslationType>().is_err());
        for k in TranslationType::ALL {
            assert_eq!(k.to_string().parse::<TranslationType>().unwrap(), k);
        }
    }
}
