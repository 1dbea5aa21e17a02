//! Every explicitly known minimal surface of the classification, addressable
//! by a stable name and materializable as an immersion with exact
//! derivatives.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use super::{Branch, ScherkIntegral, ScherkState};
use crate::ambient::{CoordVector, Point};
use crate::error::{Result, Sol3Error};
use crate::families::{build_surface, random_cubic, CurveFn, TranslationSurface, TranslationType};
use crate::surface::{DerivativeSource, Immersion, Interval, ParamDomain, SurfaceJet};

/// Names of the catalog entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SolutionKind {
    PlaneX,
    PlaneY,
    PlaneZ,
    TotallyGeodesicPlane,
    Type1Scherk,
    Type2LogConstF,
    Type2Scherk,
    Type3ConstFLog,
    Type3LogConstG,
    Type3LogTAnyF,
    InvariantLog,
}

impl SolutionKind {
    pub const ALL: [SolutionKind; 11] = [
        Self::PlaneX,
        Self::PlaneY,
        Self::PlaneZ,
        Self::TotallyGeodesicPlane,
        Self::Type1Scherk,
        Self::Type2LogConstF,
        Self::Type2Scherk,
        Self::Type3ConstFLog,
        Self::Type3LogConstG,
        Self::Type3LogTAnyF,
        Self::InvariantLog,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::PlaneX => "plane-x",
            Self::PlaneY => "plane-y",
            Self::PlaneZ => "plane-z",
            Self::TotallyGeodesicPlane => "totally-geodesic",
            Self::Type1Scherk => "type1-scherk",
            Self::Type2LogConstF => "type2-log",
            Self::Type2Scherk => "type2-scherk",
            Self::Type3ConstFLog => "type3-constf-log",
            Self::Type3LogConstG => "type3-log-constg",
            Self::Type3LogTAnyF => "type3-logt",
            Self::InvariantLog => "invariant-log",
        }
    }

    /// Parameter keys accepted in the text form, in display order.
    pub fn keys(self) -> &'static [&'static str] {
        match self {
            Self::PlaneX => &["x0"],
            Self::PlaneY => &["y0"],
            Self::PlaneZ => &["z0"],
            Self::TotallyGeodesicPlane => &["a", "b", "c"],
            Self::Type1Scherk | Self::Type2Scherk => &["a", "b", "c", "offset", "branch"],
            Self::Type2LogConstF | Self::Type3ConstFLog => &["a", "lambda", "mu"],
            Self::Type3LogConstG => &["lambda", "mu", "a"],
            Self::Type3LogTAnyF => &["mu", "f"],
            Self::InvariantLog => &["lambda", "mu"],
        }
    }

    /// The entry with every parameter at its default.
    pub fn default_spec(self) -> SolutionSpec {
        match self {
            Self::PlaneX => SolutionSpec::PlaneX { x0: 0.0 },
            Self::PlaneY => SolutionSpec::PlaneY { y0: 0.0 },
            Self::PlaneZ => SolutionSpec::PlaneZ { z0: 0.0 },
            Self::TotallyGeodesicPlane => SolutionSpec::TotallyGeodesicPlane { a: 1.0, b: 1.0, c: 0.0 },
            Self::Type1Scherk => SolutionSpec::Type1Scherk {
                a: 1.0,
                b: 0.0,
                c: 1.0,
                offset: 0.0,
                branch: Branch::Increasing,
            },
            Self::Type2LogConstF => SolutionSpec::Type2LogConstF {
                a: 0.0,
                lambda: 3.0,
                mu: 0.0,
            },
            Self::Type2Scherk => SolutionSpec::Type2Scherk {
                a: 1.0,
                b: 0.0,
                c: 1.0,
                offset: 0.0,
                branch: Branch::Increasing,
            },
            Self::Type3ConstFLog => SolutionSpec::Type3ConstFLog {
                a: 0.0,
                lambda: 3.0,
                mu: 0.0,
            },
            Self::Type3LogConstG => SolutionSpec::Type3LogConstG {
                lambda: 3.0,
                mu: 0.0,
                a: 0.0,
            },
            Self::Type3LogTAnyF => SolutionSpec::Type3LogTAnyF {
                mu: 0.0,
                f: CurveFn::Polynomial(vec![0.0, -0.5, 0.0, 0.125]),
            },
            Self::InvariantLog => SolutionSpec::InvariantLog { lambda: 3.0, mu: 0.0 },
        }
    }

    /// A random valid entry. Ranges keep the surfaces tame on `[-2, 2]^2`:
    /// shifts in `[-1.5, 1.5]`, Scherk slopes `|a|` in `[0.25, 4]`,
    /// `c` in `[0.25, 3]`, cubics from [`random_cubic`].
    pub fn random_spec<R: Rng + ?Sized>(self, rng: &mut R) -> SolutionSpec {
        let mut u = |lo: f64, hi: f64| rng.gen_range(lo..hi);
        let slope = |u: &mut dyn FnMut(f64, f64) -> f64| {
            let mag = u(0.25, 4.0);
            if u(0.0, 1.0) < 0.5 {
                -mag
            } else {
                mag
            }
        };
        match self {
            Self::PlaneX => SolutionSpec::PlaneX { x0: u(-2.0, 2.0) },
            Self::PlaneY => SolutionSpec::PlaneY { y0: u(-2.0, 2.0) },
            Self::PlaneZ => SolutionSpec::PlaneZ { z0: u(-2.0, 2.0) },
            Self::TotallyGeodesicPlane => {
                let angle = u(0.0, std::f64::consts::TAU);
                let r = u(0.5, 2.0);
                SolutionSpec::TotallyGeodesicPlane {
                    a: r * angle.cos(),
                    b: r * angle.sin(),
                    c: u(-2.0, 2.0),
                }
            }
            Self::Type1Scherk | Self::Type2Scherk => {
                let a = slope(&mut u);
                let (b, c) = (u(-2.0, 2.0), u(0.25, 3.0));
                let branch = if u(0.0, 1.0) < 0.5 {
                    Branch::Increasing
                } else {
                    Branch::Decreasing
                };
                let offset = u(-0.5, 0.5);
                if self == Self::Type1Scherk {
                    SolutionSpec::Type1Scherk { a, b, c, offset, branch }
                } else {
                    SolutionSpec::Type2Scherk { a, b, c, offset, branch }
                }
            }
            Self::Type2LogConstF => SolutionSpec::Type2LogConstF {
                a: u(-2.0, 2.0),
                lambda: u(-1.5, 1.5),
                mu: u(-1.0, 1.0),
            },
            Self::Type3ConstFLog => SolutionSpec::Type3ConstFLog {
                a: u(-1.0, 1.0),
                lambda: u(-1.5, 1.5),
                mu: u(-1.0, 1.0),
            },
            Self::Type3LogConstG => SolutionSpec::Type3LogConstG {
                lambda: u(-1.5, 1.5),
                mu: u(-1.0, 1.0),
                a: u(-1.0, 1.0),
            },
            Self::Type3LogTAnyF => SolutionSpec::Type3LogTAnyF {
                mu: u(-1.0, 1.0),
                f: random_cubic(rng),
            },
            Self::InvariantLog => SolutionSpec::InvariantLog {
                lambda: u(-1.5, 3.0),
                mu: u(-1.0, 1.0),
            },
        }
    }
}

impl fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolutionKind {
    type Err = Sol3Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Sol3Error::parse(0, format!("unknown solution {s:?}")))
    }
}

/// One classified minimal surface with its parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum SolutionSpec {
    /// `x = x0`
    PlaneX { x0: f64 },
    /// `y = y0`
    PlaneY { y0: f64 },
    /// `z = z0`
    PlaneZ { z0: f64 },
    /// `a x + b y + c = 0`, totally geodesic
    TotallyGeodesicPlane { a: f64, b: f64, c: f64 },
    /// Type I, `f = a s + b`, `g` Scherk-type with constant `c`
    Type1Scherk { a: f64, b: f64, c: f64, offset: f64, branch: Branch },
    /// Type II, `f = a`, `g = ln|t + lambda| + mu`
    Type2LogConstF { a: f64, lambda: f64, mu: f64 },
    /// Type II, `f = a s + b`, `g` Scherk-type
    Type2Scherk { a: f64, b: f64, c: f64, offset: f64, branch: Branch },
    /// Type III, `f = a`, `g = ln|t + lambda| + mu`
    Type3ConstFLog { a: f64, lambda: f64, mu: f64 },
    /// Type III, `f = -ln|s + lambda| + mu`, `g = a`
    Type3LogConstG { lambda: f64, mu: f64, a: f64 },
    /// Type III, `g = ln|t| + mu`, any `f`
    Type3LogTAnyF { mu: f64, f: CurveFn },
    /// `z = ln(y + lambda) + mu`, invariant under x-translations
    InvariantLog { lambda: f64, mu: f64 },
}

impl SolutionSpec {
    pub fn kind(&self) -> SolutionKind {
        match self {
            Self::PlaneX { .. } => SolutionKind::PlaneX,
            Self::PlaneY { .. } => SolutionKind::PlaneY,
            Self::PlaneZ { .. } => SolutionKind::PlaneZ,
            Self::TotallyGeodesicPlane { .. } => SolutionKind::TotallyGeodesicPlane,
            Self::Type1Scherk { .. } => SolutionKind::Type1Scherk,
            Self::Type2LogConstF { .. } => SolutionKind::Type2LogConstF,
            Self::Type2Scherk { .. } => SolutionKind::Type2Scherk,
            Self::Type3ConstFLog { .. } => SolutionKind::Type3ConstFLog,
            Self::Type3LogConstG { .. } => SolutionKind::Type3LogConstG,
            Self::Type3LogTAnyF { .. } => SolutionKind::Type3LogTAnyF,
            Self::InvariantLog { .. } => SolutionKind::InvariantLog,
        }
    }

    pub fn name(&self) -> &'static str {
        self.kind().name()
    }

    /// `(key, value)` pairs in the text form.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        let n = |v: &f64| format!("{v:?}");
        let br = |b: &Branch| match b {
            Branch::Increasing => "1".to_string(),
            Branch::Decreasing => "-1".to_string(),
        };
        match self {
            Self::PlaneX { x0 } => vec![("x0", n(x0))],
            Self::PlaneY { y0 } => vec![("y0", n(y0))],
            Self::PlaneZ { z0 } => vec![("z0", n(z0))],
            Self::TotallyGeodesicPlane { a, b, c } => vec![("a", n(a)), ("b", n(b)), ("c", n(c))],
            Self::Type1Scherk { a, b, c, offset, branch } | Self::Type2Scherk { a, b, c, offset, branch } => vec![
                ("a", n(a)),
                ("b", n(b)),
                ("c", n(c)),
                ("offset", n(offset)),
                ("branch", br(branch)),
            ],
            Self::Type2LogConstF { a, lambda, mu } | Self::Type3ConstFLog { a, lambda, mu } => {
                vec![("a", n(a)), ("lambda", n(lambda)), ("mu", n(mu))]
            }
            Self::Type3LogConstG { lambda, mu, a } => vec![("lambda", n(lambda)), ("mu", n(mu)), ("a", n(a))],
            Self::Type3LogTAnyF { mu, f } => vec![("mu", n(mu)), ("f", f.to_string())],
            Self::InvariantLog { lambda, mu } => vec![("lambda", n(lambda)), ("mu", n(mu))],
        }
    }

    pub fn materialize(&self) -> Result<CatalogSurface> {
        self.materialize_with(ScherkIntegral::default())
    }

    /// Builds the immersion; `integral` sets the quadrature tolerance of any
    /// Scherk-type height function.
    pub fn materialize_with(&self, integral: ScherkIntegral) -> Result<CatalogSurface> {
        self.check_finite()?;
        let translation = |kind, f, g| Ok(CatalogSurface::Translation(build_surface(kind, f, g)));
        let scherk = |a: f64, c: f64, offset: f64, branch: Branch| -> Result<CurveFn> {
            Ok(CurveFn::Scherk(
                ScherkState::new(a, c)?
                    .with_offset(offset)?
                    .with_branch(branch)
                    .with_integral(integral),
            ))
        };
        let e = |x, y, z| CoordVector::new(x, y, z);
        match self {
            Self::PlaneX { x0 } => Ok(CatalogSurface::Affine(AffinePatch::new(
                Point::new(*x0, 0.0, 0.0),
                e(0.0, 1.0, 0.0),
                e(0.0, 0.0, 1.0),
            ))),
            Self::PlaneY { y0 } => Ok(CatalogSurface::Affine(AffinePatch::new(
                Point::new(0.0, *y0, 0.0),
                e(1.0, 0.0, 0.0),
                e(0.0, 0.0, 1.0),
            ))),
            Self::PlaneZ { z0 } => {
                Point::try_new(0.0, 0.0, *z0)?;
                Ok(CatalogSurface::Affine(AffinePatch::new(
                    Point::new(0.0, 0.0, *z0),
                    e(1.0, 0.0, 0.0),
                    e(0.0, 1.0, 0.0),
                )))
            }
            Self::TotallyGeodesicPlane { a, b, c } => {
                let norm2 = a * a + b * b;
                if norm2 == 0.0 {
                    return Err(Sol3Error::InvalidParameter("a and b cannot both vanish".into()));
                }
                let norm = norm2.sqrt();
                Ok(CatalogSurface::Affine(AffinePatch::new(
                    Point::new(-c * a / norm2, -c * b / norm2, 0.0),
                    e(-b / norm, a / norm, 0.0),
                    e(0.0, 0.0, 1.0),
                )))
            }
            Self::Type1Scherk { a, b, c, offset, branch } => translation(
                TranslationType::I,
                CurveFn::Affine { slope: *a, intercept: *b },
                scherk(*a, *c, *offset, *branch)?,
            ),
            Self::Type2Scherk { a, b, c, offset, branch } => translation(
                TranslationType::II,
                CurveFn::Affine { slope: *a, intercept: *b },
                scherk(*a, *c, *offset, *branch)?,
            ),
            Self::Type2LogConstF { a, lambda, mu } => translation(
                TranslationType::II,
                CurveFn::Constant(*a),
                CurveFn::Log { lambda: *lambda, mu: *mu },
            ),
            Self::Type3ConstFLog { a, lambda, mu } => translation(
                TranslationType::III,
                CurveFn::Constant(*a),
                CurveFn::Log { lambda: *lambda, mu: *mu },
            ),
            Self::Type3LogConstG { lambda, mu, a } => translation(
                TranslationType::III,
                CurveFn::NegLog { lambda: *lambda, mu: *mu },
                CurveFn::Constant(*a),
            ),
            Self::Type3LogTAnyF { mu, f } => {
                let f = match f {
                    CurveFn::Scherk(st) => CurveFn::Scherk(st.with_integral(integral)),
                    other => other.clone(),
                };
                translation(TranslationType::III, f, CurveFn::Log { lambda: 0.0, mu: *mu })
            }
            Self::InvariantLog { lambda, mu } => Ok(CatalogSurface::Graph(LogGraph {
                lambda: *lambda,
                mu: *mu,
            })),
        }
    }

    fn check_finite(&self) -> Result<()> {
        let bad = self
            .params()
            .iter()
            .filter(|(k, _)| *k != "f" && *k != "branch")
            .find(|(_, v)| v.parse::<f64>().map_or(true, |x| !x.is_finite()))
            .map(|(k, v)| format!("{k} = {v}"));
        match bad {
            Some(msg) => Err(Sol3Error::InvalidParameter(format!("non-finite parameter {msg}"))),
            None => Ok(()),
        }
    }
}

/// `name key=value ...`, the form accepted by [`crate::cli::parse_solution`].
impl fmt::Display for SolutionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for (k, v) in self.params() {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// `X(s, t) = origin + s ds + t dt`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AffinePatch {
    pub origin: Point,
    pub ds: CoordVector,
    pub dt: CoordVector,
}

impl AffinePatch {
    pub fn new(origin: Point, ds: CoordVector, dt: CoordVector) -> Self {
        Self { origin, ds, dt }
    }
}

impl Immersion for AffinePatch {
    fn position(&self, s: f64, t: f64) -> Result<Point> {
        let (o, a, b) = (self.origin, self.ds, self.dt);
        Point::new(
            o.x + s * a.dx + t * b.dx,
            o.y + s * a.dy + t * b.dy,
            o.z + s * a.dz + t * b.dz,
        )
        .validated()
    }

    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet> {
        Ok(SurfaceJet {
            point: self.position(s, t)?,
            xs: self.ds,
            xt: self.dt,
            xss: CoordVector::ZERO,
            xst: CoordVector::ZERO,
            xtt: CoordVector::ZERO,
        })
    }

    fn derivative_source(&self) -> DerivativeSource {
        DerivativeSource::Analytic
    }
}

/// The graph `z = ln(y + lambda) + mu` over `y > -lambda`, parameterized as
/// `(s, t, ln(t + lambda) + mu)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogGraph {
    pub lambda: f64,
    pub mu: f64,
}

impl Immersion for LogGraph {
    fn position(&self, s: f64, t: f64) -> Result<Point> {
        self.jet(s, t).map(|j| j.point)
    }

    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet> {
        let w = t + self.lambda;
        if w.is_nan() || w <= 0.0 {
            return Err(Sol3Error::OutsideDomain {
                s,
                t,
                reason: format!("needs t > {}", -self.lambda),
            });
        }
        Ok(SurfaceJet {
            point: Point::new(s, t, w.ln() + self.mu).validated()?,
            xs: CoordVector::new(1.0, 0.0, 0.0),
            xt: CoordVector::new(0.0, 1.0, 1.0 / w),
            xss: CoordVector::ZERO,
            xst: CoordVector::ZERO,
            xtt: CoordVector::new(0.0, 0.0, -1.0 / (w * w)),
        })
    }

    fn derivative_source(&self) -> DerivativeSource {
        DerivativeSource::Analytic
    }

    fn domain(&self) -> ParamDomain {
        ParamDomain {
            t: Interval::new(-self.lambda, f64::INFINITY),
            ..ParamDomain::default()
        }
    }
}

/// A materialized catalog entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum CatalogSurface {
    Affine(AffinePatch),
    Graph(LogGraph),
    Translation(TranslationSurface),
}

impl Immersion for CatalogSurface {
    fn position(&self, s: f64, t: f64) -> Result<Point> {
        match self {
            Self::Affine(p) => p.position(s, t),
            Self::Graph(p) => p.position(s, t),
            Self::Translation(p) => p.position(s, t),
        }
    }

    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet> {
        match self {
            Self::Affine(p) => p.jet(s, t),
            Self::Graph(p) => p.jet(s, t),
            Self::Translation(p) => p.jet(s, t),
        }
    }

    fn derivative_source(&self) -> DerivativeSource {
        DerivativeSource::Analytic
    }

    fn domain(&self) -> ParamDomain {
        match self {
            Self::Affine(p) => p.domain(),
            Self::Graph(p) => p.domain(),
            Self::Translation(p) => p.domain(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::mean_curvature;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn names_round_trip() {
        for k in SolutionKind::ALL {
            assert_eq!(k.name().parse::<SolutionKind>().unwrap(), k);
            assert_eq!(k.default_spec().kind(), k);
        }
        assert!("type4-foo".parse::<SolutionKind>().is_err());
    }

    #[test]
    fn materialized_coordinates() {
        let p = SolutionSpec::PlaneZ { z0: 0.0 }.materialize().unwrap();
        assert_eq!(p.position(1.5, -2.0).unwrap(), Point::new(1.5, -2.0, 0.0));

        let (a, lambda, mu) = (0.7, 0.4, -0.3);
        let t2 = SolutionSpec::Type2LogConstF { a, lambda, mu }.materialize().unwrap();
        let q = t2.position(0.2, 1.1).unwrap();
        assert_eq!(q.x, 0.2);
        assert!((q.y - (1.1 + a)).abs() < 1e-15);
        assert!((q.z - ((1.1 + lambda).ln() + mu)).abs() < 1e-15);

        let f = CurveFn::Polynomial(vec![0.1, 0.5, 0.0, -0.2]);
        let t3 = SolutionSpec::Type3LogTAnyF { mu: 0.25, f: f.clone() }.materialize().unwrap();
        let (s, t) = (0.6, -1.4);
        let fv = f.value(s).unwrap();
        let r = t3.position(s, t).unwrap();
        assert!((r.y - t * fv.exp()).abs() < 1e-14);
        assert!((r.z - (fv + t.abs().ln() + 0.25)).abs() < 1e-14);

        let tg = SolutionSpec::TotallyGeodesicPlane { a: 2.0, b: -1.0, c: 3.0 }.materialize().unwrap();
        for (s, t) in [(0.0, 0.0), (1.3, -0.2)] {
            let p = tg.position(s, t).unwrap();
            assert!((2.0 * p.x - p.y + 3.0).abs() < 1e-14);
        }
    }

    #[test]
    fn invalid_parameters() {
        let bad_c = SolutionSpec::Type1Scherk {
            a: 1.0,
            b: 0.0,
            c: 0.0,
            offset: 0.0,
            branch: Branch::Increasing,
        };
        assert!(bad_c.materialize().is_err());
        let bad_a = SolutionSpec::Type2Scherk {
            a: 0.0,
            b: 0.0,
            c: 1.0,
            offset: 0.0,
            branch: Branch::Increasing,
        };
        assert!(bad_a.materialize().is_err());
        assert!(SolutionSpec::TotallyGeodesicPlane { a: 0.0, b: 0.0, c: 1.0 }.materialize().is_err());
        assert!(SolutionSpec::PlaneZ { z0: f64::NAN }.materialize().is_err());
        assert!(SolutionSpec::PlaneZ { z0: 500.0 }.materialize().is_err());
    }

    #[test]
    fn invariant_graph_domain() {
        let g = SolutionSpec::InvariantLog { lambda: 0.5, mu: 0.0 }.materialize().unwrap();
        assert!(g.position(0.0, -0.6).is_err());
        assert!(!g.domain().contains(0.0, -0.5));
        let r = mean_curvature(&g, 0.3, 1.0).unwrap();
        assert!(r.h.abs() < 1e-14);
    }

    #[test]
    fn random_specs_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in SolutionKind::ALL {
            for _ in 0..10 {
                let spec = k.random_spec(&mut rng);
                assert_eq!(spec.kind(), k);
                spec.materialize().unwrap();
            }
        }
    }
}
