use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::classified::{scherk_g, Branch, ScherkState};
use crate::error::{Result, Sol3Error};

/// Value and first two derivatives of a scalar function at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveJet {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

/// Generating functions of the translation surfaces. Every variant knows
/// its derivatives in closed form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum CurveFn {
    Constant(f64),
    /// `slope * u + intercept`
    Affine { slope: f64, intercept: f64 },
    /// Coefficients in ascending order: `c0 + c1 u + c2 u^2 + ...`
    Polynomial(Vec<f64>),
    /// `ln|u + lambda| + mu`
    Log { lambda: f64, mu: f64 },
    /// `-ln|u + lambda| + mu`
    NegLog { lambda: f64, mu: f64 },
    /// `I^{-1}(c u) / 2 + m`
    Scherk(ScherkState),
}

impl CurveFn {
    pub fn eval(&self, u: f64) -> Result<CurveJet> {
        if !u.is_finite() {
            return Err(Sol3Error::Domain(format!("curve evaluated at {u}")));
        }
        let jet = match self {
            CurveFn::Constant(c) => CurveJet {
                value: *c,
                d1: 0.0,
                d2: 0.0,
            },
            CurveFn::Affine { slope, intercept } => CurveJet {
                value: slope * u + intercept,
                d1: *slope,
                d2: 0.0,
            },
            CurveFn::Polynomial(coeffs) => horner(coeffs, u),
            CurveFn::Log { lambda, mu } | CurveFn::NegLog { lambda, mu } => {
                let w = u + lambda;
                if w == 0.0 {
                    return Err(Sol3Error::Domain(format!("log curve singular at u = {u}")));
                }
                let sign = if matches!(self, CurveFn::Log { .. }) { 1.0 } else { -1.0 };
                CurveJet {
                    value: sign * w.abs().ln() + mu,
                    d1: sign / w,
                    d2: -sign / (w * w),
                }
            }
            CurveFn::Scherk(st) => scherk_g(u, st)?,
        };
        if !(jet.value.is_finite() && jet.d1.is_finite() && jet.d2.is_finite()) {
            return Err(Sol3Error::Domain(format!("curve {self} not finite at u = {u}")));
        }
        Ok(jet)
    }

    pub fn value(&self, u: f64) -> Result<f64> {
        self.eval(u).map(|j| j.value)
    }

    /// Parameter values where the function is undefined.
    pub fn singular_points(&self) -> Vec<f64> {
        match self {
            CurveFn::Log { lambda, .. } | CurveFn::NegLog { lambda, .. } => vec![-lambda],
            _ => Vec::new(),
        }
    }

    pub fn is_constant(&self) -> bool {
        match self {
            CurveFn::Constant(_) => true,
            CurveFn::Affine { slope, .. } => *slope == 0.0,
            CurveFn::Polynomial(c) => c.iter().skip(1).all(|&x| x == 0.0),
            _ => false,
        }
    }
}

/// A cubic with coefficients `c_k` uniform in `[-2^{-k-1}, 2^{-k-1}]`, so
/// `|f| <= 2` on `[-2, 2]`. Steeper cubics make `X_s` and `X_t` nearly
/// collinear in the metric and the computed `H` loses most of its digits.
pub fn random_cubic<R: Rng + ?Sized>(rng: &mut R) -> CurveFn {
    CurveFn::Polynomial((0..4).map(|k| rng.gen_range(-0.5..0.5) / f64::from(1 << k)).collect())
}

/// A random curve from every catalog kind, with parameters scaled so that
/// the resulting surfaces stay moderate on `[-2, 2]^2`.
pub fn random_curve<R: Rng + ?Sized>(rng: &mut R) -> CurveFn {
    let mut u = |lo: f64, hi: f64| rng.gen_range(lo..hi);
    match u(0.0, 6.0) as usize {
        0 => CurveFn::Constant(u(-1.0, 1.0)),
        1 => CurveFn::Affine {
            slope: u(-1.5, 1.5),
            intercept: u(-1.0, 1.0),
        },
        2 => random_cubic(rng),
        3 => CurveFn::Log {
            lambda: u(-1.5, 1.5),
            mu: u(-1.0, 1.0),
        },
        4 => CurveFn::NegLog {
            lambda: u(-1.5, 1.5),
            mu: u(-1.0, 1.0),
        },
        _ => {
            let a = u(0.25, 3.0) * if u(0.0, 1.0) < 0.5 { -1.0 } else { 1.0 };
            let branch = if u(0.0, 1.0) < 0.5 {
                Branch::Increasing
            } else {
                Branch::Decreasing
            };
            let st = ScherkState::new(a, u(0.25, 2.0))
                .and_then(|st| st.with_offset(u(-0.5, 0.5)))
                .expect("parameters drawn inside the valid ranges")
                .with_branch(branch);
            CurveFn::Scherk(st)
        }
    }
}

/// A parameter in `[lo, hi]` at least `gap` away from the curve's singular
/// points.
pub fn random_parameter<R: Rng + ?Sized>(curve: &CurveFn, lo: f64, hi: f64, gap: f64, rng: &mut R) -> f64 {
    let singular = curve.singular_points();
    loop {
        let u = rng.gen_range(lo..hi);
        if singular.iter().all(|&p| (u - p).abs() > gap) {
            return u;
        }
    }
}

fn horner(coeffs: &[f64], u: f64) -> CurveJet {
    let (mut p, mut dp, mut ddp) = (0.0, 0.0, 0.0);
    for &c in coeffs.iter().rev() {
        ddp = ddp * u + 2.0 * dp;
        dp = dp * u + p;
        p = p * u + c;
    }
    CurveJet {
        value: p,
        d1: dp,
        d2: ddp,
    }
}

/// Prints the curve mini-format accepted by
/// [`crate::cli::parse_curve`], with round-trip float formatting.
impl fmt::Display for CurveFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveFn::Constant(c) => write!(f, "const({c:?})"),
            CurveFn::Affine { slope, intercept } => write!(f, "affine({slope:?},{intercept:?})"),
            CurveFn::Polynomial(coeffs) => {
                write!(f, "poly(")?;
                for (i, c) in coeffs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c:?}")?;
                }
                write!(f, ")")
            }
            CurveFn::Log { lambda, mu } => write!(f, "log({lambda:?},{mu:?})"),
            CurveFn::NegLog { lambda, mu } => write!(f, "neglog({lambda:?},{mu:?})"),
            CurveFn::Scherk(st) => {
                write!(f, "scherk({:?},{:?}", st.a(), st.c())?;
                if st.offset() != 0.0 || st.branch() == Branch::Decreasing {
                    write!(f, ",{:?}", st.offset())?;
                }
                if st.branch() == Branch::Decreasing {
                    write!(f, ",-1")?;
                }
                write!(f, ")")
            }
        }
    }
}
