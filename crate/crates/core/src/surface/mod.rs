//! Parametric surfaces `(s, t) -> X(s, t)` immersed in Sol3 and their
//! extrinsic geometry.

mod extended;
mod kernel;
mod oracle;
mod transform;

pub use kernel::{
    first_form, mean_curvature, minimality_residual, normal_scaled, second_form_scaled,
    tangent_frame, CurvatureReport, FirstForm, SecondFormScaled, REGULARITY_THRESHOLD,
};
pub use oracle::fd_mean_curvature;
pub use transform::{Isometric, Swapped};

use serde::Serialize;

use crate::ambient::{CoordVector, Point};
use crate::error::{Result, Sol3Error};
use crate::fd;

/// Position and first/second parameter derivatives at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceJet {
    pub point: Point,
    pub xs: CoordVector,
    pub xt: CoordVector,
    pub xss: CoordVector,
    pub xst: CoordVector,
    pub xtt: CoordVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DerivativeSource {
    Analytic,
    FiniteDifference,
}

/// An open interval, possibly unbounded on either side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const REAL_LINE: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn contains(&self, u: f64) -> bool {
        u > self.lo && u < self.hi
    }

    /// Whether `[u - r, u + r]` lies inside the open interval.
    pub fn contains_ball(&self, u: f64, r: f64) -> bool {
        u - r > self.lo && u + r < self.hi
    }
}

/// Parameter domain: a product of open intervals minus finitely many
/// singular lines `s = s0` and `t = t0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamDomain {
    pub s: Interval,
    pub t: Interval,
    pub s_singular: Vec<f64>,
    pub t_singular: Vec<f64>,
}

impl Default for ParamDomain {
    fn default() -> Self {
        Self {
            s: Interval::REAL_LINE,
            t: Interval::REAL_LINE,
            s_singular: Vec::new(),
            t_singular: Vec::new(),
        }
    }
}

impl ParamDomain {
    pub fn contains(&self, s: f64, t: f64) -> bool {
        self.check_stencil(s, t, 0.0, 0.0).is_ok()
    }

    /// Checks that the box `[s - rs, s + rs] x [t - rt, t + rt]` avoids
    /// every singular line and stays inside the intervals.
    pub fn check_stencil(&self, s: f64, t: f64, rs: f64, rt: f64) -> Result<()> {
        let fail = |reason: String| Err(Sol3Error::OutsideDomain { s, t, reason });
        if !s.is_finite() || !t.is_finite() {
            return fail("non-finite parameter".into());
        }
        if !self.s.contains_ball(s, rs) {
            return fail(format!("s not inside ({}, {})", self.s.lo, self.s.hi));
        }
        if !self.t.contains_ball(t, rt) {
            return fail(format!("t not inside ({}, {})", self.t.lo, self.t.hi));
        }
        if let Some(s0) = self.s_singular.iter().find(|&&s0| (s - s0).abs() <= rs) {
            return fail(format!("touches singular line s = {s0}"));
        }
        if let Some(t0) = self.t_singular.iter().find(|&&t0| (t - t0).abs() <= rt) {
            return fail(format!("touches singular line t = {t0}"));
        }
        Ok(())
    }
}

/// A parameterized surface in Sol3.
///
/// Only [`Immersion::position`] is required. Implementations that know their
/// derivatives in closed form override [`Immersion::jet`] and report
/// [`DerivativeSource::Analytic`]; the default synthesizes derivatives with
/// central differences of `position`.
pub trait Immersion: Send + Sync {
    fn position(&self, s: f64, t: f64) -> Result<Point>;

    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet> {
        fd_jet(self, s, t)
    }

    fn derivative_source(&self) -> DerivativeSource {
        DerivativeSource::FiniteDifference
    }

    fn domain(&self) -> ParamDomain {
        ParamDomain::default()
    }
}

impl<T: Immersion + ?Sized> Immersion for &T {
    fn position(&self, s: f64, t: f64) -> Result<Point> {
        (**self).position(s, t)
    }
    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet> {
        (**self).jet(s, t)
    }
    fn derivative_source(&self) -> DerivativeSource {
        (**self).derivative_source()
    }
    fn domain(&self) -> ParamDomain {
        (**self).domain()
    }
}

impl<T: Immersion + ?Sized> Immersion for Box<T> {
    fn position(&self, s: f64, t: f64) -> Result<Point> {
        (**self).position(s, t)
    }
    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet> {
        (**self).jet(s, t)
    }
    fn derivative_source(&self) -> DerivativeSource {
        (**self).derivative_source()
    }
    fn domain(&self) -> ParamDomain {
        (**self).domain()
    }
}

fn diff(a: Point, b: Point) -> CoordVector {
    CoordVector::new(a.x - b.x, a.y - b.y, a.z - b.z)
}

/// Derivatives of `imm` at `(s, t)` by central differences of its position
/// alone, each Richardson-combined over steps `h` and `2h` for fourth-order
/// accuracy. Fails if the stencil touches a singular line.
pub fn fd_jet<I: Immersion + ?Sized>(imm: &I, s: f64, t: f64) -> Result<SurfaceJet> {
    let (hs, ht) = (fd::step(s), fd::step(t));
    let (ks, kt) = (fd::step_richardson(s), fd::step_richardson(t));
    imm.domain().check_stencil(s, t, 2.0 * ks.max(hs), 2.0 * kt.max(ht))?;
    let x = |ds: f64, dt: f64| imm.position(s + ds, t + dt);
    let center = x(0.0, 0.0)?;
    let richardson = |fine: CoordVector, coarse: CoordVector| (fine * 4.0 - coarse) * (1.0 / 3.0);

    let first = |hs: f64, ht: f64| -> Result<CoordVector> {
        let h = hs.max(ht);
        Ok(diff(x(hs, ht)?, x(-hs, -ht)?) * (0.5 / h))
    };
    let xs = richardson(first(hs, 0.0)?, first(2.0 * hs, 0.0)?);
    let xt = richardson(first(0.0, ht)?, first(0.0, 2.0 * ht)?);

    let second = |ds: f64, dt: f64| -> Result<CoordVector> {
        let (plus, minus) = (x(ds, dt)?, x(-ds, -dt)?);
        let h = ds.max(dt);
        Ok(CoordVector::new(
            plus.x - 2.0 * center.x + minus.x,
            plus.y - 2.0 * center.y + minus.y,
            plus.z - 2.0 * center.z + minus.z,
        ) * (1.0 / (h * h)))
    };
    let xss = richardson(second(ks, 0.0)?, second(2.0 * ks, 0.0)?);
    let xtt = richardson(second(0.0, kt)?, second(0.0, 2.0 * kt)?);

    let mixed = |ks: f64, kt: f64| -> Result<CoordVector> {
        let (pp, pm, mp, mm) = (x(ks, kt)?, x(ks, -kt)?, x(-ks, kt)?, x(-ks, -kt)?);
        Ok((diff(pp, pm) - diff(mp, mm)) * (0.25 / (ks * kt)))
    };
    let xst = richardson(mixed(ks, kt)?, mixed(2.0 * ks, 2.0 * kt)?);

    Ok(SurfaceJet {
        point: center,
        xs,
        xt,
        xss,
        xst,
        xtt,
    })
}

/// Wraps an immersion and forces finite-difference derivatives, hiding any
/// analytic jet it provides.
#[derive(Debug, Clone)]
pub struct FdOnly<I>(pub I);

impl<I: Immersion> Immersion for FdOnly<I> {
    fn position(&self, s: f64, t: f64) -> Result<Point> {
        self.0.position(s, t)
    }
    fn domain(&self) -> ParamDomain {
        self.0.domain()
    }
}

/// A closure-backed immersion without analytic derivatives; handy for ad-hoc
/// surfaces and tests.
pub struct PositionFn<F> {
    pub f: F,
    pub domain: ParamDomain,
}

impl<F> PositionFn<F>
where
    F: Fn(f64, f64) -> Point + Send + Sync,
{
    pub fn new(f: F) -> Self {
        Self {
            f,
            domain: ParamDomain::default(),
        }
    }
}

impl<F> Immersion for PositionFn<F>
where
    F: Fn(f64, f64) -> Point + Send + Sync,
{
    fn position(&self, s: f64, t: f64) -> Result<Point> {
        self.domain.check_stencil(s, t, 0.0, 0.0)?;
        (self.f)(s, t).validated()
    }
    fn domain(&self) -> ParamDomain {
        self.domain.clone()
    }
}
