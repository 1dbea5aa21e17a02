use super::{DerivativeSource, Immersion, ParamDomain, SurfaceJet};
use crate::ambient::{apply_isometry, isometry_differential, IsometryElement, Point};
use crate::error::Result;

/// `phi o X` for an ambient isometry `phi`. Each family acts linearly, so the
/// derivatives are pushed forward by a constant matrix.
#[derive(Debug, Clone)]
pub struct Isometric<I> {
    pub inner: I,
    pub iso: IsometryElement,
}

impl<I> Isometric<I> {
    pub fn new(inner: I, iso: IsometryElement) -> Self {
        Self { inner, iso }
    }
}

impl<I: Immersion> Immersion for Isometric<I> {
    fn position(&self, s: f64, t: f64) -> Result<Point> {
        apply_isometry(self.iso, self.inner.position(s, t)?)
    }

    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet> {
        let j = self.inner.jet(s, t)?;
        let d = |v| isometry_differential(self.iso, v);
        Ok(SurfaceJet {
            point: apply_isometry(self.iso, j.point)?,
            xs: d(j.xs),
            xt: d(j.xt),
            xss: d(j.xss),
            xst: d(j.xst),
            xtt: d(j.xtt),
        })
    }

    fn derivative_source(&self) -> DerivativeSource {
        self.inner.derivative_source()
    }

    fn domain(&self) -> ParamDomain {
        self.inner.domain()
    }
}

/// The same surface with the parameters exchanged, `(s, t) -> X(t, s)`.
/// Reverses the orientation of `e1 x e2`.
#[derive(Debug, Clone)]
pub struct Swapped<I>(pub I);

impl<I: Immersion> Immersion for Swapped<I> {
    fn position(&self, s: f64, t: f64) -> Result<Point> {
        self.0.position(t, s)
    }

    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet> {
        let j = self.0.jet(t, s)?;
        Ok(SurfaceJet {
            point: j.point,
            xs: j.xt,
            xt: j.xs,
            xss: j.xtt,
            xst: j.xst,
            xtt: j.xss,
        })
    }

    fn derivative_source(&self) -> DerivativeSource {
        self.0.derivative_source()
    }

    fn domain(&self) -> ParamDomain {
        let d = self.0.domain();
        ParamDomain {
            s: d.t,
            t: d.s,
            s_singular: d.t_singular,
            t_singular: d.s_singular,
        }
    }
}
