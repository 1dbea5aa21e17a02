use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::grid::GridSpec;
use crate::ambient::Point;
use crate::error::Result;
use crate::surface::{fd_mean_curvature, mean_curvature, CurvatureReport, Immersion};

/// Default bound on `|H|` for a pass.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// Outcome of evaluating `|H|` over a grid. `pass` iff `max_abs_h < tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub max_abs_h: f64,
    pub mean_abs_h: f64,
    pub worst_point: (f64, f64),
    /// Largest `|G l - 2F m + E n|`; unlike `H` it depends on the
    /// parameterization.
    pub max_abs_residual: f64,
    pub worst_residual_point: (f64, f64),
    pub n_evaluated: usize,
    pub tolerance: f64,
    pub pass: bool,
}

/// Mean curvature over every admissible node of `grid`. Any singular or
/// out-of-domain node aborts the run with that error.
pub fn verify<I: Immersion + ?Sized>(imm: &I, grid: &GridSpec, tolerance: f64) -> Result<VerifyReport> {
    let nodes = grid.nodes(&imm.domain())?.kept();
    let values: Vec<Result<(f64, f64)>> = nodes
        .par_iter()
        .map(|&(s, t)| mean_curvature(imm, s, t).map(|r| (r.h.abs(), r.residual.abs())))
        .collect();
    let (mut max_abs_h, mut max_abs_residual) = (0.0f64, 0.0f64);
    let mut sum = 0.0;
    let (mut worst_point, mut worst_residual_point) = (nodes[0], nodes[0]);
    for (node, value) in nodes.iter().zip(values) {
        let (h, residual) = value?;
        sum += h;
        // NaN propagates as the worst value
        if h > max_abs_h || h.is_nan() {
            max_abs_h = h;
            worst_point = *node;
        }
        if residual > max_abs_residual {
            max_abs_residual = residual;
            worst_residual_point = *node;
        }
    }
    Ok(VerifyReport {
        max_abs_h,
        mean_abs_h: sum / nodes.len() as f64,
        worst_point,
        max_abs_residual,
        worst_residual_point,
        n_evaluated: nodes.len(),
        tolerance,
        pass: max_abs_h < tolerance,
    })
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "max_abs_H    {:e}", self.max_abs_h)?;
        writeln!(f, "mean_abs_H   {:e}", self.mean_abs_h)?;
        writeln!(f, "worst_point  s={} t={}", self.worst_point.0, self.worst_point.1)?;
        writeln!(f, "max_residual {:e}", self.max_abs_residual)?;
        writeln!(
            f,
            "worst_resid  s={} t={}",
            self.worst_residual_point.0, self.worst_residual_point.1
        )?;
        writeln!(f, "n_evaluated  {}", self.n_evaluated)?;
        writeln!(f, "tolerance    {:e}", self.tolerance)?;
        write!(f, "result       {}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// Kernel curvature at one point next to the finite-difference estimate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvatureSummary {
    pub s: f64,
    pub t: f64,
    pub point: Point,
    pub report: CurvatureReport,
    /// `None` when the difference stencil does not fit in the domain.
    pub fd_h: Option<f64>,
    pub difference: Option<f64>,
}

pub fn curvature_at<I: Immersion + ?Sized>(imm: &I, s: f64, t: f64) -> Result<CurvatureSummary> {
    let report = mean_curvature(imm, s, t)?;
    let point = imm.position(s, t)?;
    let fd_h = fd_mean_curvature(imm, s, t).ok();
    Ok(CurvatureSummary {
        s,
        t,
        point,
        report,
        fd_h,
        difference: fd_h.map(|h| (h - report.h).abs()),
    })
}

impl fmt::Display for CurvatureSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.report;
        writeln!(f, "point        s={} t={}", self.s, self.t)?;
        writeln!(f, "position     ({}, {}, {})", self.point.x, self.point.y, self.point.z)?;
        writeln!(f, "H            {:e}", r.h)?;
        writeln!(f, "residual     {:e}", r.residual)?;
        writeln!(f, "|N|          {:e}", r.norm_n)?;
        writeln!(f, "EG-F^2       {:e}", r.det1)?;
        match (self.fd_h, self.difference) {
            (Some(h), Some(d)) => {
                writeln!(f, "H (fd)       {h:e}")?;
                write!(f, "|H - H (fd)| {d:e}")
            }
            _ => write!(f, "H (fd)       unavailable (stencil leaves the domain)"),
        }
    }
}
