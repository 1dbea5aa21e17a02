//! The command-line layer: text formats, grids, reports, mesh and CSV
//! export, and the selftest suite. The `sol3` binary is a thin wrapper.

mod export;
mod grid;
mod report;
mod selftest;
mod text;

pub use export::{fmt_num, sample_surface, SampleFormat, SampleNode, Sampled};
pub use grid::{GridNodes, GridSpec, DEFAULT_MARGIN};
pub use report::{curvature_at, verify, CurvatureSummary, VerifyReport, DEFAULT_TOLERANCE};
pub use selftest::{format_table, run_selftest, CheckOutcome};
pub use text::{parse_curve, parse_range, parse_solution};

use crate::classified::{CatalogSurface, ScherkIntegral, SolutionSpec};
use crate::error::Result;
use crate::families::{build_surface, CurveFn, TranslationType};

/// What a command operates on: a catalog entry or a custom translation
/// surface.
#[derive(Debug, Clone, PartialEq)]
pub enum SurfaceTarget {
    Solution(SolutionSpec),
    Custom {
        kind: TranslationType,
        f: CurveFn,
        g: CurveFn,
    },
}

impl SurfaceTarget {
    /// Materializes the surface; `integral` applies to every Scherk-type
    /// curve involved.
    pub fn build(&self, integral: ScherkIntegral) -> Result<CatalogSurface> {
        match self {
            SurfaceTarget::Solution(spec) => spec.materialize_with(integral),
            SurfaceTarget::Custom { kind, f, g } => {
                let retol = |c: &CurveFn| match c {
                    CurveFn::Scherk(st) => CurveFn::Scherk(st.with_integral(integral)),
                    other => other.clone(),
                };
                Ok(CatalogSurface::Translation(build_surface(*kind, retol(f), retol(g))))
            }
        }
    }
}
