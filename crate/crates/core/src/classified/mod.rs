//! Classified minimal translation surfaces: the Scherk-type function, the
//! catalog of explicit solutions, and the type-III reduction residual.

mod catalog;
mod reduction;
pub mod quadrature;
mod scherk;

pub use catalog::{AffinePatch, CatalogSurface, LogGraph, SolutionKind, SolutionSpec};
pub use reduction::{type3_reduction_residual, Type3ReductionParams};
pub use scherk::{
    scherk_g, scherk_i, scherk_i_inv, zeta_ode_residuals, Branch, ScherkIntegral, ScherkState,
    DEFAULT_QUAD_TOL, MAX_ARGUMENT, QUAD_TOL_ENV,
};
