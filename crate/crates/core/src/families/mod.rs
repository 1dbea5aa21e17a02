//! Translation surfaces `alpha(s) * beta(t)` built from graph curves in the
//! coordinate planes, and the closed-form residuals of types I-III.

mod curve;
mod residuals;
mod translation;

pub use curve::{random_cubic, random_curve, random_parameter, CurveFn, CurveJet};
pub use residuals::{
    expected_agreement_factor, kernel_agreement_factor, residual_for, residual_type1, residual_type2,
    residual_type3, AGREEMENT_GUARD,
};
pub use translation::{build_surface, CoordPlane, TranslationSurface, TranslationType};
