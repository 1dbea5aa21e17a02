use thiserror::Error;

/// Errors produced anywhere in the kernel, the catalog or the CLI layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Sol3Error {
    /// A coordinate left the representable range (|z| > 300 or non-finite).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("index out of range: ({i}, {j}) (valid indices are 1..=3)")]
    IndexOutOfRange { i: usize, j: usize },

    /// EG - F^2 fell below the scale-aware regularity threshold.
    #[error("singular point at (s, t) = ({s}, {t}): EG - F^2 = {det}")]
    Singular { s: f64, t: f64, det: f64 },

    /// A finite-difference stencil or an evaluation point touches an excluded
    /// parameter line or leaves the parameter domain.
    #[error("parameter ({s}, {t}) outside the evaluation domain: {reason}")]
    OutsideDomain { s: f64, t: f64, reason: String },

    #[error("quadrature did not reach tolerance {tol:e} on [{a}, {b}]")]
    Quadrature { a: f64, b: f64, tol: f64 },

    #[error("root finding did not converge after {iterations} iterations (target {target})")]
    NoConvergence { iterations: usize, target: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Sol3Error {
    /// Exit code used by the command-line tool: quantitative failures map to
    /// 1, everything that is a usage, parse or environment problem maps to 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            Sol3Error::Singular { .. } => 1,
            _ => 2,
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Sol3Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

impl From<std::io::Error> for Sol3Error {
    fn from(err: std::io::Error) -> Self {
        Sol3Error::Io(err.to_string())
    }
}

pub type Result<T, E = Sol3Error> = std::result::Result<T, E>;
