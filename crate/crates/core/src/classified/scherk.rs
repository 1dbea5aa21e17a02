//! The Scherk-type special function `I(t) = int_0^t sqrt(cosh tau) d tau`,
//! its inverse, and the height function `g(t) = I^{-1}(c t) / 2 + m` of the
//! non-planar minimal translation surfaces of types I and II.

use serde::Serialize;

use super::quadrature::{adaptive_simpson, GaussLegendre};
use crate::error::{Result, Sol3Error};
use crate::families::CurveJet;

/// Default absolute quadrature tolerance for `I`.
pub const DEFAULT_QUAD_TOL: f64 = 1e-12;

/// Environment variable that overrides the quadrature tolerance in the CLI.
pub const QUAD_TOL_ENV: &str = "SOL3_QUAD_TOL";

/// Largest |t| accepted by `I`.
pub const MAX_ARGUMENT: f64 = 300.0;

const MAX_NEWTON: usize = 200;

fn integrand(tau: f64) -> f64 {
    tau.cosh().sqrt()
}

/// Lower bound of `I` on `[0, t]`, used to scale the tolerance once values
/// are large: `sqrt(cosh) >= max(1, e^{tau/2} / sqrt 2)`.
fn magnitude_floor(t: f64) -> f64 {
    let t = t.abs();
    t.max(std::f64::consts::SQRT_2 * ((0.5 * t).exp() - 1.0))
}

/// Evaluator for `I` and `I^{-1}` at a fixed quadrature tolerance.
///
/// The tolerance is absolute while `|I| <= 1` and relative beyond that;
/// an absolute 1e-12 is not representable once `I` exceeds ~1e4.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScherkIntegral {
    tol: f64,
}

impl Default for ScherkIntegral {
    fn default() -> Self {
        Self {
            tol: DEFAULT_QUAD_TOL,
        }
    }
}

impl ScherkIntegral {
    pub fn new(tol: f64) -> Result<Self> {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Sol3Error::InvalidParameter(format!(
                "quadrature tolerance must be positive and finite, got {tol}"
            )));
        }
        Ok(Self { tol })
    }

    /// Reads [`QUAD_TOL_ENV`]; falls back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(QUAD_TOL_ENV) {
            Ok(text) => {
                let tol: f64 = text.trim().parse().map_err(|_| {
                    Sol3Error::InvalidParameter(format!("{QUAD_TOL_ENV}={text:?} is not a number"))
                })?;
                Self::new(tol)
            }
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    fn effective_tol(&self, a: f64, b: f64) -> f64 {
        self.tol * magnitude_floor(a.abs().max(b.abs())).max(1.0)
    }

    fn check_argument(t: f64) -> Result<()> {
        if !t.is_finite() || t.abs() > MAX_ARGUMENT {
            return Err(Sol3Error::Domain(format!(
                "Scherk integral argument {t} outside [-{MAX_ARGUMENT}, {MAX_ARGUMENT}]"
            )));
        }
        Ok(())
    }

    /// `I(t)` by adaptive Simpson. Odd by construction.
    pub fn eval(&self, t: f64) -> Result<f64> {
        Self::check_argument(t)?;
        if t == 0.0 {
            return Ok(0.0);
        }
        let a = t.abs();
        let v = adaptive_simpson(integrand, 0.0, a, self.effective_tol(0.0, a))?;
        Ok(v.copysign(t))
    }

    /// `int_a^b sqrt(cosh)`.
    pub fn eval_between(&self, a: f64, b: f64) -> Result<f64> {
        Self::check_argument(a)?;
        Self::check_argument(b)?;
        adaptive_simpson(integrand, a, b, self.effective_tol(a, b))
    }

    /// `I(t)` by 32-point Gauss-Legendre on panels of width at most 1/2.
    /// Independent of [`ScherkIntegral::eval`]; used to cross-check it.
    pub fn eval_gauss_legendre(&self, t: f64) -> Result<f64> {
        Self::check_argument(t)?;
        let panels = (2.0 * t.abs()).ceil().max(1.0) as usize;
        Ok(GaussLegendre::new(32).integrate(integrand, 0.0, t, panels))
    }

    /// `I'(t) = sqrt(cosh t)`.
    pub fn derivative(&self, t: f64) -> f64 {
        integrand(t)
    }

    /// Solves `I(v) = u`.
    ///
    /// For `u > 0` the root lies in `[2 ln(1 + u/2), u]`: the lower end
    /// follows from `sqrt(cosh) <= e^{tau/2}`, the upper from `sqrt(cosh) >= 1`.
    /// Newton steps with `I' = sqrt(cosh)` are kept inside that bracket, and
    /// each new `I(v)` is obtained by integrating from the previous iterate.
    /// The result gets one more Newton step against the Gauss-Legendre value
    /// of `I`, whose fixed panels make it smooth in `v`; adaptive subdivision
    /// leaves steps of the size of the tolerance that finite differences of
    /// `I^{-1}` would amplify.
    pub fn inverse(&self, u: f64) -> Result<f64> {
        if !u.is_finite() {
            return Err(Sol3Error::Domain(format!("cannot invert I at {u}")));
        }
        if u == 0.0 {
            return Ok(0.0);
        }
        let target = u.abs();
        let mut lo = 2.0 * (0.5 * target).ln_1p();
        let mut hi = target.min(MAX_ARGUMENT);
        if hi < target && self.eval(hi)? < target {
            return Err(Sol3Error::Domain(format!("I^-1({u}) exceeds {MAX_ARGUMENT}")));
        }
        let accept = 1e-12 * target.max(1.0);

        let mut v = lo;
        let mut iv = self.eval(v)?;
        for _ in 0..MAX_NEWTON {
            let r = iv - target;
            if r.abs() <= accept {
                return self.polish(v, target).map(|v| v.copysign(u));
            }
            if r < 0.0 {
                lo = v;
            } else {
                hi = v;
            }
            let mut next = v - r / integrand(v);
            if !(next > lo && next < hi) {
                next = 0.5 * (lo + hi);
            }
            if hi - lo <= 4.0 * f64::EPSILON * hi {
                return self.polish(next, target).map(|v| v.copysign(u));
            }
            iv += self.eval_between(v, next)?;
            v = next;
        }
        Err(Sol3Error::NoConvergence {
            iterations: MAX_NEWTON,
            target: u,
        })
    }
}

impl ScherkIntegral {
    fn polish(&self, v: f64, target: f64) -> Result<f64> {
        Ok(v - (self.eval_gauss_legendre(v)? - target) / integrand(v))
    }
}

/// `I(t)` at the default tolerance.
pub fn scherk_i(t: f64) -> Result<f64> {
    ScherkIntegral::default().eval(t)
}

/// `I^{-1}(u)` at the default tolerance.
pub fn scherk_i_inv(u: f64) -> Result<f64> {
    ScherkIntegral::default().inverse(u)
}

/// Sign of `zeta'`. The decreasing branch is the increasing one with
/// `t -> -t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
pub enum Branch {
    #[default]
    Increasing,
    Decreasing,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Increasing => 1.0,
            Branch::Decreasing => -1.0,
        }
    }
}

/// Parameters of `g(t) = I^{-1}(c (t + offset)) / 2 + m` with `m = ln|a| / 2`,
/// i.e. `e^{4m} = a^2`. `m` is derived, never set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScherkState {
    a: f64,
    c: f64,
    m: f64,
    branch: Branch,
    offset: f64,
    integral: ScherkIntegral,
}

impl ScherkState {
    pub fn new(a: f64, c: f64) -> Result<Self> {
        if !a.is_finite() || a == 0.0 {
            return Err(Sol3Error::InvalidParameter(format!("Scherk slope a must be nonzero, got {a}")));
        }
        if !c.is_finite() || c <= 0.0 {
            return Err(Sol3Error::InvalidParameter(format!("Scherk constant c must be > 0, got {c}")));
        }
        Ok(Self {
            a,
            c,
            m: 0.5 * a.abs().ln(),
            branch: Branch::Increasing,
            offset: 0.0,
            integral: ScherkIntegral::default(),
        })
    }

    pub fn with_branch(mut self, branch: Branch) -> Self {
        self.branch = branch;
        self
    }

    /// Shifts the parameter, `t -> t + offset`; this is the integration
    /// constant of the second quadrature, divided by `c`.
    pub fn with_offset(mut self, offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Sol3Error::InvalidParameter(format!("offset must be finite, got {offset}")));
        }
        self.offset = offset;
        Ok(self)
    }

    pub fn with_integral(mut self, integral: ScherkIntegral) -> Self {
        self.integral = integral;
        self
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn m(&self) -> f64 {
        self.m
    }
    pub fn branch(&self) -> Branch {
        self.branch
    }
    pub fn offset(&self) -> f64 {
        self.offset
    }
    pub fn integral(&self) -> ScherkIntegral {
        self.integral
    }

    /// `(zeta, zeta', zeta'')` with `zeta = 2 (g - m)`.
    pub fn zeta(&self, t: f64) -> Result<(f64, f64, f64)> {
        let sigma = self.branch.sign();
        let zeta = self.integral.inverse(sigma * self.c * (t + self.offset))?;
        let (ch, sh) = (zeta.cosh(), zeta.sinh());
        let dzeta = sigma * self.c / ch.sqrt();
        let ddzeta = -0.5 * self.c * self.c * sh / (ch * ch);
        Ok((zeta, dzeta, ddzeta))
    }
}

/// `(g, g', g'')` of the Scherk-type height function.
pub fn scherk_g(t: f64, st: &ScherkState) -> Result<CurveJet> {
    let (zeta, dzeta, ddzeta) = st.zeta(t)?;
    Ok(CurveJet {
        value: 0.5 * zeta + st.m,
        d1: 0.5 * dzeta,
        d2: 0.5 * ddzeta,
    })
}

/// Residuals of `2 zeta'' cosh zeta + zeta'^2 sinh zeta = 0` and of the first
/// integral `zeta'^2 = c^2 / cosh zeta`.
pub fn zeta_ode_residuals(zeta: f64, dzeta: f64, ddzeta: f64, c: f64) -> (f64, f64) {
    (
        2.0 * ddzeta * zeta.cosh() + dzeta * dzeta * zeta.sinh(),
        dzeta * dzeta - c * c / zeta.cosh(),
    )
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    // 25-digit reference values from an arbitrary-precision quadrature.
    const I_HALF: f64 = 0.510_355_066_410_777_004_323_69;
    const I_ONE: f64 = 1.081_643_120_692_747_434_221_298;
    const I_TWO: f64 = 2.634_378_764_280_016_589_784_051;
    const I_FIVE: f64 = 16.030_377_585_417_463_780_085_86;
    const I_INV_THREE: f64 = 2.180_390_928_629_717_450_479_475;

    #[test]
    fn reference_values() {
        for (t, want) in [(0.5, I_HALF), (1.0, I_ONE), (2.0, I_TWO), (5.0, I_FIVE)] {
            assert!((scherk_i(t).unwrap() - want).abs() < 1e-11, "I({t})");
        }
        assert!((scherk_i_inv(3.0).unwrap() - I_INV_THREE).abs() < 1e-11);
    }

    #[test]
    fn zero_oddness_and_round_trip() {
        assert_eq!(scherk_i(0.0).unwrap(), 0.0);
        assert_eq!(scherk_i_inv(0.0).unwrap(), 0.0);
        assert_eq!(scherk_i(-1.7).unwrap(), -scherk_i(1.7).unwrap());
        assert_eq!(scherk_i_inv(-4.2).unwrap(), -scherk_i_inv(4.2).unwrap());
        let back = scherk_i_inv(scherk_i(2.0).unwrap()).unwrap();
        assert!((back - 2.0).abs() < 1e-10);
    }

    #[test]
    fn large_arguments() {
        let v = scherk_i(250.0).unwrap();
        let gl = ScherkIntegral::default().eval_gauss_legendre(250.0).unwrap();
        assert!(((v - gl) / gl).abs() < 1e-10);
        let back = scherk_i_inv(v).unwrap();
        assert!((back - 250.0).abs() < 1e-9);
        assert!(scherk_i(300.5).is_err());
        assert!(scherk_i_inv(f64::INFINITY).is_err());
        assert!(scherk_i_inv(1e300).is_err());
    }

    #[test]
    fn tolerance_validation() {
        assert!(ScherkIntegral::new(0.0).is_err());
        assert!(ScherkIntegral::new(f64::NAN).is_err());
        assert!(ScherkIntegral::new(1e-8).is_ok());
    }

    #[test]
    fn state_constraints() {
        assert!(ScherkState::new(0.0, 1.0).is_err());
        assert!(ScherkState::new(1.0, 0.0).is_err());
        assert!(ScherkState::new(1.0, -2.0).is_err());
        let st = ScherkState::new(-2.0, 1.0).unwrap();
        assert!(((4.0 * st.m()).exp() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn g_at_origin() {
        let st = ScherkState::new(3.0, 0.7).unwrap();
        let j = scherk_g(0.0, &st).unwrap();
        assert_eq!(j.value, st.m());
        assert!((j.d1 - 0.35).abs() < 1e-15);
        assert_eq!(j.d2, 0.0);
    }

    #[test]
    fn g_derivatives_match_finite_differences() {
        let st = ScherkState::new(1.5, 1.3).unwrap();
        for &t in &[-2.5, -0.3, 0.4, 1.9] {
            let j = scherk_g(t, &st).unwrap();
            let fd1 = crate::fd::central(|u| scherk_g(u, &st).unwrap().value, t);
            assert!((fd1 - j.d1).abs() < 1e-7, "g' at {t}: {fd1} vs {}", j.d1);
            let fd2 = crate::fd::central(|u| scherk_g(u, &st).unwrap().d1, t);
            assert!((fd2 - j.d2).abs() < 1e-7, "g'' at {t}");
        }
    }

    #[test]
    fn decreasing_branch_mirrors_parameter() {
        let up = ScherkState::new(2.0, 1.0).unwrap();
        let down = up.with_branch(Branch::Decreasing);
        for &t in &[-1.0, 0.5, 2.0] {
            let a = scherk_g(t, &up).unwrap();
            let b = scherk_g(-t, &down).unwrap();
            assert!((a.value - b.value).abs() < 1e-14);
            assert!((a.d1 + b.d1).abs() < 1e-14);
            assert!((a.d2 - b.d2).abs() < 1e-14);
        }
    }

    #[test]
    fn zeta_residual_examples() {
        assert_eq!(zeta_ode_residuals(0.0, 0.0, 0.0, 0.0), (0.0, 0.0));
        assert_eq!(zeta_ode_residuals(0.0, 1.0, 1.0, 1.0), (2.0, 0.0));
        let st = ScherkState::new(0.8, 2.0).unwrap().with_offset(0.3).unwrap();
        for &t in &[-3.0, -1.0, 0.0, 1.2, 3.0] {
            let (z, dz, ddz) = st.zeta(t).unwrap();
            let (a, b) = zeta_ode_residuals(z, dz, ddz, st.c());
            assert!(a.abs() < 1e-9 && b.abs() < 1e-9);
        }
    }
}
