//! Step-size policy shared by every finite-difference oracle in the crate.

/// Relative step for first derivatives (central differences).
pub const FIRST_STEP: f64 = 1e-5;

/// Relative step for second derivatives. Central second differences lose
/// `eps / h^2` to round-off, so they use a larger step than first ones.
pub const SECOND_STEP: f64 = 1e-4;

/// Relative step for second derivatives in the fourth-order (Richardson)
/// surface oracle. Round-off scales as `eps / h^2` and truncation as `h^4`;
/// this step keeps both small for curves with a pole 0.05 away.
pub const RICHARDSON_STEP: f64 = 5e-4;

/// Step for a first central difference at `u`.
#[inline]
pub fn step(u: f64) -> f64 {
    FIRST_STEP * u.abs().max(1.0)
}

/// Step for a second central difference at `u`.
#[inline]
pub fn step2(u: f64) -> f64 {
    SECOND_STEP * u.abs().max(1.0)
}

/// Second-derivative step of the fourth-order surface oracle at `u`.
#[inline]
pub fn step_richardson(u: f64) -> f64 {
    RICHARDSON_STEP * u.abs().max(1.0)
}

/// Central first difference of a scalar function.
pub fn central<F: Fn(f64) -> f64>(f: F, u: f64) -> f64 {
    let h = step(u);
    (f(u + h) - f(u - h)) / (2.0 * h)
}

/// Central second difference of a scalar function.
pub fn central2<F: Fn(f64) -> f64>(f: F, u: f64) -> f64 {
    let h = step2(u);
    (f(u + h) - 2.0 * f(u) + f(u - h)) / (h * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_differences_on_exp() {
        for &u in &[-2.0, 0.0, 0.7, 3.0] {
            assert!((central(f64::exp, u) - u.exp()).abs() < 1e-8 * u.exp().max(1.0));
            assert!((central2(f64::exp, u) - u.exp()).abs() < 1e-6 * u.exp().max(1.0));
        }
    }

    #[test]
    fn step_scales_with_magnitude() {
        assert_eq!(step(0.5), 1e-5);
        assert!((step(-20.0) - 2e-4).abs() < 1e-18);
        assert!((step2(3.0) - 3e-4).abs() < 1e-18);
    }
}
