//! Two independent quadrature rules: adaptive Simpson with Richardson
//! correction, and composite Gauss-Legendre panels.

use crate::error::{Result, Sol3Error};

const MAX_DEPTH: u32 = 48;
const MAX_EVALS: usize = 20_000_000;

struct Budget {
    evals: usize,
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    budget: &mut Budget,
) -> Option<f64> {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    budget.evals += 2;
    let h = b - a;
    let left = h * (fa + 4.0 * flm + fm) / 12.0;
    let right = h * (fm + 4.0 * frm + fb) / 12.0;
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Some(left + right + delta / 15.0);
    }
    if depth == 0 || budget.evals > MAX_EVALS || m <= a || m >= b {
        return None;
    }
    let l = simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, budget)?;
    let r = simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, budget)?;
    Some(l + r)
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance
/// `tol`. The interval is first cut into unit-length panels; each panel
/// receives half its length share of the tolerance plus half its share of
/// the coarse Simpson magnitude, so fast-growing integrands keep every
/// share above round-off.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if b < a {
        return adaptive_simpson(f, b, a, tol).map(|v| -v);
    }
    let len = b - a;
    let panels = len.ceil().max(1.0) as usize;
    let width = len / panels as f64;
    let coarse: Vec<_> = (0..panels)
        .map(|k| {
            let lo = a + width * k as f64;
            let hi = if k + 1 == panels { b } else { lo + width };
            let (fa, fm, fb) = (f(lo), f(0.5 * (lo + hi)), f(hi));
            (lo, hi, fa, fm, fb, (hi - lo) * (fa + 4.0 * fm + fb) / 6.0)
        })
        .collect();
    let scale: f64 = coarse.iter().map(|c| c.5.abs()).sum();
    let mut budget = Budget { evals: 0 };
    let mut total = 0.0;
    for &(lo, hi, fa, fm, fb, whole) in &coarse {
        let share = if scale > 0.0 && scale.is_finite() {
            0.5 * tol * (whole.abs() / scale + (hi - lo) / len)
        } else {
            tol * (hi - lo) / len
        };
        total += simpson_step(&f, lo, hi, fa, fm, fb, whole, share, MAX_DEPTH, &mut budget)
            .ok_or(Sol3Error::Quadrature { a, b, tol })?;
    }
    if !total.is_finite() {
        return Err(Sol3Error::Quadrature { a, b, tol });
    }
    Ok(total)
}

/// Nodes and weights of the n-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            // Newton on P_n from the Chebyshev-like initial guess.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d.is_finite() {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Composite rule over `[a, b]` with `panels` equal panels.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64, panels: usize) -> f64 {
        let panels = panels.max(1);
        let width = (b - a) / panels as f64;
        let mut total = 0.0;
        for k in 0..panels {
            let lo = a + width * k as f64;
            let (mid, half) = (lo + 0.5 * width, 0.5 * width);
            let panel: f64 = self
                .nodes
                .iter()
                .zip(&self.weights)
                .map(|(x, w)| w * f(mid + half * x))
                .sum();
            total += half * panel;
        }
        total
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
