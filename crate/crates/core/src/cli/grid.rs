use serde::Serialize;

use crate::error::{Result, Sol3Error};
use crate::surface::ParamDomain;

/// Distance kept from singular lines and domain edges by default.
pub const DEFAULT_MARGIN: f64 = 1e-3;

/// A rectangular parameter grid with exclusions around singular lines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub s_range: (f64, f64),
    pub t_range: (f64, f64),
    pub ns: usize,
    pub nt: usize,
    pub margin: f64,
}

impl Default for GridSpec {
    /// 50 x 50 nodes over `[-2, 2]^2`.
    fn default() -> Self {
        Self {
            s_range: (-2.0, 2.0),
            t_range: (-2.0, 2.0),
            ns: 50,
            nt: 50,
            margin: DEFAULT_MARGIN,
        }
    }
}

/// Grid nodes of one surface: `keep[i * nt + j]` says whether node
/// `(s[i], t[j])` lies in the domain with the margin.
#[derive(Debug, Clone, PartialEq)]
pub struct GridNodes {
    pub s: Vec<f64>,
    pub t: Vec<f64>,
    pub keep: Vec<bool>,
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n)
        .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
        .collect()
}

impl GridSpec {
    pub fn with_ranges(s_range: (f64, f64), t_range: (f64, f64)) -> Self {
        Self {
            s_range,
            t_range,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.ns < 2 || self.nt < 2 {
            return Err(Sol3Error::InvalidParameter(format!(
                "grid counts must be at least 2, got {} x {}",
                self.ns, self.nt
            )));
        }
        for (name, (lo, hi)) in [("s", self.s_range), ("t", self.t_range)] {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Sol3Error::InvalidParameter(format!("empty {name}-range [{lo}, {hi}]")));
            }
        }
        if !(self.margin >= 0.0 && self.margin.is_finite()) {
            return Err(Sol3Error::InvalidParameter(format!("bad exclusion margin {}", self.margin)));
        }
        Ok(())
    }

    /// Lays the grid over `domain`. Fails if no node survives the
    /// exclusions.
    pub fn nodes(&self, domain: &ParamDomain) -> Result<GridNodes> {
        self.validate()?;
        let s = linspace(self.s_range.0, self.s_range.1, self.ns);
        let t = linspace(self.t_range.0, self.t_range.1, self.nt);
        let keep: Vec<bool> = s
            .iter()
            .flat_map(|&si| t.iter().map(move |&tj| (si, tj)))
            .map(|(si, tj)| domain.check_stencil(si, tj, self.margin, self.margin).is_ok())
            .collect();
        if !keep.contains(&true) {
            return Err(Sol3Error::InvalidParameter(
                "no grid node left after excluding singular lines".into(),
            ));
        }
        Ok(GridNodes { s, t, keep })
    }
}

impl GridNodes {
    /// Kept nodes in row-major order (outer `s`, inner `t`).
    pub fn kept(&self) -> Vec<(f64, f64)> {
        let nt = self.t.len();
        self.keep
            .iter()
            .enumerate()
            .filter(|(_, &k)| k)
            .map(|(idx, _)| (self.s[idx / nt], self.t[idx % nt]))
            .collect()
    }

    pub fn is_kept(&self, i: usize, j: usize) -> bool {
        self.keep[i * self.t.len() + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_is_complete_without_singularities() {
        let g = GridSpec::default().nodes(&ParamDomain::default()).unwrap();
        assert_eq!(g.kept().len(), 2500);
        assert_eq!(g.s[0], -2.0);
        assert_eq!(g.s[49], 2.0);
    }

    #[test]
    fn singular_lines_are_excluded() {
        let domain = ParamDomain {
            t_singular: vec![0.0],
            ..ParamDomain::default()
        };
        let spec = GridSpec {
            ns: 3,
            nt: 5,
            ..GridSpec::default()
        };
        let g = spec.nodes(&domain).unwrap();
        assert_eq!(g.kept().len(), 12);
        assert!(!g.is_kept(1, 2));
        assert!(g.kept().iter().all(|&(_, t)| t != 0.0));
    }

    #[test]
    fn invalid_grids() {
        let small = GridSpec {
            ns: 1,
            ..GridSpec::default()
        };
        assert!(small.validate().is_err());
        assert!(GridSpec::with_ranges((1.0, 1.0), (0.0, 1.0)).validate().is_err());
        let outside = ParamDomain {
            t: crate::surface::Interval::new(5.0, 6.0),
            ..ParamDomain::default()
        };
        assert!(GridSpec::default().nodes(&outside).is_err());
    }
}
