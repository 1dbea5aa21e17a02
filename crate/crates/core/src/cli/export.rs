use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;

use super::grid::{GridNodes, GridSpec};
use crate::ambient::Point;
use crate::error::{Result, Sol3Error};
use crate::surface::{mean_curvature, Immersion, ParamDomain};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleFormat {
    Obj,
    Csv,
}

impl FromStr for SampleFormat {
    type Err = Sol3Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "obj" => Ok(Self::Obj),
            "csv" => Ok(Self::Csv),
            _ => Err(Sol3Error::parse(0, format!("unknown format {s:?} (expected obj or csv)"))),
        }
    }
}

/// Shortest decimal text that reads back to the same `f64`; `.` as the
/// decimal point regardless of locale.
pub fn fmt_num(x: f64) -> String {
    format!("{x:?}")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleNode {
    pub s: f64,
    pub t: f64,
    pub point: Point,
    pub h: f64,
}

/// A surface evaluated on a grid, ready to be written out.
#[derive(Debug, Clone)]
pub struct Sampled {
    grid: GridNodes,
    domain: ParamDomain,
    /// One entry per kept node, row-major.
    pub nodes: Vec<SampleNode>,
}

pub fn sample_surface<I: Immersion + ?Sized>(imm: &I, grid: &GridSpec) -> Result<Sampled> {
    let domain = imm.domain();
    let nodes = grid.nodes(&domain)?;
    let evaluated: Result<Vec<SampleNode>> = nodes
        .kept()
        .par_iter()
        .map(|&(s, t)| {
            let h = mean_curvature(imm, s, t)?.h;
            Ok(SampleNode {
                s,
                t,
                point: imm.position(s, t)?,
                h,
            })
        })
        .collect();
    Ok(Sampled {
        grid: nodes,
        domain,
        nodes: evaluated?,
    })
}

impl Sampled {
    /// Whether the parameter cell `[s_i, s_i+1] x [t_j, t_j+1]` can be
    /// meshed: all four corners kept and no singular line crossing it.
    fn cell_ok(&self, i: usize, j: usize) -> bool {
        let g = &self.grid;
        let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
        if !corners.iter().all(|&(a, b)| g.is_kept(a, b)) {
            return false;
        }
        let crosses = |lines: &[f64], lo: f64, hi: f64| lines.iter().any(|&u| u >= lo && u <= hi);
        !crosses(&self.domain.s_singular, g.s[i], g.s[i + 1]) && !crosses(&self.domain.t_singular, g.t[j], g.t[j + 1])
    }

    /// Triangles as 1-based vertex indices, counter-clockwise with respect
    /// to the surface normal `X_s x X_t`.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let (ns, nt) = (self.grid.s.len(), self.grid.t.len());
        let mut index = vec![0usize; ns * nt];
        let mut next = 1;
        for (slot, &kept) in index.iter_mut().zip(&self.grid.keep) {
            if kept {
                *slot = next;
                next += 1;
            }
        }
        let v = |i: usize, j: usize| index[i * nt + j];
        let mut out = Vec::new();
        for i in 0..ns - 1 {
            for j in 0..nt - 1 {
                if self.cell_ok(i, j) {
                    out.push([v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
                    out.push([v(i, j), v(i + 1, j + 1), v(i, j + 1)]);
                }
            }
        }
        out
    }

    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        for n in &self.nodes {
            let p = n.point;
            let _ = writeln!(out, "v {} {} {}", fmt_num(p.x), fmt_num(p.y), fmt_num(p.z));
        }
        for [a, b, c] in self.triangles() {
            let _ = writeln!(out, "f {a} {b} {c}");
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,t,x,y,z,H\n");
        for n in &self.nodes {
            let p = n.point;
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                fmt_num(n.s),
                fmt_num(n.t),
                fmt_num(p.x),
                fmt_num(p.y),
                fmt_num(p.z),
                fmt_num(n.h)
            );
        }
        out
    }

    pub fn render(&self, format: SampleFormat) -> String {
        match format {
            SampleFormat::Obj => self.to_obj(),
            SampleFormat::Csv => self.to_csv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classified::SolutionSpec;
    use crate::ambient::frame_to_coord;
    use crate::surface::{normal_scaled, Interval};

    fn small(ns: usize, nt: usize) -> GridSpec {
        GridSpec {
            ns,
            nt,
            ..GridSpec::default()
        }
    }

    #[test]
    fn plane_two_by_two() {
        let imm = SolutionSpec::PlaneZ { z0: 0.0 }.materialize().unwrap();
        let out = sample_surface(&imm, &small(2, 2)).unwrap();
        let obj = out.to_obj();
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 4);
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 2);
        assert!(obj.starts_with("v -2.0 -2.0 0.0\nv -2.0 2.0 0.0\n"));
        assert!(obj.ends_with("f 1 3 4\nf 1 4 2\n"));
    }

    #[test]
    fn triangles_follow_the_normal() {
        let imm = SolutionSpec::Type2LogConstF {
            a: 0.3,
            lambda: 0.2,
            mu: 0.1,
        }
        .materialize()
        .unwrap();
        let out = sample_surface(&imm, &small(7, 9)).unwrap();
        for [a, b, c] in out.triangles() {
            let p = |k: usize| out.nodes[k - 1];
            let (pa, pb, pc) = (p(a), p(b), p(c));
            let u = [pb.point.x - pa.point.x, pb.point.y - pa.point.y, pb.point.z - pa.point.z];
            let w = [pc.point.x - pa.point.x, pc.point.y - pa.point.y, pc.point.z - pa.point.z];
            let face = [u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]];
            let n = normal_scaled(&imm, pa.s, pa.t).unwrap();
            let normal = frame_to_coord(pa.point, n).unwrap().to_array();
            let dot: f64 = face.iter().zip(normal).map(|(x, y)| x * y).sum();
            assert!(dot > 0.0);
        }
    }

    #[test]
    fn no_faces_across_singular_lines() {
        let imm = SolutionSpec::Type2LogConstF {
            a: 0.0,
            lambda: 0.0,
            mu: 0.0,
        }
        .materialize()
        .unwrap();
        // t = 0 is a grid node for an odd count
        let out = sample_surface(&imm, &small(3, 5)).unwrap();
        assert_eq!(out.nodes.len(), 12);
        assert!(out.triangles().len() == 2 * 2 * 2);
        let domain = ParamDomain {
            t: Interval::new(0.0, 1.0),
            ..ParamDomain::default()
        };
        assert!(GridSpec::default().nodes(&domain).is_ok());
    }

    #[test]
    fn csv_and_obj_share_vertex_text() {
        let imm = SolutionSpec::Type3LogTAnyF {
            mu: 0.2,
            f: crate::families::CurveFn::Polynomial(vec![0.1, -0.3, 0.0, 0.2]),
        }
        .materialize()
        .unwrap();
        let out = sample_surface(&imm, &small(4, 6)).unwrap();
        let csv = out.to_csv();
        let obj = out.to_obj();
        let from_csv: Vec<String> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').skip(2).take(3).collect::<Vec<_>>().join(" "))
            .collect();
        let from_obj: Vec<String> = obj
            .lines()
            .filter_map(|l| l.strip_prefix("v ").map(str::to_owned))
            .collect();
        assert_eq!(from_csv, from_obj);
        for line in csv.lines().skip(1) {
            let h: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
            assert!(h.abs() < 1e-8);
        }
    }

    #[test]
    fn number_text_round_trips() {
        for x in [0.1, -2.0, 1e-300, 6.02214076e23, std::f64::consts::PI, -0.0] {
            let text = fmt_num(x);
            assert_eq!(text.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{text}");
        }
        assert_eq!(fmt_num(0.5), "0.5");
        assert_eq!("CSV".parse::<SampleFormat>().unwrap(), SampleFormat::Csv);
        assert!("ply".parse::<SampleFormat>().is_err());
    }
}
