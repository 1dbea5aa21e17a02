//! Text formats read from the command line: curve specs such as
//! `poly(0,-2,0,1)`, solution specs such as `type1-scherk a=2 c=1`, and
//! parameter ranges such as `-2:2`.
//!
//! Every error carries the byte offset where parsing stopped.

use crate::classified::{Branch, ScherkState, SolutionKind, SolutionSpec};
use crate::error::{Result, Sol3Error};
use crate::families::CurveFn;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, base: usize) -> Self {
        Self { src, pos: 0, base }
    }

    fn err(&self, msg: impl Into<String>) -> Sol3Error {
        Sol3Error::parse(self.base + self.pos, msg)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_' || c == '-'))
            .unwrap_or(self.rest().len());
        let word = &self.rest()[..len];
        self.pos += len;
        word
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || matches!(c, '.' | '+' | '-')))
            .unwrap_or(self.rest().len());
        let text = &self.rest()[..len];
        if text.is_empty() {
            return Err(self.err("expected a number"));
        }
        let value: f64 = text
            .parse()
            .map_err(|_| Sol3Error::parse(self.base + start, format!("invalid number {text:?}")))?;
        if !value.is_finite() {
            return Err(Sol3Error::parse(self.base + start, format!("number must be finite, got {text:?}")));
        }
        self.pos += len;
        Ok(value)
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }
}

/// Parses a curve spec: `const(c)`, `affine(a,b)` for `a u + b`,
/// `poly(c0,c1,...)` with ascending coefficients, `log(lambda,mu)`,
/// `neglog(lambda,mu)` or `scherk(a,c[,offset[,branch]])` with branch `1`
/// or `-1`.
pub fn parse_curve(text: &str) -> Result<CurveFn> {
    parse_curve_at(text, 0)
}

fn parse_curve_at(text: &str, base: usize) -> Result<CurveFn> {
    let mut cur = Cursor::new(text, base);
    let kind_pos = {
        cur.skip_ws();
        cur.pos
    };
    let kind = cur.ident();
    if kind.is_empty() {
        return Err(cur.err("expected a curve kind"));
    }
    let args_pos = cur.pos;
    cur.expect('(')?;
    let mut args = Vec::new();
    if !cur.eat(')') {
        loop {
            args.push(cur.number()?);
            if cur.eat(')') {
                break;
            }
            cur.expect(',')?;
        }
    }
    cur.finish()?;

    let arity = |lo: usize, hi: usize| -> Result<()> {
        if args.len() < lo || args.len() > hi {
            let want = if lo == hi {
                format!("{lo}")
            } else if hi == usize::MAX {
                format!("at least {lo}")
            } else {
                format!("{lo} to {hi}")
            };
            Err(Sol3Error::parse(
                base + args_pos,
                format!("{kind} takes {want} arguments, got {}", args.len()),
            ))
        } else {
            Ok(())
        }
    };
    let invalid = |e: Sol3Error| Sol3Error::parse(base + args_pos, e.to_string());

    match kind {
        "const" => {
            arity(1, 1)?;
            Ok(CurveFn::Constant(args[0]))
        }
        "affine" => {
            arity(2, 2)?;
            Ok(CurveFn::Affine {
                slope: args[0],
                intercept: args[1],
            })
        }
        "poly" => {
            arity(1, usize::MAX)?;
            Ok(CurveFn::Polynomial(args))
        }
        "log" | "neglog" => {
            arity(2, 2)?;
            let (lambda, mu) = (args[0], args[1]);
            Ok(if kind == "log" {
                CurveFn::Log { lambda, mu }
            } else {
                CurveFn::NegLog { lambda, mu }
            })
        }
        "scherk" => {
            arity(2, 4)?;
            let mut st = ScherkState::new(args[0], args[1]).map_err(invalid)?;
            if let Some(&offset) = args.get(2) {
                st = st.with_offset(offset).map_err(invalid)?;
            }
            if let Some(&b) = args.get(3) {
                st = st.with_branch(branch_from(b).map_err(invalid)?);
            }
            Ok(CurveFn::Scherk(st))
        }
        other => Err(Sol3Error::parse(
            base + kind_pos,
            format!("unknown curve kind {other:?} (expected const, affine, poly, log, neglog or scherk)"),
        )),
    }
}

fn branch_from(v: f64) -> Result<Branch> {
    if v == 1.0 {
        Ok(Branch::Increasing)
    } else if v == -1.0 {
        Ok(Branch::Decreasing)
    } else {
        Err(Sol3Error::InvalidParameter(format!("branch must be 1 or -1, got {v}")))
    }
}

/// Splits on whitespace outside parentheses, returning `(offset, word)`.
fn words(text: &str) -> Result<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Sol3Error::parse(i, "unbalanced ')'"))?;
            }
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if depth > 0 {
        return Err(Sol3Error::parse(text.len(), "unbalanced '('"));
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    Ok(out)
}

/// Parses `name key=value ...`. Keys not given keep the defaults of
/// [`SolutionKind::default_spec`]; unknown or repeated keys are errors.
/// `f` takes a curve spec, `branch` takes `1` or `-1`, every other key a
/// finite number.
pub fn parse_solution(text: &str) -> Result<SolutionSpec> {
    let words = words(text)?;
    let Some(&(name_pos, name)) = words.first() else {
        return Err(Sol3Error::parse(0, "expected a solution name"));
    };
    let kind: SolutionKind = name.parse().map_err(|_| {
        let known: Vec<_> = SolutionKind::ALL.iter().map(|k| k.name()).collect();
        Sol3Error::parse(name_pos, format!("unknown solution {name:?} (expected one of {})", known.join(", ")))
    })?;
    let mut spec = kind.default_spec();
    let mut seen: Vec<&str> = Vec::new();
    for &(pos, word) in &words[1..] {
        let Some(eq) = word.find('=') else {
            return Err(Sol3Error::parse(pos, format!("expected key=value, got {word:?}")));
        };
        let (key, value) = (&word[..eq], &word[eq + 1..]);
        let value_pos = pos + eq + 1;
        if !kind.keys().contains(&key) {
            return Err(Sol3Error::parse(
                pos,
                format!("{name} has no parameter {key:?} (expected {})", kind.keys().join(", ")),
            ));
        }
        if seen.contains(&key) {
            return Err(Sol3Error::parse(pos, format!("parameter {key:?} given twice")));
        }
        seen.push(key);
        set_param(&mut spec, key, value, value_pos)?;
    }
    Ok(spec)
}

fn set_param(spec: &mut SolutionSpec, key: &str, value: &str, pos: usize) -> Result<()> {
    if key == "f" {
        let curve = parse_curve_at(value, pos)?;
        if let SolutionSpec::Type3LogTAnyF { f, .. } = spec {
            *f = curve;
        }
        return Ok(());
    }
    let mut cur = Cursor::new(value, pos);
    let v = cur.number()?;
    cur.finish()?;
    if key == "branch" {
        let b = branch_from(v).map_err(|e| Sol3Error::parse(pos, e.to_string()))?;
        if let SolutionSpec::Type1Scherk { branch, .. } | SolutionSpec::Type2Scherk { branch, .. } = spec {
            *branch = b;
        }
        return Ok(());
    }
    use SolutionSpec as S;
    let slot: &mut f64 = match (spec, key) {
        (S::PlaneX { x0 }, "x0") => x0,
        (S::PlaneY { y0 }, "y0") => y0,
        (S::PlaneZ { z0 }, "z0") => z0,
        (S::TotallyGeodesicPlane { a, .. }, "a") => a,
        (S::TotallyGeodesicPlane { b, .. }, "b") => b,
        (S::TotallyGeodesicPlane { c, .. }, "c") => c,
        (S::Type1Scherk { a, .. } | S::Type2Scherk { a, .. }, "a") => a,
        (S::Type1Scherk { b, .. } | S::Type2Scherk { b, .. }, "b") => b,
        (S::Type1Scherk { c, .. } | S::Type2Scherk { c, .. }, "c") => c,
        (S::Type1Scherk { offset, .. } | S::Type2Scherk { offset, .. }, "offset") => offset,
        (S::Type2LogConstF { a, .. } | S::Type3ConstFLog { a, .. } | S::Type3LogConstG { a, .. }, "a") => a,
        (
            S::Type2LogConstF { lambda, .. }
            | S::Type3ConstFLog { lambda, .. }
            | S::Type3LogConstG { lambda, .. }
            | S::InvariantLog { lambda, .. },
            "lambda",
        ) => lambda,
        (
            S::Type2LogConstF { mu, .. }
            | S::Type3ConstFLog { mu, .. }
            | S::Type3LogConstG { mu, .. }
            | S::Type3LogTAnyF { mu, .. }
            | S::InvariantLog { mu, .. },
            "mu",
        ) => mu,
        (_, key) => return Err(Sol3Error::parse(pos, format!("unexpected parameter {key:?}"))),
    };
    *slot = v;
    Ok(())
}

/// Parses a closed range `lo:hi` (a comma also works) with `lo < hi`.
pub fn parse_range(text: &str) -> Result<(f64, f64)> {
    let Some(sep) = text.find([':', ',']) else {
        return Err(Sol3Error::parse(0, format!("expected lo:hi, got {text:?}")));
    };
    let mut lo = Cursor::new(&text[..sep], 0);
    let a = lo.number()?;
    lo.finish()?;
    let mut hi = Cursor::new(&text[sep + 1..], sep + 1);
    let b = hi.number()?;
    hi.finish()?;
    if a >= b {
        return Err(Sol3Error::parse(0, format!("empty range {a}:{b}")));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err_pos(r: Result<impl std::fmt::Debug>) -> usize {
        match r {
            Err(Sol3Error::Parse { pos, .. }) => pos,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn curves() {
        assert_eq!(parse_curve("const(2.5)").unwrap(), CurveFn::Constant(2.5));
        assert_eq!(
            parse_curve(" affine( 1 , -0.5 ) ").unwrap(),
            CurveFn::Affine {
                slope: 1.0,
                intercept: -0.5
            }
        );
        assert_eq!(
            parse_curve("poly(0,-2,0,1)").unwrap(),
            CurveFn::Polynomial(vec![0.0, -2.0, 0.0, 1.0])
        );
        assert_eq!(parse_curve("neglog(1e-1,2)").unwrap(), CurveFn::NegLog { lambda: 0.1, mu: 2.0 });
        let CurveFn::Scherk(st) = parse_curve("scherk(-2,1.5,0.25,-1)").unwrap() else {
            panic!()
        };
        assert_eq!((st.a(), st.c(), st.offset(), st.branch()), (-2.0, 1.5, 0.25, Branch::Decreasing));
    }

    #[test]
    fn curve_errors_are_positioned() {
        assert_eq!(parse_err_pos(parse_curve("cosh(1)")), 0);
        assert_eq!(parse_err_pos(parse_curve("const(1")), 7);
        assert_eq!(parse_err_pos(parse_curve("affine(1,x)")), 9);
        assert_eq!(parse_err_pos(parse_curve("const(1) extra")), 9);
        assert_eq!(parse_err_pos(parse_curve("const(nan)")), 6);
        assert_eq!(parse_err_pos(parse_curve("affine(1)")), 6);
        assert_eq!(parse_err_pos(parse_curve("scherk(1,0)")), 6);
        assert_eq!(parse_err_pos(parse_curve("scherk(1,1,0,2)")), 6);
        assert!(parse_curve("").is_err());
        assert!(parse_curve("poly()").is_err());
    }

    #[test]
    fn solutions() {
        let spec = parse_solution("type1-scherk a=2 c=1").unwrap();
        assert_eq!(
            spec,
            SolutionSpec::Type1Scherk {
                a: 2.0,
                b: 0.0,
                c: 1.0,
                offset: 0.0,
                branch: Branch::Increasing
            }
        );
        let spec = parse_solution("type3-logt mu=0.5 f=poly(0, -2, 0, 1)").unwrap();
        assert_eq!(
            spec,
            SolutionSpec::Type3LogTAnyF {
                mu: 0.5,
                f: CurveFn::Polynomial(vec![0.0, -2.0, 0.0, 1.0])
            }
        );
        assert_eq!(parse_solution("plane-z z0=5").unwrap(), SolutionSpec::PlaneZ { z0: 5.0 });
        assert_eq!(
            parse_solution("type2-scherk branch=-1").unwrap(),
            SolutionSpec::Type2Scherk {
                a: 1.0,
                b: 0.0,
                c: 1.0,
                offset: 0.0,
                branch: Branch::Decreasing
            }
        );
    }

    #[test]
    fn solution_errors() {
        assert_eq!(parse_err_pos(parse_solution("plane-w")), 0);
        assert_eq!(parse_err_pos(parse_solution("plane-z q=1")), 8);
        assert_eq!(parse_err_pos(parse_solution("plane-z z0=1 z0=2")), 13);
        assert_eq!(parse_err_pos(parse_solution("plane-z z0")), 8);
        assert_eq!(parse_err_pos(parse_solution("plane-z z0=abc")), 11);
        assert_eq!(parse_err_pos(parse_solution("type3-logt f=poly(1,")), 20);
        assert_eq!(parse_err_pos(parse_solution("type3-logt f=foo(1)")), 13);
        assert!(parse_solution("   ").is_err());
    }

    #[test]
    fn every_default_round_trips() {
        for k in SolutionKind::ALL {
            let spec = k.default_spec();
            assert_eq!(parse_solution(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-2:2").unwrap(), (-2.0, 2.0));
        assert_eq!(parse_range("0.1,3").unwrap(), (0.1, 3.0));
        assert!(parse_range("2:-2").is_err());
        assert!(parse_range("1").is_err());
        assert_eq!(parse_err_pos(parse_range("0:x")), 2);
        assert!(parse_range("0:inf").is_err());
    }
}
