use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use sol3::classified::ScherkIntegral;
use sol3::cli::{
    curvature_at, format_table, parse_curve, parse_range, parse_solution, run_selftest, sample_surface, verify,
    GridSpec, SampleFormat, SurfaceTarget, DEFAULT_TOLERANCE,
};
use sol3::families::TranslationType;
use sol3::{Result, Sol3Error};

/// Mean-curvature checks and mesh export for translation surfaces in Sol3.
#[derive(Parser)]
#[command(name = "sol3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate |H| over a grid; exit 0 iff max |H| < tol.
    Verify {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Write the surface over a grid as an OBJ mesh or a CSV table.
    Sample {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value = "obj")]
        format: String,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Curvature quantities at one parameter point.
    Curvature {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in acceptance checks.
    Selftest {
        /// Replace every check's tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct TargetArgs {
    /// Catalog entry, e.g. `type1-scherk`; parameters follow as key=value.
    #[arg(long, conflicts_with_all = ["kind", "f", "g"])]
    solution: Option<String>,
    /// Parameters of --solution, e.g. `a=2 c=1`.
    #[arg(requires = "solution")]
    params: Vec<String>,
    /// Translation type I-VI of a custom surface.
    #[arg(long = "type", requires_all = ["f", "g"])]
    kind: Option<String>,
    /// Curve spec for f(s), e.g. `poly(0,-2,0,1)`.
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    /// Curve spec for g(t).
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
}

#[derive(Args)]
struct GridArgs {
    /// `lo:hi`, default -2:2.
    #[arg(long, allow_hyphen_values = true)]
    s_range: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t_range: Option<String>,
    #[arg(long, default_value_t = 50)]
    ns: usize,
    #[arg(long, default_value_t = 50)]
    nt: usize,
}

impl TargetArgs {
    fn resolve(&self) -> Result<SurfaceTarget> {
        if let Some(name) = &self.solution {
            let text = std::iter::once(name.as_str())
                .chain(self.params.iter().map(String::as_str))
                .collect::<Vec<_>>()
                .join(" ");
            return parse_solution(&text).map(SurfaceTarget::Solution);
        }
        match (&self.kind, &self.f, &self.g) {
            (Some(kind), Some(f), Some(g)) => Ok(SurfaceTarget::Custom {
                kind: kind.parse::<TranslationType>()?,
                f: parse_curve(f)?,
                g: parse_curve(g)?,
            }),
            _ => Err(Sol3Error::InvalidParameter(
                "give either --solution NAME [key=value ...] or --type T --f SPEC --g SPEC".into(),
            )),
        }
    }

    fn describe(&self) -> String {
        match (&self.solution, &self.kind, &self.f, &self.g) {
            (Some(name), ..) => std::iter::once(name.clone())
                .chain(self.params.iter().cloned())
                .collect::<Vec<_>>()
                .join(" "),
            (None, Some(k), Some(f), Some(g)) => format!("type {k} f={f} g={g}"),
            _ => String::new(),
        }
    }
}

impl GridArgs {
    fn resolve(&self) -> Result<GridSpec> {
        let mut grid = GridSpec {
            ns: self.ns,
            nt: self.nt,
            ..GridSpec::default()
        };
        if let Some(r) = &self.s_range {
            grid.s_range = parse_range(r)?;
        }
        if let Some(r) = &self.t_range {
            grid.t_range = parse_range(r)?;
        }
        grid.validate()?;
        Ok(grid)
    }
}

fn print_json(value: &serde_json::Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Sol3Error::Io(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Verify {
            target,
            grid,
            tol,
            json,
        } => {
            if tol.is_nan() || tol <= 0.0 {
                return Err(Sol3Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
            }
            let imm = target.resolve()?.build(ScherkIntegral::from_env()?)?;
            let report = verify(&imm, &grid.resolve()?, tol)?;
            if json {
                print_json(&json!({ "target": target.describe(), "report": report }))?;
            } else {
                println!("target       {}", target.describe());
                println!("{report}");
            }
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Sample {
            target,
            grid,
            format,
            out,
            json,
        } => {
            let format: SampleFormat = format.parse()?;
            let imm = target.resolve()?.build(ScherkIntegral::from_env()?)?;
            let sampled = sample_surface(&imm, &grid.resolve()?)?;
            let text = sampled.render(format);
            match &out {
                Some(path) => {
                    fs::write(path, &text).map_err(|e| Sol3Error::Io(format!("{}: {e}", path.display())))?;
                    let faces = if format == SampleFormat::Obj { sampled.triangles().len() } else { 0 };
                    if json {
                        print_json(&json!({
                            "path": path.display().to_string(),
                            "vertices": sampled.nodes.len(),
                            "triangles": faces,
                        }))?;
                    } else {
                        println!(
                            "wrote {} nodes, {} triangles to {}",
                            sampled.nodes.len(),
                            faces,
                            path.display()
                        );
                    }
                }
                None => io::stdout().write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Curvature { target, s, t, json } => {
            let imm = target.resolve()?.build(ScherkIntegral::from_env()?)?;
            let summary = curvature_at(&imm, s, t)?;
            if json {
                print_json(&json!({ "target": target.describe(), "curvature": summary }))?;
            } else {
                println!("target       {}", target.describe());
                println!("{summary}");
            }
            Ok(0)
        }
        Command::Selftest { tol, json } => {
            if let Some(tol) = tol {
                if tol.is_nan() || tol <= 0.0 {
                    return Err(Sol3Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
                }
            }
            let rows = run_selftest(tol);
            if json {
                print_json(&json!({ "checks": rows }))?;
            } else {
                print!("{}", format_table(&rows));
            }
            Ok(if rows.iter().all(|r| r.pass) { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
