//! Command-line grammar and dispatch.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linefit::{
    apply_motion_points, summarize, CircleSpec, Method, NoisyLineSpec, Point, RigidMotion,
};

use crate::csv::write_csv;
use crate::run::{
    load_points, run, Generator, InputSource, RunConfig, EXIT_INPUT, EXIT_IO, EXIT_OK,
};

#[derive(Debug, Parser)]
#[command(
    name = "linefit",
    version,
    about = "Fit lines by vertical, horizontal and perpendicular least squares"
)]
#[command(args_conflicts_with_subcommands = true)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fit lines to a CSV of `x,y` points (stdin when no input is given).
    Fit(FitArgs),
    /// Print a CSV of generated points.
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Apply a rotation and/or translation to a CSV and print the result.
    Transform(TransformArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "lower")]
enum MethodArg {
    Y,
    X,
    D,
    All,
}

#[derive(Debug, Args)]
struct FitArgs {
    /// CSV file; `-` or absent reads stdin.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Methods to fit, repeatable or comma-separated.
    #[arg(long, short, value_enum, value_delimiter = ',', ignore_case = true)]
    method: Vec<MethodArg>,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write the SVG figure here.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Check each fit against a brute-force grid search.
    #[arg(long)]
    oracle: bool,
    /// Override a tolerance, e.g. `isotropic=1e-10`.
    #[arg(long = "tol", value_parser = parse_key_value)]
    tol: Vec<(String, f64)>,
}

#[derive(Debug, Subcommand)]
enum GenerateCommand {
    /// `n` equally spaced points on a circle.
    Circle {
        #[arg(long, default_value_t = 12)]
        n: usize,
        /// Phase of the first point, radians.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true, default_value = "0,0")]
        center: (f64, f64),
    },
    /// Pairs of points on two parallel lines, `x = ±A` or `y = M·x ± B`.
    Parallel {
        /// Half gap of the vertical ladder.
        #[arg(long = "A", conflicts_with_all = ["slope", "offset"], required_unless_present_all = ["slope", "offset"])]
        half_gap: Option<f64>,
        /// Slope of the slanted ladder.
        #[arg(long = "M", requires = "offset", allow_hyphen_values = true)]
        slope: Option<f64>,
        /// Offset of the slanted ladder.
        #[arg(long = "B", requires = "slope")]
        offset: Option<f64>,
        /// Number of rungs.
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// Rung positions are uniform in `[-spread, spread]`.
        #[arg(long, default_value_t = 50.0)]
        spread: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Points near `y = slope·x + intercept` with uniform vertical noise.
    NoisyLine {
        #[arg(long, allow_hyphen_values = true)]
        slope: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        intercept: f64,
        #[arg(long, default_value_t = 50)]
        n: usize,
        /// Largest vertical perturbation.
        #[arg(long, default_value_t = 0.1)]
        noise: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = -10.0, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
        x_max: f64,
    },
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("motion").required(true).multiple(true).args(["rotate", "translate"]))]
struct TransformArgs {
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Counter-clockwise rotation in radians, applied first.
    #[arg(long, allow_hyphen_values = true)]
    rotate: Option<f64>,
    /// Rotation center `X,Y` or `centroid`; the origin by default.
    #[arg(long, allow_hyphen_values = true, requires = "rotate")]
    center: Option<String>,
    /// Translation `U,V`, applied after the rotation.
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    translate: Option<(f64, f64)>,
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two comma-separated numbers, got '{s}'"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("'{}' is not a finite number", t.trim()))
    };
    Ok((num(a)?, num(b)?))
}

fn parse_key_value(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got '{s}'"))?;
    let v = v
        .trim()
        .parse::<f64>()
        .map_err(|_| format!("'{}' is not a number", v.trim()))?;
    Ok((k.trim().to_string(), v))
}

fn input_source(path: Option<PathBuf>) -> InputSource {
    match path {
        Some(p) if p.as_os_str() != "-" => InputSource::Path(p),
        _ => InputSource::Stdin,
    }
}

fn methods(args: &[MethodArg]) -> Vec<Method> {
    if args.is_empty() || args.contains(&MethodArg::All) {
        return Method::ALL.to_vec();
    }
    let mut out: Vec<Method> = args
        .iter()
        .map(|m| match m {
            MethodArg::Y => Method::Y,
            MethodArg::X => Method::X,
            _ => Method::D,
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn generator(cmd: GenerateCommand) -> Generator {
    match cmd {
        GenerateCommand::Circle {
            n,
            alpha,
            radius,
            center,
        } => Generator::Circle(CircleSpec {
            n,
            phase: alpha,
            radius,
            center: Point::new(center.0, center.1),
        }),
        GenerateCommand::Parallel {
            half_gap,
            slope,
            offset,
            n,
            spread,
            seed,
        } => match (half_gap, slope, offset) {
            (Some(half_gap), _, _) => Generator::VerticalLadder {
                half_gap,
                n,
                spread,
                seed,
            },
            (None, Some(slope), Some(offset)) => Generator::SlantedLadder {
                slope,
                offset,
                n,
                spread,
                seed,
            },
            _ => unreachable!("clap enforces --A or --M with --B"),
        },
        GenerateCommand::NoisyLine {
            slope,
            intercept,
            n,
            noise,
            seed,
            x_min,
            x_max,
        } => Generator::NoisyLine(NoisyLineSpec {
            slope,
            intercept,
            n,
            x_range: (x_min, x_max),
            perturbation: noise,
            seed,
        }),
    }
}

fn print_csv(
    result: Result<linefit::PairedSample, String>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    match result {
        Err(e) => {
            let _ = writeln!(stderr, "linefit: input error: {e}");
            EXIT_INPUT
        }
        Ok(p) => match write_csv(&p, stdout) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "linefit: output error: {e}");
                EXIT_IO
            }
        },
    }
}

fn transform(
    args: TransformArgs,
    stdin: &mut dyn io::Read,
) -> Result<linefit::PairedSample, String> {
    let mut p = load_points(&input_source(args.input), stdin).map_err(|e| e.to_string())?;
    if let Some(phi) = args.rotate {
        if !phi.is_finite() {
            return Err(format!("rotation angle must be finite, got {phi}"));
        }
        let center = match args.center.as_deref() {
            None => Point::new(0.0, 0.0),
            Some("centroid") => summarize(&p).centroid(),
            Some(s) => {
                let (x, y) = parse_pair(s)?;
                Point::new(x, y)
            }
        };
        p = apply_motion_points(&p, &RigidMotion::Rotation { phi, center });
    }
    if let Some((u, v)) = args.translate {
        p = apply_motion_points(&p, &RigidMotion::Translation { u, v });
    }
    Ok(p)
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn main_with_args<I, T>(
    args: I,
    stdin: &mut dyn io::Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match cli.command {
        Command::Fit(a) => {
            let config = RunConfig {
                input: input_source(a.input),
                methods: methods(&a.method),
                output_json: a.json,
                output_svg: a.svg,
                oracle_check: a.oracle,
                tolerance_overrides: a.tol.into_iter().collect::<BTreeMap<_, _>>(),
            };
            run(&config, stdin, stdout, stderr)
        }
        Command::Generate(g) => print_csv(
            generator(g).generate().map_err(|e| e.to_string()),
            stdout,
            stderr,
        ),
        Command::Transform(t) => {
            let result = transform(t, stdin);
            print_csv(result, stdout, stderr)
        }
    }
}
