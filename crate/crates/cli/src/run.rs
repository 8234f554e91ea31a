//! Executes a fit request: read points, fit, print, write reports.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use linefit::generate::seeded_positions;
use linefit::{
    gen_circle, gen_noisy_line, gen_parallel, CircleSpec, Method, NoisyLineSpec, PairedSample,
    ParallelSpec, Tolerances,
};

use crate::csv::parse_csv;
use crate::report::{render_table, to_json, RunReport};
use crate::svg::render_svg;

pub const EXIT_OK: i32 = 0;
/// Writing an output failed.
pub const EXIT_IO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
/// Every requested method refused the data.
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Clone, PartialEq)]
pub enum Generator {
    Circle(CircleSpec),
    /// Ladder positions are `n` seeded values uniform in `[-spread, spread]`.
    VerticalLadder {
        half_gap: f64,
        n: usize,
        spread: f64,
        seed: u64,
    },
    SlantedLadder {
        slope: f64,
        offset: f64,
        n: usize,
        spread: f64,
        seed: u64,
    },
    NoisyLine(NoisyLineSpec),
}

impl Generator {
    pub fn generate(&self) -> linefit::Result<PairedSample> {
        match *self {
            Generator::Circle(spec) => gen_circle(&spec),
            Generator::VerticalLadder {
                half_gap,
                n,
                spread,
                seed,
            } => gen_parallel(&ParallelSpec::Vertical {
                half_gap,
                t: seeded_positions(n, spread, seed)?,
            }),
            Generator::SlantedLadder {
                slope,
                offset,
                n,
                spread,
                seed,
            } => gen_parallel(&ParallelSpec::Slanted {
                slope,
                offset,
                t: seeded_positions(n, spread, seed)?,
            }),
            Generator::NoisyLine(spec) => gen_noisy_line(&spec),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum InputSource {
    Path(PathBuf),
    Stdin,
    Generator(Generator),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: InputSource,
    pub methods: Vec<Method>,
    pub output_json: Option<PathBuf>,
    pub output_svg: Option<PathBuf>,
    pub oracle_check: bool,
    /// Keys `isotropic`, `collinear` and `precondition`.
    pub tolerance_overrides: BTreeMap<String, f64>,
}

impl RunConfig {
    pub fn new(input: InputSource) -> Self {
        RunConfig {
            input,
            methods: Method::ALL.to_vec(),
            output_json: None,
            output_svg: None,
            oracle_check: false,
            tolerance_overrides: BTreeMap::new(),
        }
    }
}

#[derive(Debug)]
pub enum RunError {
    Input(String),
    Io(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => EXIT_INPUT,
            RunError::Io(_) => EXIT_IO,
        }
    }
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Input(m) => write!(f, "input error: {m}"),
            RunError::Io(m) => write!(f, "output error: {m}"),
        }
    }
}

pub fn tolerances(overrides: &BTreeMap<String, f64>) -> Result<Tolerances, RunError> {
    let mut tol = Tolerances::default();
    for (key, &value) in overrides {
        if !(value.is_finite() && value >= 0.0) {
            return Err(RunError::Input(format!(
                "tolerance {key} must be finite and >= 0, got {value}"
            )));
        }
        match key.as_str() {
            "isotropic" => tol.isotropic = value,
            "collinear" => tol.collinear = value,
            "precondition" => tol.precondition = value,
            other => {
                return Err(RunError::Input(format!(
                    "unknown tolerance '{other}' (expected isotropic, collinear or precondition)"
                )))
            }
        }
    }
    Ok(tol)
}

pub fn load_points(source: &InputSource, stdin: &mut dyn Read) -> Result<PairedSample, RunError> {
    let bytes = match source {
        InputSource::Generator(g) => {
            return g.generate().map_err(|e| RunError::Input(e.to_string()))
        }
        InputSource::Path(path) => fs::read(path)
            .map_err(|e| RunError::Input(format!("cannot read {}: {e}", path.display())))?,
        InputSource::Stdin => {
            let mut buf = Vec::new();
            stdin
                .read_to_end(&mut buf)
                .map_err(|e| RunError::Input(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    parse_csv(&bytes).map_err(|e| RunError::Input(e.to_string()))
}

/// Builds the report and writes every requested output; returns it for callers that want more.
pub fn execute(
    config: &RunConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<RunReport, RunError> {
    if config.methods.is_empty() {
        return Err(RunError::Input("no method selected".into()));
    }
    let tol = tolerances(&config.tolerance_overrides)?;
    let points = load_points(&config.input, stdin)?;
    let report = RunReport::build(points, &config.methods, &tol, config.oracle_check);

    let io = |e: std::io::Error| RunError::Io(e.to_string());
    stdout
        .write_all(render_table(&report).as_bytes())
        .map_err(io)?;
    if let Some(path) = &config.output_json {
        let text = serde_json::to_string_pretty(&to_json(&report)).expect("JSON values serialize");
        fs::write(path, text + "\n")
            .map_err(|e| RunError::Io(format!("{}: {e}", path.display())))?;
    }
    if let Some(path) = &config.output_svg {
        fs::write(path, render_svg(&report))
            .map_err(|e| RunError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(report)
}

pub fn run(
    config: &RunConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    match execute(config, stdin, stdout) {
        Err(e) => {
            let _ = writeln!(stderr, "linefit: {e}");
            e.exit_code()
        }
        Ok(report) if !report.any_success() => {
            let _ = writeln!(stderr, "linefit: no requested method could fit these data");
            EXIT_PRECONDITION
        }
        Ok(_) => EXIT_OK,
    }
}
