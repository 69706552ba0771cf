//! Command-line front end for the `taxicab` crate.
//!
//! Every subcommand parses its arguments, calls the library and hands the
//! values to [`report`] for rendering, so the printed numbers are the
//! library's numbers rounded to `--precision` significant digits.

pub mod plot;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use taxicab::oracle;
use taxicab::parallax::{choose_move_direction, euclidean_parallax_perpendicular};
use taxicab::triangle::{classify_congruence_with_tolerance, is_congruent_with_tolerance};
use taxicab::trig::{cos_sum_detailed, sin_sum_detailed, SumEvaluation, SumKind};
use taxicab::{
    angle_between_directions, cos_double, cos_sum, cos_t, direction_arc_position,
    euclidean_measure_standard, euclidean_parallax_approx, euclidean_parallax_exact, measure,
    point_on_taxicab_circle, quadrant_of, simulate_observation, sin_double, sin_sum, sin_t,
    taxicab_distance, taxicab_measure_in_quadrant, taxicab_measure_standard,
    taxicab_parallax_distance, EuclideanAngle, EuclideanLength, EuclideanParallaxMeasurement,
    GeometryError, MoveDirection, ParallaxMeasurement, ParallaxScene, Point, TaxicabAngle,
    TaxicabLength, Triangle, Vector,
};
use thiserror::Error;

pub use report::{fmt_num, Record, Report, Value};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv { path: PathBuf, source: csv::Error },
}

impl CliError {
    /// 2 for malformed invocations, 1 for everything the library rejects.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    Taxicab,
    Radian,
}

/// A number with an optional unit suffix: `1.5t` or `0.3r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleArg {
    pub value: f64,
    pub unit: Option<Unit>,
}

impl FromStr for AngleArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (num, unit) = if let Some(n) = s.strip_suffix('t') {
            (n, Some(Unit::Taxicab))
        } else if let Some(n) = s.strip_suffix('r') {
            (n, Some(Unit::Radian))
        } else {
            (s, None)
        };
        let value: f64 = num.parse().map_err(|_| format!("not an angle: {s:?}"))?;
        if !value.is_finite() {
            return Err(format!("angle must be finite: {s:?}"));
        }
        Ok(AngleArg { value, unit })
    }
}

impl AngleArg {
    /// t-radians. A radian value is read as a direction from the x-axis.
    pub fn taxicab(self) -> Result<f64, CliError> {
        match self.unit {
            None | Some(Unit::Taxicab) => Ok(self.value),
            Some(Unit::Radian) => {
                Ok(direction_arc_position(Vector::from_radians(self.value)?)?.t())
            }
        }
    }

    /// Radians. A t-radian value is read as a position on the unit circle.
    pub fn euclidean(self) -> Result<f64, CliError> {
        match self.unit {
            None | Some(Unit::Radian) => Ok(self.value),
            Some(Unit::Taxicab) => Ok(t_to_direction(self.value)),
        }
    }
}

/// Euclidean direction in [0, 2π) of arc position `t`.
fn t_to_direction(t: f64) -> f64 {
    let unit = TaxicabLength::new(1.0).expect("positive radius");
    let p = point_on_taxicab_circle(Point::ORIGIN, unit, t.into());
    EuclideanAngle::new(p.y().atan2(p.x())).normalize().rad()
}

fn parse_point(s: &str) -> Result<(f64, f64), String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected X,Y but got {s:?}"))?;
    let x: f64 = x
        .trim()
        .parse()
        .map_err(|_| format!("bad x coordinate in {s:?}"))?;
    let y: f64 = y
        .trim()
        .parse()
        .map_err(|_| format!("bad y coordinate in {s:?}"))?;
    Ok((x, y))
}

fn parse_direction(s: &str) -> Result<MoveDirection, String> {
    s.parse::<MoveDirection>().map_err(|e| e.to_string())
}

/// Modified taxicab geometry: t-radian angles, taxicab trigonometry,
/// triangles and parallax.
#[derive(Debug, Parser)]
#[command(name = "taxicab", version)]
pub struct Cli {
    /// Output format. svg is only valid for `plot`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Significant digits in numeric output.
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=17))]
    pub precision: u32,
    /// Tolerance for congruence comparisons and verification sweeps.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tolerance: f64,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert angle measures between radians and t-radians.
    Convert(ConvertArgs),
    /// Taxicab sine and cosine, sums and double angles.
    Trig(TrigArgs),
    /// Sides and angles of a triangle, or congruence of two.
    #[command(allow_negative_numbers = true)]
    Triangle(TriangleArgs),
    /// Distance from parallax.
    #[command(subcommand)]
    Parallax(ParallaxCommand),
    /// Write a figure.
    Plot(PlotArgs),
    /// Compare closed forms with the arc-walking oracle.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// radians to t-radians
    E2t,
    /// t-radians to radians
    T2e,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ConvertArgs {
    #[arg(value_enum)]
    pub direction: Direction,
    pub value: AngleArg,
    /// Reference angle (radians) of an angle lying inside one quadrant.
    #[arg(long)]
    pub psi: Option<AngleArg>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct TrigArgs {
    /// Angle in t-radians.
    pub theta: Option<AngleArg>,
    /// Evaluate cos_t(α+β) and sin_t(α+β) with the sum formulas.
    #[arg(long, num_args = 2, value_names = ["ALPHA", "BETA"])]
    pub sum: Option<Vec<AngleArg>>,
    /// Evaluate cos_t(2α) and sin_t(2α) with the double-angle formulas.
    #[arg(long, value_name = "ALPHA")]
    pub double: Option<AngleArg>,
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    /// x1 y1 x2 y2 x3 y3, optionally followed by a second triangle. Sides
    /// are listed opposite vertices 1, 2, 3 and angles at vertices 1, 2, 3.
    #[arg(required = true, num_args = 6..=12)]
    pub coords: Vec<f64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SightingArgs {
    /// Baseline length.
    #[arg(long)]
    pub s: f64,
    /// Angle from the first position.
    #[arg(long)]
    pub alpha: AngleArg,
    /// Angle from the second position.
    #[arg(long)]
    pub beta: AngleArg,
}

#[derive(Debug, Subcommand)]
pub enum ParallaxCommand {
    /// d = s / (β − α), angles in t-radians.
    Taxicab(SightingArgs),
    /// Exact Euclidean distance for a diagonal step, angles in radians.
    #[command(name = "euclid-exact", allow_negative_numbers = true)]
    EuclidExact {
        #[command(flatten)]
        sighting: SightingArgs,
        /// Reference direction from the x-axis.
        #[arg(long)]
        theta: AngleArg,
    },
    /// d = s / tan(β − α) for a step perpendicular to the line of sight.
    #[command(name = "euclid-perp")]
    EuclidPerp(SightingArgs),
    /// Small-angle estimate d ≈ s / (β − α).
    #[command(name = "euclid-approx")]
    EuclidApprox(SightingArgs),
    /// Place an observer and an object, move, sight and reconstruct.
    Simulate(SimulateArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SimulateArgs {
    /// Observer position X,Y.
    #[arg(long, value_parser = parse_point, required_unless_present = "scenes", conflicts_with = "scenes")]
    pub observer: Option<(f64, f64)>,
    /// Object position X,Y.
    #[arg(long, value_parser = parse_point, required_unless_present = "scenes")]
    pub object: Option<(f64, f64)>,
    /// Taxicab length of the move.
    #[arg(long, required_unless_present = "scenes")]
    pub step: Option<f64>,
    /// Direction of the reference object (radians). Defaults to the line of sight.
    #[arg(long)]
    pub reference: Option<AngleArg>,
    /// NW, NE, SW or SE. Defaults to the distance-preserving diagonal that
    /// increases the angle.
    #[arg(long, value_parser = parse_direction)]
    pub direction: Option<MoveDirection>,
    /// CSV of scenes with columns observer_x,observer_y,object_x,object_y,step
    /// and optionally reference and direction.
    #[arg(long)]
    pub scenes: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotTarget {
    UnitCircle,
    TrigGraphs,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(value_enum)]
    pub target: PlotTarget,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Directions (or grid points) per sweep.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
}

/// Rendered result. `failed` is set when some part of a batch or sweep
/// reported an error while the rest still produced output.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub body: String,
    pub failed: bool,
}

impl Output {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed)
    }
}

/// Run a parsed command and render its result.
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let precision = cli.precision as usize;
    if let Command::Plot(args) = &cli.command {
        return plot(
            args.target,
            cli.format.unwrap_or(OutputFormat::Svg),
            precision,
        );
    }
    let format = cli.format.unwrap_or(OutputFormat::Text);
    if format == OutputFormat::Svg {
        return Err(CliError::Usage(
            "--format svg is only valid for plot".into(),
        ));
    }
    if !(cli.tolerance >= 0.0 && cli.tolerance.is_finite()) {
        return Err(CliError::Usage(
            "--tolerance must be a non-negative number".into(),
        ));
    }
    let (report, failed) = match &cli.command {
        Command::Convert(args) => (convert(args)?, false),
        Command::Trig(args) => (trig(args)?, false),
        Command::Triangle(args) => (triangle(args, cli.tolerance)?, false),
        Command::Parallax(cmd) => parallax(cmd)?,
        Command::Verify(args) => verify(args.samples, cli.tolerance)?,
        Command::Plot(_) => unreachable!("handled above"),
    };
    Ok(Output {
        body: report.render(format, precision),
        failed,
    })
}

/// Print to stdout or write to `path`.
pub fn emit(output: &Output, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, &output.body).map_err(|source| CliError::Write {
            path: path.to_owned(),
            source,
        }),
        None => {
            print!("{}", output.body);
            Ok(())
        }
    }
}

pub fn convert(args: &ConvertArgs) -> Result<Report, CliError> {
    let record = match args.direction {
        Direction::E2t => {
            let phi = EuclideanAngle::new(args.value.euclidean()?);
            let t = match args.psi {
                Some(psi) => {
                    taxicab_measure_in_quadrant(phi, EuclideanAngle::new(psi.euclidean()?))?
                }
                None => taxicab_measure_standard(phi)?,
            };
            Record::new().with("t_radians", t.t())
        }
        Direction::T2e => {
            if args.psi.is_some() {
                return Err(CliError::Usage("--psi only applies to e2t".into()));
            }
            let t = args.value.taxicab()?;
            // a right angle is 2 t-radians; the inverse formula only reaches it as a limit
            let rad = if t == 2.0 {
                std::f64::consts::FRAC_PI_2
            } else {
                euclidean_measure_standard(TaxicabAngle::new(t))?.rad()
            };
            Record::new().with("radians", rad)
        }
    };
    Ok(Report::single(record))
}

fn push_sum(record: &mut Record, prefix: &str, eval: &SumEvaluation, kind: SumKind) {
    record.push(prefix, eval.value);
    record.push(&format!("{prefix}_form"), eval.formula(kind));
    record.push(
        &format!("{prefix}_row"),
        format!("({}, {})", eval.row.alpha, eval.row.beta),
    );
}

pub fn trig(args: &TrigArgs) -> Result<Report, CliError> {
    if args.theta.is_none() && args.sum.is_none() && args.double.is_none() {
        return Err(CliError::Usage(
            "give an angle, --sum ALPHA BETA or --double ALPHA".into(),
        ));
    }
    let mut record = Record::new();
    if let Some(theta) = args.theta {
        let t = theta.taxicab()?;
        record.push("theta", t);
        record.push("cos", cos_t(t));
        record.push("sin", sin_t(t));
        record.push("quadrant", quadrant_of(t).to_string());
    }
    if let Some(sum) = &args.sum {
        let (a, b) = (sum[0].taxicab()?, sum[1].taxicab()?);
        record.push("alpha", a);
        record.push("beta", b);
        push_sum(
            &mut record,
            "cos_sum",
            &cos_sum_detailed(a, b),
            SumKind::Cos,
        );
        push_sum(
            &mut record,
            "sin_sum",
            &sin_sum_detailed(a, b),
            SumKind::Sin,
        );
    }
    if let Some(alpha) = args.double {
        let a = alpha.taxicab()?;
        record.push("double_alpha", a);
        record.push("cos_double", cos_double(a));
        record.push("sin_double", sin_double(a));
    }
    Ok(Report::single(record))
}

pub fn triangle(args: &TriangleArgs, tolerance: f64) -> Result<Report, CliError> {
    let build = |c: &[f64]| -> Result<Triangle, CliError> {
        let coords: [f64; 6] = c.try_into().expect("six coordinates");
        Ok(Triangle::from_coords(coords)?)
    };
    let triangles = match args.coords.len() {
        6 => vec![build(&args.coords)?],
        12 => vec![build(&args.coords[..6])?, build(&args.coords[6..])?],
        n => {
            return Err(CliError::Usage(format!(
                "expected 6 or 12 coordinates, got {n}"
            )))
        }
    };
    let mut record = Record::new();
    let two = triangles.len() == 2;
    for (i, tri) in triangles.iter().enumerate() {
        let m = measure(tri);
        let suffix = if two {
            format!("_{}", i + 1)
        } else {
            String::new()
        };
        record.push(
            &format!("sides{suffix}"),
            Value::List(m.side_values().to_vec()),
        );
        record.push(
            &format!("angles{suffix}"),
            Value::List(m.angle_values().to_vec()),
        );
        record.push(&format!("angle_sum{suffix}"), m.angle_sum().t());
    }
    if let [t1, t2] = triangles.as_slice() {
        let flags = classify_congruence_with_tolerance(t1, t2, tolerance);
        for (condition, holds) in flags.iter() {
            record.push(condition.name(), holds);
        }
        record.push("congruent", is_congruent_with_tolerance(t1, t2, tolerance));
    }
    Ok(Report::single(record))
}

fn length(s: f64) -> Result<TaxicabLength, CliError> {
    Ok(TaxicabLength::new(s)?)
}

fn parallax(cmd: &ParallaxCommand) -> Result<(Report, bool), CliError> {
    let distance = |d: f64| Ok((Report::single(Record::new().with("distance", d)), false));
    match cmd {
        ParallaxCommand::Taxicab(a) => {
            let m = ParallaxMeasurement {
                s: length(a.s)?,
                alpha: a.alpha.taxicab()?.into(),
                beta: a.beta.taxicab()?.into(),
            };
            distance(taxicab_parallax_distance(&m)?.value())
        }
        ParallaxCommand::EuclidExact { sighting: a, theta } => {
            let m = EuclideanParallaxMeasurement {
                s_e: EuclideanLength::new(a.s)?,
                alpha_e: a.alpha.euclidean()?.into(),
                beta_e: a.beta.euclidean()?.into(),
                theta_e: theta.euclidean()?.into(),
            };
            distance(euclidean_parallax_exact(&m)?.value())
        }
        ParallaxCommand::EuclidPerp(a) => distance(
            euclidean_parallax_perpendicular(
                EuclideanLength::new(a.s)?,
                a.alpha.euclidean()?.into(),
                a.beta.euclidean()?.into(),
            )?
            .value(),
        ),
        ParallaxCommand::EuclidApprox(a) => distance(
            euclidean_parallax_approx(
                EuclideanLength::new(a.s)?,
                a.alpha.euclidean()?.into(),
                a.beta.euclidean()?.into(),
            )?
            .value(),
        ),
        ParallaxCommand::Simulate(args) => simulate(args),
    }
}

/// One scene to simulate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SceneInput {
    pub observer: (f64, f64),
    pub object: (f64, f64),
    pub step: f64,
    pub reference: Option<AngleArg>,
    pub direction: Option<MoveDirection>,
}

/// Ground truth and reconstruction for one scene.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationResult {
    pub truth: f64,
    pub reconstructed: f64,
    pub alpha: f64,
    pub beta: f64,
    pub direction: MoveDirection,
}

pub fn simulate_scene(input: &SceneInput) -> Result<SimulationResult, CliError> {
    let observer = Point::new(input.observer.0, input.observer.1)?;
    let object = Point::new(input.object.0, input.object.1)?;
    let step = length(input.step)?;
    let reference = match input.reference {
        Some(r) => EuclideanAngle::new(r.euclidean()?),
        None => {
            let sight = object - observer;
            if sight.is_zero() {
                return Err(GeometryError::CoincidentPoints.into());
            }
            EuclideanAngle::new(sight.atan2())
        }
    };
    let direction = match input.direction {
        Some(d) => d,
        None => choose_move_direction(observer, object, step, reference)?,
    };
    let scene = ParallaxScene::new(observer, object, step, direction);
    let m = simulate_observation(&scene, reference)?;
    Ok(SimulationResult {
        truth: taxicab_distance(observer, object).value(),
        reconstructed: taxicab_parallax_distance(&m)?.value(),
        alpha: m.alpha.t(),
        beta: m.beta.t(),
        direction,
    })
}

fn simulation_record(index: Option<usize>, result: &Result<SimulationResult, CliError>) -> Record {
    let mut r = Record::new();
    if let Some(i) = index {
        r.push("scene", i);
    }
    match result {
        Ok(s) => {
            r.push("truth", s.truth);
            r.push("reconstructed", s.reconstructed);
            r.push("difference", s.reconstructed - s.truth);
            r.push("alpha", s.alpha);
            r.push("beta", s.beta);
            r.push("direction", s.direction.to_string());
            if index.is_some() {
                r.push("error", "");
            }
        }
        Err(e) => {
            for key in [
                "truth",
                "reconstructed",
                "difference",
                "alpha",
                "beta",
                "direction",
            ] {
                r.push(key, Value::Null);
            }
            r.push("error", e.to_string());
        }
    }
    r
}

fn simulate(args: &SimulateArgs) -> Result<(Report, bool), CliError> {
    let Some(path) = &args.scenes else {
        let input = SceneInput {
            observer: args.observer.expect("required by clap"),
            object: args.object.expect("required by clap"),
            step: args.step.expect("required by clap"),
            reference: args.reference,
            direction: args.direction,
        };
        let result = simulate_scene(&input)?;
        return Ok((Report::single(simulation_record(None, &Ok(result))), false));
    };
    let inputs = read_scenes(path)?;
    // par_iter keeps input order when collecting
    let results: Vec<_> = inputs.par_iter().map(simulate_scene).collect();
    let failed = results.iter().any(Result::is_err);
    let records = results
        .iter()
        .enumerate()
        .map(|(i, r)| simulation_record(Some(i), r))
        .collect();
    Ok((Report { records }, failed))
}

pub fn read_scenes(path: &Path) -> Result<Vec<SceneInput>, CliError> {
    let csv_err = |source| CliError::Csv {
        path: path.to_owned(),
        source,
    };
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(csv_err)?.clone();
    let column = |name: &str| headers.iter().position(|h| h == name);
    let required = ["observer_x", "observer_y", "object_x", "object_y", "step"];
    let mut idx = [0usize; 5];
    for (slot, name) in idx.iter_mut().zip(required) {
        *slot = column(name)
            .ok_or_else(|| CliError::Usage(format!("{}: missing column {name}", path.display())))?;
    }
    let (reference_col, direction_col) = (column("reference"), column("direction"));
    let mut inputs = Vec::new();
    for (line, row) in reader.records().enumerate() {
        let row = row.map_err(csv_err)?;
        let bad = |what: &str| {
            CliError::Usage(format!("{}: row {}: bad {what}", path.display(), line + 1))
        };
        let num = |i: usize, name: &str| -> Result<f64, CliError> {
            row.get(i)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad(name))
        };
        let optional = |col: Option<usize>| col.and_then(|i| row.get(i)).filter(|s| !s.is_empty());
        let reference = optional(reference_col)
            .map(|s| s.parse::<AngleArg>().map_err(|_| bad("reference")))
            .transpose()?;
        let direction = optional(direction_col)
            .map(|s| s.parse::<MoveDirection>().map_err(|_| bad("direction")))
            .transpose()?;
        inputs.push(SceneInput {
            observer: (num(idx[0], required[0])?, num(idx[1], required[1])?),
            object: (num(idx[2], required[2])?, num(idx[3], required[3])?),
            step: num(idx[4], required[4])?,
            reference,
            direction,
        });
    }
    Ok(inputs)
}

fn plot(target: PlotTarget, format: OutputFormat, precision: usize) -> Result<Output, CliError> {
    let body = match (target, format) {
        (PlotTarget::UnitCircle, OutputFormat::Svg) => plot::unit_circle_svg(precision),
        (PlotTarget::TrigGraphs, OutputFormat::Svg) => plot::trig_graphs_svg(precision),
        (PlotTarget::UnitCircle, OutputFormat::Csv) => {
            plot::unit_circle_table().render(format, precision)
        }
        (PlotTarget::TrigGraphs, OutputFormat::Csv) => {
            plot::trig_graphs_table().render(format, precision)
        }
        _ => return Err(CliError::Usage("plot writes svg or csv".into())),
    };
    Ok(Output {
        body,
        failed: false,
    })
}

/// Deterministic directions spread around the circle.
fn sweep_angle(i: usize) -> f64 {
    // golden-ratio stride avoids lining up with the diamond's corners
    const STRIDE: f64 = 0.618_033_988_749_894_9;
    std::f64::consts::TAU * (i as f64 * STRIDE).fract()
}

/// Max deviation of each closed form from its oracle or direct evaluation.
pub fn verification_sweeps(samples: usize) -> Result<Vec<(&'static str, usize, f64)>, CliError> {
    let mut out = Vec::new();
    let arc = oracle::arc_position_sweep(samples);
    out.push(("arc_position", arc.samples, arc.max_deviation));
    let standard = oracle::standard_measure_sweep(samples);
    out.push(("standard_measure", standard.samples, standard.max_deviation));

    let mut between = 0.0f64;
    for i in 0..samples {
        let u = Vector::from_radians(sweep_angle(2 * i))?;
        let v = Vector::from_radians(sweep_angle(2 * i + 1))?;
        let closed = angle_between_directions(u, v)?.t();
        let walked = oracle::arc_between(u, v)?.t();
        between = between.max((closed - walked).abs());
    }
    out.push(("angle_between", samples, between));

    let side = (samples as f64).sqrt().ceil().max(2.0) as usize;
    let grid = |i: usize| 8.0 * i as f64 / side as f64;
    let (mut cos_dev, mut sin_dev, mut diamond) = (0.0f64, 0.0f64, 0.0f64);
    for i in 0..side {
        let a = grid(i);
        diamond = diamond.max((sin_t(a).abs() + cos_t(a).abs() - 1.0).abs());
        for j in 0..side {
            let b = grid(j);
            cos_dev = cos_dev.max((cos_sum(a, b) - cos_t(a + b)).abs());
            sin_dev = sin_dev.max((sin_sum(a, b) - sin_t(a + b)).abs());
        }
    }
    out.push(("cos_sum", side * side, cos_dev));
    out.push(("sin_sum", side * side, sin_dev));
    out.push(("diamond_identity", side, diamond));
    Ok(out)
}

fn verify(samples: usize, tolerance: f64) -> Result<(Report, bool), CliError> {
    if samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    let sweeps = verification_sweeps(samples)?;
    let failed = sweeps
        .iter()
        .any(|&(_, _, dev)| dev.is_nan() || dev > tolerance);
    let records = sweeps
        .into_iter()
        .map(|(check, n, dev)| {
            Record::new()
                .with("check", check)
                .with("samples", n)
                .with("max_deviation", dev)
                .with("pass", dev <= tolerance)
        })
        .collect();
    Ok((Report { records }, failed))
}
