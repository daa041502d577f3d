//! `recipro` — compose velocities and slownesses, sweep radiation spectra,
//! tabulate discrete energy levels, evaluate transfer rates, and fuzz the
//! library's identities.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing identity,
//! 2 on usage or domain errors.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use recipro_core::radiation::{spectrum_table, Statistics};
use recipro_core::scalar::{
    add_slowness, add_velocity, rate_of_transfer, reciprocal_rate, LightSpeed, Slowness,
    TransferRate, Velocity,
};
use recipro_core::symdiff::{oscillator_energy_terms, well_energy};
use recipro_core::vector::{general_compose, ComplexVec3, ReciprocityRotation};
use recipro_core::verify::{run as run_verify, RunConfig};
use recipro_core::Error;

#[derive(Parser)]
#[command(
    name = "recipro",
    version,
    about = "Reciprocal-symmetric kinematics toolkit",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compose two velocities or slownesses, optionally as 3-vectors with a
    /// reciprocity rotation.
    Compose(ComposeArgs),
    /// Sweep a radiation spectrum and print it as CSV.
    Spectrum(SpectrumArgs),
    /// Tabulate oscillator or square-well energy levels.
    Levels(LevelsArgs),
    /// Evaluate the bounded transfer rate, its reciprocal image, and the
    /// E*t >= c*T^2 predicate.
    Rate(RateArgs),
    /// Fuzz every identity and print a deterministic report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Space {
    Velocity,
    Slowness,
}

#[derive(Args)]
struct ComposeArgs {
    /// First operand: a scalar (`0.5`) or a comma-separated 3-vector
    /// (`0.5,0,0`).
    #[arg(allow_hyphen_values = true)]
    a: String,
    /// Second operand, same forms as the first.
    #[arg(allow_hyphen_values = true)]
    b: String,
    /// Compose velocities or slownesses (scalar mode only).
    #[arg(long, value_enum, default_value = "velocity")]
    space: Space,
    /// Compose the difference `a (+) (-b)` instead of the sum.
    #[arg(long)]
    difference: bool,
    /// Reciprocity rotation angle in radians; accepts `pi` and `-pi`.
    /// Routes the composition through the vector law.
    #[arg(long, allow_hyphen_values = true)]
    phi: Option<String>,
    /// Rotation axis `x,y,z` (normalized); required when --phi is nonzero.
    #[arg(long, allow_hyphen_values = true)]
    axis: Option<String>,
    /// Light speed.
    #[arg(long, default_value_t = 1.0)]
    c: f64,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Thermal energy kT.
    #[arg(long = "kT")]
    kt: f64,
    /// Statistics weighting the oscillator levels.
    #[arg(long, value_enum)]
    stats: StatsArg,
    /// Energy bound W for the bounded statistics.
    #[arg(long = "W")]
    bound: Option<f64>,
    /// Number of geometrically spaced frequencies.
    #[arg(long, default_value_t = 128)]
    points: usize,
    #[arg(long)]
    omega_min: f64,
    #[arg(long)]
    omega_max: f64,
    /// Light speed in the intensity prefactor.
    #[arg(long, default_value_t = 1.0)]
    c: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatsArg {
    Planck,
    Bounded,
    FermiOdd,
    FermiEven,
}

impl From<StatsArg> for Statistics {
    fn from(s: StatsArg) -> Statistics {
        match s {
            StatsArg::Planck => Statistics::Planck,
            StatsArg::Bounded => Statistics::Bounded,
            StatsArg::FermiOdd => Statistics::FermiOdd,
            StatsArg::FermiEven => Statistics::FermiEven,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelMode {
    Oscillator,
    Well,
}

#[derive(Args)]
struct LevelsArgs {
    #[arg(long, value_enum)]
    mode: LevelMode,
    /// Highest level index to print.
    #[arg(long)]
    n: u32,
    /// Particle mass (well mode).
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    /// Half-width of the well (well mode).
    #[arg(long, default_value_t = 1.0)]
    halfwidth: f64,
    /// Grid step δ.
    #[arg(long)]
    delta: f64,
    /// Oscillator angular frequency (oscillator mode).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    w: f64,
}

#[derive(Args)]
struct RateArgs {
    /// Energy E transferred.
    #[arg(long, allow_negative_numbers = true)]
    energy: f64,
    /// Elapsed time t.
    #[arg(long)]
    elapsed: f64,
    /// Reference timescale T.
    #[arg(long)]
    scale: f64,
    #[arg(long, default_value_t = 1.0)]
    c: f64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Trial budget for the randomized identity suites.
    #[arg(long, default_value_t = 100_000)]
    trials: usize,
    /// Emit the report as JSON instead of a text table.
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    /// Per-identity tolerance override, `id=value`; repeatable.
    #[arg(long = "tolerance", value_name = "ID=VALUE")]
    tolerances: Vec<String>,
}

fn parse_angle(text: &str) -> Result<f64, String> {
    match text.trim() {
        "pi" => Ok(std::f64::consts::PI),
        "-pi" => Ok(-std::f64::consts::PI),
        other => other
            .parse::<f64>()
            .map_err(|e| format!("invalid angle {other:?}: {e}")),
    }
}

fn parse_triple(text: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated components, got {text:?}"));
    }
    let mut out = [0.0_f64; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("invalid component {part:?}: {e}"))?;
    }
    Ok(out)
}

/// Scalars promote to vectors along the x axis in vector mode.
fn parse_operand(text: &str, c: LightSpeed) -> Result<ComplexVec3, String> {
    if text.contains(',') {
        let [x, y, z] = parse_triple(text)?;
        Ok(ComplexVec3::from_real(x, y, z, c))
    } else {
        let x = text
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("invalid operand {text:?}: {e}"))?;
        Ok(ComplexVec3::from_real(x, 0.0, 0.0, c))
    }
}

fn format_component(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn domain_error(err: &Error) -> ExitCode {
    eprintln!("{}: {err}", err.name());
    ExitCode::from(2)
}

fn run_compose(args: &ComposeArgs) -> ExitCode {
    let c = match LightSpeed::new(args.c) {
        Ok(c) => c,
        Err(e) => return domain_error(&e),
    };
    let vector_mode = args.phi.is_some() || args.axis.is_some() || args.a.contains(',') || args.b.contains(',');
    if vector_mode {
        let u = match parse_operand(&args.a, c) {
            Ok(v) => v,
            Err(m) => return usage_error(&m),
        };
        let v = match parse_operand(&args.b, c) {
            Ok(v) => v,
            Err(m) => return usage_error(&m),
        };
        let angle = match args.phi.as_deref().map(parse_angle).transpose() {
            Ok(a) => a.unwrap_or(0.0),
            Err(m) => return usage_error(&m),
        };
        let axis = match args.axis.as_deref().map(parse_triple).transpose() {
            Ok(a) => a.unwrap_or([1.0, 0.0, 0.0]),
            Err(m) => return usage_error(&m),
        };
        if angle != 0.0 && args.axis.is_none() {
            return usage_error("--phi needs an --axis");
        }
        let rotation = match ReciprocityRotation::normalized(axis, angle) {
            Ok(r) => r,
            Err(e) => return domain_error(&e),
        };
        // the general law composes the relative velocity of the rotated pair
        let w = match general_compose(&u, &v, &rotation) {
            Ok(w) => w,
            Err(e) => return domain_error(&e),
        };
        println!(
            "{} {} {}",
            format_component(w.x),
            format_component(w.y),
            format_component(w.z)
        );
        return ExitCode::SUCCESS;
    }

    let a: f64 = match args.a.parse() {
        Ok(v) => v,
        Err(e) => return usage_error(&format!("invalid operand {:?}: {e}", args.a)),
    };
    let b: f64 = match args.b.parse() {
        Ok(v) => v,
        Err(e) => return usage_error(&format!("invalid operand {:?}: {e}", args.b)),
    };
    let b = if args.difference { -b } else { b };
    let result = match args.space {
        Space::Velocity => {
            let u = Velocity::new(a, c);
            let v = Velocity::new(b, c);
            match (u, v) {
                (Ok(u), Ok(v)) => add_velocity(u, v).map(|w| w.value()),
                (Err(e), _) | (_, Err(e)) => Err(e),
            }
        }
        Space::Slowness => {
            let u = Slowness::new(a, c);
            let v = Slowness::new(b, c);
            match (u, v) {
                (Ok(u), Ok(v)) => add_slowness(u, v).map(|w| w.value()),
                (Err(e), _) | (_, Err(e)) => Err(e),
            }
        }
    };
    match result {
        Ok(w) => {
            println!("{w}");
            ExitCode::SUCCESS
        }
        Err(e) => domain_error(&e),
    }
}

fn run_spectrum(args: &SpectrumArgs) -> ExitCode {
    let c = match LightSpeed::new(args.c) {
        Ok(c) => c,
        Err(e) => return domain_error(&e),
    };
    match spectrum_table(
        args.omega_min,
        args.omega_max,
        args.points,
        args.kt,
        args.stats.into(),
        args.bound,
        c,
    ) {
        Ok(series) => {
            print!("{}", series.to_csv());
            ExitCode::SUCCESS
        }
        Err(e) => domain_error(&e),
    }
}

fn run_levels(args: &LevelsArgs) -> ExitCode {
    match args.mode {
        LevelMode::Well => {
            if args.n == 0 {
                return usage_error("--n must be at least 1 in well mode");
            }
            println!("n energy");
            for n in 1..=args.n {
                match well_energy(n, args.mass, args.halfwidth, args.delta) {
                    Ok(e) => println!("{n} {e}"),
                    Err(e) => return domain_error(&e),
                }
            }
        }
        LevelMode::Oscillator => {
            if !(args.delta.is_finite() && args.delta > 0.0) {
                return usage_error("--delta must be finite and positive");
            }
            println!("n y_sq cross w_sq total");
            for n in 0..=args.n as i64 {
                let terms = oscillator_energy_terms(n, args.delta, args.w);
                println!(
                    "{n} {} {} {} {}",
                    terms.square_well,
                    terms.cross,
                    terms.harmonic,
                    terms.total()
                );
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_rate(args: &RateArgs) -> ExitCode {
    let c = match LightSpeed::new(args.c) {
        Ok(c) => c,
        Err(e) => return domain_error(&e),
    };
    let rate = match TransferRate::new(args.energy, args.elapsed, args.scale, c) {
        Ok(r) => r,
        Err(e) => return domain_error(&e),
    };
    let ratio = args.energy / args.scale;
    if ratio.abs() == c.value() {
        return domain_error(&Error::DomainError(format!(
            "|E/T| = {} sits exactly on the rate bound",
            ratio.abs()
        )));
    }
    match rate_of_transfer(rate) {
        Ok(y) => println!("y = {y}"),
        Err(_) => println!("y = n/a (|E/T| >= c)"),
    }
    match reciprocal_rate(rate) {
        Ok(ys) => println!("y* = {ys}"),
        Err(_) => println!("y* = n/a (|E/T| <= c)"),
    }
    println!("E*t >= c*T^2: {}", rate.heisenberg_holds());
    ExitCode::SUCCESS
}

fn run_verify_cmd(args: &VerifyArgs) -> ExitCode {
    let mut overrides = BTreeMap::new();
    for spec in &args.tolerances {
        let Some((id, value)) = spec.split_once('=') else {
            return usage_error(&format!("expected ID=VALUE, got {spec:?}"));
        };
        let value: f64 = match value.parse() {
            Ok(v) => v,
            Err(e) => return usage_error(&format!("invalid tolerance {value:?}: {e}")),
        };
        overrides.insert(id.trim().to_string(), value);
    }
    let config = RunConfig {
        c: args.c,
        seed: args.seed,
        trials: args.trials,
        tolerance_overrides: overrides,
    };
    let report = match run_verify(&config) {
        Ok(r) => r,
        Err(e) => return domain_error(&e),
    };
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Compose(args) => run_compose(args),
        Command::Spectrum(args) => run_spectrum(args),
        Command::Levels(args) => run_levels(args),
        Command::Rate(args) => run_rate(args),
        Command::Verify(args) => run_verify_cmd(args),
    }
}
