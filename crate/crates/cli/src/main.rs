//! kgscan: reports and ratio scans for a spinless relativistic charge in a
//! Coulomb field, against its non-relativistic counterpart.
//!
//! Exit codes: 0 success, 2 invalid arguments, 3 physics-domain error
//! (supercritical coupling), 4 integration failure.

use clap::{Args, Parser, Subcommand};
use kg_coulomb_cli::config::Config;
use kg_coulomb_cli::scan;
use kg_coulomb::{
    fisher, heisenberg, kg_density, kg_params, make_state, make_system_with_alpha, sch_density,
    sch_energy, sch_moments, shannon_report, Error, QuantumState, SystemSpec, Theory,
    FINE_STRUCTURE_CONSTANT, FISHER_TOL, PION_MASS, SHANNON_TOL,
};
use scan::{build_grid, Axis, Family, Measure, OutputFormat, RangeSpec, ScanPlan};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_INVALID_ARGS: u8 = 2;
const EXIT_PHYSICS: u8 = 3;
const EXIT_INTEGRATION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "kgscan",
    version,
    about = "Klein-Gordon vs Schrödinger Coulomb bound states: reports, ratio scans, density profiles"
)]
struct Cli {
    /// key=value configuration file; explicit flags take precedence
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one state: energies, derived parameters, moments and
    /// information measures in both theories, with all ratios
    State(StateArgs),
    /// Ratio scan over n, l, Z or m, emitted as a CSV or JSON table
    Scan(ScanArgs),
    /// Radial density samples of both theories for external plotting
    DensityProfile(ProfileArgs),
}

#[derive(Args)]
struct CommonPhysics {
    /// Nuclear charge (positive real)
    #[arg(long = "Z")]
    z: Option<f64>,
    /// Particle mass in atomic units [default: 273.132054, the pi- meson]
    #[arg(long)]
    mass: Option<f64>,
    /// Fine-structure constant override
    #[arg(long)]
    alpha: Option<f64>,
}

#[derive(Args)]
struct StateArgs {
    #[command(flatten)]
    physics: CommonPhysics,
    /// Principal quantum number
    #[arg(long)]
    n: Option<i64>,
    /// Orbital quantum number [default: 0]
    #[arg(long)]
    l: Option<i64>,
    /// Magnetic quantum number [default: 0]
    #[arg(long)]
    m: Option<i64>,
    /// Relative integration tolerance for the information measures
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    physics: CommonPhysics,
    /// Scan axis
    #[arg(long, value_enum)]
    axis: Option<Axis>,
    /// Inclusive grid a:b:step along the axis
    #[arg(long)]
    range: Option<String>,
    /// State family along an n scan [default: fixed]
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Comma-separated list: centroid,variance,shannon-power,fisher [default: all]
    #[arg(long)]
    measures: Option<String>,
    /// Fixed principal quantum number (axes l, Z, m)
    #[arg(long)]
    n: Option<i64>,
    /// Fixed orbital quantum number
    #[arg(long)]
    l: Option<i64>,
    /// Fixed magnetic quantum number [default: 0]
    #[arg(long)]
    m: Option<i64>,
    /// Relative integration tolerance for the information measures
    #[arg(long)]
    tol: Option<f64>,
    /// Output format [default: csv]
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Output file; stdout when omitted
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ProfileArgs {
    #[command(flatten)]
    physics: CommonPhysics,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    l: Option<i64>,
    #[arg(long)]
    m: Option<i64>,
    /// Smallest radius [default: 1e-3 of the bound-state length scale]
    #[arg(long)]
    r_min: Option<f64>,
    /// Largest radius [default: 40 length scales]
    #[arg(long)]
    r_max: Option<f64>,
    /// Number of grid points [default: 500]
    #[arg(long)]
    points: Option<usize>,
    /// Grid spacing: log or linear [default: log]
    #[arg(long)]
    spacing: Option<String>,
    /// Output file; stdout when omitted
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

struct CliError {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> CliError {
    CliError {
        code,
        message: message.into(),
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> CliError {
        let code = match err {
            Error::InvalidArgument(_) | Error::InvalidQuantumNumbers(_) => EXIT_INVALID_ARGS,
            Error::SupercriticalCharge { .. } | Error::Domain(_) | Error::FisherUndefined(_) => {
                EXIT_PHYSICS
            }
            Error::IntegrandFailure { .. } | Error::IntegrationFailure { .. } => EXIT_INTEGRATION,
        };
        fail(code, err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> CliError {
        fail(1, format!("i/o error: {err}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::State(args) => cmd_state(args, cli.config),
        Command::Scan(args) => cmd_scan(args, cli.config),
        Command::DensityProfile(args) => cmd_density_profile(args, cli.config),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("kgscan: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn load_config(path: Option<PathBuf>) -> Result<Config, CliError> {
    match path {
        Some(path) => Config::load(&path).map_err(|e| fail(EXIT_INVALID_ARGS, e)),
        None => Ok(Config::default()),
    }
}

struct Physics {
    system: SystemSpec,
}

fn resolve_physics(args: &CommonPhysics, cfg: &Config) -> Result<Physics, CliError> {
    let bad = |e: String| fail(EXIT_INVALID_ARGS, e);
    let z = args
        .z
        .or(cfg.get_f64("Z").map_err(bad)?)
        .ok_or_else(|| fail(EXIT_INVALID_ARGS, "--Z is required"))?;
    let mass = args
        .mass
        .or(cfg.get_f64("mass").map_err(bad)?)
        .unwrap_or(PION_MASS);
    let alpha = args
        .alpha
        .or(cfg.get_f64("alpha").map_err(bad)?)
        .unwrap_or(FINE_STRUCTURE_CONSTANT);
    Ok(Physics {
        system: make_system_with_alpha(z, mass, alpha)?,
    })
}

fn resolve_state(
    n: Option<i64>,
    l: Option<i64>,
    m: Option<i64>,
    cfg: &Config,
) -> Result<QuantumState, CliError> {
    let bad = |e: String| fail(EXIT_INVALID_ARGS, e);
    let n = n
        .or(cfg.get_i64("n").map_err(bad)?)
        .ok_or_else(|| fail(EXIT_INVALID_ARGS, "--n is required"))?;
    let l = l.or(cfg.get_i64("l").map_err(bad)?).unwrap_or(0);
    let m = m.or(cfg.get_i64("m").map_err(bad)?).unwrap_or(0);
    Ok(make_state(n, l, m)?)
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    match path {
        Some(path) => Ok(Box::new(std::io::BufWriter::new(std::fs::File::create(
            path,
        )?))),
        None => Ok(Box::new(std::io::BufWriter::new(std::io::stdout()))),
    }
}

fn cmd_state(args: StateArgs, config: Option<PathBuf>) -> Result<(), CliError> {
    let cfg = load_config(config)?;
    let physics = resolve_physics(&args.physics, &cfg)?;
    let state = resolve_state(args.n, args.l, args.m, &cfg)?;
    let system = physics.system;
    let tol = args
        .tol
        .or(cfg.get_f64("tol").map_err(|e| fail(EXIT_INVALID_ARGS, e))?);

    let params = kg_params(&system, &state)?;
    let kg_m = heisenberg(&system, &state)?;
    let sch_m = sch_moments(&system, &state);
    let kg_s = shannon_report(&system, &state, Theory::KleinGordon, tol.unwrap_or(SHANNON_TOL))?;
    let sch_s = shannon_report(&system, &state, Theory::Schrodinger, tol.unwrap_or(SHANNON_TOL))?;
    let fisher_tol = tol.unwrap_or(FISHER_TOL);
    let kg_f = match fisher(&system, &state, Theory::KleinGordon, fisher_tol) {
        Ok(v) => Some(v),
        Err(Error::FisherUndefined(_)) => None,
        Err(err) => return Err(err.into()),
    };
    let sch_f = fisher(&system, &state, Theory::Schrodinger, fisher_tol)?;

    let mut out = std::io::BufWriter::new(std::io::stdout());
    let w = &mut out;
    writeln!(
        w,
        "system: Z={} mass={} alpha={} (c={:.9})",
        system.z,
        system.mass,
        system.alpha,
        system.speed_of_light()
    )?;
    writeln!(w, "state: n={} l={} m={}", state.n, state.l, state.m)?;
    writeln!(w, "klein-gordon parameters:")?;
    writeln!(w, "  gamma          = {:.12e}", params.gamma)?;
    writeln!(w, "  l_eff          = {:.12e}", params.l_eff)?;
    writeln!(w, "  lambda         = {:.12e}", params.lambda)?;
    writeln!(w, "  beta           = {:.12e}", params.beta)?;
    writeln!(w, "  norm_sq        = {:.12e}", params.norm_sq)?;
    writeln!(w, "energies:")?;
    writeln!(w, "  kg energy      = {:.12e}", params.energy)?;
    writeln!(
        w,
        "  kg binding     = {:.12e}",
        system.rest_energy() - params.energy
    )?;
    writeln!(w, "  sch energy     = {:.12e}", sch_energy(&system, &state))?;
    writeln!(w, "moments (kg | sch | kg/sch):")?;
    for (label, kg, sch) in [
        ("<r>    ", kg_m.r_mean, sch_m.r_mean),
        ("<r^2>  ", kg_m.r2, sch_m.r2),
        ("sigma^2", kg_m.sigma2, sch_m.sigma2),
    ] {
        writeln!(
            w,
            "  {label}        = {kg:.12e} | {sch:.12e} | {:.9}",
            kg / sch
        )?;
    }
    writeln!(w, "shannon (kg | sch):")?;
    writeln!(
        w,
        "  radial         = {:.12e} | {:.12e}",
        kg_s.shannon_radial, sch_s.shannon_radial
    )?;
    writeln!(
        w,
        "  angular        = {:.12e} | {:.12e}",
        kg_s.shannon_angular, sch_s.shannon_angular
    )?;
    writeln!(
        w,
        "  total          = {:.12e} | {:.12e}",
        kg_s.shannon_total, sch_s.shannon_total
    )?;
    writeln!(
        w,
        "  entropic power = {:.12e} | {:.12e} | ratio {:.9}",
        kg_s.entropic_power,
        sch_s.entropic_power,
        kg_s.entropic_power / sch_s.entropic_power
    )?;
    writeln!(w, "fisher (sch/kg orientation):")?;
    match kg_f {
        Some(kg) => {
            writeln!(w, "  kg             = {kg:.12e}")?;
            writeln!(w, "  sch            = {sch_f:.12e}")?;
            writeln!(w, "  ratio          = {:.9}", sch_f / kg)?;
        }
        None => {
            writeln!(w, "  kg             = undefined (S-state integral diverges)")?;
            writeln!(w, "  sch            = {sch_f:.12e}")?;
            writeln!(w, "  ratio          = undefined")?;
        }
    }
    Ok(())
}

fn cmd_scan(args: ScanArgs, config: Option<PathBuf>) -> Result<(), CliError> {
    let cfg = load_config(config)?;
    let bad = |e: String| fail(EXIT_INVALID_ARGS, e);

    let axis = args
        .axis
        .or_else(|| match cfg.get_string("axis").as_deref() {
            Some("n") => Some(Axis::N),
            Some("l") => Some(Axis::L),
            Some("Z") | Some("z") => Some(Axis::Z),
            Some("m") => Some(Axis::M),
            _ => None,
        })
        .ok_or_else(|| fail(EXIT_INVALID_ARGS, "--axis is required (one of n, l, Z, m)"))?;
    let range_text = args
        .range
        .or_else(|| cfg.get_string("range"))
        .ok_or_else(|| fail(EXIT_INVALID_ARGS, "--range a:b:step is required"))?;
    let range = RangeSpec::parse(&range_text).map_err(bad)?;
    let family = args
        .family
        .or_else(|| match cfg.get_string("family").as_deref() {
            Some("circular") => Some(Family::Circular),
            Some("sstate") => Some(Family::Sstate),
            Some("fixed") => Some(Family::Fixed),
            _ => None,
        })
        .unwrap_or(Family::Fixed);
    let measures = match args.measures.or_else(|| cfg.get_string("measures")) {
        Some(list) => Measure::parse_list(&list).map_err(bad)?,
        None => Measure::ALL.to_vec(),
    };
    let format = args
        .format
        .or_else(|| match cfg.get_string("format").as_deref() {
            Some("csv") => Some(OutputFormat::Csv),
            Some("json") => Some(OutputFormat::Json),
            _ => None,
        })
        .unwrap_or(OutputFormat::Csv);

    let z = args.physics.z.or(cfg.get_f64("Z").map_err(bad)?);
    let mass = args
        .physics
        .mass
        .or(cfg.get_f64("mass").map_err(bad)?)
        .unwrap_or(PION_MASS);
    let alpha = args
        .physics
        .alpha
        .or(cfg.get_f64("alpha").map_err(bad)?)
        .unwrap_or(FINE_STRUCTURE_CONSTANT);
    let n = args.n.or(cfg.get_i64("n").map_err(bad)?);
    let l = args.l.or(cfg.get_i64("l").map_err(bad)?);
    let m = args.m.or(cfg.get_i64("m").map_err(bad)?);
    let tol = args.tol.or(cfg.get_f64("tol").map_err(bad)?);
    let out = args.out.or_else(|| cfg.get_string("out").map(PathBuf::from));

    let grid = build_grid(axis, family, range, z, n, l, m).map_err(bad)?;
    let plan = ScanPlan {
        grid,
        measures,
        mass,
        alpha,
        tol,
    };
    let rows = scan::run_scan(&plan);

    let mut writer = open_output(&out)?;
    let records: Vec<_> = rows.iter().map(|(record, _)| record.clone()).collect();
    scan::write_records(&mut writer, format, &records)?;
    writer.flush()?;
    for (_, note) in &rows {
        if let Some(note) = note {
            eprintln!("kgscan: {note}");
        }
    }
    Ok(())
}

fn cmd_density_profile(args: ProfileArgs, config: Option<PathBuf>) -> Result<(), CliError> {
    let cfg = load_config(config)?;
    let bad = |e: String| fail(EXIT_INVALID_ARGS, e);
    let physics = resolve_physics(&args.physics, &cfg)?;
    let state = resolve_state(args.n, args.l, args.m, &cfg)?;
    let system = physics.system;

    let kg = kg_density(&system, &state)?;
    let sch = sch_density(&system, &state)?;
    let scale = kg.decay_scale;
    let r_min = args
        .r_min
        .or(cfg.get_f64("r_min").map_err(bad)?)
        .unwrap_or(1e-3 * scale);
    let r_max = args
        .r_max
        .or(cfg.get_f64("r_max").map_err(bad)?)
        .unwrap_or(40.0 * scale);
    let points = args
        .points
        .or(cfg.get_usize("points").map_err(bad)?)
        .unwrap_or(500);
    let spacing = args
        .spacing
        .or_else(|| cfg.get_string("spacing"))
        .unwrap_or_else(|| "log".into());
    if !r_min.is_finite() || !r_max.is_finite() || r_min <= 0.0 || r_max <= r_min {
        return Err(fail(
            EXIT_INVALID_ARGS,
            format!("density profile needs 0 < r_min < r_max, got [{r_min}, {r_max}]"),
        ));
    }
    if points < 2 {
        return Err(fail(EXIT_INVALID_ARGS, "at least two grid points required"));
    }

    let grid: Vec<f64> = match spacing.as_str() {
        "log" => {
            let ratio = (r_max / r_min).ln() / (points - 1) as f64;
            (0..points)
                .map(|i| r_min * (ratio * i as f64).exp())
                .collect()
        }
        "linear" => {
            let step = (r_max - r_min) / (points - 1) as f64;
            (0..points).map(|i| r_min + step * i as f64).collect()
        }
        other => {
            return Err(fail(
                EXIT_INVALID_ARGS,
                format!("spacing must be log or linear, got {other:?}"),
            ))
        }
    };

    let out = args.out.or_else(|| cfg.get_string("out").map(PathBuf::from));
    let mut writer = open_output(&out)?;
    writeln!(writer, "r,d_kg,d_sch")?;
    for &r in &grid {
        let dk = kg.value(r);
        let ds = sch.value(r);
        if !dk.is_finite() || !ds.is_finite() {
            return Err(Error::IntegrandFailure { abscissa: r }.into());
        }
        writeln!(writer, "{r},{dk},{ds}")?;
    }
    writer.flush()?;
    Ok(())
}
