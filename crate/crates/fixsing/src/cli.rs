//! Command-line front end.
//!
//! Every table command echoes the fully resolved configuration into its
//! output, so a run can be repeated from the output alone.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cauchy::{cauchy_frame_kernel, cauchy_solve};
use crate::complete::{solve, KernelSpec, SolveConfig, Truncation};
use crate::error::Error;
use crate::kernels::{
    antiplane_kernel, gamma0_root, plane_strain_kernel, AntiplaneParams, PlaneStrainParams,
};
use crate::load::{Load, LoadKind};
use crate::oracle::{full_residual_with, PvRule};
use crate::spectral::{build_basis, characteristic_series_solve};
use crate::verify::{self, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fixsing",
    version,
    about = "Singular integral equations with fixed endpoint singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Series solution of the characteristic equation over an m0 sweep.
    Characteristic(Flags),
    /// Antiplane crack normal to a bimaterial interface.
    Antiplane(Flags),
    /// Dominant plane-strain equation for the same geometry.
    PlaneStrain(Flags),
    /// Exponent γ₀ over a grid of moduli ratios.
    Gamma0(Flags),
    /// Invariant suites with measured residuals.
    Verify(Flags),
}

#[derive(Debug, Clone, Default, Args)]
struct Flags {
    /// key=value file; flags given on the command line take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// One value or a comma-separated list.
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<f64>>,
    #[arg(long)]
    nu1: Option<f64>,
    #[arg(long)]
    nu2: Option<f64>,
    #[arg(long)]
    load: Option<LoadKind>,
    #[arg(long, allow_hyphen_values = true)]
    amplitude: Option<f64>,
    /// Truncation order; one value or a comma-separated list.
    #[arg(long = "N", value_delimiter = ',')]
    n: Option<Vec<usize>>,
    #[arg(long)]
    t1: Option<usize>,
    #[arg(long)]
    t2: Option<usize>,
    /// Series cut-off; one value or a comma-separated list.
    #[arg(long, value_delimiter = ',')]
    m0: Option<Vec<usize>>,
    /// Number of x intervals in the output profile.
    #[arg(long)]
    grid: Option<usize>,
    /// Nodes of the principal-value rule used for residuals and verification.
    #[arg(long)]
    nodes: Option<usize>,
    #[arg(long)]
    truncation: Option<TruncationArg>,
    /// Verification suites to run (comma-separated).
    #[arg(long, value_delimiter = ',')]
    suite: Option<Vec<String>>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<Format>,
    /// Log informational messages to stderr.
    #[arg(short, long)]
    verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TruncationArg {
    Equations,
    Coefficients,
}

impl From<TruncationArg> for Truncation {
    fn from(t: TruncationArg) -> Self {
        match t {
            TruncationArg::Equations => Truncation::Equations,
            TruncationArg::Coefficients => Truncation::Coefficients,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Characteristic,
    Antiplane,
    PlaneStrain,
    Gamma0,
    Verify,
}

/// Fully resolved parameters of one run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub beta: f64,
    pub lambda: Vec<f64>,
    pub nu1: f64,
    pub nu2: f64,
    pub load: LoadKind,
    pub amplitude: f64,
    #[serde(rename = "N")]
    pub n: Vec<usize>,
    pub t1: usize,
    pub t2: usize,
    pub m0: Vec<usize>,
    pub grid: usize,
    pub nodes: usize,
    pub truncation: Truncation,
    pub suite: Vec<String>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

/// Failure of a CLI run, carrying its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("{0} verification check(s) failed")]
    Verify(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Numerical(_) => EXIT_NUMERIC,
            CliError::Verify(_) => EXIT_VERIFY,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Unsupported(_) => CliError::Config(e.to_string()),
            Error::Singular { .. } | Error::NoBracket | Error::Degenerate(_) => {
                CliError::Numerical(e.to_string())
            }
        }
    }
}

fn cfg_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

// ---------------------------------------------------------------- config

fn parse_list<T: std::str::FromStr>(key: &str, v: &str) -> Result<Vec<T>, CliError> {
    v.split(',')
        .map(|s| {
            s.trim()
                .parse::<T>()
                .map_err(|_| cfg_err(format!("bad value '{s}' for {key}")))
        })
        .collect()
}

fn parse_one<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, CliError> {
    v.trim()
        .parse::<T>()
        .map_err(|_| cfg_err(format!("bad value '{v}' for {key}")))
}

/// Reads a flat `key=value` file. Blank lines and lines starting with `#` are
/// ignored; keys are the long flag names.
fn read_config_file(path: &Path) -> Result<Flags, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| cfg_err(format!("cannot read {}: {e}", path.display())))?;
    parse_config_text(&text)
}

fn parse_config_text(text: &str) -> Result<Flags, CliError> {
    let mut f = Flags::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| cfg_err(format!("line {}: expected key=value, got '{line}'", i + 1)))?;
        let (k, v) = (k.trim(), v.trim());
        match k {
            "beta" => f.beta = Some(parse_one(k, v)?),
            "lambda" => f.lambda = Some(parse_list(k, v)?),
            "nu1" => f.nu1 = Some(parse_one(k, v)?),
            "nu2" => f.nu2 = Some(parse_one(k, v)?),
            "load" => f.load = Some(v.parse::<LoadKind>().map_err(cfg_err)?),
            "amplitude" => f.amplitude = Some(parse_one(k, v)?),
            "N" => f.n = Some(parse_list(k, v)?),
            "t1" => f.t1 = Some(parse_one(k, v)?),
            "t2" => f.t2 = Some(parse_one(k, v)?),
            "m0" => f.m0 = Some(parse_list(k, v)?),
            "grid" => f.grid = Some(parse_one(k, v)?),
            "nodes" => f.nodes = Some(parse_one(k, v)?),
            "truncation" => {
                f.truncation = Some(
                    TruncationArg::from_str(v, true)
                        .map_err(|_| cfg_err(format!("bad truncation '{v}'")))?,
                )
            }
            "suite" => f.suite = Some(v.split(',').map(|s| s.trim().to_string()).collect()),
            "out" => f.out = Some(PathBuf::from(v)),
            "format" => {
                f.format = Some(
                    Format::from_str(v, true).map_err(|_| cfg_err(format!("bad format '{v}'")))?,
                )
            }
            other => return Err(cfg_err(format!("line {}: unknown key '{other}'", i + 1))),
        }
    }
    Ok(f)
}

/// `10^(k/4)`, `k = -12..=12`.
fn default_lambda_grid() -> Vec<f64> {
    (-12..=12).map(|k| 10f64.powf(k as f64 / 4.0)).collect()
}

fn resolve(command: Command, flags: Flags, file: Flags) -> Result<RunConfig, CliError> {
    macro_rules! pick {
        ($field:ident, $default:expr) => {
            flags
                .$field
                .clone()
                .or(file.$field.clone())
                .unwrap_or_else(|| $default)
        };
    }
    let cfg = RunConfig {
        command,
        beta: pick!(beta, 0.5),
        lambda: pick!(
            lambda,
            if command == Command::Gamma0 {
                default_lambda_grid()
            } else {
                vec![0.5]
            }
        ),
        nu1: pick!(nu1, 0.3),
        nu2: pick!(nu2, 0.3),
        load: pick!(load, LoadKind::Uniform),
        amplitude: pick!(amplitude, 1.0),
        n: pick!(
            n,
            vec![if command == Command::PlaneStrain {
                10
            } else {
                17
            }]
        ),
        t1: pick!(t1, 200),
        t2: pick!(t2, 210),
        m0: pick!(m0, vec![5, 10, 15, 20, 22, 25]),
        grid: pick!(grid, 20),
        nodes: pick!(nodes, 512),
        truncation: pick!(truncation, TruncationArg::Equations).into(),
        suite: pick!(suite, Vec::new()),
        out: flags.out.clone().or(file.out.clone()),
        format: pick!(format, Format::Csv),
    };
    validate(&cfg)?;
    Ok(cfg)
}

/// Checks every downstream precondition before any computation starts.
pub fn validate(cfg: &RunConfig) -> Result<(), CliError> {
    if !cfg.amplitude.is_finite() {
        return Err(cfg_err("amplitude must be finite"));
    }
    if cfg.grid < 2 {
        return Err(cfg_err("grid must be at least 2"));
    }
    PvRule::new(cfg.nodes)?;
    match cfg.command {
        Command::Characteristic => {
            if !(cfg.beta.abs() < 1.0 && cfg.beta != 0.0) {
                return Err(cfg_err(format!(
                    "characteristic needs 0 < |beta| < 1, got {}",
                    cfg.beta
                )));
            }
            if cfg.m0.is_empty() {
                return Err(cfg_err("m0 list is empty"));
            }
        }
        Command::Antiplane | Command::PlaneStrain => {
            if cfg.lambda.is_empty() || cfg.n.is_empty() {
                return Err(cfg_err("lambda and N lists must not be empty"));
            }
            for &n in &cfg.n {
                let mut sc = SolveConfig::new(n, cfg.t1, cfg.t2).with_truncation(cfg.truncation);
                sc.pv_nodes = cfg.nodes;
                sc.validate()?;
            }
            check_materials(cfg)?;
        }
        Command::Gamma0 => {
            if cfg.lambda.is_empty() {
                return Err(cfg_err("lambda list is empty"));
            }
            check_materials(cfg)?;
        }
        Command::Verify => {
            for s in &cfg.suite {
                if !verify::SUITES.contains(&s.as_str()) {
                    return Err(cfg_err(format!(
                        "unknown suite '{s}' (expected one of {})",
                        verify::SUITES.join(", ")
                    )));
                }
            }
        }
    }
    Ok(())
}

fn check_materials(cfg: &RunConfig) -> Result<(), CliError> {
    for &l in &cfg.lambda {
        if !(l > 0.0 && l.is_finite()) {
            return Err(cfg_err(format!("lambda must be positive, got {l}")));
        }
        if cfg.command != Command::Antiplane {
            PlaneStrainParams::from_lambda(l, cfg.nu1, cfg.nu2)?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- tables

/// Rows of numbers with named columns and free-form diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub diagnostics: BTreeMap<String, Value>,
}

fn x_grid(cfg: &RunConfig) -> Vec<f64> {
    (0..=cfg.grid).map(|k| k as f64 / cfg.grid as f64).collect()
}

fn profile_table(xs: &[f64], names: Vec<String>, profiles: &[Vec<f64>]) -> Table {
    let mut columns = vec!["x".to_string()];
    columns.extend(names);
    let rows = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            std::iter::once(x)
                .chain(profiles.iter().map(|p| p[i]))
                .collect()
        })
        .collect();
    Table {
        columns,
        rows,
        diagnostics: BTreeMap::new(),
    }
}

pub fn cmd_characteristic(cfg: &RunConfig) -> Result<Table, CliError> {
    let load = Load::new(cfg.load, cfg.amplitude);
    let m_max = *cfg.m0.iter().max().unwrap_or(&0);
    if m_max > 20 {
        log::warn!("m0 = {m_max}: the truncated series is known to lose accuracy beyond about 20");
    }
    let basis = build_basis(cfg.beta, m_max)?;
    let harmonics = 2000;
    let f = load.cosine_coeffs(harmonics);
    let xs = x_grid(cfg);
    let rule = PvRule::new(cfg.nodes)?;
    let kernel = KernelSpec::zero(cfg.beta);
    let fx = |x: f64| load.eval(x);

    let mut profiles = Vec::new();
    let mut names = Vec::new();
    let mut diag = BTreeMap::new();
    let mut constant = 0.0;
    for &m0 in &cfg.m0 {
        let sol = characteristic_series_solve(&basis, &f, m0)?;
        constant = sol.constant_c;
        profiles.push(xs.iter().map(|&x| sol.evaluate(x)).collect());
        names.push(if cfg.m0.len() == 1 {
            "phi".into()
        } else {
            format!("phi_m0_{m0}")
        });
        let res = full_residual_with(&sol, &kernel, &fx, &[0.2, 0.4, 0.6, 0.8], &rule)?;
        diag.insert(
            format!("equation_residual_max_m0_{m0}"),
            json!(res.iter().fold(0.0f64, |m, r| m.max(r.abs()))),
        );
        diag.insert(format!("phi_at_0.5_m0_{m0}"), json!(sol.evaluate(0.5)));
    }
    diag.insert("C".into(), json!(constant));
    let nn = basis.n_coeffs(harmonics);
    for m in [100usize, 1000] {
        let partial = f[0] + 2.0 * (1..=2 * m).map(|n| nn[n] * f[n]).sum::<f64>();
        diag.insert(format!("C_partial_M{m}"), json!(partial));
    }
    let mut t = profile_table(&xs, names, &profiles);
    t.diagnostics = diag;
    Ok(t)
}

struct Profile {
    name: String,
    values: Vec<f64>,
    diagnostics: BTreeMap<String, Value>,
}

fn solve_profile(
    kernel: &KernelSpec,
    load: &Load,
    cfg: &RunConfig,
    n: usize,
    xs: &[f64],
) -> Result<(Vec<f64>, BTreeMap<String, Value>), CliError> {
    let mut sc = SolveConfig::new(n, cfg.t1, cfg.t2).with_truncation(cfg.truncation);
    sc.pv_nodes = cfg.nodes;
    let f = |x: f64| load.eval(x);
    let mut d = BTreeMap::new();
    if kernel.beta() == 0.0 {
        let k = cauchy_frame_kernel(kernel)?;
        let sol = cauchy_solve(k, &f, sc.basis_size(), cfg.t1, cfg.t2)?;
        d.insert("solver".into(), json!("cauchy"));
        d.insert("C".into(), json!(sol.constant_c));
        d.insert("phi_at_0.5".into(), json!(sol.evaluate(0.5)));
        return Ok((xs.iter().map(|&x| sol.evaluate(x)).collect(), d));
    }
    let sol = solve(kernel, &f, &sc)?;
    d.insert("solver".into(), json!("spectral"));
    d.insert("C".into(), json!(sol.constant_c));
    d.insert("phi_at_0.5".into(), json!(sol.evaluate(0.5)));
    for (k, v) in &sol.residual_report {
        d.insert(k.clone(), json!(v));
    }
    Ok((xs.iter().map(|&x| sol.evaluate(x)).collect(), d))
}

fn assemble_profiles(cfg: &RunConfig, xs: &[f64], mut profiles: Vec<Profile>) -> Table {
    let single = profiles.len() == 1;
    let mut diag = BTreeMap::new();
    let mut names = Vec::new();
    let mut values = Vec::new();
    for p in profiles.drain(..) {
        let name = if single { "phi".to_string() } else { p.name };
        for (k, v) in p.diagnostics {
            diag.insert(if single { k } else { format!("{name}.{k}") }, v);
        }
        names.push(name);
        values.push(p.values);
    }
    let _ = cfg;
    let mut t = profile_table(xs, names, &values);
    t.diagnostics = diag;
    t
}

fn sweep(cfg: &RunConfig) -> Vec<(f64, usize)> {
    cfg.lambda
        .iter()
        .flat_map(|&l| cfg.n.iter().map(move |&n| (l, n)))
        .collect()
}

pub fn cmd_antiplane(cfg: &RunConfig) -> Result<Table, CliError> {
    let load = Load::new(cfg.load, cfg.amplitude);
    let xs = x_grid(cfg);
    let profiles: Result<Vec<Profile>, CliError> = sweep(cfg)
        .par_iter()
        .map(|&(lambda, n)| {
            let params = AntiplaneParams::new(lambda)?;
            let (values, mut d) = solve_profile(&antiplane_kernel(&params), &load, cfg, n, &xs)?;
            d.insert("beta".into(), json!(params.beta));
            Ok(Profile {
                name: format!("phi_lambda{lambda}_N{n}"),
                values,
                diagnostics: d,
            })
        })
        .collect();
    Ok(assemble_profiles(cfg, &xs, profiles?))
}

pub fn cmd_plane_strain(cfg: &RunConfig) -> Result<Table, CliError> {
    let load = Load::new(cfg.load, cfg.amplitude);
    let xs = x_grid(cfg);
    let profiles: Result<Vec<Profile>, CliError> = sweep(cfg)
        .par_iter()
        .map(|&(lambda, n)| {
            let mut params = PlaneStrainParams::from_lambda(lambda, cfg.nu1, cfg.nu2)?;
            let g = gamma0_root(&mut params, 1e-14)?;
            let kernel = plane_strain_kernel(&params, false)?;
            let (values, mut d) = solve_profile(&kernel, &load, cfg, n, &xs)?;
            d.insert("gamma0".into(), json!(g));
            d.insert("beta_eff".into(), json!(params.beta_eff));
            Ok(Profile {
                name: format!("phi_lambda{lambda}_N{n}"),
                values,
                diagnostics: d,
            })
        })
        .collect();
    Ok(assemble_profiles(cfg, &xs, profiles?))
}

pub fn cmd_gamma0(cfg: &RunConfig) -> Result<Table, CliError> {
    let rows: Result<Vec<Vec<f64>>, CliError> = cfg
        .lambda
        .par_iter()
        .map(|&l| {
            let mut p = PlaneStrainParams::from_lambda(l, cfg.nu1, cfg.nu2)?;
            let g = gamma0_root(&mut p, 1e-14)?;
            Ok(vec![l, g, p.beta_eff.unwrap_or(f64::NAN)])
        })
        .collect();
    Ok(Table {
        columns: vec!["lambda".into(), "gamma0".into(), "beta_eff".into()],
        rows: rows?,
        diagnostics: BTreeMap::new(),
    })
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Vec<verify::Check>, CliError> {
    Ok(verify::run(&VerifyOptions {
        suites: cfg.suite.clone(),
        nodes: cfg.nodes,
    })?)
}

// ---------------------------------------------------------------- output

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(value_text).collect::<Vec<_>>().join(","),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn metadata(cfg: &RunConfig, diagnostics: &BTreeMap<String, Value>) -> String {
    let mut s = String::new();
    if let Ok(Value::Object(map)) = serde_json::to_value(cfg) {
        for (k, v) in map {
            let _ = writeln!(s, "# {k}={}", value_text(&v));
        }
    }
    for (k, v) in diagnostics {
        let _ = writeln!(s, "# diagnostics.{k}={}", value_text(v));
    }
    s
}

/// CSV with `# key=value` metadata lines, then the header and rows.
pub fn render_csv(cfg: &RunConfig, table: &Table) -> String {
    let mut s = metadata(cfg, &table.diagnostics);
    s.push_str(&table.columns.join(","));
    s.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:e}")).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

pub fn render_json(cfg: &RunConfig, table: &Table) -> String {
    let v = json!({
        "config": cfg,
        "columns": table.columns,
        "rows": table.rows,
        "diagnostics": table.diagnostics,
    });
    serde_json::to_string_pretty(&v).unwrap_or_default() + "\n"
}

fn render_checks(cfg: &RunConfig, checks: &[verify::Check]) -> String {
    let pass = checks.iter().all(|c| c.pass);
    match cfg.format {
        Format::Json => {
            let v = json!({ "config": cfg, "checks": checks, "pass": pass });
            serde_json::to_string_pretty(&v).unwrap_or_default() + "\n"
        }
        Format::Csv => {
            let mut s = metadata(cfg, &BTreeMap::from([("pass".to_string(), json!(pass))]));
            s.push_str("suite,name,measured,tol,pass\n");
            for c in checks {
                let _ = writeln!(
                    s,
                    "{},{},{:e},{:e},{}",
                    c.suite, c.name, c.measured, c.tol, c.pass
                );
            }
            s
        }
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.out {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| cfg_err(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------- driver

struct StderrLogger;

impl log::Log for StderrLogger {
    fn enabled(&self, m: &log::Metadata) -> bool {
        m.level() <= log::max_level()
    }

    fn log(&self, r: &log::Record) {
        if self.enabled(r.metadata()) {
            eprintln!(
                "fixsing: {}: {}",
                r.level().as_str().to_lowercase(),
                r.args()
            );
        }
    }

    fn flush(&self) {}
}

static LOGGER: StderrLogger = StderrLogger;

fn init_logging(verbose: bool) {
    if log::set_logger(&LOGGER).is_ok() {
        log::set_max_level(if verbose {
            log::LevelFilter::Info
        } else {
            log::LevelFilter::Warn
        });
    }
}

/// Parses arguments into a resolved configuration.
pub fn parse_args<I, T>(args: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| cfg_err(e.to_string()))?;
    let (command, flags) = match cli.command {
        CommandArgs::Characteristic(f) => (Command::Characteristic, f),
        CommandArgs::Antiplane(f) => (Command::Antiplane, f),
        CommandArgs::PlaneStrain(f) => (Command::PlaneStrain, f),
        CommandArgs::Gamma0(f) => (Command::Gamma0, f),
        CommandArgs::Verify(f) => (Command::Verify, f),
    };
    init_logging(flags.verbose);
    let file = match &flags.config {
        Some(p) => read_config_file(p)?,
        None => Flags::default(),
    };
    resolve(command, flags, file)
}

/// Runs a resolved configuration and writes its output.
pub fn execute(cfg: &RunConfig) -> Result<(), CliError> {
    let table = match cfg.command {
        Command::Characteristic => cmd_characteristic(cfg)?,
        Command::Antiplane => cmd_antiplane(cfg)?,
        Command::PlaneStrain => cmd_plane_strain(cfg)?,
        Command::Gamma0 => cmd_gamma0(cfg)?,
        Command::Verify => {
            let checks = cmd_verify(cfg)?;
            emit(cfg, &render_checks(cfg, &checks))?;
            let failed = checks.iter().filter(|c| !c.pass).count();
            return if failed == 0 {
                Ok(())
            } else {
                Err(CliError::Verify(failed))
            };
        }
    };
    let text = match cfg.format {
        Format::Csv => render_csv(cfg, &table),
        Format::Json => render_json(cfg, &table),
    };
    emit(cfg, &text)
}

/// Entry point of the `fixsing` binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    // --help and --version are successful runs that clap reports as errors
    if let Err(e) = Cli::try_parse_from(&args) {
        if matches!(
            e.kind(),
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
        ) {
            let _ = e.print();
            return EXIT_OK;
        }
    }
    let result = parse_args(args).and_then(|cfg| execute(&cfg));
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("fixsing: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file = parse_config_text("# comment\nbeta=0.25\nm0=5,10\nformat=json\n").unwrap();
        let flags = Flags {
            beta: Some(0.75),
            ..Flags::default()
        };
        let cfg = resolve(Command::Characteristic, flags, file).unwrap();
        assert_eq!(cfg.beta, 0.75);
        assert_eq!(cfg.m0, vec![5, 10]);
        assert_eq!(cfg.format, Format::Json);
    }

    #[test]
    fn config_errors() {
        assert!(parse_config_text("bogus=1").is_err());
        assert!(parse_config_text("beta").is_err());
        assert!(parse_config_text("N=a,b").is_err());
        let bad = Flags {
            beta: Some(1.5),
            ..Flags::default()
        };
        assert_eq!(
            resolve(Command::Characteristic, bad, Flags::default())
                .unwrap_err()
                .exit_code(),
            EXIT_CONFIG
        );
    }

    #[test]
    fn zero_load_gives_zero_table() {
        let flags = Flags {
            amplitude: Some(0.0),
            m0: Some(vec![5]),
            grid: Some(4),
            ..Flags::default()
        };
        let cfg = resolve(Command::Characteristic, flags, Flags::default()).unwrap();
        let t = cmd_characteristic(&cfg).unwrap();
        assert!(t.rows.iter().all(|r| r[1] == 0.0));
    }
}
