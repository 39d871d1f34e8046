//! Flag parsing, config-file merging, and pipeline construction.
//!
//! Every knob can come from three places, in order of precedence: the command
//! line, the JSON file named by `GFT_CONFIG`, and the built-in default.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use clap::Args;
use gft_core::{
    alexander, cesaro_beta, hornich_add, hornich_scale, j_gamma, AnalyticFn, Complex64,
    DiskFunction, DiskGrid, DEFAULT_DEGREE,
};
use serde::Deserialize;

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_ENGINE: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Engine(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Engine(_) => EXIT_ENGINE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Engine(m) => write!(f, "numerical engine: {m}"),
        }
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Human,
    Json,
    Csv,
}

/// Flags shared by every verb.
#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Taylor truncation degree for coefficient computations
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Largest sampled radius, in (0, 1)
    #[arg(long, global = true)]
    pub rmax: Option<f64>,
    /// Number of radii in the sampling ladder
    #[arg(long, global = true)]
    pub radii: Option<usize>,
    /// Number of equally spaced angles
    #[arg(long, global = true)]
    pub angles: Option<usize>,
    /// Local refinement rounds around a scan's best cell
    #[arg(long, global = true)]
    pub refine: Option<usize>,
    /// Emit one JSON document instead of tables
    #[arg(long, global = true)]
    pub json: bool,
    /// Emit CSV rows instead of tables
    #[arg(long, global = true)]
    pub csv: bool,
    /// Run independent scenarios on separate threads
    #[arg(long, global = true)]
    pub parallel: bool,
    /// Seed for randomized sample checks
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// JSON file mapping "scenario-id/check-id" to a replacement tolerance
    #[arg(long = "tol-overrides", global = true, value_name = "FILE")]
    pub tol_overrides: Option<PathBuf>,
    /// Comma-separated order sweep used by sweeping scenarios
    #[arg(long, global = true, allow_hyphen_values = true, value_name = "LIST")]
    pub lambdas: Option<String>,
    /// Comma-separated tilt sweep used by sweeping scenarios
    #[arg(long, global = true, allow_hyphen_values = true, value_name = "LIST")]
    pub alphas: Option<String>,
    /// Comma-separated averaging-order sweep used by sweeping scenarios
    #[arg(long, global = true, allow_hyphen_values = true, value_name = "LIST")]
    pub betas: Option<String>,
}

/// Source function and optional transform, shared by the point verbs.
#[derive(Debug, Args)]
pub struct PipelineOpts {
    /// Catalog function name (koebe_order, half_plane, neg_log,
    /// convex_extremal, spiral_extremal, royster_example, power_map)
    #[arg(long = "fn", value_name = "NAME", default_value = "half_plane")]
    pub func: String,
    /// Order parameter for the chosen catalog family
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    /// Tilt parameter for spiral_extremal
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Exponent for power_map, written like "1+2i"
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Transform to apply (alexander, hornich-scale, hornich-add, j-gamma,
    /// cesaro); hyphens and underscores are interchangeable
    #[arg(long)]
    pub op: Option<String>,
    /// Scalar for hornich-scale / j-gamma, written like "0.5-0.25i"
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    /// Averaging order for cesaro
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Partner catalog function for hornich-add
    #[arg(long = "with", value_name = "NAME")]
    pub partner: Option<String>,
    #[arg(long = "with-lambda", allow_hyphen_values = true, help = "Order parameter for --with")]
    pub with_lambda: Option<f64>,
    #[arg(long = "with-alpha", allow_hyphen_values = true, help = "Tilt parameter for --with")]
    pub with_alpha: Option<f64>,
    #[arg(long = "with-mu", allow_hyphen_values = true, help = "Exponent for --with")]
    pub with_mu: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    degree: Option<usize>,
    rmax: Option<f64>,
    radii: Option<usize>,
    angles: Option<usize>,
    refine: Option<usize>,
    json: Option<bool>,
    csv: Option<bool>,
    parallel: Option<bool>,
    seed: Option<u64>,
    tol_overrides: Option<String>,
    lambdas: Option<Vec<f64>>,
    alphas: Option<Vec<f64>>,
    betas: Option<Vec<f64>>,
}

/// Fully resolved run configuration.
#[derive(Debug, Clone)]
pub struct Settings {
    pub degree: usize,
    pub grid: DiskGrid,
    pub seed: u64,
    pub parallel: bool,
    pub format: OutputFormat,
    pub tol: HashMap<String, f64>,
    pub lambdas: Vec<f64>,
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
}

fn load_file_config() -> Result<FileConfig, CliError> {
    let Some(path) = std::env::var_os("GFT_CONFIG") else {
        return Ok(FileConfig::default());
    };
    let text = fs::read_to_string(&path)
        .map_err(|e| usage(format!("cannot read GFT_CONFIG {}: {e}", path.to_string_lossy())))?;
    serde_json::from_str(&text)
        .map_err(|e| usage(format!("invalid GFT_CONFIG {}: {e}", path.to_string_lossy())))
}

fn load_tol_overrides(path: &std::path::Path) -> Result<HashMap<String, f64>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read tolerance overrides {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| usage(format!("invalid tolerance overrides {}: {e}", path.display())))
}

fn parse_sweep(text: &str, what: &str) -> Result<Vec<f64>, CliError> {
    let vals: Result<Vec<f64>, _> = text.split(',').map(|s| s.trim().parse::<f64>()).collect();
    let vals = vals.map_err(|e| usage(format!("invalid {what} sweep '{text}': {e}")))?;
    if vals.is_empty() {
        return Err(usage(format!("{what} sweep must not be empty")));
    }
    Ok(vals)
}

impl Settings {
    pub fn resolve(opts: &GlobalOpts) -> Result<Self, CliError> {
        let cfg = load_file_config()?;
        if opts.json && opts.csv {
            return Err(usage("--json and --csv are mutually exclusive"));
        }
        let format = if opts.json || (!opts.csv && cfg.json.unwrap_or(false)) {
            OutputFormat::Json
        } else if opts.csv || cfg.csv.unwrap_or(false) {
            OutputFormat::Csv
        } else {
            OutputFormat::Human
        };
        let defaults = DiskGrid::default();
        let grid = DiskGrid {
            r_max: opts.rmax.or(cfg.rmax).unwrap_or(defaults.r_max),
            radii: opts.radii.or(cfg.radii).unwrap_or(defaults.radii),
            angles: opts.angles.or(cfg.angles).unwrap_or(defaults.angles),
            refine: opts.refine.or(cfg.refine).unwrap_or(defaults.refine),
        };
        grid.validate().map_err(usage)?;
        let tol_path = opts
            .tol_overrides
            .clone()
            .or_else(|| cfg.tol_overrides.as_deref().map(PathBuf::from));
        let tol = match tol_path {
            Some(p) => load_tol_overrides(&p)?,
            None => HashMap::new(),
        };
        let lambdas = match &opts.lambdas {
            Some(t) => parse_sweep(t, "order")?,
            None => cfg.lambdas.unwrap_or_else(|| vec![-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75]),
        };
        let alphas = match &opts.alphas {
            Some(t) => parse_sweep(t, "tilt")?,
            None => cfg.alphas.unwrap_or_else(|| vec![0.0, 0.5, -0.5, 1.2, -1.2]),
        };
        let betas = match &opts.betas {
            Some(t) => parse_sweep(t, "averaging-order")?,
            None => cfg.betas.unwrap_or_else(|| vec![0.0, 0.5, 1.0, 1.5, 2.0, 3.0]),
        };
        Ok(Settings {
            degree: opts.degree.or(cfg.degree).unwrap_or(DEFAULT_DEGREE),
            grid,
            seed: opts.seed.or(cfg.seed).unwrap_or(17),
            parallel: opts.parallel || cfg.parallel.unwrap_or(false),
            format,
            tol,
            lambdas,
            alphas,
            betas,
        })
    }
}

/// Accepts plain reals and "a+bi" forms ("1.5", "-2i", "0.5-0.25i", "i").
pub fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let t = text.trim();
    if let Ok(x) = f64::from_str(t) {
        return Ok(Complex64::new(x, 0.0));
    }
    Complex64::from_str(t).map_err(|_| {
        usage(format!("cannot parse '{text}' as a complex number (use forms like 1.5, -2i, 0.5-0.25i)"))
    })
}

fn build_source(
    name: &str,
    lambda: Option<f64>,
    alpha: Option<f64>,
    mu: Option<&str>,
) -> Result<Arc<dyn DiskFunction>, CliError> {
    let canonical = name.replace('-', "_");
    let mu = mu.map(parse_complex).transpose()?;
    AnalyticFn::build_named(&canonical, lambda, alpha, mu)
        .map(|f| Arc::new(f) as Arc<dyn DiskFunction>)
        .map_err(|e| usage(e.to_string()))
}

/// Resolves `--fn`/`--op` flags into an evaluator. Construction failures are
/// configuration errors: they describe invalid parameters, not numerics.
pub fn build_pipeline(spec: &PipelineOpts) -> Result<Arc<dyn DiskFunction>, CliError> {
    let source = build_source(&spec.func, spec.lambda, spec.alpha, spec.mu.as_deref())?;
    let Some(op) = &spec.op else {
        return Ok(source);
    };
    let gamma = || -> Result<Complex64, CliError> {
        let g = spec.gamma.as_deref().ok_or_else(|| usage(format!("--op {op} needs --gamma")))?;
        parse_complex(g)
    };
    let t = match op.replace('-', "_").as_str() {
        "alexander" => alexander(source),
        "hornich_scale" => hornich_scale(gamma()?, source),
        "hornich_add" => {
            let name = spec
                .partner
                .as_deref()
                .ok_or_else(|| usage("--op hornich-add needs --with <catalog name>"))?;
            let partner =
                build_source(name, spec.with_lambda, spec.with_alpha, spec.with_mu.as_deref())?;
            hornich_add(source, partner)
        }
        "j_gamma" => j_gamma(gamma()?, source),
        "cesaro" | "cesaro_beta" => {
            let beta = spec.beta.ok_or_else(|| usage("--op cesaro needs --beta"))?;
            cesaro_beta(beta, source)
        }
        other => return Err(usage(format!("unknown transform '{other}'"))),
    };
    t.map(|t| Arc::new(t) as Arc<dyn DiskFunction>).map_err(|e| usage(e.to_string()))
}
