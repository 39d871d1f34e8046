//! `gft` — scenario verifier and point tools for the disk-function toolkit.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
//! configuration error, 3 numerical-engine error.

mod report;
mod scenarios;
mod settings;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gft_core::{
    membership_margin, norm_estimate, radial_norm_limit, univalence_falsify, value_scale,
    ClassSpec, Complex64, EvalError,
};
use serde_json::{json, Value};

use report::{
    collision_value, complex_value, config_echo, render_human, report_value, write_checks_csv,
    ScenarioReport,
};
use scenarios::{run_scenario, Scenario, REGISTRY};
use settings::{
    build_pipeline, parse_complex, usage, CliError, GlobalOpts, OutputFormat, PipelineOpts,
    Settings, EXIT_CHECK_FAILED,
};

#[derive(Parser)]
#[command(name = "gft", version, about = "Verify geometric-function-theory claims on the unit disk")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the registered scenarios
    List,
    /// Run one scenario by id, or all of them
    Verify {
        /// Scenario id, or "all"
        id: String,
    },
    /// Print transform coefficients, and optionally sampled values
    Transform {
        #[command(flatten)]
        spec: PipelineOpts,
        /// Also evaluate at these points (repeatable), written like "0.3+0.1i"
        #[arg(long = "at", value_name = "POINT", allow_hyphen_values = true)]
        at: Vec<String>,
    },
    /// Estimate the pre-Schwarzian norm over the sampling grid
    Norm {
        #[command(flatten)]
        spec: PipelineOpts,
        /// Also extrapolate the boundary limit along this direction
        #[arg(long, value_name = "DIRECTION", allow_hyphen_values = true)]
        radial: Option<String>,
    },
    /// Measure the membership margin in a geometric family
    Check {
        #[command(flatten)]
        spec: PipelineOpts,
        /// Family: convex, starlike, spirallike, or kaplan
        #[arg(long)]
        class: String,
        /// Order threshold lambda (defaults to 0)
        #[arg(long, allow_hyphen_values = true)]
        order: Option<f64>,
        /// Spiral tilt alpha for --class spirallike (defaults to 0)
        #[arg(long, allow_hyphen_values = true)]
        tilt: Option<f64>,
    },
    /// Search for two separated points sharing one value
    Falsify {
        #[command(flatten)]
        spec: PipelineOpts,
        /// Value tolerance; defaults to 1e-4 times the median sampled |f|
        #[arg(long)]
        eps: Option<f64>,
        /// Minimum separation between the two points
        #[arg(long)]
        delta: Option<f64>,
    },
}

fn main() -> ExitCode {
    // Die quietly on closed pipes (`gft ... | head`) like other line tools.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let settings = match Settings::resolve(&cli.global) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    match dispatch(cli.cmd, &settings) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn engine(e: EvalError) -> CliError {
    CliError::Engine(e.to_string())
}

fn dispatch(cmd: Cmd, settings: &Settings) -> Result<u8, CliError> {
    match cmd {
        Cmd::List => cmd_list(settings),
        Cmd::Verify { id } => cmd_verify(&id, settings),
        Cmd::Transform { spec, at } => cmd_transform(&spec, &at, settings),
        Cmd::Norm { spec, radial } => cmd_norm(&spec, radial.as_deref(), settings),
        Cmd::Check { spec, class, order, tilt } => cmd_check(&spec, &class, order, tilt, settings),
        Cmd::Falsify { spec, eps, delta } => cmd_falsify(&spec, eps, delta, settings),
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_list(settings: &Settings) -> Result<u8, CliError> {
    match settings.format {
        OutputFormat::Json => {
            let items: Vec<Value> = REGISTRY
                .iter()
                .map(|s| json!({"id": s.id, "description": s.description, "claim": s.claim}))
                .collect();
            print_json(&Value::Array(items));
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["id", "description", "claim"]).map_err(csv_err)?;
            for s in REGISTRY {
                w.write_record([s.id, s.description, s.claim]).map_err(csv_err)?;
            }
            w.flush().map_err(|e| usage(e.to_string()))?;
        }
        OutputFormat::Human => {
            for s in REGISTRY {
                println!("{:<26} {}", s.id, s.description);
            }
        }
    }
    Ok(0)
}

fn csv_err(e: csv::Error) -> CliError {
    usage(format!("csv output failed: {e}"))
}

fn cmd_verify(id: &str, settings: &Settings) -> Result<u8, CliError> {
    let selected: Vec<&'static Scenario> = if id == "all" {
        REGISTRY.iter().collect()
    } else {
        vec![scenarios::find(id).ok_or_else(|| {
            usage(format!("unknown scenario '{id}'; run `gft list` for the registry"))
        })?]
    };
    let reports: Vec<ScenarioReport> = if settings.parallel && selected.len() > 1 {
        let mut slots: Vec<Option<ScenarioReport>> = Vec::new();
        slots.resize_with(selected.len(), || None);
        std::thread::scope(|scope| {
            let handles: Vec<_> = selected
                .iter()
                .map(|sc| scope.spawn(move || run_scenario(sc, settings)))
                .collect();
            for (slot, h) in slots.iter_mut().zip(handles) {
                *slot = Some(h.join().expect("scenario thread panicked"));
            }
        });
        slots.into_iter().map(|r| r.expect("joined")).collect()
    } else {
        selected.iter().map(|sc| run_scenario(sc, settings)).collect()
    };

    let echo = config_echo(settings);
    match settings.format {
        OutputFormat::Json => {
            let doc = json!({
                "passed": reports.iter().all(|r| r.passed()),
                "reports": reports.iter().map(|r| report_value(r, &echo)).collect::<Vec<_>>(),
            });
            print_json(&doc);
        }
        OutputFormat::Csv => write_checks_csv(&reports, std::io::stdout()).map_err(csv_err)?,
        OutputFormat::Human => {
            let mut out = std::io::stdout().lock();
            for r in &reports {
                render_human(r, &mut out).map_err(|e| usage(e.to_string()))?;
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            let errored = reports.iter().filter(|r| r.errored()).count();
            writeln!(
                out,
                "verified {} scenario(s): {} passed, {} failed, {} errored",
                reports.len(),
                passed,
                reports.len() - passed,
                errored
            )
            .map_err(|e| usage(e.to_string()))?;
        }
    }
    if reports.iter().any(|r| r.errored()) {
        Ok(CliError::Engine(String::new()).exit_code())
    } else if reports.iter().all(|r| r.passed()) {
        Ok(0)
    } else {
        Ok(EXIT_CHECK_FAILED)
    }
}

fn cmd_transform(spec: &PipelineOpts, at: &[String], settings: &Settings) -> Result<u8, CliError> {
    let f = build_pipeline(spec)?;
    let poly = f.taylor(settings.degree).map_err(engine)?;
    let points: Vec<Complex64> = at.iter().map(|s| parse_complex(s)).collect::<Result<_, _>>()?;
    let values: Vec<(Complex64, Complex64)> =
        points.iter().map(|&z| f.value(z).map(|v| (z, v)).map_err(engine)).collect::<Result<_, _>>()?;
    match settings.format {
        OutputFormat::Json => {
            let doc = json!({
                "function": f.describe(),
                "degree": poly.degree(),
                "coefficients": serde_json::to_value(&poly).expect("serializable"),
                "values": values
                    .iter()
                    .map(|(z, v)| json!({"z": complex_value(*z), "value": complex_value(*v)}))
                    .collect::<Vec<_>>(),
            });
            print_json(&doc);
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            if values.is_empty() {
                w.write_record(["k", "re", "im"]).map_err(csv_err)?;
                for (k, c) in poly.coeffs().iter().enumerate() {
                    w.write_record([k.to_string(), c.re.to_string(), c.im.to_string()])
                        .map_err(csv_err)?;
                }
            } else {
                w.write_record(["z_re", "z_im", "re", "im"]).map_err(csv_err)?;
                for (z, v) in &values {
                    w.write_record([
                        z.re.to_string(),
                        z.im.to_string(),
                        v.re.to_string(),
                        v.im.to_string(),
                    ])
                    .map_err(csv_err)?;
                }
            }
            w.flush().map_err(|e| usage(e.to_string()))?;
        }
        OutputFormat::Human => {
            println!("# {}", f.describe());
            for (k, c) in poly.coeffs().iter().enumerate() {
                println!("{k:>4} {} {}", c.re, c.im);
            }
            for (z, v) in &values {
                println!("f({} + {}i) = {} + {}i", z.re, z.im, v.re, v.im);
            }
        }
    }
    Ok(0)
}

fn cmd_norm(spec: &PipelineOpts, radial: Option<&str>, settings: &Settings) -> Result<u8, CliError> {
    let f = build_pipeline(spec)?;
    let est = norm_estimate(f.as_ref(), &settings.grid).map_err(engine)?;
    let radial = radial
        .map(|dir| -> Result<(Complex64, gft_core::RadialLimit), CliError> {
            let d = parse_complex(dir)?;
            Ok((d, radial_norm_limit(f.as_ref(), d).map_err(engine)?))
        })
        .transpose()?;
    match settings.format {
        OutputFormat::Json => {
            let mut doc = json!({
                "function": f.describe(),
                "norm": est.value,
                "argmax": complex_value(est.argmax),
                "samples": est.samples,
                "skipped": est.skipped,
            });
            if let Some((d, lim)) = &radial {
                doc.as_object_mut().expect("object").insert(
                    "radial".into(),
                    json!({
                        "direction": complex_value(*d),
                        "limit": lim.limit,
                        "diverged": lim.diverged,
                        "last": lim.last,
                    }),
                );
            }
            print_json(&doc);
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["function", "norm", "argmax_re", "argmax_im", "samples", "skipped"])
                .map_err(csv_err)?;
            w.write_record([
                f.describe(),
                est.value.to_string(),
                est.argmax.re.to_string(),
                est.argmax.im.to_string(),
                est.samples.to_string(),
                est.skipped.to_string(),
            ])
            .map_err(csv_err)?;
            w.flush().map_err(|e| usage(e.to_string()))?;
            if let Some((d, lim)) = &radial {
                println!("radial,{},{},{},{}", d.re, d.im, lim.limit, lim.diverged);
            }
        }
        OutputFormat::Human => {
            println!("function: {}", f.describe());
            println!("norm estimate: {}", est.value);
            println!("argmax: {} + {}i", est.argmax.re, est.argmax.im);
            println!("samples: {} (skipped {})", est.samples, est.skipped);
            if let Some((d, lim)) = &radial {
                println!(
                    "radial limit along {} + {}i: {}{}",
                    d.re,
                    d.im,
                    lim.limit,
                    if lim.diverged { " (diverged)" } else { "" }
                );
            }
        }
    }
    Ok(0)
}

fn parse_class(class: &str, order: Option<f64>, tilt: Option<f64>) -> Result<ClassSpec, CliError> {
    let lambda = order.unwrap_or(0.0);
    let alpha = tilt.unwrap_or(0.0);
    if !lambda.is_finite() || lambda >= 1.0 {
        return Err(usage(format!("--order must be finite and < 1, got {lambda}")));
    }
    if !alpha.is_finite() || alpha.abs() >= std::f64::consts::FRAC_PI_2 {
        return Err(usage(format!("--tilt must satisfy |tilt| < pi/2, got {alpha}")));
    }
    match class {
        "convex" => Ok(ClassSpec::Convex { lambda }),
        "starlike" => Ok(ClassSpec::Spirallike { alpha: 0.0, lambda }),
        "spirallike" => Ok(ClassSpec::Spirallike { alpha, lambda }),
        "kaplan" | "close-to-convex" => Ok(ClassSpec::Kaplan),
        other => Err(usage(format!(
            "unknown class '{other}' (expected convex, starlike, spirallike, or kaplan)"
        ))),
    }
}

fn class_label(spec: &ClassSpec) -> String {
    match spec {
        ClassSpec::Convex { lambda } => format!("convex(order={lambda})"),
        ClassSpec::Spirallike { alpha, lambda } if *alpha == 0.0 => {
            format!("starlike(order={lambda})")
        }
        ClassSpec::Spirallike { alpha, lambda } => {
            format!("spirallike(tilt={alpha},order={lambda})")
        }
        ClassSpec::Kaplan => "kaplan".into(),
    }
}

fn cmd_check(
    spec: &PipelineOpts,
    class: &str,
    order: Option<f64>,
    tilt: Option<f64>,
    settings: &Settings,
) -> Result<u8, CliError> {
    let f = build_pipeline(spec)?;
    let family = parse_class(class, order, tilt)?;
    let rep = membership_margin(f.as_ref(), &family, &settings.grid).map_err(engine)?;
    let pass = rep.margin > 0.0;
    match settings.format {
        OutputFormat::Json => print_json(&json!({
            "function": f.describe(),
            "class": class_label(&family),
            "margin": rep.margin,
            "witness": complex_value(rep.witness),
            "samples": rep.samples,
            "skipped": rep.skipped,
            "pass": pass,
        })),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["function", "class", "margin", "witness_re", "witness_im", "pass"])
                .map_err(csv_err)?;
            w.write_record([
                f.describe(),
                class_label(&family),
                rep.margin.to_string(),
                rep.witness.re.to_string(),
                rep.witness.im.to_string(),
                pass.to_string(),
            ])
            .map_err(csv_err)?;
            w.flush().map_err(|e| usage(e.to_string()))?;
        }
        OutputFormat::Human => {
            println!("function: {}", f.describe());
            println!("class: {}", class_label(&family));
            println!("margin: {} at {} + {}i", rep.margin, rep.witness.re, rep.witness.im);
            println!("verdict: {}", if pass { "member (positive margin)" } else { "outside (nonpositive margin)" });
        }
    }
    Ok(if pass { 0 } else { EXIT_CHECK_FAILED })
}

fn cmd_falsify(
    spec: &PipelineOpts,
    eps: Option<f64>,
    delta: Option<f64>,
    settings: &Settings,
) -> Result<u8, CliError> {
    let f = build_pipeline(spec)?;
    let (eps, eps_source) = match eps {
        Some(e) => (e, "explicit"),
        None => {
            let scale = value_scale(f.as_ref(), &settings.grid).map_err(engine)?;
            (1e-4 * scale, "auto")
        }
    };
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(usage(format!("--eps must be positive and finite, got {eps}")));
    }
    let delta = delta.unwrap_or(gft_core::DEFAULT_SEPARATION);
    let witness = univalence_falsify(f.as_ref(), &settings.grid, eps, delta).map_err(engine)?;
    match settings.format {
        OutputFormat::Json => print_json(&json!({
            "function": f.describe(),
            "eps": eps,
            "eps_source": eps_source,
            "delta": delta,
            "collision": witness.as_ref().map(collision_value),
        })),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record([
                "function", "eps", "delta", "found", "z1_re", "z1_im", "z2_re", "z2_im",
                "residual", "separation", "polished",
            ])
            .map_err(csv_err)?;
            let row = match &witness {
                Some(c) => vec![
                    f.describe(),
                    eps.to_string(),
                    delta.to_string(),
                    "true".into(),
                    c.z1.re.to_string(),
                    c.z1.im.to_string(),
                    c.z2.re.to_string(),
                    c.z2.im.to_string(),
                    c.residual.to_string(),
                    c.separation.to_string(),
                    c.polished.to_string(),
                ],
                None => vec![
                    f.describe(),
                    eps.to_string(),
                    delta.to_string(),
                    "false".into(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                ],
            };
            w.write_record(&row).map_err(csv_err)?;
            w.flush().map_err(|e| usage(e.to_string()))?;
        }
        OutputFormat::Human => {
            println!("function: {}", f.describe());
            println!("eps: {eps} ({eps_source}), delta: {delta}");
            match &witness {
                Some(c) => {
                    println!("collision: f(z1) ~ f(z2)");
                    println!("  z1 = {} + {}i", c.z1.re, c.z1.im);
                    println!("  z2 = {} + {}i", c.z2.re, c.z2.im);
                    println!("  |f(z1)-f(z2)| = {}, |z1-z2| = {}", c.residual, c.separation);
                    println!("  polished: {}", c.polished);
                }
                None => println!("no collision found at this resolution"),
            }
        }
    }
    Ok(0)
}
