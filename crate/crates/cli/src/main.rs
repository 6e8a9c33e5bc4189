//! Command-line front end: single solves or parameter sweeps, with
//! contour CSV, diagnostics JSON and SVG outputs.
//!
//! Exit codes: 0 all diagnostics pass, 2 invalid parameters, 3 solver
//! failure or failed diagnostics, 4 I/O failure.

mod config;
mod export;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use num_complex::Complex64;
use slitmap_core::params::validate;
use slitmap_core::shape::{run_diagnostics, trace_inclusion, Diagnostics};
use slitmap_core::{InclusionContour, ModelParams, SolverState};

use config::{params_from_json, parse_sweep, Overrides, SweepParam};

#[derive(Parser, Debug)]
#[command(
    name = "slitmap",
    about = "Recovers uniformly stressed inclusion shapes in an elastic half-plane",
    version,
    allow_negative_numbers = true
)]
struct Cli {
    /// JSON config with flat parameter fields; flags override it
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Right slit endpoint, m > 1
    #[arg(long)]
    m: Option<f64>,
    /// Shear-modulus ratio mu1/mu0
    #[arg(long)]
    kappa: Option<f64>,
    /// Stress inside the inclusion over mu0
    #[arg(long)]
    tau1: Option<f64>,
    /// Remote stress over mu0
    #[arg(long = "tau1-inf")]
    tau1_inf: Option<f64>,
    /// Translation parameter N0*
    #[arg(long = "n0star")]
    n0_star: Option<f64>,
    /// Scaling parameter N1
    #[arg(long)]
    n1: Option<f64>,
    /// Free constant of the first problem
    #[arg(long)]
    b0: Option<f64>,
    /// Kernel pole location, xi0 < 0
    #[arg(long)]
    xi0: Option<f64>,
    /// Factorization start point, as RE,IM
    #[arg(long, value_name = "RE,IM", value_parser = parse_complex, allow_hyphen_values = true)]
    zeta0: Option<Complex64>,
    /// Chebyshev/Gauss order
    #[arg(long = "quad-order")]
    quad_order: Option<usize>,
    /// Contour samples per slit side
    #[arg(long = "points")]
    points: Option<usize>,
    /// Diagnostic tolerance
    #[arg(long)]
    tol: Option<f64>,

    /// Sweep one parameter: name=v1,v2,... (m, kappa, tau1, tau1-inf, n0star)
    #[arg(long, value_name = "NAME=V1,V2,...")]
    sweep: Option<String>,

    /// Write the contour CSV here (sweeps add -name<value> suffixes)
    #[arg(long = "out-contour", value_name = "PATH")]
    out_contour: Option<PathBuf>,
    /// Write the diagnostics JSON here
    #[arg(long = "out-diag", value_name = "PATH")]
    out_diag: Option<PathBuf>,
    /// Write an SVG with all traced contours here
    #[arg(long = "out-svg", value_name = "PATH")]
    out_svg: Option<PathBuf>,

    /// Suppress the per-run summary lines
    #[arg(long)]
    quiet: bool,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s.split_once(',').ok_or("expected RE,IM")?;
    Ok(Complex64::new(
        re.trim().parse::<f64>().map_err(|e| e.to_string())?,
        im.trim().parse::<f64>().map_err(|e| e.to_string())?,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("slitmap: I/O error: {e}");
            ExitCode::from(4)
        }
    }
}

fn run(cli: &Cli) -> std::io::Result<ExitCode> {
    let mut base = ModelParams::default();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)?;
        match params_from_json(&text) {
            Ok(p) => base = p,
            Err(msg) => {
                eprintln!("slitmap: {msg}");
                return Ok(ExitCode::from(2));
            }
        }
    }
    let overrides = Overrides {
        m: cli.m,
        kappa: cli.kappa,
        tau1: cli.tau1,
        tau1_inf: cli.tau1_inf,
        n0_star: cli.n0_star,
        n1: cli.n1,
        b0: cli.b0,
        xi0: cli.xi0,
        zeta0: cli.zeta0,
        quad_order: cli.quad_order,
        n_points: cli.points,
        tol: cli.tol,
    };
    let base = overrides.apply(base);

    // resolve the legs of the run
    let legs: Vec<(Option<(SweepParam, f64)>, ModelParams)> = match &cli.sweep {
        None => vec![(None, base.clone())],
        Some(spec) => {
            let (param, values) = match parse_sweep(spec) {
                Ok(x) => x,
                Err(msg) => {
                    eprintln!("slitmap: {msg}");
                    return Ok(ExitCode::from(2));
                }
            };
            values
                .into_iter()
                .map(|v| (Some((param, v)), param.set(base.clone(), v)))
                .collect()
        }
    };

    // validate every leg before doing any work
    for (tag, params) in &legs {
        let report = validate(params);
        if !report.is_pass() {
            for v in &report.violations {
                match tag {
                    Some((p, value)) => {
                        eprintln!("slitmap: {}={}: {}: {}", p.label(), value, v.code, v.message)
                    }
                    None => eprintln!("slitmap: {}: {}", v.code, v.message),
                }
            }
            if let Some(path) = &cli.out_diag {
                let diag = run_diagnostics(params);
                export::export_diagnostics(&diag, &leg_path(path, tag))?;
            }
            return Ok(ExitCode::from(2));
        }
    }

    let mut all_pass = true;
    let mut traced: Vec<(String, InclusionContour, Diagnostics)> = Vec::new();
    for (tag, params) in &legs {
        let state = match SolverState::build(params.clone()) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("slitmap: solver failed: {e}");
                return Ok(ExitCode::from(3));
            }
        };
        let contour = match trace_inclusion(&state) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("slitmap: {e}");
                return Ok(ExitCode::from(3));
            }
        };
        let diag = run_diagnostics(params);
        all_pass &= diag.pass;
        let label = match tag {
            Some((p, v)) => format!("{}{}", p.label(), v),
            None => String::from("run"),
        };
        if !cli.quiet {
            print_summary(&label, &contour, &diag);
        }
        if let Some(path) = &cli.out_contour {
            export::export_contour(&contour, &leg_path(path, tag))?;
        }
        if let Some(path) = &cli.out_diag {
            export::export_diagnostics(&diag, &leg_path(path, tag))?;
        }
        traced.push((label, contour, diag));
    }

    if let Some(path) = &cli.out_svg {
        let refs: Vec<(String, &InclusionContour)> =
            traced.iter().map(|(l, c, _)| (l.clone(), c)).collect();
        export::export_svg(&refs, path)?;
    }

    if !cli.quiet && traced.len() > 1 {
        let passed = traced.iter().filter(|(_, _, d)| d.pass).count();
        println!("{}/{} runs pass", passed, traced.len());
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn leg_path(base: &Path, tag: &Option<(SweepParam, f64)>) -> PathBuf {
    match tag {
        None => base.to_path_buf(),
        Some((param, value)) => {
            let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
            let ext = base.extension().and_then(|s| s.to_str()).unwrap_or("");
            let name = if ext.is_empty() {
                format!("{stem}-{}{}", param.label(), value)
            } else {
                format!("{stem}-{}{}.{ext}", param.label(), value)
            };
            base.with_file_name(name)
        }
    }
}

fn print_summary(label: &str, contour: &InclusionContour, diag: &Diagnostics) {
    let status = if diag.pass { "pass" } else { "FAIL" };
    println!(
        "{label}: {status}  area {:.6}  diameter {:.6}  centroid ({:.6}, {:.6})  min|y| {:.6}",
        contour.signed_area.abs(),
        contour.diameter,
        contour.centroid.0,
        contour.centroid.1,
        contour.min_abs_y
    );
    for w in &diag.warnings {
        println!("{label}: note: {w}");
    }
    if let Some(worst) = diag
        .residuals
        .iter()
        .filter(|s| !s.pass)
        .max_by(|a, b| (a.value / a.threshold).total_cmp(&(b.value / b.threshold)))
    {
        println!(
            "{label}: worst residual {} = {:.3e} (threshold {:.1e})",
            worst.name, worst.value, worst.threshold
        );
    }
}
