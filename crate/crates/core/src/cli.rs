//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 configuration, parse or I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::config::JobConfig;
use crate::error::{Error, Result};
use crate::gallery::{find_minimal_radius, RadialFamily};
use crate::geometry::{minimality_report, DensityField, MinimalityReport};
use crate::mesh_io::{export_obj, export_report_csv, format_significant, tessellate};
use crate::ruled::integrate_from_closed_form;

const ODE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "weighted-minimal",
    version,
    about = "Minimal surfaces in R^3 with density e^phi"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the configured surface, tessellate it and write an OBJ mesh.
    Generate {
        #[arg(long)]
        config: PathBuf,
        /// Output path; falls back to `outputs.obj` in the config.
        #[arg(long)]
        obj: Option<PathBuf>,
    },
    /// Evaluate Hphi on the configured grid; exit 0 iff max |Hphi| < tolerance.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Output path; falls back to `outputs.csv` in the config.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Integrate the directrix ODE with RK4 and compare with the closed form.
    Ode {
        #[arg(long = "A", allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        u_end: f64,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Re-run verification for several values of one surface parameter.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Surface field to vary, e.g. `A`, `c` or `radius`.
        #[arg(long)]
        param: String,
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_negative_numbers = true
        )]
        values: Vec<f64>,
        /// Output path; stdout if omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Find the radius at which a sphere or z-cylinder is minimal in Gauss space.
    Gauss {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_delimiter = ',', num_args = 1, default_value = "0.5,2")]
        bracket: Vec<f64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Sphere,
    Cylinder,
}

enum Outcome {
    Pass,
    Fail,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Generate { config, obj } => {
            let cfg = JobConfig::from_path(&config)?;
            let out = obj
                .or_else(|| cfg.outputs.obj.clone())
                .ok_or_else(|| Error::Config("no OBJ destination given".into()))?;
            let surface = cfg.build_surface()?;
            let mesh = tessellate(&surface, cfg.grid[0], cfg.grid[1], &cfg.label())?;
            export_obj(&mesh, &out)?;
            eprintln!(
                "wrote {} ({} vertices, {} quads)",
                out.display(),
                mesh.vertices.len(),
                mesh.faces.len()
            );
            Ok(Outcome::Pass)
        }
        Command::Verify { config, csv } => {
            let cfg = JobConfig::from_path(&config)?;
            let report = report_for(&cfg)?;
            if let Some(out) = csv.or_else(|| cfg.outputs.csv.clone()) {
                export_report_csv(&report, &out)?;
            }
            eprintln!(
                "max |Hphi| = {:e} (mean {:e}) on {}x{} grid, tolerance {:e}: {}",
                report.max_abs_hphi,
                report.mean_abs_hphi,
                cfg.grid[0],
                cfg.grid[1],
                report.tolerance,
                if report.pass { "PASS" } else { "FAIL" }
            );
            Ok(if report.pass {
                Outcome::Pass
            } else {
                Outcome::Fail
            })
        }
        Command::Ode {
            a,
            b,
            c,
            u_end,
            step,
            csv,
        } => ode(a, b, c, u_end, step, csv),
        Command::Sweep {
            config,
            param,
            values,
            csv,
        } => sweep(config, &param, &values, csv),
        Command::Gauss { family, bracket } => {
            let [lo, hi] = bracket[..] else {
                return Err(Error::Config(format!(
                    "--bracket takes two values lo,hi, got {}",
                    bracket.len()
                )));
            };
            let family = match family {
                Family::Sphere => RadialFamily::Sphere,
                Family::Cylinder => RadialFamily::CylinderZ,
            };
            let r = find_minimal_radius(family, &DensityField::gaussian(), (lo, hi))?;
            println!("{r:.9}");
            Ok(Outcome::Pass)
        }
    }
}

fn report_for(cfg: &JobConfig) -> Result<MinimalityReport> {
    let surface = cfg.build_surface()?;
    minimality_report(
        &surface,
        &cfg.density_field()?,
        cfg.grid[0],
        cfg.grid[1],
        cfg.tolerance(),
    )
}

fn ode(a: f64, b: f64, c: f64, u_end: f64, step: f64, csv: Option<PathBuf>) -> Result<Outcome> {
    let sol = integrate_from_closed_form(a, b, c, u_end, step)?;
    let mut rows = Vec::with_capacity(sol.samples.len());
    let mut sup = 0.0_f64;
    for s in &sol.samples {
        let (p, v) = crate::ruled::closed_form_directrix(a, b, c, s.u)?;
        let dp = (s.pos - p).norm();
        sup = sup.max(dp);
        rows.push(
            [
                s.u,
                s.pos.x,
                s.pos.y,
                s.pos.z,
                p.x,
                p.y,
                p.z,
                dp,
                (s.vel - v).norm(),
                s.vel.norm() - 1.0,
            ]
            .map(|x| format_significant(x, 12))
            .join(","),
        );
    }
    if let Some(path) = csv {
        let mut w = std::io::BufWriter::new(std::fs::File::create(&path)?);
        writeln!(
            w,
            "u,x,y,z,x_closed,y_closed,z_closed,delta_position,delta_velocity,speed_drift"
        )?;
        for r in &rows {
            writeln!(w, "{r}")?;
        }
        w.flush()?;
    }
    let pass = sup < ODE_TOLERANCE;
    eprintln!(
        "{} RK4 steps of {:e}: sup |pos - closed form| = {:e}, speed drift {:e}, plane drift {:e}: {}",
        sol.samples.len() - 1,
        sol.step,
        sup,
        sol.speed_drift(),
        sol.plane_drift(),
        if pass { "PASS" } else { "FAIL" }
    );
    Ok(if pass { Outcome::Pass } else { Outcome::Fail })
}

fn sweep(config: PathBuf, param: &str, values: &[f64], csv: Option<PathBuf>) -> Result<Outcome> {
    let base = JobConfig::from_path(&config)?;
    let mut text = format!("{param},max_abs_Hphi\n");
    let mut all_pass = true;
    for &value in values {
        let cfg = base.with_surface_param(param, value)?;
        let report = report_for(&cfg)?;
        all_pass &= report.pass;
        text.push_str(&format!(
            "{},{}\n",
            format_significant(value, 12),
            format_significant(report.max_abs_hphi, 12)
        ));
    }
    match csv {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(if all_pass {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}
