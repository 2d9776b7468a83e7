use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use cusplump::algebra::Scalar;
use cusplump::tau::SosTemplate;
use cusplump::theta::{Strategy, DEFAULT_SEED};
use cusplump_cli::commands;
use cusplump_cli::emit::write_csv;
use cusplump_cli::files::{load_basis, load_curve, read_json, write_json_file, CheckLine, TauFile, ThetaFile};
use cusplump_cli::grid::{evaluate_grid, FloatField, GridSpec};

#[derive(Parser)]
#[command(name = "cusplump", version, about = "Theta polynomials of cuspidal curves and KP1 lump solutions")]
struct Cli {
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct GridArgs {
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "-1.375")]
    times: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "-10,10")]
    x_range: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "-10,10")]
    y_range: Vec<f64>,
    #[arg(long, default_value_t = 201)]
    nx: usize,
    #[arg(long, default_value_t = 201)]
    ny: usize,
    /// Evaluate even without a regularity certificate.
    #[arg(long)]
    allow_unverified: bool,
}

impl GridArgs {
    fn spec(&self) -> anyhow::Result<GridSpec> {
        let pair = |v: &[f64], name: &str| -> anyhow::Result<(f64, f64)> {
            match v {
                [a, b] => Ok((*a, *b)),
                _ => bail!("--{name} takes two values lo,hi"),
            }
        };
        Ok(GridSpec {
            x_range: pair(&self.x_range, "x-range")?,
            y_range: pair(&self.y_range, "y-range")?,
            nx: self.nx,
            ny: self.ny,
            times: self.times.clone(),
        })
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Gaps, genus, conductor and Weierstrass partition of a semigroup.
    Semigroup {
        #[arg(long, value_delimiter = ',')]
        gens: Vec<u32>,
    },
    /// Dualizing-differential basis of a curve.
    Differentials {
        /// Curve JSON file or builtin:<name>.
        #[arg(long)]
        curve: String,
        /// Differentials file, or builtin:bicuspidal.
        #[arg(long)]
        basis: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Theta polynomial by elimination.
    Theta {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        basis: Option<String>,
        #[arg(long, default_value = "sym")]
        strategy: Strategy,
        /// Wall-clock budget in seconds.
        #[arg(long, default_value_t = 300)]
        timeout: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Real tau function, phases and regularity certificate.
    Tau {
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        curve: String,
        /// Comma-separated phase values overriding the solved ones.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        phases: Option<Vec<String>>,
        /// SOS template JSON (residual coefficient and factors).
        #[arg(long)]
        template: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact checks on a tau file; exits nonzero if any fails.
    Verify {
        #[arg(long)]
        tau: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "reality,sos,kp1,decay")]
        checks: Vec<String>,
    },
    /// Nodal families and their cuspidal limits.
    Degenerate {
        #[arg(long)]
        family: String,
        /// Emit the nodal differentials at this ε instead of the limits.
        #[arg(long, allow_negative_numbers = true)]
        epsilon: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Samples of u on a grid as CSV (one file per time).
    Evaluate {
        #[arg(long)]
        tau: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Local maxima of u on a grid.
    Lumps {
        #[arg(long)]
        tau: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        floor: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Curve to lump report, writing every intermediate file.
    Pipeline {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        basis: Option<String>,
        #[arg(long, default_value = "sym")]
        strategy: Strategy,
        #[arg(long, default_value_t = 300)]
        timeout: u64,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        floor: Option<f64>,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

fn emit<T: serde::Serialize>(out: Option<&Path>, value: &T) -> anyhow::Result<()> {
    match out {
        Some(p) => write_json_file(p, value).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{}", serde_json::to_string_pretty(value)?);
            Ok(())
        }
    }
}

fn report(lines: &[CheckLine]) -> bool {
    for l in lines {
        println!("{:<10} {} {}", l.name, if l.passed { "PASS" } else { "FAIL" }, l.detail);
    }
    lines.iter().all(|l| l.passed)
}

fn slice_path(out: &Path, k: usize, n: usize) -> PathBuf {
    if n == 1 {
        return out.to_path_buf();
    }
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("grid");
    out.with_file_name(format!("{stem}_{k}.csv"))
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.cmd {
        Cmd::Semigroup { gens } => emit(None, &commands::semigroup(&gens)?)?,
        Cmd::Differentials { curve, basis, out } => {
            let c = load_curve(&curve)?;
            let b = load_basis(basis.as_deref(), &c)?;
            emit(out.as_deref(), &commands::differentials(&b))?;
        }
        Cmd::Theta { curve, basis, strategy, timeout, out } => {
            let c = load_curve(&curve)?;
            let b = load_basis(basis.as_deref(), &c)?;
            let t = commands::theta(&c, b, strategy, Duration::from_secs(timeout), cli.seed)?;
            let ok = report(&t.checks);
            emit(out.as_deref(), &t)?;
            return Ok(ok);
        }
        Cmd::Tau { theta, curve, phases, template, out } => {
            let th: ThetaFile = read_json(&theta)?;
            let c = load_curve(&curve)?;
            let phases = phases
                .map(|v| v.iter().map(|s| s.parse::<Scalar>()).collect::<cusplump::Result<Vec<_>>>())
                .transpose()?;
            let template: Option<SosTemplate> = template.map(read_json).transpose()?;
            let t = commands::tau(&th, &c, phases.as_deref(), template.as_ref())?;
            if let Some(e) = &t.certificate_error {
                eprintln!("no regularity certificate: {e}");
            }
            emit(out.as_deref(), &t)?;
        }
        Cmd::Verify { tau, checks } => {
            let t: TauFile = read_json(&tau)?;
            return Ok(report(&commands::verify(&t, &checks)?));
        }
        Cmd::Degenerate { family, epsilon, out } => {
            let eps = epsilon.map(|s| s.parse::<Scalar>()).transpose()?;
            emit(out.as_deref(), &commands::degenerate(&family, eps.as_ref())?)?;
        }
        Cmd::Evaluate { tau, grid, out } => {
            let t: TauFile = read_json(&tau)?;
            let g = grid.spec()?;
            let slices = evaluate_grid(&FloatField::from_tau(&t.tau), &g, t.certificate.is_some(), grid.allow_unverified)?;
            for (k, s) in slices.iter().enumerate() {
                let p = slice_path(&out, k, slices.len());
                write_csv(std::io::BufWriter::new(std::fs::File::create(&p)?), s, &g)?;
                eprintln!("t = {}: {} (min |den| {:e})", s.t, p.display(), s.min_abs_den);
            }
        }
        Cmd::Lumps { tau, grid, floor, out } => {
            let t: TauFile = read_json(&tau)?;
            let reps = commands::lumps(&t, &grid.spec()?, floor, grid.allow_unverified)?;
            emit(out.as_deref(), &reps)?;
        }
        Cmd::Pipeline { curve, basis, strategy, timeout, grid, floor, out_dir } => {
            std::fs::create_dir_all(&out_dir)?;
            let c = load_curve(&curve)?;
            let b = load_basis(basis.as_deref(), &c)?;
            let th = commands::theta(&c, b, strategy, Duration::from_secs(timeout), cli.seed)?;
            write_json_file(out_dir.join("theta.json"), &th)?;
            let mut ok = report(&th.checks);
            let t = match commands::tau(&th, &c, None, None) {
                Ok(t) => t,
                Err(e) => {
                    report(&[CheckLine::new("tau", Err(e.to_string()))]);
                    return Ok(false);
                }
            };
            write_json_file(out_dir.join("tau.json"), &t)?;
            ok &= report(&commands::verify(&t, &commands::CHECKS.map(String::from))?);
            if t.certificate.is_none() && !grid.allow_unverified {
                report(&[CheckLine::new("lumps", Err("skipped without a regularity certificate".into()))]);
                return Ok(false);
            }
            let reps = commands::lumps(&t, &grid.spec()?, floor, grid.allow_unverified)?;
            write_json_file(out_dir.join("lumps.json"), &reps)?;
            for r in &reps {
                println!("t = {:<8} lumps {}", r.t, r.count);
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
