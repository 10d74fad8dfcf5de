//! `ceva`: classify triangles, apply cevian operators, test similarity,
//! plan Brocard reconstructions, and emit JSON/CSV/SVG artifacts.

mod render;
mod report;

use std::fmt;
use std::fs;
use std::process::ExitCode;

use ceva::matrices::CevaMatrix;
use ceva::operator::{
    self, apply, apply_hajja, iterate, reconstruct, right_ceva_param, similarity_with_tol,
};
use ceva::{CevaError, ExtReal, Triangle};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "ceva", version, about = "The algebra of Ceva's triangles")]
struct Cli {
    /// Numeric tolerance for precondition checks and verifications.
    #[arg(long, global = true, default_value_t = ceva::DEFAULT_TOLERANCE)]
    tolerance: f64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
    Text,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Svg => "svg",
            Format::Text => "text",
        }
    }
}

#[derive(Args)]
struct Sides {
    a: f64,
    b: f64,
    c: f64,
}

impl Sides {
    fn triangle(&self) -> Result<Triangle, CliError> {
        Triangle::new(self.a, self.b, self.c).map_err(CliError::from)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validity, class, cone/Brocard angles, kappa, mu, nu, interval, sigma.
    Classify {
        #[command(flatten)]
        sides: Sides,
    },
    /// Apply the cevian operator (or Hajja's) and compare with the input.
    Apply {
        #[command(flatten)]
        sides: Sides,
        /// Parameter: a finite number or "inf".
        #[arg(long)]
        rho: String,
        /// Apply the operator this many times.
        #[arg(long, default_value_t = 1)]
        iterate: u32,
        /// Use the reversed-order (Hajja) operator instead.
        #[arg(long)]
        hajja: bool,
    },
    /// Similarity relation between two triangles.
    Similar {
        #[command(flatten)]
        first: Sides,
        x: f64,
        y: f64,
        z: f64,
    },
    /// Plan the congruent reconstruction of the second triangle from the first.
    Reconstruct {
        #[command(flatten)]
        first: Sides,
        x: f64,
        y: f64,
        z: f64,
    },
    /// Parameter giving a right cevian triangle, when one exists.
    RightCeva {
        #[command(flatten)]
        sides: Sides,
    },
    /// SVG of the base triangle with cevian-triangle overlays.
    Render {
        #[command(flatten)]
        sides: Sides,
        /// Overlay parameter; may repeat.
        #[arg(long = "rho")]
        rhos: Vec<String>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<String>,
    },
    /// Evaluate the operator across a parameter grid or random samples.
    Sweep {
        #[command(flatten)]
        sides: Sides,
        #[arg(long, default_value_t = 0.0)]
        from: f64,
        #[arg(long, default_value_t = 1.0)]
        to: f64,
        #[arg(long, default_value_t = 100)]
        steps: u32,
        /// Draw seeded random parameters instead of a grid.
        #[arg(long)]
        samples: Option<u32>,
    },
}

/// Error wrapper deciding the process exit code.
#[derive(Debug)]
enum CliError {
    Lib(CevaError),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<CevaError> for CliError {
    fn from(e: CevaError) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            // 2: the input does not describe a valid geometry
            CliError::Lib(
                CevaError::NonPositiveSide { .. }
                | CevaError::DegenerateOrImpossible { .. }
                | CevaError::ParseExtReal { .. }
                | CevaError::AngleOutOfRange { .. }
                | CevaError::UnitOutOfRange { .. }
                | CevaError::GammaOutOfRange { .. },
            ) => 2,
            // 4: two independent routes disagreed; a bug, not bad input
            CliError::Lib(CevaError::VerificationFailed { .. }) => 4,
            CliError::Io(_) => 1,
            // 3: valid geometry, violated precondition
            CliError::Lib(_) => 3,
        }
    }
}

fn parse_rho(s: &str) -> Result<ExtReal, CliError> {
    s.parse::<ExtReal>().map_err(CliError::from)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        return Err(CliError::Lib(CevaError::VerificationFailed {
            detail: format!("tolerance must be positive, got {}", cli.tolerance),
        }));
    }
    match &cli.command {
        Command::Classify { sides } => cmd_classify(cli, sides),
        Command::Apply { sides, rho, iterate, hajja } => {
            cmd_apply(cli, sides, rho, *iterate, *hajja)
        }
        Command::Similar { first, x, y, z } => cmd_similar(cli, first, *x, *y, *z),
        Command::Reconstruct { first, x, y, z } => cmd_reconstruct(cli, first, *x, *y, *z),
        Command::RightCeva { sides } => cmd_right_ceva(cli, sides),
        Command::Render { sides, rhos, output } => cmd_render(cli, sides, rhos, output.as_deref()),
        Command::Sweep { sides, from, to, steps, samples } => {
            cmd_sweep(cli, sides, *from, *to, *steps, *samples)
        }
    }
}

fn emit(cli: &Cli, input: Value, results: Value) -> Result<(), CliError> {
    let envelope = report::envelope(input, results, cli.tolerance, cli.seed, cli.format.name());
    match cli.format {
        Format::Json | Format::Csv | Format::Svg => {
            // csv/svg are only meaningful for sweep/render; everything else
            // falls back to the JSON envelope
            println!("{}", serde_json::to_string_pretty(&envelope).expect("serializable"));
        }
        Format::Text => print!("{}", report::render_text(&envelope)),
    }
    Ok(())
}

fn cmd_classify(cli: &Cli, sides: &Sides) -> Result<(), CliError> {
    let t = sides.triangle()?;
    let class = t.classify();
    let descriptor = t.shape_descriptor();

    // cross-check the two independent mu routes before reporting
    let mu_nu = t.mu_nu().ok();
    if let (Some((mu, _)), Ok(closed)) = (&mu_nu, ceva::triangle::mu_closed_form(&t)) {
        if (mu.value() - closed).abs() > cli.tolerance {
            return Err(CliError::Lib(CevaError::VerificationFailed {
                detail: format!("mu group route {} vs closed form {closed}", mu.value()),
            }));
        }
    }

    let sigma = t.hajja_sigma();
    let interval = t.fundamental_interval().ok();
    let results = json!({
        "valid": true,
        "class": report::class_name(class),
        "gamma": t.cone_angle(),
        "omega": t.brocard_angle(),
        "kappa": report::ext_value(t.kappa()),
        "mu": mu_nu.as_ref().map(|(mu, _)| mu.value()),
        "nu": mu_nu.as_ref().map(|(_, nu)| nu.value()),
        "interval": interval.map(|(lo, hi)| json!([lo.value(), hi.value()])),
        "shape_mu": descriptor.mu,
        "sigma": { "re": sigma.re, "im": sigma.im },
        "automedian": operator::is_automedian(&t, cli.tolerance),
    });
    emit(cli, json!({ "sides": t.sides() }), results)
}

fn cmd_apply(
    cli: &Cli,
    sides: &Sides,
    rho: &str,
    n: u32,
    hajja: bool,
) -> Result<(), CliError> {
    let t = sides.triangle()?;
    let rho = parse_rho(rho)?;

    let image = if hajja {
        let r = rho.as_finite().ok_or(CevaError::ParseExtReal {
            input: "inf (the Hajja operator takes a finite parameter)".to_owned(),
        })?;
        let mut out = t;
        for _ in 0..n {
            out = apply_hajja(&out, r);
        }
        out
    } else {
        iterate(&t, rho, n)
    };

    // the matrix route must agree with the radical formulas
    if !hajja && n == 1 {
        let via_matrix = CevaMatrix::new(rho).transform(&t.squared());
        for (m, f) in via_matrix.components().iter().zip(image.squared().components()) {
            if (m - f).abs() > cli.tolerance * f.abs().max(1.0) {
                return Err(CliError::Lib(CevaError::VerificationFailed {
                    detail: format!("matrix route {m} vs formula {f}"),
                }));
            }
        }
    }

    let rel = similarity_with_tol(&image, &t, cli.tolerance);
    let results = json!({
        "sides": image.sides(),
        "squared": image.squared().components(),
        "class": report::class_name(image.classify()),
        "similarity_to_input": report::similarity_value(rel),
    });
    let input = json!({
        "sides": t.sides(),
        "rho": report::ext_value(rho),
        "iterate": n,
        "hajja": hajja,
    });
    emit(cli, input, results)
}

fn cmd_similar(cli: &Cli, first: &Sides, x: f64, y: f64, z: f64) -> Result<(), CliError> {
    let t = first.triangle()?;
    let v = Triangle::new(x, y, z)?;
    let rel = similarity_with_tol(&t, &v, cli.tolerance);
    let results = json!({ "similarity": report::similarity_value(rel) });
    emit(cli, json!({ "first": t.sides(), "second": v.sides() }), results)
}

fn cmd_reconstruct(cli: &Cli, first: &Sides, x: f64, y: f64, z: f64) -> Result<(), CliError> {
    let t = first.triangle()?;
    let v = Triangle::new(x, y, z)?;
    let plan = reconstruct(&t, &v, cli.tolerance)?;
    let rebuilt = plan.execute(&t);
    let verified = rebuilt
        .sides()
        .iter()
        .zip(v.sides())
        .all(|(got, want)| (got - want).abs() <= cli.tolerance * want.abs().max(1.0));
    if !verified {
        return Err(CliError::Lib(CevaError::VerificationFailed {
            detail: format!("plan output {:?} does not match target {:?}", rebuilt.sides(), v.sides()),
        }));
    }
    let results = json!({
        "rho": plan.rho.value(),
        "n0": plan.n0,
        "xi": plan.xi,
        "scale": plan.scale,
        "total_ops": plan.total_ops(),
        "final_sides": rebuilt.sides(),
        "verified": verified,
    });
    emit(cli, json!({ "from": t.sides(), "to": v.sides() }), results)
}

fn cmd_right_ceva(cli: &Cli, sides: &Sides) -> Result<(), CliError> {
    let t = sides.triangle()?;
    let found = right_ceva_param(&t)?;
    let results = match found {
        Some(rho) => {
            let image = apply(&t, rho);
            json!({
                "exists": true,
                "rho": report::ext_value(rho),
                "right_triangle": image.sides(),
                "tan_omega": t.brocard_angle().tan(),
            })
        }
        None => json!({
            "exists": false,
            "rho": null,
            "tan_omega": t.brocard_angle().tan(),
        }),
    };
    emit(cli, json!({ "sides": t.sides() }), results)
}

fn cmd_render(
    _cli: &Cli,
    sides: &Sides,
    rhos: &[String],
    output: Option<&str>,
) -> Result<(), CliError> {
    let t = sides.triangle()?;
    let params: Vec<ExtReal> = rhos
        .iter()
        .map(|s| parse_rho(s))
        .collect::<Result<_, _>>()?;
    let svg = render::render(&t, &params);
    match output {
        Some(path) => fs::write(path, svg)?,
        None => print!("{svg}"),
    }
    Ok(())
}

fn cmd_sweep(
    cli: &Cli,
    sides: &Sides,
    from: f64,
    to: f64,
    steps: u32,
    samples: Option<u32>,
) -> Result<(), CliError> {
    let t = sides.triangle()?;
    let params: Vec<f64> = match samples {
        Some(n) => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect()
        }
        None => (0..=steps)
            .map(|i| from + (to - from) * f64::from(i) / f64::from(steps.max(1)))
            .collect(),
    };

    let rows: Vec<(f64, Triangle)> = params
        .iter()
        .map(|&r| (r, apply(&t, ExtReal::finite(r))))
        .collect();

    match cli.format {
        Format::Csv => {
            let mut out = String::from("rho,x,y,z,class\n");
            for (r, image) in &rows {
                let [x, y, z] = image.sides();
                out.push_str(&format!(
                    "{r},{x},{y},{z},{}\n",
                    report::class_name(image.classify())
                ));
            }
            print!("{out}");
            Ok(())
        }
        _ => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(r, image)| {
                    let [x, y, z] = image.sides();
                    json!({
                        "rho": r,
                        "x": x,
                        "y": y,
                        "z": z,
                        "class": report::class_name(image.classify()),
                    })
                })
                .collect();
            let input = json!({
                "sides": t.sides(),
                "from": from,
                "to": to,
                "steps": steps,
                "samples": samples,
            });
            emit(cli, input, json!({ "rows": rows }))
        }
    }
}
