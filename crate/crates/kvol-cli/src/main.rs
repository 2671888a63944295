//! Command-line front end: volume queries, identity checks with seeded
//! random campaigns, and grid-refinement sweeps of the product formula.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails or a
//! hypothesis (same span, parallel subspaces) is violated by the data, 2 on
//! usage errors such as unknown scene entries or malformed files. Reports go
//! to stdout, diagnostics to stderr, and identical commands with identical
//! seeds produce byte-identical reports.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use kvol::exterior::binet_cauchy_check;
use kvol::linalg::{full_rank, orthonormalize, Frame, Matrix};
use kvol::measure::{product_formula_measurable, BracketReport};
use kvol::report::CheckReport;
use kvol::rng::SplitMix64;
use kvol::volume::{
    de_gua_check, product_formula_parallelopipeds, scaling_check, volume_coordinate, volume_gram,
    Parallelopiped,
};

mod scene;

use scene::Scene;

#[derive(Parser)]
#[command(
    name = "kvol",
    version,
    about = "k-dimensional volume checks over scene files"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the volume of a named vector tuple from a scene file
    Volume {
        /// Scene file with named entries
        #[arg(long)]
        scene: PathBuf,
        /// Name of the tuple entry
        #[arg(long)]
        name: String,
    },
    /// Verify an identity on scene entries or over a seeded random campaign
    Check(CheckArgs),
    /// Sweep the product formula for two regions across grid refinements
    Measure(MeasureArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    /// Product of volumes vs sum of projected-volume products
    Product,
    /// Squared volume vs sum of squared projected volumes
    Pythagoras,
    /// Det(A B^T) vs the sum of paired minor determinants
    BinetCauchy,
    /// Squared area of a right-corner triangle vs its three shadows
    DeGua,
    /// Image volume vs |det| of the map times the source volume
    Scaling,
}

impl CheckKind {
    fn name(self) -> &'static str {
        match self {
            CheckKind::Product => "product",
            CheckKind::Pythagoras => "pythagoras",
            CheckKind::BinetCauchy => "binet-cauchy",
            CheckKind::DeGua => "de-gua",
            CheckKind::Scaling => "scaling",
        }
    }

    fn default_tolerance(self) -> f64 {
        match self {
            CheckKind::Product | CheckKind::Pythagoras => 1e-8,
            CheckKind::BinetCauchy | CheckKind::Scaling => 1e-9,
            CheckKind::DeGua => 1e-10,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Readable table
    Human,
    /// kind/seed/trials/max_residual/pass lines
    Machine,
}

#[derive(Args)]
struct CheckArgs {
    /// Identity to verify
    #[arg(value_enum)]
    kind: CheckKind,

    /// Scene file with named entries
    #[arg(long)]
    scene: Option<PathBuf>,

    /// Draw seeded random instances instead of reading scene entries
    #[arg(long)]
    random: bool,

    /// Number of random trials
    #[arg(long, default_value_t = 100)]
    trials: usize,

    /// Campaign seed (defaults to KVOL_SEED, then 0)
    #[arg(long)]
    seed: Option<u64>,

    /// Relative residual tolerance (default depends on the kind)
    #[arg(long)]
    tolerance: Option<f64>,

    /// Fix the tuple size for random instances (1..=6)
    #[arg(long)]
    k: Option<usize>,

    /// Fix the ambient dimension for random instances (k..=12)
    #[arg(long)]
    n: Option<usize>,

    /// First named entry (tuple for product/pythagoras/scaling, matrix for
    /// binet-cauchy)
    #[arg(long)]
    a: Option<String>,

    /// Second named entry
    #[arg(long)]
    b: Option<String>,

    /// Named matrix holding the map coordinates (scaling)
    #[arg(long)]
    map: Option<String>,

    /// Named source subspace (scaling)
    #[arg(long)]
    u: Option<String>,

    /// Named target subspace (scaling)
    #[arg(long)]
    w: Option<String>,

    /// Right-corner triangle legs p,q,r (de-gua)
    #[arg(long, value_delimiter = ',')]
    legs: Option<Vec<f64>>,

    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args)]
struct MeasureArgs {
    /// Scene file with named entries
    #[arg(long)]
    scene: PathBuf,

    /// Name of the first region entry
    #[arg(long = "region-a")]
    region_a: String,

    /// Name of the second region entry
    #[arg(long = "region-b")]
    region_b: String,

    /// Grid exponent of the first step (2^resolution cells per axis)
    #[arg(long, default_value_t = 6)]
    resolution: u32,

    /// Number of successive refinement steps
    #[arg(long, default_value_t = 1)]
    refine: u32,

    /// Relative residual tolerance for the inner-cover identity
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,

    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

enum CliError {
    /// Bad invocation or bad scene data: exit 2.
    Usage(String),
    /// A check could not run because its hypothesis is violated: exit 1.
    Hypothesis(String),
}

impl From<String> for CliError {
    fn from(message: String) -> Self {
        CliError::Usage(message)
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            2
        }
        Err(CliError::Hypothesis(message)) => {
            eprintln!("error: {message}");
            1
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Volume { scene, name } => cmd_volume(&scene, &name),
        Command::Check(args) => cmd_check(args),
        Command::Measure(args) => cmd_measure(args),
    }
}

/// 17 significant digits, enough to round-trip any f64.
fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes a report to stdout; a reader that hangs up early (broken pipe) is
/// not an error.
fn emit(report: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(report.as_bytes());
    let _ = out.flush();
}

fn default_seed() -> u64 {
    std::env::var("KVOL_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

fn command_echo() -> String {
    std::env::args().collect::<Vec<_>>().join(" ")
}

fn cmd_volume(scene_path: &Path, name: &str) -> Result<i32, CliError> {
    let scene = Scene::load(scene_path)?;
    let entry = scene.tuple(name)?;
    let body = Parallelopiped::new(entry.vectors.clone())
        .map_err(|e| CliError::Usage(format!("tuple '{name}': {e}")))?;
    let mut out = String::new();
    let _ = writeln!(out, "name: {name}");
    let _ = writeln!(out, "volume_gram: {}", fmt17(volume_gram(&body)));
    if let Some(frame_name) = &entry.frame {
        let frame = scene.frame(frame_name)?;
        let v = volume_coordinate(&body, &frame)
            .map_err(|e| CliError::Hypothesis(format!("tuple '{name}': {e}")))?;
        let _ = writeln!(out, "volume_coordinate: {}", fmt17(v));
    }
    emit(&out);
    Ok(0)
}

struct Trial {
    label: String,
    report: CheckReport,
}

fn cmd_check(args: CheckArgs) -> Result<i32, CliError> {
    let seed = args.seed.unwrap_or_else(default_seed);
    let tolerance = args
        .tolerance
        .unwrap_or_else(|| args.kind.default_tolerance());
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(CliError::Usage(format!(
            "tolerance must be a positive real, got {tolerance}"
        )));
    }
    let trials = if args.random {
        random_trials(&args, seed, tolerance)?
    } else {
        vec![scene_trial(&args, tolerance)?]
    };
    print_check_report(args.kind.name(), seed, tolerance, &trials, args.format);
    Ok(if trials.iter().all(|t| t.report.pass) {
        0
    } else {
        1
    })
}

fn random_dims(
    rng: &mut SplitMix64,
    k_override: Option<usize>,
    n_override: Option<usize>,
) -> Result<(usize, usize), CliError> {
    if let Some(k) = k_override {
        if !(1..=6).contains(&k) {
            return Err(CliError::Usage(format!("--k must be in 1..=6, got {k}")));
        }
    }
    if let Some(n) = n_override {
        if !(1..=12).contains(&n) {
            return Err(CliError::Usage(format!("--n must be in 1..=12, got {n}")));
        }
        if let Some(k) = k_override {
            if k > n {
                return Err(CliError::Usage(format!("--k {k} exceeds --n {n}")));
            }
        }
    }
    let k = match k_override {
        Some(k) => k,
        None => {
            let max_k = 3.min(n_override.unwrap_or(3));
            1 + rng.below(max_k)
        }
    };
    let n = match n_override {
        Some(n) => n,
        None => k + rng.below(7usize.saturating_sub(k) + 1),
    };
    Ok((k, n))
}

fn random_vector(rng: &mut SplitMix64, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.uniform(-1.0, 1.0)).collect()
}

fn random_tuple(rng: &mut SplitMix64, k: usize, n: usize) -> Vec<Vec<f64>> {
    (0..k).map(|_| random_vector(rng, n)).collect()
}

fn random_frame(rng: &mut SplitMix64, k: usize, n: usize) -> Frame {
    loop {
        let x = random_tuple(rng, k, n);
        let independent = Matrix::from_rows(&x)
            .ok()
            .and_then(|m| full_rank(&m).ok())
            .unwrap_or(false);
        if !independent {
            continue;
        }
        if let Ok(frame) = orthonormalize(&x) {
            if frame.dim() == k {
                return frame;
            }
        }
    }
}

fn random_trials(args: &CheckArgs, seed: u64, tolerance: f64) -> Result<Vec<Trial>, CliError> {
    if args.trials < 1 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let mut out = Vec::with_capacity(args.trials);
    for index in 0..args.trials {
        let mut rng = SplitMix64::for_trial(seed, index as u64);
        out.push(random_instance(args, &mut rng, tolerance)?);
    }
    Ok(out)
}

fn random_instance(
    args: &CheckArgs,
    rng: &mut SplitMix64,
    tolerance: f64,
) -> Result<Trial, CliError> {
    let fail = |e: kvol::Error| CliError::Hypothesis(e.to_string());
    match args.kind {
        CheckKind::Product => {
            let (k, n) = random_dims(rng, args.k, args.n)?;
            let x = random_tuple(rng, k, n);
            let y = random_combination(rng, &x);
            let report = product_formula_parallelopipeds(&x, &y, tolerance).map_err(fail)?;
            Ok(Trial {
                label: format!("k={k} n={n}"),
                report,
            })
        }
        CheckKind::Pythagoras => {
            let (k, n) = random_dims(rng, args.k, args.n)?;
            let x = random_tuple(rng, k, n);
            let report = product_formula_parallelopipeds(&x, &x, tolerance).map_err(fail)?;
            Ok(Trial {
                label: format!("k={k} n={n}"),
                report,
            })
        }
        CheckKind::BinetCauchy => {
            let (k, n) = random_dims(rng, args.k, args.n)?;
            let a = Matrix::from_rows(&random_tuple(rng, k, n)).map_err(fail)?;
            let b = Matrix::from_rows(&random_tuple(rng, k, n)).map_err(fail)?;
            let report = binet_cauchy_check(&a, &b, tolerance).map_err(fail)?;
            Ok(Trial {
                label: format!("k={k} n={n}"),
                report,
            })
        }
        CheckKind::DeGua => {
            let p = 10.0 * (1.0 - rng.next_f64());
            let q = 10.0 * (1.0 - rng.next_f64());
            let r = 10.0 * (1.0 - rng.next_f64());
            let report = de_gua_check(p, q, r, tolerance).map_err(fail)?;
            Ok(Trial {
                label: format!("legs=({p:.3},{q:.3},{r:.3})"),
                report,
            })
        }
        CheckKind::Scaling => {
            let (k, n) = random_dims(rng, args.k, args.n)?;
            let u = random_frame(rng, k, n);
            let w = random_frame(rng, k, n);
            let edges: Vec<Vec<f64>> = (0..k)
                .map(|_| {
                    u.from_coords(&random_vector(rng, k))
                        .expect("coordinate count matches the frame")
                })
                .collect();
            let body = Parallelopiped::new(edges).map_err(fail)?;
            let map = Matrix::from_rows(&random_tuple(rng, k, k)).map_err(fail)?;
            let report = scaling_check(&map, &body, &u, &w, tolerance).map_err(fail)?;
            Ok(Trial {
                label: format!("k={k} n={n}"),
                report,
            })
        }
    }
}

/// y_i = sum_j c_ij x_j: a tuple spanning the same subspace as x.
fn random_combination(rng: &mut SplitMix64, x: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = x[0].len();
    (0..x.len())
        .map(|_| {
            let mut acc = vec![0.0; n];
            for xj in x {
                let c = rng.uniform(-1.0, 1.0);
                for (a, b) in acc.iter_mut().zip(xj) {
                    *a += c * b;
                }
            }
            acc
        })
        .collect()
}

fn scene_trial(args: &CheckArgs, tolerance: f64) -> Result<Trial, CliError> {
    let fail = |e: kvol::Error| CliError::Hypothesis(e.to_string());
    // de-gua takes its legs from the flag, no scene required.
    if args.kind == CheckKind::DeGua {
        let legs = args
            .legs
            .as_ref()
            .ok_or_else(|| CliError::Usage("de-gua needs --legs p,q,r or --random".into()))?;
        if legs.len() != 3 {
            return Err(CliError::Usage(format!(
                "--legs needs exactly three values, got {}",
                legs.len()
            )));
        }
        let report = de_gua_check(legs[0], legs[1], legs[2], tolerance).map_err(fail)?;
        return Ok(Trial {
            label: format!("legs=({},{},{})", legs[0], legs[1], legs[2]),
            report,
        });
    }

    let scene_path = args
        .scene
        .as_ref()
        .ok_or_else(|| CliError::Usage("provide --scene FILE or --random".into()))?;
    let scene = Scene::load(scene_path)?;
    let named = |option: &Option<String>, flag: &str| -> Result<String, CliError> {
        option
            .clone()
            .ok_or_else(|| CliError::Usage(format!("{} needs --{flag} NAME", args.kind.name())))
    };
    match args.kind {
        CheckKind::Product => {
            let a = named(&args.a, "a")?;
            let b = named(&args.b, "b")?;
            let x = scene.tuple(&a)?.vectors.clone();
            let y = scene.tuple(&b)?.vectors.clone();
            let report = product_formula_parallelopipeds(&x, &y, tolerance).map_err(fail)?;
            Ok(Trial {
                label: format!("a={a} b={b}"),
                report,
            })
        }
        CheckKind::Pythagoras => {
            let a = named(&args.a, "a")?;
            let x = scene.tuple(&a)?.vectors.clone();
            let report = product_formula_parallelopipeds(&x, &x, tolerance).map_err(fail)?;
            Ok(Trial {
                label: format!("a={a}"),
                report,
            })
        }
        CheckKind::BinetCauchy => {
            let a = named(&args.a, "a")?;
            let b = named(&args.b, "b")?;
            let ma = scene.matrix(&a)?;
            let mb = scene.matrix(&b)?;
            let report = binet_cauchy_check(&ma, &mb, tolerance).map_err(fail)?;
            Ok(Trial {
                label: format!("a={a} b={b}"),
                report,
            })
        }
        CheckKind::Scaling => {
            let map_name = named(&args.map, "map")?;
            let a = named(&args.a, "a")?;
            let u_name = named(&args.u, "u")?;
            let w_name = named(&args.w, "w")?;
            let map = scene.matrix(&map_name)?;
            let edges = scene.tuple(&a)?.vectors.clone();
            let body = Parallelopiped::new(edges)
                .map_err(|e| CliError::Usage(format!("tuple '{a}': {e}")))?;
            let u = scene.frame(&u_name)?;
            let w = scene.frame(&w_name)?;
            let report = scaling_check(&map, &body, &u, &w, tolerance).map_err(fail)?;
            Ok(Trial {
                label: format!("map={map_name} a={a} u={u_name} w={w_name}"),
                report,
            })
        }
        CheckKind::DeGua => unreachable!("handled above"),
    }
}

fn print_check_report(kind: &str, seed: u64, tolerance: f64, trials: &[Trial], format: Format) {
    let max_residual = trials
        .iter()
        .map(|t| t.report.residual)
        .fold(0.0f64, f64::max);
    let pass = trials.iter().all(|t| t.report.pass);
    let mut out = String::new();
    match format {
        Format::Machine => {
            let _ = writeln!(out, "kind={kind}");
            let _ = writeln!(out, "seed={seed}");
            let _ = writeln!(out, "trials={}", trials.len());
            let _ = writeln!(out, "max_residual={}", fmt17(max_residual));
            let _ = writeln!(out, "pass={pass}");
        }
        Format::Human => {
            let _ = writeln!(out, "command: {}", command_echo());
            let _ = writeln!(out, "kind: {kind}");
            let _ = writeln!(out, "seed: {seed}");
            let _ = writeln!(out, "trials: {}", trials.len());
            let _ = writeln!(out, "tolerance: {}", fmt17(tolerance));
            let _ = writeln!(out, "trial  instance  lhs  rhs  residual  pass");
            for (index, trial) in trials.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{index}  {}  {}  {}  {}  {}",
                    trial.label,
                    fmt17(trial.report.lhs),
                    fmt17(trial.report.rhs),
                    fmt17(trial.report.residual),
                    if trial.report.pass { "yes" } else { "NO" },
                );
            }
            let _ = writeln!(out, "max residual: {}", fmt17(max_residual));
            let _ = writeln!(out, "result: {}", if pass { "PASS" } else { "FAIL" });
        }
    }
    emit(&out);
}

fn cmd_measure(args: MeasureArgs) -> Result<i32, CliError> {
    if args.refine < 1 {
        return Err(CliError::Usage("--refine must be at least 1".into()));
    }
    let max = kvol::measure::MAX_RESOLUTION as u64;
    if args.resolution < 1 || args.resolution as u64 + args.refine as u64 - 1 > max {
        return Err(CliError::Usage(format!(
            "resolution steps must stay within 1..={max}, got --resolution {} --refine {}",
            args.resolution, args.refine
        )));
    }
    if !(args.tolerance > 0.0 && args.tolerance.is_finite()) {
        return Err(CliError::Usage(format!(
            "tolerance must be a positive real, got {}",
            args.tolerance
        )));
    }
    let scene = Scene::load(&args.scene)?;
    let (region_a, subspace_a) = scene.region(&args.region_a)?;
    let (region_b, subspace_b) = scene.region(&args.region_b)?;

    let mut steps: Vec<(u32, BracketReport)> = Vec::new();
    for offset in 0..args.refine {
        let resolution = args.resolution + offset;
        let report = product_formula_measurable(
            &region_a,
            &subspace_a,
            &region_b,
            &subspace_b,
            resolution,
            args.tolerance,
        )
        .map_err(|e| match e {
            kvol::Error::Domain(_) => CliError::Hypothesis(e.to_string()),
            other => CliError::Usage(other.to_string()),
        })?;
        steps.push((resolution, report));
    }

    let max_residual = steps
        .iter()
        .map(|(_, r)| r.check.residual)
        .fold(0.0f64, f64::max);
    let residuals_ok = steps.iter().all(|(_, r)| r.check.pass);
    let widths: Vec<f64> = steps
        .iter()
        .map(|(_, r)| r.product_bracket_width())
        .collect();
    let widths_ok = widths.windows(2).all(|w| w[1] <= w[0]);
    let pass = residuals_ok && widths_ok;

    let mut out = String::new();
    match args.format {
        Format::Machine => {
            let _ = writeln!(out, "kind=measure");
            let _ = writeln!(out, "seed=0");
            let _ = writeln!(out, "trials={}", steps.len());
            let _ = writeln!(out, "max_residual={}", fmt17(max_residual));
            let _ = writeln!(out, "pass={pass}");
        }
        Format::Human => {
            let _ = writeln!(out, "command: {}", command_echo());
            let _ = writeln!(out, "kind: measure");
            let _ = writeln!(out, "region A: {}", args.region_a);
            let _ = writeln!(out, "region B: {}", args.region_b);
            let _ = writeln!(out, "tolerance: {}", fmt17(args.tolerance));
            for (resolution, report) in &steps {
                let _ = writeln!(out, "resolution {resolution}:");
                let _ = writeln!(
                    out,
                    "  volumes A: inner {}  outer {}",
                    fmt17(report.inner_volume_a),
                    fmt17(report.outer_volume_a)
                );
                let _ = writeln!(
                    out,
                    "  volumes B: inner {}  outer {}",
                    fmt17(report.inner_volume_b),
                    fmt17(report.outer_volume_b)
                );
                let _ = writeln!(
                    out,
                    "  identity: lhs {}  rhs {}  residual {}  {}",
                    fmt17(report.check.lhs),
                    fmt17(report.check.rhs),
                    fmt17(report.check.residual),
                    if report.check.pass { "ok" } else { "FAIL" },
                );
                let _ = writeln!(
                    out,
                    "  product bracket width: {}",
                    fmt17(report.product_bracket_width())
                );
                for (subset, term) in &report.check.per_term {
                    let _ = writeln!(out, "  term {subset}: {}", fmt17(*term));
                }
            }
            let _ = writeln!(out, "max residual: {}", fmt17(max_residual));
            let _ = writeln!(
                out,
                "bracket widths: {}",
                if widths_ok {
                    "nonincreasing"
                } else {
                    "NOT nonincreasing"
                }
            );
            let _ = writeln!(out, "result: {}", if pass { "PASS" } else { "FAIL" });
        }
    }
    emit(&out);
    Ok(if pass { 0 } else { 1 })
}
