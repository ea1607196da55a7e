//! Command-line front end: argument parsing, input loading and JSON output.
//!
//! Exit codes: 0 success, 1 negative verdict of a predicate command, 2
//! indeterminate verdict, 10 usage error, 11 I/O error, 12 malformed input,
//! 13 a computation rejected its input.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use conefaces::certificates::NONNEGATIVITY_TOLERANCE;
use conefaces::rational::parse_rational;
use conefaces::{
    build_certificate, epsilon_search, face_report, gap_profile, is_d_independent,
    random_configuration_bounded, seven_point_scheme, six_point_scheme, snd_basis, snd_points,
    Form, PointConfiguration, Rational, Requirement, SearchOptions, Verdict, EXAMPLE_SIX_POINTS,
    SEVEN_POINTS_PERTURBED, SEVEN_POINTS_UNPERTURBED,
};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_INDETERMINATE: u8 = 2;
pub const EXIT_USAGE: u8 = 10;
pub const EXIT_IO: u8 = 11;
pub const EXIT_INPUT: u8 = 12;
pub const EXIT_MATH: u8 = 13;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "CONEFACES_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "conefaces",
    version,
    about = "Exact face dimensions of the nonnegative and SOS cones"
)]
pub struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions of I_d, I²_2d and I^(2)_2d for a point configuration.
    Dims(ConfigArgs),
    /// Tri-state d-independence verdict; the exit code carries the verdict.
    Independence(ConfigArgs),
    /// Explicit point sets and forms.
    #[command(subcommand)]
    Construct(Construct),
    /// Nonnegative-but-not-SOS certificate for one of the built-in cases.
    Certify(CertifyArgs),
    /// Naive gap counts over a range of configuration sizes.
    Gapscan(GapscanArgs),
    /// Seeded random configuration with integer coordinates.
    Random(RandomArgs),
}

#[derive(Debug, Args)]
pub struct ConfigArgs {
    /// JSON file holding a point configuration (`-` for stdin).
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long)]
    pub d: u32,
    /// Expected number of variables; checked against the configuration.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// The point set S_(n,d) with its basis of I_d.
    Snd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
    },
    /// Six points in RP^3 with the quadrics Q_i and the quartic R.
    Six4 {
        /// Configuration file; defaults to the worked example.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Four zero-based point triples, e.g. `0,1,2;0,3,4;1,3,5;2,4,5`.
        #[arg(long, value_parser = parse_triples)]
        triples: Option<[[usize; 3]; 4]>,
    },
    /// Seven points in RP^2 with the cubics Q_i and the sextic R.
    Seven3 {
        /// Configuration file; defaults to the perturbed worked example.
        #[arg(long, conflicts_with = "unperturbed")]
        config: Option<PathBuf>,
        /// Use the unperturbed example, which fails the genericity guard.
        #[arg(long)]
        unperturbed: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Case {
    /// Quartic in four variables from six points.
    #[value(name = "44")]
    Quartic4,
    /// Sextic in three variables from seven points.
    #[value(name = "36")]
    Sextic3,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long, value_enum)]
    pub case: Case,
    /// Perturbation weight as an exact rational, e.g. `1` or `1/8`.
    #[arg(long, default_value = "1", value_parser = parse_rational_arg)]
    pub epsilon: Rational,
    /// Search the dyadic grid for the largest passing weight instead.
    #[arg(long, conflicts_with = "epsilon")]
    pub search: bool,
    /// Sphere samples for the numeric minimum; 0 skips it.
    #[arg(long, default_value_t = 2000)]
    pub samples: usize,
    #[arg(long, default_value_t = 200)]
    pub refine_steps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GapscanArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long = "two-d")]
    pub two_d: u32,
    /// Inclusive range `a..b`.
    #[arg(long, value_parser = parse_range)]
    pub k_range: Option<(usize, usize)>,
    /// Also write `k,G` rows to this CSV file.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Require general linear position.
    #[arg(long)]
    pub glp: bool,
    /// Require a `yes` d-independence verdict for this d.
    #[arg(long)]
    pub d_independent: Option<u32>,
    /// Coordinates are drawn from [-bound, bound].
    #[arg(long, default_value_t = conefaces::sampling::DEFAULT_BOUND)]
    pub bound: i64,
}

#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Input(String),
    Math(conefaces::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<conefaces::Error> for CliError {
    fn from(e: conefaces::Error) -> Self {
        CliError::Math(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) => EXIT_IO,
            CliError::Input(_) => EXIT_INPUT,
            CliError::Math(_) => EXIT_MATH,
        }
    }
}

/// Result of a command: the JSON document and the exit code it implies.
#[derive(Debug)]
pub struct Outcome {
    pub json: String,
    pub exit_code: u8,
}

/// `construct snd` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SndConstruction {
    pub n: usize,
    pub d: u32,
    pub gamma: PointConfiguration,
    pub basis: Vec<Form>,
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    Ok((a, b))
}

fn parse_triples(s: &str) -> Result<[[usize; 3]; 4], String> {
    let groups: Vec<&str> = s.split(';').collect();
    if groups.len() != 4 {
        return Err(format!("expected 4 triples, got {}", groups.len()));
    }
    let mut out = [[0usize; 3]; 4];
    for (slot, g) in out.iter_mut().zip(&groups) {
        let idx: Vec<usize> = g
            .split(',')
            .map(|x| x.trim().parse().map_err(|e| format!("{x}: {e}")))
            .collect::<Result<_, _>>()?;
        *slot = idx
            .try_into()
            .map_err(|v: Vec<usize>| format!("triple of length {}", v.len()))?;
    }
    Ok(out)
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Io(path.into(), e))
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(path.into(), e))
    }
}

pub fn load_configuration(path: &Path) -> Result<PointConfiguration, CliError> {
    serde_json::from_str(&read_input(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_checked(args: &ConfigArgs) -> Result<PointConfiguration, CliError> {
    let g = load_configuration(&args.config)?;
    if let Some(n) = args.n {
        if n != g.n() {
            return Err(conefaces::Error::DimensionMismatch {
                expected: n,
                found: g.n(),
            }
            .into());
        }
    }
    Ok(g)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Yes => EXIT_OK,
        Verdict::No => EXIT_NO,
        Verdict::Indeterminate => EXIT_INDETERMINATE,
    }
}

fn builtin(points: &[&[i64]]) -> PointConfiguration {
    PointConfiguration::from_i64(points).expect("built-in configuration is valid")
}

fn certify(args: &CertifyArgs) -> Result<Outcome, CliError> {
    let (qs, r, gamma) = match args.case {
        Case::Quartic4 => {
            let g = builtin(&EXAMPLE_SIX_POINTS);
            let s = six_point_scheme(&g, None)?;
            (s.q, s.r, g)
        }
        Case::Sextic3 => {
            let g = builtin(&SEVEN_POINTS_PERTURBED);
            let s = seven_point_scheme(&g)?;
            (s.q, s.r, g)
        }
    };
    let epsilon = if args.search {
        let opts = SearchOptions {
            samples: args.samples.max(1),
            refine_steps: args.refine_steps,
        };
        epsilon_search(&qs, &r, &gamma, args.seed, opts)?.epsilon
    } else {
        args.epsilon.clone()
    };
    let mut cert = build_certificate(&qs, &r, &epsilon, &gamma)?;
    if args.samples > 0 {
        cert.attach_numeric_min(args.samples, args.refine_steps, args.seed);
    }
    let nonnegative = cert
        .numeric_min
        .as_ref()
        .is_none_or(|m| m.value >= NONNEGATIVITY_TOLERANCE);
    let code = if cert.not_sos_proof.not_sos && nonnegative {
        EXIT_OK
    } else {
        EXIT_NO
    };
    Ok(Outcome {
        json: to_json(&cert),
        exit_code: code,
    })
}

fn gapscan(args: &GapscanArgs) -> Result<Outcome, CliError> {
    let profile = gap_profile(args.n, args.two_d, args.k_range)?;
    if let Some(path) = &args.csv {
        let mut csv = String::from("k,G\n");
        for (k, g) in &profile.values {
            csv.push_str(&format!("{k},{g}\n"));
        }
        fs::write(path, csv).map_err(|e| CliError::Io(path.clone(), e))?;
    }
    Ok(Outcome {
        json: to_json(&profile),
        exit_code: EXIT_OK,
    })
}

/// Runs one command and returns its JSON and exit code without writing
/// anything.
pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    let ok = |json| Outcome {
        json,
        exit_code: EXIT_OK,
    };
    match command {
        Command::Dims(args) => {
            let g = load_checked(args)?;
            Ok(ok(to_json(&face_report(&g, args.d)?)))
        }
        Command::Independence(args) => {
            let g = load_checked(args)?;
            let report = is_d_independent(&g, args.d)?;
            Ok(Outcome {
                json: to_json(&report),
                exit_code: verdict_code(report.verdict),
            })
        }
        Command::Construct(Construct::Snd { n, d }) => {
            let out = SndConstruction {
                n: *n,
                d: *d,
                gamma: snd_points(*n, *d)?,
                basis: snd_basis(*n, *d)?,
            };
            Ok(ok(to_json(&out)))
        }
        Command::Construct(Construct::Six4 { config, triples }) => {
            let g = match config {
                Some(p) => load_configuration(p)?,
                None => builtin(&EXAMPLE_SIX_POINTS),
            };
            Ok(ok(to_json(&six_point_scheme(&g, *triples)?)))
        }
        Command::Construct(Construct::Seven3 {
            config,
            unperturbed,
        }) => {
            let g = match (config, unperturbed) {
                (Some(p), _) => load_configuration(p)?,
                (None, true) => builtin(&SEVEN_POINTS_UNPERTURBED),
                (None, false) => builtin(&SEVEN_POINTS_PERTURBED),
            };
            Ok(ok(to_json(&seven_point_scheme(&g)?)))
        }
        Command::Certify(args) => certify(args),
        Command::Gapscan(args) => gapscan(args),
        Command::Random(args) => {
            let req = Requirement {
                glp: args.glp,
                d_independent: args.d_independent,
            };
            let g = random_configuration_bounded(args.n, args.size, args.seed, req, args.bound)?;
            Ok(ok(to_json(&g)))
        }
    }
}

/// Caps the global thread pool from [`THREADS_ENV`] when it is set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("{THREADS_ENV}={raw} is not a thread count")))?;
    // Fails only if a pool already exists, in which case it is kept.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

/// Executes `cli`, writing JSON to stdout or `--output`; returns the exit code.
pub fn run(cli: Cli) -> u8 {
    let result = configure_threads().and_then(|()| execute(&cli.command));
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.json) {
                eprintln!("error: {}", CliError::Io(path.clone(), e));
                return EXIT_IO;
            }
        }
        None => print!("{}", outcome.json),
    }
    outcome.exit_code
}
