//! The `equivk` command line.
//!
//! Exit codes: `0` success, `1` a verification check failed (or an internal
//! invariant broke), `2` bad input.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::character::{character_table, SignedGroup};
use crate::error::Error;
use crate::group::{catalogue, DEFAULT_ORDER_LIMIT};
use crate::ktheory::{k_group_s1_lambda_in, k_group_s_lambda_in, rank_splitting_report_in};
use crate::report::{KGroupReport, Report, ReportBody, TableReport, VerifyReport};
use crate::spec::ProblemSpec;
use crate::verification::{lambda_label, run_suite, verify_group, SuiteOptions};

/// Environment variable overriding the largest group order that is built.
pub const ORDER_CAP_VAR: &str = "EQUIVK_ORDER_CAP";

const SPEC_HELP: &str = "\
GROUP SPECIFICATIONS
  A spec is inline JSON (when it starts with '{') or a path to a JSON file:
    {\"family\": \"D\", \"n\": 4, \"lambda\": {\"convention\": \"reflection-sign\"}}
    {\"family\": \"product\", \"factors\": [{\"family\": \"C\", \"n\": 2}, {\"family\": \"Q8\"}]}
    {\"generators\": [[1,0,2],[1,2,0]], \"lambda\": {\"generator_signs\": [-1, 1]}}
  Families: C|cyclic n, D|dihedral n (order 2n), Q8|quaternion, S|symmetric n<=6,
  A|alternating n<=6, product|direct_product factors, or generators (permutations
  of 0..d as image lists).

LAMBDA CONVENTIONS
  onto-pm1         first surjection G -> {+1,-1} in generator-sign order: pattern
                   t = 1, 2, ... sends generator i to -1 iff bit i of t is set
  reflection-sign  dihedral: rotations -> +1, reflections -> -1 (kernel = rotations)
  rotation-sign    same homomorphism as reflection-sign
  sign             permutation groups (S, A, generators): parity
  generator_signs  explicit +-1 per generator, extended multiplicatively and checked
  Generators: C: a; D: r, s; Q8: a, b; S_n: (0 1), (0 1 ... n-1); A_n: (0 1 k) for
  k = 2..n-1; products: the factors' generators in order.

ENVIRONMENT
  EQUIVK_ORDER_CAP  largest group order to build (default 1024)

EXIT STATUS
  0 success, 1 a check failed, 2 invalid input";

#[derive(Parser, Debug)]
#[command(
    name = "equivk",
    version,
    about = "Reduced equivariant K-groups of S^λ and S^(1+λ) for finite groups",
    after_help = SPEC_HELP
)]
struct Cli {
    /// Also write the machine-readable JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the character table of a group.
    Chartab {
        /// Group spec (inline JSON or file path); any `lambda` is ignored.
        spec: String,
    },
    /// Print a presentation of a reduced K-group: rank, basis, action matrices.
    Kgroup {
        /// Group spec with a `lambda` (inline JSON or file path).
        spec: String,
        #[arg(long, value_enum)]
        sphere: Sphere,
    },
    /// Run the verification suite on one group or on every catalogued group.
    Verify {
        /// Group spec; without `lambda`, every surjection onto {±1} is checked.
        #[arg(required_unless_present = "all_upto", conflicts_with = "all_upto")]
        spec: Option<String>,
        /// Verify every catalogued group of order at most N.
        #[arg(long, value_name = "N")]
        all_upto: Option<usize>,
        /// Random samples per presentation for the module-structure check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Seed for the module-structure samples.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Sphere {
    #[value(name = "s-lambda")]
    SLambda,
    #[value(name = "s1-lambda")]
    S1Lambda,
}

/// A failed run: exit status plus diagnostic.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if matches!(e, Error::Internal(_)) { 1 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

/// Runs the command line with process stdout/stderr; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    run_with(args, &mut out, &mut err)
}

/// As [`run`], writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn order_cap() -> Result<usize, Failure> {
    match std::env::var(ORDER_CAP_VAR) {
        Err(_) => Ok(DEFAULT_ORDER_LIMIT),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Failure::input(format!("{ORDER_CAP_VAR}: expected a positive integer, got `{v}`"))),
    }
}

fn load_spec(arg: &str) -> Result<ProblemSpec, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::input(format!("cannot read spec file `{arg}`: {e}")))?
    };
    Ok(ProblemSpec::parse(&text)?)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let cap = order_cap()?;
    let (report, text, code) = match &cli.command {
        Command::Chartab { spec } => {
            let spec = load_spec(spec)?;
            let g = spec.build(cap)?;
            let table = character_table(&g)?;
            let report = Report::new(ReportBody::Chartab(TableReport::new(&spec.group.to_string(), &table)));
            let text = report.to_text(Some(&table));
            (report, text, 0)
        }
        Command::Kgroup { spec, sphere } => {
            let spec = load_spec(spec)?;
            let g = spec.build(cap)?;
            let lambda = spec
                .resolve_lambda(&g)?
                .ok_or_else(|| Error::spec("lambda", "missing (kgroup needs a sign homomorphism)"))?;
            let setting = SignedGroup::new(&g, &lambda)?;
            let (label, l) = (spec.group.to_string(), lambda_label(&lambda));
            let body = match sphere {
                Sphere::S1Lambda => KGroupReport::from_s1_lambda(
                    &label,
                    &l,
                    &k_group_s1_lambda_in(&setting)?,
                    rank_splitting_report_in(&setting),
                ),
                Sphere::SLambda => KGroupReport::from_s_lambda(&label, &l, &k_group_s_lambda_in(&setting)?),
            };
            let report = Report::new(ReportBody::Kgroup(body));
            let text = report.to_text(None);
            (report, text, 0)
        }
        Command::Verify { spec, all_upto, samples, seed, threads } => {
            let mut options = SuiteOptions {
                module_samples: *samples,
                seed: *seed,
                order_limit: cap,
                ..SuiteOptions::default()
            };
            if let Some(t) = threads {
                options.threads = (*t).max(1);
            }
            let (scope, results) = match (spec, all_upto) {
                (_, Some(n)) => (format!("all groups of order ≤ {n}"), run_suite(&catalogue(*n), &options)),
                (Some(spec), None) => {
                    let spec = load_spec(spec)?;
                    let g = spec.build(cap)?;
                    let lambdas = spec.resolve_lambda(&g)?.map(|l| vec![l]);
                    let label = spec.group.to_string();
                    let results = verify_group(&label, &g, lambdas.as_deref(), &options);
                    (label, results)
                }
                (None, None) => return Err(Failure::input("verify needs a spec or --all-upto N")),
            };
            let report = VerifyReport::new(&scope, results);
            let code = if report.failed > 0 { 1 } else { 0 };
            let report = Report::new(ReportBody::Verify(report));
            let text = report.to_text(None);
            (report, text, code)
        }
    };
    let _ = out.write_all(text.as_bytes());
    if let Some(path) = &cli.json {
        std::fs::write(path, report.to_json())
            .map_err(|e| Failure::input(format!("cannot write `{}`: {e}", path.display())))?;
    }
    Ok(code)
}
