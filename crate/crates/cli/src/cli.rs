use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qrigid_core::alpha::{alpha_is_rigid, validate_type_alpha};
use qrigid_core::equivariant::MAX_ENUMERATION_PERIOD;
use qrigid_core::ext::{hom_ext_dims, interval_ext, interval_to_rep, DiscreteInterval, QuiverSpec};
use qrigid_core::linalg::PrimeField;
use serde::Serialize;
use serde_json::{json, Value};

use crate::json::{alpha_rep_from_str, rep_from_str, to_line, AlphaRepJson, OrbitSetJson};
use crate::{formula, parallel};

/// Result of one invocation: exit code and the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "qrigid",
    version,
    about = "Rigid interval representations of type-A quivers with shift symmetry"
)]
struct Cli {
    /// Worker threads for enumeration; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,

    /// Also write a JSON run report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count maximal rigid orbit sets of a period against the closed form.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        period: u64,
    },
    /// List maximal rigid orbit sets of a period, one per line.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        period: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List maximal rigid representations of type alpha for an n-point grid.
    EnumerateAlpha {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Ext between two interval modules on the integer line.
    Ext {
        #[arg(long = "i", value_name = "LO,HI", value_parser = parse_interval, allow_hyphen_values = true)]
        i: DiscreteInterval,
        #[arg(long = "j", value_name = "LO,HI", value_parser = parse_interval, allow_hyphen_values = true)]
        j: DiscreteInterval,
        /// Clip both intervals to this window and compute with matrices.
        #[arg(long, value_name = "LO,HI", value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<(i64, i64)>,
    },
    /// Hom and Ext between two representations given as JSON files.
    HomExt {
        #[arg(long, value_name = "PATH")]
        left: PathBuf,
        #[arg(long, value_name = "PATH")]
        right: PathBuf,
    },
    /// Validate a representation of type alpha and test its rigidity.
    Check {
        #[arg(long, value_name = "PATH")]
        file: PathBuf,
    },
    /// Compare enumerated and closed-form counts for a range of grid sizes.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_min: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
    },
}

fn parse_end(s: &str) -> Result<Option<i64>, String> {
    match s.trim() {
        "ninf" | "pinf" => Ok(None),
        t => t
            .parse()
            .map(Some)
            .map_err(|_| format!("bad endpoint \"{t}\"")),
    }
}

fn parse_interval(s: &str) -> Result<DiscreteInterval, String> {
    let (lo, hi) = s.split_once(',').ok_or("expected LO,HI")?;
    if lo.trim() == "pinf" || hi.trim() == "ninf" {
        return Err("ninf can only start and pinf only end an interval".into());
    }
    DiscreteInterval::new(parse_end(lo)?, parse_end(hi)?).map_err(|e| e.to_string())
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected LO,HI")?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad window end \"{lo}\""))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad window end \"{hi}\""))?;
    if lo > hi {
        return Err("window lower end above upper end".into());
    }
    Ok((lo, hi))
}

enum Failure {
    /// Bad arguments or input files: exit 2.
    Input(String),
    /// An internal law failed during a run: exit 1.
    Anomaly(String),
}

impl From<qrigid_core::Error> for Failure {
    fn from(e: qrigid_core::Error) -> Self {
        match e {
            qrigid_core::Error::FiberAnomaly(_) | qrigid_core::Error::PoolBound(_) => {
                Failure::Anomaly(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<crate::json::FormatError> for Failure {
    fn from(e: crate::json::FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Done {
    code: i32,
    out: String,
    results: Value,
}

impl Done {
    fn verdict(pass: bool, out: String, results: Value) -> Self {
        Done {
            code: if pass { 0 } else { 1 },
            out,
            results,
        }
    }
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a [String],
    results: &'a Value,
    pass: bool,
    exit_code: i32,
    duration_ms: u128,
}

fn check_period(m: u64) -> Result<usize, Failure> {
    if m as usize > MAX_ENUMERATION_PERIOD {
        return Err(Failure::Input(format!(
            "period {m} exceeds the enumeration limit of {MAX_ENUMERATION_PERIOD}"
        )));
    }
    Ok(m as usize)
}

fn check_grid_size(n: u64) -> Result<usize, Failure> {
    if 2 * n as usize > MAX_ENUMERATION_PERIOD {
        return Err(Failure::Input(format!(
            "n = {n} exceeds the enumeration limit of {}",
            MAX_ENUMERATION_PERIOD / 2
        )));
    }
    Ok(n as usize)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn count(period: u64, jobs: usize) -> Result<Done, Failure> {
    let m = check_period(period)?;
    let found = parallel::maximal_rigid_sets(m, jobs)?.len();
    let expected = formula::equivariant_count(period);
    let pass = expected == found.into();
    let out = format!(
        "enumerated={found} formula={expected} {}\n",
        pass_fail(pass)
    );
    let results = json!({"period": m, "enumerated": found, "formula": expected.to_string()});
    Ok(Done::verdict(pass, out, results))
}

fn enumerate(period: u64, format: Format, jobs: usize) -> Result<Done, Failure> {
    let m = check_period(period)?;
    let sets = parallel::maximal_rigid_sets(m, jobs)?;
    let mut out = String::new();
    if format == Format::Tsv {
        out.push_str("m\torbits\n");
    }
    for s in &sets {
        match format {
            Format::Json => out.push_str(&to_line(&OrbitSetJson::from(s))),
            Format::Tsv => {
                let orbits: Vec<String> = s.orbits().iter().map(|o| o.to_string()).collect();
                write!(out, "{m}\t{}", orbits.join(" ")).unwrap();
            }
        }
        out.push('\n');
    }
    Ok(Done::verdict(
        true,
        out,
        json!({"period": m, "count": sets.len()}),
    ))
}

fn enumerate_alpha(n: u64, format: Format, jobs: usize) -> Result<Done, Failure> {
    let n = check_grid_size(n)?;
    let reps = parallel::alpha_reps(n, jobs)?;
    let mut out = String::new();
    if format == Format::Tsv {
        out.push_str("n\torbits\tfamilies\n");
    }
    for r in &reps {
        match format {
            Format::Json => out.push_str(&to_line(&AlphaRepJson::from(r))),
            Format::Tsv => {
                let orbits: Vec<String> = r.orbits().iter().map(|o| o.to_string()).collect();
                let families: Vec<String> = r.families().iter().map(|f| f.to_string()).collect();
                write!(out, "{n}\t{}\t{}", orbits.join(" "), families.join(" ")).unwrap();
            }
        }
        out.push('\n');
    }
    Ok(Done::verdict(
        true,
        out,
        json!({"n": n, "count": reps.len()}),
    ))
}

fn clip(iv: DiscreteInterval, lo: i64, hi: i64) -> DiscreteInterval {
    let a = iv.lo().map_or(lo, |x| x.max(lo));
    let b = iv.hi().map_or(hi, |x| x.min(hi));
    // an empty clip becomes an interval the window cannot see
    DiscreteInterval::new(Some(a), Some(b))
        .unwrap_or_else(|_| DiscreteInterval::finite(hi + 1, hi + 1).unwrap())
}

fn ext(
    i: DiscreteInterval,
    j: DiscreteInterval,
    window: Option<(i64, i64)>,
) -> Result<Done, Failure> {
    match window {
        None => {
            let e = interval_ext(&i, &j);
            Ok(Done::verdict(true, format!("ext={e}\n"), json!({"ext": e})))
        }
        Some((lo, hi)) => {
            let q = QuiverSpec::linear(lo, hi)?;
            let m = interval_to_rep(q, clip(i, lo, hi), PrimeField::F2)?;
            let n = interval_to_rep(q, clip(j, lo, hi), PrimeField::F2)?;
            let (h, e) = hom_ext_dims(&m, &n)?;
            Ok(Done::verdict(
                true,
                format!("hom={h} ext={e}\n"),
                json!({"hom": h, "ext": e}),
            ))
        }
    }
}

fn hom_ext(left: &Path, right: &Path) -> Result<Done, Failure> {
    let m = rep_from_str(&read(left)?)?;
    let n = rep_from_str(&read(right)?)?;
    let (h, e) = hom_ext_dims(&m, &n)?;
    Ok(Done::verdict(
        true,
        format!("hom={h} ext={e}\n"),
        json!({"hom": h, "ext": e}),
    ))
}

fn check(file: &Path) -> Result<Done, Failure> {
    let rep = alpha_rep_from_str(&read(file)?)?;
    if let Err(v) = validate_type_alpha(&rep) {
        return Ok(Done {
            code: 2,
            out: format!("invalid {v}\n"),
            results: json!({"valid": false, "violation": v.to_string()}),
        });
    }
    let rigid = alpha_is_rigid(&rep);
    let out = format!("valid {}\n", if rigid { "rigid" } else { "nonrigid" });
    Ok(Done::verdict(
        rigid,
        out,
        json!({"valid": true, "rigid": rigid}),
    ))
}

fn verify(n_min: u64, n_max: u64, jobs: usize) -> Result<Done, Failure> {
    if n_max < n_min {
        return Err(Failure::Input(format!(
            "--n-max {n_max} is below --n-min {n_min}"
        )));
    }
    check_grid_size(n_max)?;
    let mut out = String::from("n  formula  enumerated  status\n");
    let mut rows = Vec::new();
    let mut all = true;
    for n in n_min..=n_max {
        let found = parallel::alpha_reps(n as usize, jobs)?.len();
        let expected = formula::alpha_count(n);
        let pass = expected == found.into();
        all &= pass;
        writeln!(out, "{n}  {expected}  {found}  {}", pass_fail(pass)).unwrap();
        rows.push(
            json!({"n": n, "formula": expected.to_string(), "enumerated": found, "pass": pass}),
        );
    }
    Ok(Done::verdict(all, out, Value::Array(rows)))
}

fn pass_fail(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Parse `argv` (program name first) and execute the command.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let jobs = cli.jobs as usize;
    let started = Instant::now();
    let result = match &cli.command {
        Command::Count { period } => count(*period, jobs),
        Command::Enumerate { period, format } => enumerate(*period, *format, jobs),
        Command::EnumerateAlpha { n, format } => enumerate_alpha(*n, *format, jobs),
        Command::Ext { i, j, window } => ext(*i, *j, *window),
        Command::HomExt { left, right } => hom_ext(left, right),
        Command::Check { file } => check(file),
        Command::Verify { n_min, n_max } => verify(*n_min, *n_max, jobs),
    };
    let (mut outcome, results) = match result {
        Ok(done) => (
            Outcome {
                code: done.code,
                stdout: done.out,
                stderr: String::new(),
            },
            done.results,
        ),
        Err(Failure::Input(msg)) => (
            Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {msg}\n"),
            },
            json!({"error": msg}),
        ),
        Err(Failure::Anomaly(msg)) => (
            Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {msg}\n"),
            },
            json!({"error": msg}),
        ),
    };
    if let Some(path) = &cli.report {
        let report = RunReport {
            command: &argv[1..],
            results: &results,
            pass: outcome.code == 0,
            exit_code: outcome.code,
            duration_ms: started.elapsed().as_millis(),
        };
        let text = serde_json::to_string_pretty(&report).expect("plain data serializes");
        if let Err(e) = std::fs::write(path, text + "\n") {
            outcome
                .stderr
                .push_str(&format!("error: {}: {e}\n", path.display()));
            outcome.code = 2;
        }
    }
    outcome
}
