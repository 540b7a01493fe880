//! Command-line front end.
//!
//! ```text
//! cylrr series    --profile 2,1,1 --side oracle --order 10
//! cylrr series    --identity 5 --side product --order 30 --format json
//! cylrr verify    main --order 100
//! cylrr verify    all --jobs 4 --format json
//! cylrr enumerate --profile 2,1,1 --max-weight 3
//! ```
//!
//! Exit codes: 0 success, 1 coefficient mismatch, 2 usage error.

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::borodin::product_series;
use crate::closedforms::{self, f_finite, g_closed_series, verify_corollary, IdentityId};
use crate::cylindric::{self, canonical_profiles, compositions, Profile};
use crate::funceq::{gb_rhs, inex_rhs, solve_g};
use crate::report::VerificationReport;
use crate::series::compare;
use crate::QSeries;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest oracle order accepted without `--force`.
pub const ORACLE_ORDER_BOUND: usize = 14;
/// Largest enumeration weight accepted without `--force`.
pub const ENUMERATE_WEIGHT_BOUND: u64 = 16;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Debug, Parser)]
#[command(name = "cylrr", version, about = "Exact checks for cylindric partitions and A2 Rogers-Ramanujan identities")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for independent checks (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the coefficients of a generating function.
    Series(SeriesArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// List cylindric partitions of a profile.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    /// Brute-force enumeration.
    Oracle,
    /// Product formula.
    Borodin,
    /// Double-sum side of an identity.
    Sum,
    /// Product side of an identity.
    Product,
    /// Closed form for entries at most --n.
    Finite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Borodin,
    Funceq,
    Main,
    Finite,
    Transforms,
    All,
}

#[derive(Debug, clap::Args)]
struct SeriesArgs {
    #[arg(long)]
    profile: Option<String>,
    #[arg(long)]
    identity: Option<u8>,
    #[arg(long, value_enum)]
    side: Side,
    #[arg(long)]
    order: usize,
    /// Largest allowed entry (oracle, finite).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Lift the oracle safety bound.
    #[arg(long)]
    force: bool,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    target: Target,
    #[arg(long)]
    profile: Option<String>,
    /// Truncation order; each target has its own default.
    #[arg(long)]
    order: Option<usize>,
    /// Largest entry (finite) or y-degree (funceq).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[arg(long)]
    force: bool,
}

#[derive(Debug, clap::Args)]
struct EnumerateArgs {
    #[arg(long)]
    profile: String,
    #[arg(long)]
    max_weight: u64,
    #[arg(long)]
    max_entry: Option<u32>,
    #[arg(long)]
    force: bool,
}

/// Parses `args` (including the program name), runs the command writing to
/// `out`, and returns the process exit code. Usage errors go to `err`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return usage("--jobs must be at least 1");
        }
        builder = builder.num_threads(jobs);
    }
    let pool = builder.build().map_err(|e| CliError::Usage(e.to_string()))?;
    match cli.command {
        Command::Series(a) => cmd_series(&a, out),
        Command::Verify(a) => cmd_verify(&a, &pool, out),
        Command::Enumerate(a) => cmd_enumerate(&a, out),
    }
}

fn parse_profile(s: &str) -> Result<Profile, CliError> {
    s.parse::<Profile>().map_err(|e| CliError::Usage(e.to_string()))
}

fn level4_rank3(p: &Profile) -> Result<(), CliError> {
    if p.level() != 4 || p.rank() != 3 {
        return usage(format!("closed forms exist only for compositions of 4 into 3 parts, got {p}"));
    }
    Ok(())
}

fn check_oracle_order(order: usize, force: bool) -> Result<(), CliError> {
    if order > ORACLE_ORDER_BOUND && !force {
        return usage(format!(
            "oracle order {order} exceeds the safety bound {ORACLE_ORDER_BOUND}; pass --force to run it anyway"
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct SeriesJson {
    subject: String,
    order: usize,
    coefficients: Vec<serde_json::Number>,
}

fn cmd_series(a: &SeriesArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let need_profile = || -> Result<Profile, CliError> {
        match &a.profile {
            Some(p) => parse_profile(p),
            None => usage(format!("--side {:?} needs --profile", a.side).to_lowercase()),
        }
    };
    let need_identity = || -> Result<IdentityId, CliError> {
        match a.identity {
            Some(i) => IdentityId::new(i).map_err(|e| CliError::Usage(e.to_string())),
            None => usage(format!("--side {:?} needs --identity", a.side).to_lowercase()),
        }
    };

    let (subject, series): (String, QSeries) = match a.side {
        Side::Oracle => {
            let p = need_profile()?;
            check_oracle_order(a.order, a.force)?;
            match a.n {
                Some(n) => (format!("oracle-{p}-n{n}"), cylindric::oracle_f_n(&p, n as u32, a.order)),
                None => (format!("oracle-{p}"), cylindric::oracle_f(&p, a.order)),
            }
        }
        Side::Borodin => {
            let p = need_profile()?;
            let s = product_series(&p, a.order).map_err(|e| CliError::Usage(e.to_string()))?;
            (format!("borodin-{p}"), s)
        }
        Side::Sum => {
            let id = need_identity()?;
            (format!("sum-{id}"), closedforms::sum_side(id, a.order))
        }
        Side::Product => {
            let id = need_identity()?;
            (format!("product-{id}"), closedforms::product_side(id, a.order))
        }
        Side::Finite => {
            let p = need_profile()?;
            level4_rank3(&p)?;
            let Some(n) = a.n else {
                return usage("--side finite needs --n");
            };
            let canon = p.canonical();
            let s = f_finite(&canon, n, a.order).map_err(|e| CliError::Usage(e.to_string()))?;
            (format!("finite-{canon}-n{n}"), s)
        }
    };

    match a.format {
        Format::Plain => {
            for (e, c) in series.coeffs().iter().enumerate() {
                writeln!(out, "{e}\t{c}")?;
            }
        }
        Format::Json => {
            let coefficients = series
                .coeffs()
                .iter()
                .map(|c| c.to_string().parse::<serde_json::Number>().expect("integer literal"))
                .collect();
            let doc = SeriesJson { subject, order: series.order(), coefficients };
            writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"))?;
        }
    }
    Ok(EXIT_OK)
}

type Check = Box<dyn Fn() -> VerificationReport + Send + Sync>;

fn cmd_verify(a: &VerifyArgs, pool: &rayon::ThreadPool, out: &mut dyn Write) -> Result<i32, CliError> {
    let profile = a.profile.as_deref().map(parse_profile).transpose()?;
    let targets: &[Target] = match a.target {
        Target::All => &[Target::Borodin, Target::Funceq, Target::Main, Target::Finite, Target::Transforms],
        ref t => std::slice::from_ref(t),
    };
    let mut checks: Vec<Check> = Vec::new();
    for &t in targets {
        checks.extend(build_checks(t, a, profile.as_ref())?);
    }

    let mut reports: Vec<VerificationReport> = pool.install(|| checks.par_iter().map(|c| c()).collect());
    reports.sort_by(|x, y| x.subject().cmp(y.subject()));
    write_reports(&reports, a.format, out)?;
    Ok(exit_code(&reports))
}

/// `EXIT_OK` when every report matches, `EXIT_MISMATCH` otherwise.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::is_match) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn build_checks(target: Target, a: &VerifyArgs, profile: Option<&Profile>) -> Result<Vec<Check>, CliError> {
    let mut checks: Vec<Check> = Vec::new();
    match target {
        Target::Borodin => {
            let order = a.order.unwrap_or(10);
            check_oracle_order(order, a.force)?;
            let profiles = match profile {
                Some(p) => vec![p.clone()],
                None => compositions(4, 3),
            };
            if let Some(p) = profiles.iter().find(|p| p.level() == 0) {
                return usage(format!("profile {p} has level 0"));
            }
            let mut corollary: Vec<Profile> =
                profiles.iter().filter(|p| p.level() == 4 && p.rank() == 3).map(Profile::canonical).collect();
            corollary.sort();
            corollary.dedup();
            for p in profiles {
                checks.push(Box::new(move || {
                    let start = std::time::Instant::now();
                    let oracle: QSeries = cylindric::oracle_f(&p, order);
                    let product: QSeries = product_series(&p, order).expect("positive level");
                    compare(&oracle, &product).named(format!("borodin-{p}")).with_elapsed_since(start)
                }));
            }
            for p in corollary {
                checks.push(Box::new(move || verify_corollary::<BigInt>(&p, order).expect("level-4 rank-3 profile")));
            }
        }
        Target::Funceq => {
            let order = a.order.unwrap_or(30);
            let ydeg = a.n.unwrap_or(8);
            for p in canonical_profiles(4, 3) {
                let q = p.clone();
                checks.push(Box::new(move || {
                    let start = std::time::Instant::now();
                    let provider: HashMap<Profile, _> = canonical_profiles(4, 3)
                        .into_iter()
                        .map(|c| {
                            let g = g_closed_series::<BigInt>(&c, order, ydeg).expect("canonical");
                            (c, g)
                        })
                        .collect();
                    let rhs = gb_rhs(&q, &provider, order, ydeg).expect("provider covers level 4");
                    bi_compare(&rhs, &provider[&q], order).named(format!("funceq-gb-{q}")).with_elapsed_since(start)
                }));
                checks.push(Box::new(move || {
                    let start = std::time::Instant::now();
                    let table = solve_g::<BigInt>(order, ydeg);
                    let closed = g_closed_series::<BigInt>(&p, order, ydeg).expect("canonical");
                    bi_compare(table.generating(&p).expect("solved"), &closed, order)
                        .named(format!("funceq-solver-{p}"))
                        .with_elapsed_since(start)
                }));
            }
            // The oracle side is fixed at (8, 8) so the suite stays fast.
            let oracle_order = 8;
            for p in compositions(4, 3) {
                checks.push(Box::new(move || {
                    let start = std::time::Instant::now();
                    let provider: HashMap<Profile, _> = canonical_profiles(4, 3)
                        .into_iter()
                        .map(|c| {
                            let f = cylindric::oracle_f_y::<BigInt>(&c, oracle_order);
                            (c, f)
                        })
                        .collect();
                    let rhs = inex_rhs(&p, &provider, oracle_order, oracle_order).expect("provider covers level 4");
                    bi_compare(&rhs, &provider[&p.canonical()], oracle_order)
                        .named(format!("funceq-inex-{p}"))
                        .with_elapsed_since(start)
                }));
            }
        }
        Target::Main => {
            let order = a.order.unwrap_or(100);
            for id in IdentityId::ALL {
                checks.push(Box::new(move || closedforms::verify_main::<BigInt>(id, order)));
            }
        }
        Target::Finite => {
            let order = a.order.unwrap_or(10);
            check_oracle_order(order, a.force)?;
            let profiles = match profile {
                Some(p) => {
                    level4_rank3(p)?;
                    vec![p.canonical()]
                }
                None => canonical_profiles(4, 3),
            };
            let ns: Vec<usize> = match a.n {
                Some(n) => vec![n],
                None => (0..=3).collect(),
            };
            for p in profiles {
                for &n in &ns {
                    let p = p.clone();
                    checks.push(Box::new(move || {
                        let start = std::time::Instant::now();
                        let closed: QSeries = f_finite(&p, n, order).expect("canonical");
                        let oracle: QSeries = cylindric::oracle_f_n(&p, n as u32, order);
                        compare(&closed, &oracle).named(format!("finite-{p}-n{n}")).with_elapsed_since(start)
                    }));
                }
            }
        }
        Target::Transforms => {
            let order = a.order.unwrap_or(60);
            checks.push(Box::new(move || closedforms::verify_transform3::<BigInt>(order)));
            checks.push(Box::new(move || closedforms::verify_transform4::<BigInt>(order)));
        }
        Target::All => unreachable!("expanded by the caller"),
    }
    Ok(checks)
}

/// Compares two y-graded series termwise, reporting the smallest mismatching
/// q-exponent over all y-degrees.
fn bi_compare(a: &crate::YSeries, b: &crate::YSeries, order: usize) -> VerificationReport {
    let parts: Vec<_> = a.terms().iter().zip(b.terms()).map(|(x, y)| compare(x, y)).collect();
    VerificationReport::all("", order, &parts)
}

fn write_reports(reports: &[VerificationReport], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Plain => {
            for r in reports {
                let status = if r.is_match() { "ok" } else { "MISMATCH" };
                let first = r.first_mismatch().map_or("-".to_string(), |e| e.to_string());
                writeln!(out, "{}\t{}\t{}\t{}", r.subject(), r.order(), status, first)?;
            }
            let bad = reports.iter().filter(|r| !r.is_match()).count();
            writeln!(out, "{} checks, {} mismatches", reports.len(), bad)?;
        }
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(reports).expect("serializable"))?;
        }
    }
    Ok(())
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let p = parse_profile(&a.profile)?;
    if a.max_weight > ENUMERATE_WEIGHT_BOUND && !a.force {
        return usage(format!(
            "max weight {} exceeds the safety bound {ENUMERATE_WEIGHT_BOUND}; pass --force to run it anyway",
            a.max_weight
        ));
    }
    let all = cylindric::enumerate(&p, a.max_weight, a.max_entry);
    writeln!(out, "count\t{}", all.len())?;
    for l in &all {
        writeln!(out, "{l}")?;
    }
    Ok(EXIT_OK)
}
