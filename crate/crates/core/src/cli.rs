//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on usage or validation errors, 2 when a
//! configured resource limit would be exceeded. Diagnostics are a single
//! line on the error stream.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use crate::error::Error;
use crate::exec::{with_thread_cap, Parallelism};
use crate::ledger::{bt_poonen_applies, dh_crossover, CoverData, CurveScenario};
use crate::lie::{metabelian_dimension, metabelian_dimension_enumerated, witt_dimension, MetabelianBasis};
use crate::report::{
    parse_rational, render_csv, render_table, report_to_csv, report_to_json, report_to_table,
    verify_report_json, Verification,
};
use crate::sign::{
    bracket_eigenspaces, bracket_plus_dimension_with, parity_placements,
    parity_placements_by_sum, sym_eigenspaces, sym_eigenspaces_enumerated, SignSignature,
};
use crate::series::binomial;

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "SELMER_DIM_THREADS";
/// Default ceiling on `--max-n`.
pub const MAX_N_CAP: usize = 512;
/// Ceiling on the number of words or monomials any single command enumerates.
pub const ENUMERATION_CAP: u64 = 20_000_000;

#[derive(Debug, Parser)]
#[command(name = "selmer-dim", version, about = "Exact graded-dimension counts and the Selmer dimension ledger")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Free Lie algebra dimensions (Witt formula).
    Witt(WittArgs),
    /// Free metabelian Lie algebra dimensions.
    Metab(MetabArgs),
    /// Involution eigenspaces on symmetric powers or bracket spaces.
    Eigens(EigensArgs),
    /// Balls-in-bins placements with an even count in green bins.
    Parity(ParityArgs),
    /// Dimension-hypothesis ledger.
    Dh(DhArgs),
    /// Unramified-correspondence predicate for a cover C -> C/G.
    Applies(AppliesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Sym,
    Bracket,
}

#[derive(Debug, Args)]
struct Levels {
    #[arg(long)]
    max_n: usize,
    /// Lift the default cap on --max-n.
    #[arg(long)]
    unsafe_max_n: bool,
}

#[derive(Debug, Args)]
struct WittArgs {
    #[arg(long)]
    gens: usize,
    #[command(flatten)]
    levels: Levels,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Debug, Args)]
struct MetabArgs {
    #[arg(long)]
    gens: usize,
    #[command(flatten)]
    levels: Levels,
    /// Also enumerate and list the bracket basis.
    #[arg(long)]
    enumerate: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Debug, Args)]
struct EigensArgs {
    #[arg(long = "plus")]
    plus: usize,
    #[arg(long = "minus")]
    minus: usize,
    #[command(flatten)]
    levels: Levels,
    #[arg(long, value_enum, default_value = "sym")]
    mode: Mode,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Debug, Args)]
struct ParityArgs {
    #[arg(long)]
    blue: usize,
    #[arg(long)]
    green: usize,
    #[arg(long)]
    balls: u64,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Debug, Args)]
struct DhArgs {
    #[arg(long, required_unless_present = "verify")]
    genus: Option<u32>,
    #[arg(long, default_value_t = 1)]
    degree: u32,
    #[arg(long, required_unless_present = "verify")]
    splus: Option<u32>,
    /// F^0 budget coefficient; the default 1 is a placeholder, not a value
    /// attached to any curve.
    #[arg(long, default_value = "1")]
    coeff_a: String,
    /// H^2 budget coefficient; the default 1 is a placeholder.
    #[arg(long, default_value = "1")]
    coeff_b: String,
    #[arg(long, default_value_t = 1)]
    real: u32,
    #[arg(long, default_value_t = 0)]
    complex: u32,
    #[arg(long, required_unless_present = "verify")]
    max_n: Option<usize>,
    #[arg(long)]
    unsafe_max_n: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Recompute a stored JSON report and confirm every row.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["genus", "splus", "max_n", "out"])]
    verify: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AppliesArgs {
    #[arg(long)]
    quotient_genus: u32,
    #[arg(long)]
    curve_genus: u32,
    #[arg(long)]
    solvable: bool,
    /// Ramification indices above two distinct points of the quotient.
    #[arg(long, value_name = "E1,E2", value_parser = index_list::<2>)]
    ram_pair: Option<[u64; 2]>,
    /// Ramification indices at three points of the curve.
    #[arg(long, value_name = "A,B,L", value_parser = index_list::<3>)]
    ram_triple: Option<[u64; 3]>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

fn index_list<const N: usize>(s: &str) -> std::result::Result<[u64; N], String> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| format!("bad index {p:?}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    parts
        .try_into()
        .map_err(|_| format!("expected {N} comma-separated indices"))
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Resource(String),
}

impl CliError {
    fn status(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Resource(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Resource(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("i/o error: {e}"))
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (program name first), runs the command, and returns the
/// exit status. Reads the thread cap from [`THREADS_ENV`].
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Some(n),
            _ => {
                let _ = writeln!(err, "error: {THREADS_ENV} must be a positive integer (got {v:?})");
                return 1;
            }
        },
        Err(_) => None,
    };
    run_with_threads(args, threads, out, err)
}

/// As [`run`], with an explicit thread cap.
pub fn run_with_threads<I, T>(
    args: I,
    threads: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return 1;
        }
    };
    let result = with_thread_cap(threads, || dispatch(cli.command));
    match result {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.status()
        }
    }
}

fn dispatch(cmd: Command) -> CliResult<String> {
    match cmd {
        Command::Witt(a) => witt(a),
        Command::Metab(a) => metab(a),
        Command::Eigens(a) => eigens(a),
        Command::Parity(a) => parity(a),
        Command::Dh(a) => dh(a),
        Command::Applies(a) => applies(a),
    }
}

fn check_max_n(max_n: usize, unsafe_max_n: bool) -> CliResult<()> {
    if max_n > MAX_N_CAP && !unsafe_max_n {
        return Err(CliError::Resource(format!(
            "--max-n {max_n} exceeds the cap {MAX_N_CAP}; pass --unsafe-max-n to lift it"
        )));
    }
    Ok(())
}

fn positive(name: &str, value: usize) -> CliResult<()> {
    if value == 0 {
        return Err(CliError::Usage(format!("{name} must be >= 1")));
    }
    Ok(())
}

fn check_enumeration(total: &BigUint, what: &str) -> CliResult<()> {
    if *total > BigUint::from(ENUMERATION_CAP) {
        return Err(CliError::Resource(format!(
            "{what} would enumerate {total} items (limit {ENUMERATION_CAP})"
        )));
    }
    Ok(())
}

/// Emits a simple table in the requested format. `meta` goes into the JSON
/// object alongside `rows`.
fn emit_table(
    format: Format,
    meta: serde_json::Value,
    headers: &[&str],
    rows: Vec<Vec<String>>,
) -> String {
    match format {
        Format::Table => render_table(headers, &rows),
        Format::Csv => render_csv(headers, &rows),
        Format::Json => {
            let json_rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let obj: serde_json::Map<String, serde_json::Value> = headers
                        .iter()
                        .zip(r)
                        .map(|(h, c)| {
                            // levels are small; everything else stays a string
                            let v = match (*h, c.parse::<u64>()) {
                                ("n", Ok(n)) => json!(n),
                                _ => json!(c),
                            };
                            (h.to_string(), v)
                        })
                        .collect();
                    serde_json::Value::Object(obj)
                })
                .collect();
            let mut obj = meta;
            obj["rows"] = json!(json_rows);
            let mut s = serde_json::to_string_pretty(&obj).expect("json");
            s.push('\n');
            s
        }
    }
}

fn witt(a: WittArgs) -> CliResult<String> {
    positive("--gens", a.gens)?;
    positive("--max-n", a.levels.max_n)?;
    check_max_n(a.levels.max_n, a.levels.unsafe_max_n)?;
    let mut cumulative = BigUint::from(0u8);
    let mut rows = Vec::new();
    for n in 1..=a.levels.max_n {
        let dim = witt_dimension(a.gens as u64, n as u64)?;
        cumulative += &dim;
        rows.push(vec![n.to_string(), dim.to_string(), cumulative.to_string()]);
    }
    Ok(emit_table(
        a.format,
        json!({"command": "witt", "gens": a.gens, "provenance": "witt"}),
        &["n", "dimension", "cumulative"],
        rows,
    ))
}

fn metab(a: MetabArgs) -> CliResult<String> {
    if a.gens < 2 {
        return Err(CliError::Usage("--gens must be >= 2".into()));
    }
    positive("--max-n", a.levels.max_n)?;
    check_max_n(a.levels.max_n, a.levels.unsafe_max_n)?;
    let m = a.gens;
    let dims = (1..=a.levels.max_n)
        .map(|n| metabelian_dimension(m as u64, n as u64))
        .collect::<Result<Vec<_>, _>>()?;
    if a.enumerate {
        check_enumeration(&dims.iter().sum(), "the basis listing")?;
    }

    let mut headers = vec!["n", "dimension", "cumulative"];
    if a.enumerate {
        headers.push("enumerated");
        headers.push("agree");
    }
    let mut rows = Vec::new();
    let mut cumulative = BigUint::from(0u8);
    let mut listing = Vec::new();
    for (idx, dim) in dims.iter().enumerate() {
        let n = idx + 1;
        cumulative += dim;
        let mut row = vec![n.to_string(), dim.to_string(), cumulative.to_string()];
        if a.enumerate {
            let counted = metabelian_dimension_enumerated(m, n, Parallelism::Parallel)?;
            row.push(counted.to_string());
            row.push((counted == *dim).to_string());
            let words: Vec<String> = if n == 1 {
                (1..=m).map(|i| format!("a{i}")).collect()
            } else {
                MetabelianBasis::new(m, n)?.map(|w| w.to_string()).collect()
            };
            listing.push((n, words));
        }
        rows.push(row);
    }

    let meta = json!({"command": "metab", "gens": m, "provenance": "metabelian"});
    let mut text = emit_table(a.format, meta, &headers, rows);
    if a.enumerate {
        match a.format {
            Format::Json => {
                let mut v: serde_json::Value = serde_json::from_str(&text).expect("json");
                v["basis"] = listing
                    .iter()
                    .map(|(n, w)| json!({"n": n, "words": w}))
                    .collect();
                text = serde_json::to_string_pretty(&v).expect("json");
                text.push('\n');
            }
            Format::Csv | Format::Table => {
                for (n, words) in &listing {
                    let _ = writeln!(text, "basis n={n}:");
                    for w in words {
                        let _ = writeln!(text, "  {w}");
                    }
                }
            }
        }
    }
    Ok(text)
}

fn eigens(a: EigensArgs) -> CliResult<String> {
    let sig = SignSignature::from_multiplicities(a.plus, a.minus)?;
    let m = sig.m();
    let max_n = a.levels.max_n;
    check_max_n(max_n, a.levels.unsafe_max_n)?;
    let headers = [
        "n",
        "total",
        "plus_analytic",
        "minus_analytic",
        "plus_enumerated",
        "minus_enumerated",
        "agree",
    ];
    let mut rows = Vec::new();
    match a.mode {
        Mode::Sym => {
            let work: BigUint = (0..=max_n as u64)
                .map(|n| binomial(n + m as u64 - 1, m as i64 - 1))
                .sum();
            check_enumeration(&work, "monomial enumeration")?;
            for n in 0..=max_n {
                let gf = sym_eigenspaces(sig, n as u64);
                let en = sym_eigenspaces_enumerated(sig, n);
                rows.push(split_row(n, &gf, &en));
            }
        }
        Mode::Bracket => {
            if m < 2 {
                return Err(CliError::Usage("bracket mode needs --plus + --minus >= 2".into()));
            }
            let work: BigUint = (2..=max_n as u64)
                .map(|n| metabelian_dimension(m as u64, n))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .sum();
            check_enumeration(&work, "bracket enumeration")?;
            for n in 2..=max_n {
                let gf = bracket_eigenspaces(m, sig.s(), n)?;
                let plus = bracket_plus_dimension_with(m, sig.s(), n, Parallelism::Parallel)?;
                let en = crate::sign::EigenSplit {
                    minus: gf.total() - &plus,
                    plus,
                };
                rows.push(split_row(n, &gf, &en));
            }
        }
    }
    let mode = match a.mode {
        Mode::Sym => "sym",
        Mode::Bracket => "bracket",
    };
    Ok(emit_table(
        a.format,
        json!({"command": "eigens", "mode": mode, "plus": a.plus, "minus": a.minus}),
        &headers,
        rows,
    ))
}

fn split_row(n: usize, gf: &crate::sign::EigenSplit, en: &crate::sign::EigenSplit) -> Vec<String> {
    vec![
        n.to_string(),
        gf.total().to_string(),
        gf.plus.to_string(),
        gf.minus.to_string(),
        en.plus.to_string(),
        en.minus.to_string(),
        (gf == en).to_string(),
    ]
}

fn parity(a: ParityArgs) -> CliResult<String> {
    let by_sum = parity_placements_by_sum(a.blue, a.green, a.balls)?;
    let closed = parity_placements(a.blue, a.green, a.balls)?;
    let total = binomial(a.balls + (a.blue + a.green) as u64 - 1, (a.blue + a.green) as i64 - 1);
    let rows = vec![vec![
        a.blue.to_string(),
        a.green.to_string(),
        a.balls.to_string(),
        total.to_string(),
        by_sum.to_string(),
        closed.to_string(),
        (by_sum == closed).to_string(),
    ]];
    Ok(emit_table(
        a.format,
        json!({"command": "parity"}),
        &["blue", "green", "balls", "placements", "green_even", "closed_form", "agree"],
        rows,
    ))
}

fn dh(a: DhArgs) -> CliResult<String> {
    if let Some(path) = a.verify {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        return match verify_report_json(&text, Parallelism::Parallel)? {
            Verification::Confirmed { rows } => Ok(format!("verified: {rows} rows match\n")),
            Verification::Mismatch(why) => Err(CliError::Usage(format!("verification failed: {why}"))),
        };
    }
    let (genus, splus, max_n) = match (a.genus, a.splus, a.max_n) {
        (Some(g), Some(s), Some(n)) => (g, s, n),
        _ => return Err(CliError::Usage("--genus, --splus and --max-n are required".into())),
    };
    check_max_n(max_n, a.unsafe_max_n)?;
    let scn = CurveScenario::rational(
        genus,
        a.degree,
        splus,
        parse_rational(&a.coeff_a)?,
        parse_rational(&a.coeff_b)?,
        max_n,
    )?
    .with_signature(a.real, a.complex)?;
    let report = dh_crossover(&scn)?;
    let text = match a.format {
        Format::Json => report_to_json(&report),
        Format::Csv => report_to_csv(&report),
        Format::Table => report_to_table(&report),
    };
    match a.out {
        Some(path) => {
            std::fs::write(&path, text)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn applies(a: AppliesArgs) -> CliResult<String> {
    let data = CoverData {
        curve_genus: a.curve_genus,
        quotient_genus: a.quotient_genus,
        solvable: a.solvable,
        ramification: a
            .ram_pair
            .map(|p| p.into_iter().map(|e| vec![e]).collect())
            .unwrap_or_default(),
        triple: a.ram_triple,
    };
    let decision = bt_poonen_applies(&data)?;
    let (label, condition) = match decision {
        crate::ledger::Applicability::Applies(c) => ("applies", Some(c.number())),
        crate::ledger::Applicability::Unknown => ("unknown", None),
    };
    Ok(match a.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json!({
                "command": "applies",
                "decision": label,
                "condition": condition,
            }))
            .expect("json");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(
            &["decision", "condition"],
            &[vec![label.into(), condition.map_or(String::new(), |c| c.to_string())]],
        ),
        Format::Table => format!("{decision}\n"),
    })
}
