//! The `permlattice` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 on
//! bad arguments or input the library rejects.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use permlattice::census::{Census, CensusRow, Mode, Table};
use permlattice::words::{count_reduced_words, reduced_words_capped, DEFAULT_LENGTH_CAP};
use permlattice::{
    classify, emit_hasse, FinitePoset, IntervalSpec, OrderKind, Permutation, TheoremReport,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "permlattice",
    version,
    about = "Lattice properties of intervals in the Bruhat and weak orders of S_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the principal order ideal below a permutation.
    ClassifyPoi {
        perm: String,
        #[arg(long, value_enum, default_value_t = Orders::Both)]
        order: Orders,
        #[command(flatten)]
        output: ReportOutput,
    },
    /// Classify an interval [bottom, top].
    ClassifyInterval {
        #[command(flatten)]
        interval: IntervalArgs,
        #[command(flatten)]
        output: ReportOutput,
    },
    /// List the reduced words of a permutation.
    ReducedWords {
        perm: String,
        /// Refuse to enumerate above this length.
        #[arg(long, default_value_t = DEFAULT_LENGTH_CAP)]
        cap: usize,
        /// Print only the number of reduced words.
        #[arg(long)]
        count: bool,
    },
    /// Count intervals and compare with closed forms.
    Census {
        /// 3 (principal ideals), 4 (boolean above atoms), 5 (all classes above atoms) or support.
        #[arg(long)]
        table: Table,
        /// Range of n, e.g. 3..9 (inclusive) or a single value.
        #[arg(long = "n", value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
        #[command(flatten)]
        run: CensusArgs,
    },
    /// Run every census table in every requested mode; exit 1 on any mismatch.
    Verify {
        #[arg(long = "n", value_parser = parse_range, default_value = "2..5")]
        n: RangeInclusive<usize>,
        /// Restrict to some tables (repeatable).
        #[arg(long)]
        table: Vec<Table>,
        #[command(flatten)]
        run: CensusArgs,
    },
    /// Emit the Hasse diagram of an interval as Graphviz DOT.
    Hasse {
        #[command(flatten)]
        interval: IntervalArgs,
        /// Mark elements that are boolean over every generator in their support.
        #[arg(long)]
        highlight_support: bool,
    },
    /// Classify a poset given as a cover-list file ("a < b" per line).
    ClassifyPoset {
        file: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(clap::Args, Debug)]
struct IntervalArgs {
    #[arg(long, default_value = "bruhat", value_parser = parse_order)]
    order: OrderKind,
    /// Permutation, or a generator as s2 / 2. Defaults to the identity.
    #[arg(long)]
    bottom: Option<String>,
    #[arg(long)]
    top: String,
    /// Degree used to expand generators.
    #[arg(long = "n")]
    degree: Option<usize>,
}

#[derive(clap::Args, Debug)]
struct ReportOutput {
    /// When to materialise the interval for a structural check.
    #[arg(long, value_enum, default_value_t = Structural::Auto)]
    structural: Structural,
    /// Human-readable output instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(clap::Args, Debug)]
struct CensusArgs {
    /// predicate, structural or both [default: predicate for census, both for verify]
    #[arg(long)]
    mode: Option<Mode>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Aligned human-readable table instead of CSV or JSON.
    #[arg(long)]
    pretty: bool,
    /// Worker threads for the sweeps (default: all cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Allow structural sweeps of S_6.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Orders {
    Bruhat,
    Weak,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Structural {
    /// Only for n <= 6.
    Auto,
    Always,
    Never,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Largest degree materialised by `--structural auto`.
const AUTO_STRUCTURAL_MAX_N: usize = 6;

fn parse_order(s: &str) -> Result<OrderKind, String> {
    s.parse()
}

/// `a..b` and `a..=b` are both inclusive; a single number is a one-point range.
fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("invalid range {s:?} (expected e.g. 3..9 or 5)");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

#[derive(Debug)]
enum Endpoint {
    Perm(Permutation),
    Generator(usize),
}

fn parse_endpoint(s: &str, degree_hint: Option<usize>) -> Result<Endpoint, String> {
    let t = s.trim();
    if let Some(rest) = t.strip_prefix('s').or_else(|| t.strip_prefix('σ')) {
        return rest
            .parse()
            .map(Endpoint::Generator)
            .map_err(|_| format!("cannot parse generator {s:?}"));
    }
    match t.parse::<Permutation>() {
        Ok(p) if degree_hint.is_none_or(|n| n == p.degree()) => Ok(Endpoint::Perm(p)),
        parsed => match t.parse::<usize>() {
            Ok(k) if degree_hint.is_some() => Ok(Endpoint::Generator(k)),
            _ => parsed.map(Endpoint::Perm).map_err(|e| e.to_string()),
        },
    }
}

fn resolve(endpoint: Endpoint, degree: usize) -> Result<Permutation, String> {
    match endpoint {
        Endpoint::Perm(p) if p.degree() == degree => Ok(p),
        Endpoint::Perm(p) => Err(format!("{p} has degree {}, expected {degree}", p.degree())),
        Endpoint::Generator(k) => Permutation::generator(degree, k).map_err(|e| e.to_string()),
    }
}

fn interval_spec(args: &IntervalArgs) -> Result<IntervalSpec, String> {
    // a plain permutation fixes the degree for a bare generator index
    let first_pass = |s: &str| {
        parse_endpoint(s, None).ok().and_then(|e| match e {
            Endpoint::Perm(p) if p.degree() > 1 => Some(p.degree()),
            _ => None,
        })
    };
    let hint = args
        .degree
        .or_else(|| first_pass(&args.top))
        .or_else(|| args.bottom.as_deref().and_then(first_pass));
    let top = parse_endpoint(&args.top, hint)?;
    let bottom = args
        .bottom
        .as_deref()
        .map(|b| parse_endpoint(b, hint))
        .transpose()?;
    let degree = match (&top, &bottom, hint) {
        (_, _, Some(n)) => n,
        (Endpoint::Perm(p), _, _) | (_, Some(Endpoint::Perm(p)), _) => p.degree(),
        _ => return Err("cannot infer the degree; pass --n".into()),
    };
    let top = resolve(top, degree)?;
    let bottom = match bottom {
        Some(b) => resolve(b, degree)?,
        None => Permutation::identity(degree).map_err(|e| e.to_string())?,
    };
    IntervalSpec::new(bottom, top, args.order).map_err(|e| e.to_string())
}

fn theorem_report(spec: &IntervalSpec, structural: Structural) -> TheoremReport {
    let run = match structural {
        Structural::Always => true,
        Structural::Never => false,
        Structural::Auto => spec.top().degree() <= AUTO_STRUCTURAL_MAX_N,
    };
    TheoremReport::new(spec, run)
}

fn pretty_report(r: &TheoremReport) -> String {
    let mut s = format!("{}\n", r.subject);
    let line = |name: &str, x: &Option<permlattice::LatticeReport>| match x {
        Some(x) => format!(
            "  {name:<11} {x}  rank={} atoms={}\n",
            x.rank.map_or("-".into(), |k| k.to_string()),
            x.atom_count
        ),
        None => format!("  {name:<11} n/a\n"),
    };
    s += &line("predicate", &r.predicate_result);
    s += &line("structural", &r.structural_result);
    let _ = writeln!(s, "  agree       {}", r.agree);
    s
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and executes the verb.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::ClassifyPoi {
            perm,
            order,
            output,
        } => {
            let w: Permutation = perm
                .parse()
                .map_err(|e: permlattice::Error| usage(e.to_string()))?;
            let orders: &[OrderKind] = match order {
                Orders::Bruhat => &[OrderKind::Bruhat],
                Orders::Weak => &[OrderKind::Weak],
                Orders::Both => &[OrderKind::Bruhat, OrderKind::Weak],
            };
            let reports: Vec<TheoremReport> = orders
                .iter()
                .map(|&kind| {
                    theorem_report(&IntervalSpec::ideal(w.clone(), kind), output.structural)
                })
                .collect();
            if output.pretty {
                for r in &reports {
                    out.write_all(pretty_report(r).as_bytes())?;
                }
            } else {
                writeln!(out, "{}", serde_json::to_string_pretty(&reports).unwrap())?;
            }
            Ok(exit_for(reports.iter().all(|r| r.agree)))
        }
        Command::ClassifyInterval { interval, output } => {
            let spec = interval_spec(&interval).map_err(usage)?;
            let report = theorem_report(&spec, output.structural);
            if output.pretty {
                out.write_all(pretty_report(&report).as_bytes())?;
            } else {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())?;
            }
            Ok(exit_for(report.agree))
        }
        Command::ReducedWords { perm, cap, count } => {
            let w: Permutation = perm
                .parse()
                .map_err(|e: permlattice::Error| usage(e.to_string()))?;
            if count {
                writeln!(out, "{}", count_reduced_words(&w))?;
            } else {
                for word in reduced_words_capped(&w, cap).map_err(|e| usage(e.to_string()))? {
                    writeln!(out, "{word}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Census { table, n, run } => {
            let n = n.unwrap_or_else(|| default_range(table));
            let report = census(&run)?
                .verify(n, run.mode.unwrap_or(Mode::Predicate), &[table])
                .map_err(|e| usage(e.to_string()))?;
            write_rows(&report.rows, &run, out)?;
            for d in &report.disagreements {
                writeln!(err, "disagreement: {d}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { n, table, run } => {
            let tables = if table.is_empty() {
                Table::ALL.to_vec()
            } else {
                table
            };
            let report = census(&run)?
                .verify(n, run.mode.unwrap_or(Mode::Both), &tables)
                .map_err(|e| usage(e.to_string()))?;
            write_rows(&report.rows, &run, out)?;
            let mismatches = report.rows.iter().filter(|r| !r.matches).count();
            for d in &report.disagreements {
                writeln!(err, "disagreement: {d}")?;
            }
            writeln!(
                err,
                "{} rows, {} formula mismatches, {} method disagreements",
                report.rows.len(),
                mismatches,
                report.disagreements.len()
            )?;
            Ok(exit_for(report.ok()))
        }
        Command::Hasse {
            interval,
            highlight_support,
        } => {
            let spec = interval_spec(&interval).map_err(usage)?;
            out.write_all(emit_hasse(&spec, highlight_support).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::ClassifyPoset { file, pretty } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let poset = FinitePoset::parse_cover_list(&text).map_err(|e| usage(e.to_string()))?;
            let report = classify(&poset);
            if pretty {
                writeln!(out, "{report}")?;
            } else {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn exit_for(ok: bool) -> u8 {
    if ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn default_range(table: Table) -> RangeInclusive<usize> {
    match table {
        Table::PrincipalIdeals => 2..=8,
        Table::AtomBoolean => 3..=9,
        Table::Atoms | Table::Support => 2..=7,
    }
}

fn census(args: &CensusArgs) -> Result<Census, Failure> {
    let mut census = Census::new();
    if let Some(w) = args.workers {
        if w == 0 {
            return Err(usage("--workers must be positive"));
        }
        census = census.with_workers(w);
    }
    if args.allow_large {
        census = census.allow_large_structural();
    }
    Ok(census)
}

fn write_rows(rows: &[CensusRow], args: &CensusArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if args.pretty {
        out.write_all(pretty_rows(rows).as_bytes())?;
        return Ok(());
    }
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(rows).unwrap())?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if rows.is_empty() {
                w.write_record([
                    "n", "k", "order", "class", "counted", "formula", "match", "method",
                ])
                .map_err(|e| usage(e.to_string()))?;
            }
            for row in rows {
                w.serialize(row).map_err(|e| usage(e.to_string()))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn pretty_rows(rows: &[CensusRow]) -> String {
    let header = [
        "n", "k", "order", "class", "counted", "formula", "match", "method",
    ];
    let cells: Vec<[String; 8]> = rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.k.map_or("-".into(), |k| k.to_string()),
                r.order.to_string(),
                r.class.to_string(),
                r.counted.to_string(),
                r.formula.to_string(),
                if r.matches { "yes" } else { "NO" }.to_string(),
                r.method.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut s = String::new();
    let mut line = |row: &[&str]| {
        let parts: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        let _ = writeln!(s, "{}", parts.join("  ").trim_end());
    };
    line(&header);
    for row in &cells {
        line(&row.each_ref().map(String::as_str));
    }
    s
}
