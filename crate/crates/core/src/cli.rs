//! Command-line front end. Every report is a single JSON document with the
//! keys `version`, `command`, `config`, `group`, `inputs`, `result` and
//! `records`; sweep summaries can also be written as CSV.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{catalog, make_group, Group};
use crate::isoperimetry::{classify, kappa, MAX_KAPPA_ORDER};
use crate::set::GroupSet;
use crate::setops::{adjoin_identity, is_chowla, progression_witness, Side};
use crate::theorems::{sweep, Retain, StatementId, SweepMode, SweepReport, SweepSpec};
use crate::wakeford::{analyze, build_graph, CountMode};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `"1,3,7"`, `"2..5"` or a mix; duplicates collapse, whitespace is
/// ignored and the empty string is the empty set.
pub fn parse_set_literal(g: &Group, text: &str) -> Result<GroupSet> {
    let mut out = g.empty_set();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let number = |s: &str| {
            s.trim().parse::<usize>().map_err(|_| Error::Parse {
                input: item.to_string(),
                reason: "expected INT or INT..INT".into(),
            })
        };
        let (lo, hi) = match item.split_once("..") {
            Some((a, b)) => (number(a)?, number(b)?),
            None => {
                let x = number(item)?;
                (x, x)
            }
        };
        if lo > hi {
            return Err(Error::Parse {
                input: item.to_string(),
                reason: "empty range".into(),
            });
        }
        if hi >= g.order() {
            return Err(Error::ItemOutOfRange {
                item: item.to_string(),
                index: hi,
                order: g.order(),
            });
        }
        (lo..=hi).for_each(|x| out.insert(x));
    }
    Ok(out)
}

/// Expands `family:LO..HI` into one descriptor per parameter value.
pub fn expand_group_arg(text: &str) -> Result<Vec<String>> {
    let expanded = text.split_once(':').and_then(|(family, rest)| {
        let (lo, hi) = rest.split_once("..")?;
        let (lo, hi) = (lo.parse::<usize>().ok()?, hi.parse::<usize>().ok()?);
        Some((lo..=hi).map(|n| format!("{family}:{n}")).collect::<Vec<_>>())
    });
    match expanded {
        Some(v) if v.is_empty() => Err(Error::Parse {
            input: text.to_string(),
            reason: "empty range".into(),
        }),
        Some(v) => Ok(v),
        None => Ok(vec![text.to_string()]),
    }
}

#[derive(Debug, Parser)]
#[command(name = "wakeford", version, about = "Wakeford pairings and isoperimetric checks over finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Exists,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the Wakeford graph of (B, A) and count pairings.
    Mu(PairArgs),
    /// Decide whether a pairing exists, with a witness or Hall violator.
    Matchable(PairArgs),
    /// k-th isoperimetric connectivity of S (which must contain 0).
    Kappa {
        #[arg(long)]
        group: String,
        #[arg(long)]
        s: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Chowla, progression, Cauchy and Vosper flags for S.
    Classify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        s: String,
    },
    /// Sweep one statement over a family of instances.
    Verify(VerifyArgs),
    /// Enumerate a known non-matchable construction.
    Counterexample {
        #[command(subcommand)]
        which: Counterexample,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub b: String,
    #[arg(long)]
    pub a: String,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// K1, KAROLYI, MCP, MUBB, EHO, EHOL, OLSON_XY, OLSON_CLIQUE, CCHOWLA,
    /// VCHOWLA, CF, TRANS, DEG, KHC_FORM, LOSONCZY, PROG_EXAMPLE_1, PROG_EXAMPLE_2
    pub statement: String,
    /// Group descriptor, repeatable; `family:LO..HI` expands to a range.
    #[arg(long)]
    pub group: Vec<String>,
    /// Add every catalog group up to this order.
    #[arg(long)]
    pub max_order: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub max_set_size: usize,
    /// Draw this many instances per group instead of enumerating.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = SideArg::Right)]
    pub side: SideArg,
    /// Run PROG_EXAMPLE_2 below its element-order floor (results are exploratory).
    #[arg(long)]
    pub relax_order_floor: bool,
    /// Keep only failing records in the report.
    #[arg(long)]
    pub failures_only: bool,
}

#[derive(Debug, Subcommand)]
pub enum Counterexample {
    /// B = (H \ {1}) ∪ {a}, A = H over every proper subgroup H and a ∉ H.
    Losonczy {
        #[arg(long)]
        group: Vec<String>,
        #[arg(long, default_value_t = 24)]
        max_order: usize,
    },
}

/// Outcome of one command: a JSON report (or CSV text) and an exit status.
pub struct Output {
    pub status: i32,
    pub body: String,
}

#[derive(Serialize)]
struct Report<'a> {
    version: &'a str,
    command: &'a str,
    config: Value,
    group: Value,
    inputs: Value,
    result: Value,
    records: Value,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn render(report: &Report<'_>) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn list(s: &GroupSet) -> Value {
    to_value(&s.to_vec())
}

fn group_info(g: &Group) -> Value {
    json!({ "spec": g.spec(), "order": g.order(), "abelian": g.is_abelian() })
}

fn pair_command(name: &str, args: &PairArgs, force_exists: bool) -> Result<Output> {
    let g = make_group(&args.group)?;
    let b = parse_set_literal(&g, &args.b)?;
    let a = parse_set_literal(&g, &args.a)?;
    let mode = if force_exists { Mode::Exists } else { args.mode };
    let graph = build_graph(&g, &b, &a)?;
    let count_mode = match mode {
        Mode::Exact => CountMode::Exact,
        Mode::Exists => CountMode::ExistenceOnly,
    };
    let report = analyze(&graph, count_mode)?;
    let body = render(&Report {
        version: VERSION,
        command: name,
        config: json!({ "group": args.group, "b": args.b, "a": args.a, "mode": mode }),
        group: group_info(&g),
        inputs: json!({ "B": list(&b), "A": list(&a) }),
        result: to_value(&report),
        records: json!([]),
    });
    Ok(Output { status: EXIT_OK, body })
}

fn kappa_command(group: &str, s_text: &str, k: usize) -> Result<Output> {
    let g = make_group(group)?;
    let s = parse_set_literal(&g, s_text)?;
    let report = kappa(&g, &s, k)?;
    let body = render(&Report {
        version: VERSION,
        command: "kappa",
        config: json!({ "group": group, "s": s_text, "k": k }),
        group: group_info(&g),
        inputs: json!({ "S": list(&s), "k": k }),
        result: to_value(&report),
        records: json!([]),
    });
    Ok(Output { status: EXIT_OK, body })
}

fn classify_command(group: &str, s_text: &str) -> Result<Output> {
    let g = make_group(group)?;
    let s = parse_set_literal(&g, s_text)?;
    if s.is_empty() {
        return Err(Error::EmptySet("S"));
    }
    let st = adjoin_identity(&s);
    let iso = match classify(&g, &st) {
        Ok(c) => json!({
            "kappa1": c.kappa1.kappa,
            "kappa2": c.kappa2.kappa,
            "cauchy": c.cauchy,
            "vosper": c.vosper,
            "degenerate": c.degenerate,
            "subgroup_order": c.kappa1.ambient_order,
        }),
        Err(Error::Limit { .. }) => Value::Null,
        Err(e) => return Err(e),
    };
    let result = json!({
        "chowla": is_chowla(&g, &s)?,
        "progression": to_value(&progression_witness(&g, &s)?),
        "s_with_identity": list(&st),
        "s_with_identity_progression": to_value(&progression_witness(&g, &st)?),
        "isoperimetry": iso,
        "isoperimetry_cap": MAX_KAPPA_ORDER,
    });
    let body = render(&Report {
        version: VERSION,
        command: "classify",
        config: json!({ "group": group, "s": s_text }),
        group: group_info(&g),
        inputs: json!({ "S": list(&s) }),
        result,
        records: json!([]),
    });
    Ok(Output { status: EXIT_OK, body })
}

fn collect_groups(groups: &[String], max_order: Option<usize>) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for g in groups {
        out.extend(expand_group_arg(g)?);
    }
    if let Some(n) = max_order {
        out.extend(catalog(n));
    }
    if out.is_empty() {
        return Err(Error::Precondition("give --group or --max-order".into()));
    }
    Ok(out)
}

fn sweep_status(report: &SweepReport) -> i32 {
    if report.summary.binding_failures() > 0 {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn sweep_csv(report: &SweepReport) -> String {
    let mut s = String::from("statement,group,total,pass,fail,skipped,exploratory_fail\n");
    let id = report.spec.statement;
    let rows = report
        .groups
        .iter()
        .map(|g| (g.group.as_str(), &g.summary))
        .chain(std::iter::once(("ALL", &report.summary)));
    for (name, m) in rows {
        // descriptors contain commas
        let _ = writeln!(
            s,
            "{id},\"{name}\",{},{},{},{},{}",
            m.total, m.pass, m.fail, m.skipped, m.exploratory_fail
        );
    }
    s
}

fn sweep_output(command: &str, config: Value, report: &SweepReport, format: Format) -> Output {
    let body = match format {
        Format::Csv => sweep_csv(report),
        Format::Json => render(&Report {
            version: VERSION,
            command,
            config,
            group: to_value(&report.spec.groups),
            inputs: json!({
                "statement": report.spec.statement,
                "max_set_size": report.spec.max_set_size,
                "mode": report.spec.mode,
                "side": report.spec.side,
                "relax_order_floor": report.spec.relax_order_floor,
                "retain": report.spec.retain,
                "generator": report.generator,
            }),
            result: json!({ "summary": report.summary, "groups": report.groups }),
            records: to_value(&report.records),
        }),
    };
    Output {
        status: sweep_status(report),
        body,
    }
}

fn verify_command(args: &VerifyArgs, format: Format) -> Result<Output> {
    let statement: StatementId = args.statement.parse()?;
    let groups = collect_groups(&args.group, args.max_order)?;
    let mode = match args.sample {
        Some(count) => SweepMode::Sample { count, seed: args.seed },
        None => SweepMode::Exhaustive,
    };
    let mut spec = SweepSpec::new(statement, groups, args.max_set_size, mode);
    spec.side = args.side.into();
    spec.relax_order_floor = args.relax_order_floor;
    if args.failures_only {
        spec = spec.retain(Retain::Failures);
    }
    let report = sweep(&spec)?;
    let config = json!({
        "statement": args.statement,
        "group": args.group,
        "max_order": args.max_order,
        "max_set_size": args.max_set_size,
        "sample": args.sample,
        "seed": args.seed,
        "side": args.side,
        "relax_order_floor": args.relax_order_floor,
        "failures_only": args.failures_only,
        "format": format,
    });
    Ok(sweep_output("verify", config, &report, format))
}

fn losonczy_command(groups: &[String], max_order: usize, format: Format) -> Result<Output> {
    let names = collect_groups(groups, Some(max_order))?;
    let spec = SweepSpec::new(StatementId::Losonczy, names, max_order.max(1), SweepMode::Exhaustive);
    let report = sweep(&spec)?;
    let config = json!({ "group": groups, "max_order": max_order, "format": format });
    Ok(sweep_output("counterexample losonczy", config, &report, format))
}

/// Runs a parsed command line; errors map to the usage status.
pub fn run(cli: &Cli) -> Result<Output> {
    let is_sweep = matches!(cli.command, Command::Verify(_) | Command::Counterexample { .. });
    if cli.format == Format::Csv && !is_sweep {
        return Err(Error::Precondition("CSV output is only available for sweeps".into()));
    }
    match &cli.command {
        Command::Mu(args) => pair_command("mu", args, false),
        Command::Matchable(args) => pair_command("matchable", args, true),
        Command::Kappa { group, s, k } => kappa_command(group, s, *k),
        Command::Classify { group, s } => classify_command(group, s),
        Command::Verify(args) => verify_command(args, cli.format),
        Command::Counterexample {
            which: Counterexample::Losonczy { group, max_order },
        } => losonczy_command(group, *max_order, cli.format),
    }
}

/// Parses `args`, runs, writes the report, and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &out.body),
        None => std::io::stdout().write_all(out.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return EXIT_USAGE;
    }
    out.status
}
