//! Command-line front end. Output is JSON unless noted; exit codes are
//! 0 on success, 1 when a check fails, 2 on usage or guard errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::ass::{
    ass_chain, check_socle_witness, is_normally_torsion_free, theorem_witness, witness_search,
};
use crate::betti_oracle::{taylor_betti, BettiTable};
use crate::error::Error;
use crate::families::{Family, GeneratorOrder};
use crate::graph::Graph;
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::linear_quotients::lq_certificate;
use crate::monomial::Monomial;
use crate::verify::{check_audits_for, run_suite, Ranges, Report, Status, Suite};

#[derive(Parser, Debug)]
#[command(name = "edgeideal", version, about = "Powers of edge ideals: generators, Betti numbers, associated primes")]
pub struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Graph and edge ideal of a family member.
    Family(FamilyArgs),
    /// Betti numbers of a power from linear quotients, the Taylor oracle, or both.
    Betti(BettiArgs),
    /// Minimal generators of a power.
    Power(PowerArgs),
    /// Chain of associated primes of the powers.
    Ass(ChainArgs),
    /// Normal torsion-freeness up to a bounded power.
    Ntf(NtfArgs),
    /// Explicit socle witness for the maximal ideal of an anti-d-path power.
    Witness(WitnessArgs),
    /// Run verification sweeps.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FamilyKind {
    DPath,
    AntiDPath,
    Star,
    LexsegInit,
    LexsegFinal,
    /// An explicit list of generators given with `--gens`.
    Ideal,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub kind: FamilyKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Endpoint of an initial lexsegment, e.g. x1x4.
    #[arg(long)]
    pub v: Option<String>,
    /// Endpoint of a final lexsegment, e.g. x2x4.
    #[arg(long)]
    pub u: Option<String>,
    /// Comma-separated generators for `ideal`, e.g. x1x2,x3x4.
    #[arg(long)]
    pub gens: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    /// The family's own processing order.
    Family,
    DecreasingLex,
    IncreasingRevlex,
    /// Generators exactly as given with `--gens`.
    Given,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Power of the edge ideal.
    #[arg(long, short = 'k', visible_alias = "t", default_value_t = 1)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = OrderArg::Family)]
    pub order: OrderArg,
}

#[derive(Args, Debug)]
pub struct PowerArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, short = 'k', visible_alias = "t", default_value_t = 1)]
    pub k: usize,
}

#[derive(Args, Debug)]
pub struct ChainArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Number of powers in the chain.
    #[arg(long = "depth", visible_alias = "K", default_value_t = 3)]
    pub depth: usize,
}

#[derive(Args, Debug)]
pub struct NtfArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long = "depth", visible_alias = "K", default_value_t = 3)]
    pub depth: usize,
    /// Test the power `I^j` instead of `I`; the graph shortcut is then
    /// unavailable.
    #[arg(long, default_value_t = 1)]
    pub power: usize,
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long, short = 'k')]
    pub k: usize,
    /// Also run the bounded witness search for the maximal ideal.
    #[arg(long)]
    pub search: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Lexseg,
    Antipath,
    Primary,
    Chordal,
    Colon,
    Audits,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub d_max: Option<usize>,
    #[arg(long)]
    pub k_max: Option<usize>,
    #[arg(long)]
    pub t_max: Option<usize>,
    /// Seed for the random colon checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2000)]
    pub trials: usize,
    /// Audit a single family (star, lexseg_init, lexseg_final).
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub v: Option<String>,
    #[arg(long)]
    pub u: Option<String>,
    /// Include passing checks in the report.
    #[arg(long)]
    pub all_checks: bool,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotLinearQuotients { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<(String, bool), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn need<T: Clone>(value: &Option<T>, flag: &str, kind: FamilyKind) -> std::result::Result<T, Failure> {
    value
        .clone()
        .ok_or_else(|| usage(format!("{kind:?} needs --{flag}")))
}

/// A family descriptor, or an explicit ideal with its generators in the
/// given order.
enum Target {
    Family(Family),
    Ideal(MonomialIdeal, Vec<Monomial>),
}

impl Target {
    fn describe(&self) -> String {
        match self {
            Target::Family(f) => f.to_string(),
            Target::Ideal(i, _) => format!("ideal{i}"),
        }
    }

    fn ideal(&self) -> std::result::Result<MonomialIdeal, Failure> {
        match self {
            Target::Family(f) => Ok(f.edge_ideal()?),
            Target::Ideal(i, _) => Ok(i.clone()),
        }
    }

    fn graph(&self) -> Option<Graph> {
        match self {
            Target::Family(f) => f.graph().ok(),
            Target::Ideal(..) => None,
        }
    }
}

fn parse_family(a: &FamilyArgs) -> std::result::Result<Target, Failure> {
    let kind = a.kind;
    Ok(Target::Family(match kind {
        FamilyKind::DPath => Family::DPath {
            n: need(&a.n, "n", kind)?,
            d: need(&a.d, "d", kind)?,
        },
        FamilyKind::AntiDPath => Family::AntiDPath {
            n: need(&a.n, "n", kind)?,
            d: need(&a.d, "d", kind)?,
        },
        FamilyKind::Star => Family::Star { n: need(&a.n, "n", kind)? },
        FamilyKind::LexsegInit => Family::LexInitial {
            v: Monomial::parse(&need(&a.v, "v", kind)?, need(&a.n, "n", kind)?)?,
        },
        FamilyKind::LexsegFinal => Family::LexFinal {
            u: Monomial::parse(&need(&a.u, "u", kind)?, need(&a.n, "n", kind)?)?,
        },
        FamilyKind::Ideal => {
            let n = need(&a.n, "n", kind)?;
            let gens = need(&a.gens, "gens", kind)?
                .split(',')
                .map(|s| Monomial::parse(s, n))
                .collect::<crate::Result<Vec<_>>>()?;
            let ideal = MonomialIdeal::from_gens(n, gens.clone())?;
            return Ok(Target::Ideal(ideal, gens));
        }
    }))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn cmd_family(a: &FamilyArgs) -> CmdResult {
    let target = parse_family(a)?;
    let ideal = target.ideal()?;
    let graph = match &target {
        Target::Family(f) => Some(f.graph()?),
        Target::Ideal(i, _) => Graph::from_edge_ideal(i).ok(),
    };
    let out = json!({
        "family": target.describe(),
        "graph": graph,
        "ideal": ideal,
        "generators": ideal.gens().iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    Ok((pretty(&out), true))
}

fn first_disagreement(a: &BettiTable, b: &BettiTable) -> Option<Value> {
    let top = a.totals().len().max(b.totals().len());
    if let Some(i) = (0..top).find(|&i| a.total(i) != b.total(i)) {
        return Some(json!({"i": i, "formula": a.total(i), "oracle": b.total(i)}));
    }
    let mut keys: Vec<(usize, u64)> = a.graded_entries().chain(b.graded_entries()).map(|(k, _)| k).collect();
    keys.sort_unstable();
    keys.into_iter()
        .find(|&(i, j)| a.graded(i, j) != b.graded(i, j))
        .map(|(i, j)| json!({"i": i, "j": j, "formula": a.graded(i, j), "oracle": b.graded(i, j)}))
}

fn cmd_betti(a: &BettiArgs) -> CmdResult {
    let target = parse_family(&a.family)?;
    let power = target.ideal()?.power(a.k)?;
    let instance = format!("{} k={}", target.describe(), a.k);
    let order = match (a.order, &target) {
        (OrderArg::Family, Target::Family(f)) => f.generator_order().arrange(&power),
        (OrderArg::Family | OrderArg::Given, Target::Ideal(_, given)) if a.k == 1 => given.clone(),
        (OrderArg::Given, _) => return Err(usage("--order given needs an explicit ideal and k = 1")),
        (OrderArg::IncreasingRevlex, _) => GeneratorOrder::IncreasingRevlex.arrange(&power),
        _ => GeneratorOrder::DecreasingLex.arrange(&power),
    };
    let formula = match a.method {
        Method::Oracle => None,
        _ => Some(lq_certificate(&order)?.betti_table()?),
    };
    let oracle = match a.method {
        Method::Formula => None,
        _ => Some(taylor_betti(&power)?),
    };
    let disagreement = match (&formula, &oracle) {
        (Some(f), Some(o)) => first_disagreement(f, o),
        _ => None,
    };
    let ok = disagreement.is_none();
    let text = match a.format {
        Format::Csv => {
            let mut csv = String::from("i");
            let tables: Vec<(&str, &BettiTable)> = [("formula", &formula), ("oracle", &oracle)]
                .into_iter()
                .filter_map(|(name, t)| t.as_ref().map(|t| (name, t)))
                .collect();
            for (name, _) in &tables {
                write!(csv, ",{name}").expect("string write");
            }
            csv.push('\n');
            let top = tables.iter().map(|(_, t)| t.totals().len()).max().unwrap_or(0);
            for i in 0..top {
                write!(csv, "{i}").expect("string write");
                for (_, t) in &tables {
                    write!(csv, ",{}", t.total(i)).expect("string write");
                }
                csv.push('\n');
            }
            csv
        }
        Format::Json => {
            let mut out = json!({ "instance": instance, "generators": power.len() });
            if let Some(f) = &formula {
                out["formula"] = to_value(f);
            }
            if let Some(o) = &oracle {
                out["oracle"] = to_value(o);
            }
            if formula.is_some() && oracle.is_some() {
                out["agree"] = json!(ok);
                out["first_disagreement"] = disagreement.clone().unwrap_or(Value::Null);
            }
            pretty(&out)
        }
    };
    Ok((text, ok))
}

fn cmd_power(a: &PowerArgs) -> CmdResult {
    let target = parse_family(&a.family)?;
    let power = target.ideal()?.power(a.k)?;
    let out = json!({
        "instance": format!("{} k={}", target.describe(), a.k),
        "count": power.len(),
        "ideal": power,
    });
    Ok((pretty(&out), true))
}

fn cmd_ass(a: &ChainArgs) -> CmdResult {
    let target = parse_family(&a.family)?;
    let chain = ass_chain(&target.ideal()?, a.depth)?;
    let mut out = to_value(&chain);
    out["instance"] = json!(target.describe());
    Ok((pretty(&out), true))
}

fn cmd_ntf(a: &NtfArgs) -> CmdResult {
    let target = parse_family(&a.family)?;
    let ideal = target.ideal()?.power(a.power)?;
    let graph = if a.power == 1 { target.graph() } else { None };
    let verdict = is_normally_torsion_free(&ideal, a.depth, graph.as_ref())?;
    let mut out = json!({
        "instance": format!("{} power={}", target.describe(), a.power),
        "depth": a.depth,
    });
    if let Value::Object(fields) = to_value(&verdict) {
        for (k, v) in fields {
            out[k] = v;
        }
    }
    Ok((pretty(&out), true))
}

fn cmd_witness(a: &WitnessArgs) -> CmdResult {
    let m = theorem_witness(a.n, a.d, a.k)?;
    let power = Family::AntiDPath { n: a.n, d: a.d }.edge_ideal()?.power(a.k)?;
    let check = check_socle_witness(&power, &m);
    let mut out = json!({
        "instance": format!("anti_d_path({},{}) k={}", a.n, a.d, a.k),
        "witness": m,
        "display": m.to_string(),
        "outside": check.outside,
        "socle": check.socle,
        "pass": check.passes(),
    });
    if a.search {
        let found = witness_search(&power, &PrimeSupport::full(a.n))?;
        out["search"] = json!(found.as_ref().map(ToString::to_string));
    }
    Ok((pretty(&out), check.passes()))
}

fn cmd_verify(a: &VerifyArgs) -> CmdResult {
    let mut ranges = Ranges {
        seed: a.seed,
        trials: a.trials,
        ..Ranges::default()
    };
    let only = |suite: SuiteArg| a.suite == suite || a.suite == SuiteArg::All;
    if let Some(n) = a.n_max {
        if only(SuiteArg::Antipath) {
            ranges.antipath_n_max = n;
        }
        if only(SuiteArg::Primary) {
            ranges.primary_n_max = n;
        }
        if only(SuiteArg::Lexseg) {
            ranges.lexseg_n_max = n;
        }
        if a.suite == SuiteArg::Chordal {
            if n > 7 {
                return Err(usage("the chordality sweep is limited to n <= 7"));
            }
            ranges.chordal_n_max = n;
        }
    }
    if let Some(d) = a.d_max {
        ranges.antipath_d_max = d;
        ranges.primary_d_max = d;
    }
    if let Some(k) = a.k_max {
        ranges.antipath_k_max = k;
    }
    if let Some(t) = a.t_max {
        ranges.lexseg_t_max = t;
    }
    let suite = match a.suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Lexseg => Suite::Lexseg,
        SuiteArg::Antipath => Suite::Antipath,
        SuiteArg::Primary => Suite::Primary,
        SuiteArg::Chordal => Suite::Chordal,
        SuiteArg::Colon => Suite::Colon,
        SuiteArg::Audits => Suite::Audits,
    };
    let report = match (a.suite, a.family) {
        (SuiteArg::Audits, Some(kind)) => {
            let fam = FamilyArgs {
                kind,
                n: a.n,
                d: None,
                v: a.v.clone(),
                u: a.u.clone(),
                gens: None,
            };
            let Target::Family(family) = parse_family(&fam)? else {
                return Err(usage("audits need a lexsegment family"));
            };
            check_audits_for(&family, a.t.unwrap_or(2))
        }
        (_, Some(_)) => return Err(usage("--family only applies to the audits suite")),
        _ => run_suite(suite, &ranges),
    };
    Ok((pretty(&report_json(&report, a.all_checks)), report.ok()))
}

fn report_json(report: &Report, all_checks: bool) -> Value {
    let listed: Vec<_> = report
        .checks
        .iter()
        .filter(|c| all_checks || c.status != Status::Pass)
        .collect();
    json!({
        "ok": report.ok(),
        "passed": report.count(Status::Pass),
        "failed": report.count(Status::Fail),
        "documented_discrepancies": report.count(Status::DocumentedDiscrepancy),
        "checks": listed,
        "audits": report.audits,
    })
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Family(a) => cmd_family(a),
        Command::Betti(a) => cmd_betti(a),
        Command::Power(a) => cmd_power(a),
        Command::Ass(a) => cmd_ass(a),
        Command::Ntf(a) => cmd_ntf(a),
        Command::Witness(a) => cmd_witness(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

/// Parse `args` (including the program name) and run the command,
/// capturing its output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let (stdout, code, stderr) = match dispatch(&cli) {
        Ok((text, true)) => (text, 0, String::new()),
        Ok((text, false)) => (text, 1, String::new()),
        Err(Failure::Check(msg)) => (String::new(), 1, format!("error: {msg}\n")),
        Err(Failure::Usage(msg)) => (String::new(), 2, format!("error: {msg}\n")),
    };
    if let (Some(path), false) = (&cli.output, stdout.is_empty()) {
        if let Err(e) = std::fs::write(path, &stdout) {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
        return Outcome { code, stdout: String::new(), stderr };
    }
    Outcome { code, stdout, stderr }
}

/// Entry point for the binary: runs with the process arguments and prints.
pub fn main() -> std::process::ExitCode {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::ExitCode::from(out.code)
}
