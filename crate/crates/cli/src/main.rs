use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nps_core::census::{self, CorpusEntry, Format, SweepBounds};
use nps_core::family::{parse_family, theorem_catalog, FamilySpec};
use nps_core::iso::are_isomorphic_capped;
use nps_core::lattice::{counts_capped, CountSummary};
use nps_core::presentation::{coset_enumerate, parse_presentation, DEFAULT_MAX_COSETS};
use nps_core::Group;

const SPEC_HELP: &str = "\
Group specs are a family name with parenthesized parameters, joined by `x`
for direct products:

  C(n)  C(a,b,..)        cyclic, and products of cyclic groups
  D(o)  Q(o)  S(o)       dihedral, generalized quaternion, semidihedral of order o
  M(n,p)  M(p)           M_{n,p}, and the extraspecial group of order p^3, exponent p
  G(r=R;p=P,n=N;q=Q,m=M) <a,b | a^(P^N), b^(Q^M), a^-1 b a = b^R>
  G(n,p^m)               G(r=-1;p=2,n=n;q=p,m=m)
  F(n,p[,r])             G(r;p=3,n;q=p,m=1), r of order 3 mod p
  B1(n,p)  B2(n,p)       the two p-groups of order p^(n+2)
  A(n)                   (C2 x C2) x| C(3^n)
  Sym(n)  Alt(n)  SL(2,3)  C3:Q8  Hol(p)  X(n,p)

Examples: Q(8)xC(2), G(r=-1;p=2,n=2;q=3,m=2), X(2,3), M(4,3).

Exit codes: 0 all checks pass, 1 verification failure, 2 input error.";

#[derive(Parser)]
#[command(name = "nps", version, about = "Count and verify nonpower subgroups of finite groups", after_help = SPEC_HELP)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Options {
    /// Largest group order whose subgroup lattice is enumerated.
    #[arg(long, global = true, env = "NPS_MAX_ORDER", default_value_t = 600)]
    max_order: usize,
    /// Number of consecutive parameter values swept per family.
    #[arg(long, global = true, default_value_t = 4)]
    max_n: u32,
    /// Worker threads across groups (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print order, exponent and subgroup counts of a group.
    #[command(group(ArgGroup::new("input").required(true)))]
    Nps {
        /// Group spec, e.g. `M(4,3)`.
        #[arg(group = "input")]
        spec: Option<String>,
        /// Corpus file; one row per entry.
        #[arg(long, group = "input")]
        file: Option<PathBuf>,
    },
    /// Compare catalog formulas with enumeration over the family sweep.
    VerifyFormulas,
    /// Check the classification buckets for nonpower counts 0 to 13.
    VerifyTheorems {
        /// Bucket or range of buckets, e.g. `3` or `10-13`.
        #[arg(long, default_value = "0-13", value_parser = parse_k_range)]
        k: (u32, u32),
        /// Corpus whose groups with at most 13 nonpower subgroups are matched against the buckets.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Count subgroups for every entry of a corpus file.
    #[command(group(ArgGroup::new("source").required(true)))]
    Census {
        #[arg(long, group = "source")]
        corpus: Option<PathBuf>,
        /// Closed form against enumeration for C(p^a) x C(p^b), p <= 5, b <= 6.
        #[arg(long, group = "source")]
        rank_two: bool,
    },
    /// Enumerate cosets of a presentation and count its subgroups.
    Present {
        /// Presentation text, e.g. `a, b | a^4 = b^2 = 1, b^-1 a b = a^-1`.
        text: String,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Also test isomorphism with this constructed group.
        #[arg(long)]
        iso_check: Option<String>,
    },
    /// Write groups as a corpus file (regular permutation representation).
    #[command(group(ArgGroup::new("what").required(true).multiple(true)))]
    Export {
        #[arg(group = "what")]
        specs: Vec<String>,
        /// Every bucket member at its smallest parameters.
        #[arg(long, group = "what")]
        buckets: bool,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn parse_k_range(s: &str) -> Result<(u32, u32), String> {
    let bad = || format!("`{s}` is not a bucket number or range like 10-13");
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let k = s.trim().parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if lo > hi || hi > 13 {
        return Err(format!("bucket range {lo}-{hi} must lie within 0-13"));
    }
    Ok((lo, hi))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_entries(path: &Path) -> Result<Vec<Result<CorpusEntry, String>>, Failure> {
    census::load_corpus(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct CountRow<'a> {
    label: &'a str,
    order: usize,
    exponent: usize,
    s: usize,
    ps: usize,
    nps: usize,
}

impl<'a> CountRow<'a> {
    fn new(label: &'a str, c: &CountSummary) -> Self {
        CountRow { label, order: c.order, exponent: c.exponent, s: c.s, ps: c.ps, nps: c.nps }
    }
}

const COUNT_COLUMNS: [&str; 6] = ["label", "order", "exponent", "s", "ps", "nps"];

fn cmd_nps(opts: Options, spec: Option<String>, file: Option<PathBuf>, out: &mut dyn Write) -> CmdResult {
    let cap = opts.max_order;
    let groups: Vec<(String, Group)> = match (spec, file) {
        (Some(text), _) => {
            let spec = parse_family(&text)?;
            vec![(spec.to_string(), spec.build_capped(cap)?)]
        }
        (None, Some(path)) => load_entries(&path)?
            .into_iter()
            .map(|e| {
                let e = e.map_err(Failure::Input)?;
                let g = e.build(cap).map_err(|err| Failure::Input(format!("{}: {err}", e.name)))?;
                Ok((e.name, g))
            })
            .collect::<Result<_, Failure>>()?,
        (None, None) => unreachable!("clap requires an input"),
    };
    let counts = census::run_parallel(&groups, opts.jobs, |(_, g)| counts_capped(g, cap))?
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<CountRow> = groups.iter().zip(&counts).map(|((name, _), c)| CountRow::new(name, c)).collect();
    census::write_table(&rows, &COUNT_COLUMNS, opts.format.into(), out)?;
    Ok(())
}

fn bounds(opts: Options) -> SweepBounds {
    SweepBounds { max_n: opts.max_n, max_order: opts.max_order, jobs: opts.jobs }
}

fn cmd_verify_formulas(opts: Options, out: &mut dyn Write) -> CmdResult {
    let rows = census::verify_formulas(bounds(opts))?;
    census::write_records(&rows, opts.format.into(), out)?;
    let failed = rows.iter().filter(|r| r.status.is_failure()).count();
    if failed > 0 {
        return Err(Failure::Verification(format!("{failed} formula row(s) failed")));
    }
    Ok(())
}

fn cmd_verify_theorems(opts: Options, k: (u32, u32), corpus: Option<PathBuf>, out: &mut dyn Write) -> CmdResult {
    let groups: Vec<(String, Group)> = match corpus {
        None => Vec::new(),
        Some(path) => load_entries(&path)?
            .into_iter()
            .map(|e| {
                let e = e.map_err(Failure::Input)?;
                // Groups above the cap are skipped by the matcher, so build them uncapped.
                let g = e
                    .build(nps_core::group::DEFAULT_ORDER_CAP)
                    .map_err(|err| Failure::Input(format!("{}: {err}", e.name)))?;
                Ok((e.name, g))
            })
            .collect::<Result<_, Failure>>()?,
    };
    let report = census::verify_theorems(k.0..=k.1, bounds(opts), &groups)?;
    census::write_theorem_report(&report, opts.format.into(), out)?;
    for row in report.unmatched() {
        eprintln!("warning: {} (order {}, nps {}) matches no bucket member", row.name, row.order, row.nps);
    }
    if !report.passed() {
        return Err(Failure::Verification("classification check failed".into()));
    }
    Ok(())
}

fn cmd_census(opts: Options, corpus: Option<PathBuf>, rank_two: bool, out: &mut dyn Write) -> CmdResult {
    if rank_two {
        let rows = census::rank_two_report(bounds(opts))?;
        census::write_rank_two(&rows, opts.format.into(), out)?;
        return Ok(());
    }
    let Some(path) = corpus else { unreachable!("clap requires a source") };
    let entries = load_entries(&path)?;
    let rows = census::census(&entries, opts.max_order, opts.jobs)?;
    census::write_census(&rows, &census::nps_histogram(&rows), opts.format.into(), out)?;
    let bad = rows.iter().filter(|r| r.error.is_some()).count();
    if bad > 0 {
        return Err(Failure::Input(format!(
            "{bad} corpus entr{} could not be processed",
            if bad == 1 { "y" } else { "ies" }
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct PresentRow {
    order: usize,
    exponent: usize,
    s: usize,
    ps: usize,
    nps: usize,
    iso_check: Option<String>,
    isomorphic: Option<bool>,
}

fn cmd_present(
    opts: Options,
    text: &str,
    max_cosets: usize,
    iso_check: Option<String>,
    out: &mut dyn Write,
) -> CmdResult {
    let cap = opts.max_order;
    let target = iso_check.map(|s| parse_family(&s)).transpose()?;
    let presentation = parse_presentation(text)?;
    let (order, g) = coset_enumerate(&presentation, max_cosets)?;
    let c = counts_capped(&g, cap)?;
    let isomorphic = match &target {
        Some(spec) => Some(are_isomorphic_capped(&g, &spec.build_capped(cap)?, cap)?),
        None => None,
    };
    let row = PresentRow {
        order,
        exponent: c.exponent,
        s: c.s,
        ps: c.ps,
        nps: c.nps,
        iso_check: target.as_ref().map(FamilySpec::to_string),
        isomorphic,
    };
    census::write_table(
        &[row],
        &["order", "exponent", "s", "ps", "nps", "iso_check", "isomorphic"],
        opts.format.into(),
        out,
    )?;
    if isomorphic == Some(false) {
        return Err(Failure::Verification("presented group is not isomorphic to the constructed group".into()));
    }
    Ok(())
}

fn cmd_export(opts: Options, specs: &[String], buckets: bool, out: &mut dyn Write) -> CmdResult {
    let mut list: Vec<FamilySpec> = specs.iter().map(|s| parse_family(s)).collect::<Result<_, _>>()?;
    if buckets {
        let mut seen = BTreeSet::new();
        for k in 0..=13 {
            for member in theorem_catalog(k) {
                let spec = member.minimal_instance();
                if spec.order().is_some_and(|o| o <= opts.max_order as u64) && seen.insert(spec.to_string()) {
                    list.push(spec);
                }
            }
        }
    }
    let entries = list
        .iter()
        .map(|spec| Ok(census::export_entry(&spec.to_string(), &spec.build_capped(opts.max_order)?)))
        .collect::<Result<Vec<_>, Failure>>()?;
    writeln!(out, "[")?;
    for (i, entry) in entries.iter().enumerate() {
        let sep = if i + 1 < entries.len() { "," } else { "" };
        writeln!(out, "  {}{sep}", serde_json::to_string(entry)?)?;
    }
    writeln!(out, "]")?;
    Ok(())
}

fn run(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let opts = cli.opts;
    match cli.command {
        Command::Nps { spec, file } => cmd_nps(opts, spec, file, out),
        Command::VerifyFormulas => cmd_verify_formulas(opts, out),
        Command::VerifyTheorems { k, corpus } => cmd_verify_theorems(opts, k, corpus, out),
        Command::Census { corpus, rank_two } => cmd_census(opts, corpus, rank_two, out),
        Command::Present { text, max_cosets, iso_check } => cmd_present(opts, &text, max_cosets, iso_check, out),
        Command::Export { specs, buckets } => cmd_export(opts, &specs, buckets, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("nps: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
