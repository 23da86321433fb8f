//! Command-line front end: load contexts and maps from JSON, run property
//! analyses, theorem audits, counterexample searches, and the bundled
//! worked-example adjudication.
//!
//! Exit codes: 0 success, 1 audit found counterexamples or a search
//! exhausted without a witness, 2 usage or parse errors, 3 mathematically
//! invalid input.

use clap::{Parser, Subcommand, ValueEnum};
use gammatop::audit::{run_audit, AuditConfig, TheoremId, VariantSet};
use gammatop::error::{AuditError, DocError, QueryError};
use gammatop::json::{
    build_property_report, build_worked_examples_doc, render_query, AuditRunDoc, ContextDoc,
    CounterexampleRunDoc, EnumerateDoc, OperationDoc, OutcomeDoc, PropertyReportDoc,
    TopologyCountDoc, VariantsDoc, VerdictDoc, WorkedExamplesDoc,
};
use gammatop::pool::{exhaustive_count, PoolSpec};
use gammatop::props::CoverMode;
use gammatop::query::{find_counterexample, is_contradictory, parse_query, SearchOutcome, SearchQuery};
use gammatop::space::enumerate_topologies;
use gammatop::worked::worked_examples;
use gammatop::{ClosedVariant, OpenDirection};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gammatop",
    version,
    about = "Finite-topology laboratory for operation-decorated spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Reading of "gamma-closed" used by closedness-dependent properties.
    #[arg(long, global = true, value_enum, default_value_t = ClosedArg::Jankovic)]
    closed_variant: ClosedArg,

    /// Direction of the open-operation trait.
    #[arg(long, global = true, value_enum, default_value_t = OpenArg::Ogata)]
    open_direction: OpenArg,

    /// What a compactness cover must cover: the whole space or the target.
    #[arg(long, global = true, value_enum, default_value_t = CoverArg::X)]
    cover_mode: CoverArg,

    /// Seed for sampled operation pools.
    #[arg(long, global = true, default_value_t = 1729)]
    seed: u64,

    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Also write the machine-readable document to this path. For
    /// counterexample runs with a witness, the file holds the loadable
    /// space+operation document.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Full property report for a space+operation JSON file.
    Analyze { file: PathBuf },

    /// Audit theorem statements over enumerated instances of exactly n
    /// points. Ids: T1..T14, TA, L32, T413, or "all".
    Audit {
        /// Theorem ids, or the single word "all".
        #[arg(required = true)]
        theorems: Vec<String>,

        /// Instance size (number of points).
        #[arg(long, default_value_t = 2)]
        n: usize,
    },

    /// Search sizes 1..=n for the first context satisfying every literal,
    /// e.g. "gamma_normal,!normal".
    Counterexample {
        query: String,

        /// Largest size to scan.
        #[arg(long, default_value_t = 3)]
        n: usize,
    },

    /// Adjudicate the bundled worked examples.
    PaperExamples,

    /// Dump topology and operation-pool counts for size n.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosedArg {
    Jankovic,
    Kasahara,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpenArg {
    Ogata,
    Printed,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverArg {
    #[value(name = "X")]
    X,
    #[value(name = "A")]
    A,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl Cli {
    fn variants(&self) -> VariantSet {
        VariantSet {
            closed: match self.closed_variant {
                ClosedArg::Jankovic => ClosedVariant::Jankovic,
                ClosedArg::Kasahara => ClosedVariant::Kasahara,
            },
            open_dir: match self.open_direction {
                OpenArg::Ogata => OpenDirection::Ogata,
                OpenArg::Printed => OpenDirection::Printed,
            },
            cover: match self.cover_mode {
                CoverArg::X => CoverMode::X,
                CoverArg::A => CoverMode::A,
            },
        }
    }
}

/// A failed run and the exit code it maps to.
enum Failure {
    /// Unreadable input, malformed JSON, unknown theorem or property, out
    /// of range sizes.
    Usage(String),
    /// Structurally valid input that is not a topology, operation, or map.
    Input(String),
}

impl Failure {
    fn code(&self) -> ExitCode {
        match self {
            Failure::Usage(_) => ExitCode::from(2),
            Failure::Input(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) => m,
        }
    }
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Failure {
        Failure::Input(e.to_string())
    }
}

impl From<AuditError> for Failure {
    fn from(e: AuditError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<QueryError> for Failure {
    fn from(e: QueryError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .ok();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.code()
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Analyze { file } => cmd_analyze(cli, file),
        Command::Audit { theorems, n } => cmd_audit(cli, theorems, *n),
        Command::Counterexample { query, n } => cmd_counterexample(cli, query, *n),
        Command::PaperExamples => cmd_paper_examples(cli),
        Command::Enumerate { n } => cmd_enumerate(cli, *n),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("cannot parse {}: {e}", path.display())))
}

fn emit(cli: &Cli, json: String, text: String) -> Result<(), Failure> {
    match cli.format {
        FormatArg::Json => println!("{json}"),
        FormatArg::Text => print!("{text}"),
    }
    if let Some(path) = &cli.out {
        std::fs::write(path, json + "\n")
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn pretty<T: serde::Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

fn cmd_analyze(cli: &Cli, file: &Path) -> Result<ExitCode, Failure> {
    let doc: ContextDoc = read_json(file)?;
    let ctx = doc.to_context()?;
    let report = build_property_report(&ctx, cli.variants());
    emit(cli, pretty(&report), render_analyze(&report))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_audit(cli: &Cli, theorems: &[String], n: usize) -> Result<ExitCode, Failure> {
    let ids: Vec<TheoremId> = if theorems.len() == 1 && theorems[0].eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        theorems
            .iter()
            .map(|s| s.parse::<TheoremId>())
            .collect::<Result<_, _>>()?
    };
    let config = AuditConfig {
        n,
        variants: cli.variants(),
        pool: PoolSpec::Exhaustive,
        seed: cli.seed,
    };
    let mut verdicts = Vec::new();
    for &id in &ids {
        for verdict in run_audit(id, &config)? {
            verdicts.push(VerdictDoc::from_verdict(&verdict));
        }
    }
    let failed = verdicts.iter().any(|v| v.failure_total > 0);
    let doc = AuditRunDoc {
        command: "audit".to_owned(),
        theorem: theorems.join(","),
        n,
        seed: cli.seed,
        pool: PoolSpec::Exhaustive.describe(),
        verdicts,
    };
    emit(cli, pretty(&doc), render_audit(&doc))?;
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_counterexample(cli: &Cli, query_text: &str, n: usize) -> Result<ExitCode, Failure> {
    let literals = parse_query(query_text)?;
    let query = SearchQuery {
        literals: literals.clone(),
        n,
        variants: cli.variants(),
        pool: PoolSpec::Exhaustive,
        seed: cli.seed,
    };
    let outcome = if is_contradictory(&literals) {
        SearchOutcome::Exhausted { scanned: 0 }
    } else {
        find_counterexample(&query)?
    };
    let witness_doc = match &outcome {
        SearchOutcome::Witness { space, gamma, .. } => Some(ContextDoc::from_parts(space, gamma)),
        SearchOutcome::Exhausted { .. } => None,
    };
    let doc = CounterexampleRunDoc {
        command: "counterexample".to_owned(),
        query: render_query(&literals),
        n,
        seed: cli.seed,
        pool: PoolSpec::Exhaustive.describe(),
        variants: VariantsDoc::from_variants(cli.variants()),
        outcome: OutcomeDoc::from_outcome(&outcome),
    };

    match cli.format {
        FormatArg::Json => println!("{}", pretty(&doc)),
        FormatArg::Text => print!("{}", render_counterexample(&doc)),
    }
    if let Some(path) = &cli.out {
        // A found witness is written as a loadable space+operation file;
        // an exhausted search records the whole report.
        let bytes = match &witness_doc {
            Some(w) => pretty(w),
            None => pretty(&doc),
        };
        std::fs::write(path, bytes + "\n")
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(match outcome {
        SearchOutcome::Witness { .. } => ExitCode::SUCCESS,
        SearchOutcome::Exhausted { .. } => ExitCode::from(1),
    })
}

fn cmd_paper_examples(cli: &Cli) -> Result<ExitCode, Failure> {
    let doc = build_worked_examples_doc(&worked_examples());
    emit(cli, pretty(&doc), render_worked(&doc))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(cli: &Cli, n: usize) -> Result<ExitCode, Failure> {
    let topologies = enumerate_topologies(n)
        .map_err(|e| Failure::Usage(format!("cannot enumerate size {n}: {e}")))?;
    let per_topology: Vec<TopologyCountDoc> = topologies
        .iter()
        .map(|space| TopologyCountDoc {
            opens: space.opens().len(),
            operations: exhaustive_count(space),
        })
        .collect();
    let doc = EnumerateDoc {
        command: "enumerate".to_owned(),
        n,
        topologies: topologies.len(),
        operations_total: per_topology.iter().map(|t| t.operations).sum(),
        per_topology,
    };
    emit(cli, pretty(&doc), render_enumerate(&doc))?;
    Ok(ExitCode::SUCCESS)
}

fn fmt_set(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn fmt_family(family: &[Vec<String>]) -> String {
    family
        .iter()
        .map(|s| fmt_set(s))
        .collect::<Vec<_>>()
        .join(", ")
}

fn render_analyze(report: &PropertyReportDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "space: {}", fmt_set(&report.space.points));
    let _ = writeln!(out, "opens: {}", fmt_family(&report.space.opens));
    let _ = writeln!(out, "gamma: {}", render_operation(&report.gamma));
    out.push_str(&render_operation_table(&report.gamma, "  "));
    let _ = writeln!(
        out,
        "variants: closed={} open_op={} cover={}",
        report.variants.closed, report.variants.open_op, report.variants.cover
    );
    let _ = writeln!(
        out,
        "gamma-open family: {}",
        fmt_family(&report.gamma_open_family)
    );
    let _ = writeln!(out, "gamma-nbd systems:");
    for (point, sets) in &report.gamma_nbd_systems {
        let _ = writeln!(out, "  {point}: {}", fmt_family(sets));
    }
    let _ = writeln!(out, "properties:");
    let props = &report.properties;
    for (name, value) in [
        ("T2", props.t2),
        ("regular", props.regular),
        ("normal", props.normal),
        ("gamma_T2", props.gamma_t2),
        ("gamma_star_regular", props.gamma_star_regular),
        ("gamma_normal", props.gamma_normal),
        ("gamma0_compact", props.gamma0_compact),
        ("gamma_locally_compact", props.gamma_locally_compact),
        ("op_monotone", props.op_monotone),
        ("op_regular", props.op_regular),
        ("op_open", props.op_open),
        ("gamma_open_op", props.gamma_open_op),
        ("closed_variants_agree", props.closed_variants_agree),
        ("nbd_readings_agree", props.nbd_readings_agree),
    ] {
        let _ = writeln!(out, "  {name}: {value}");
    }
    let w = &report.witnesses;
    if let Some((x, y)) = &w.gamma_t2_failure {
        let _ = writeln!(out, "gamma_T2 fails at: ({x}, {y})");
    }
    if let Some(sr) = &w.gamma_star_regular_failure {
        let _ = writeln!(
            out,
            "gamma_star_regular fails at: point {} vs {}",
            sr.point,
            fmt_set(&sr.closed_set)
        );
    }
    if let Some(nf) = &w.gamma_normal_failure {
        let _ = writeln!(
            out,
            "gamma_normal fails at: {} vs {}",
            fmt_set(&nf.a),
            fmt_set(&nf.b)
        );
    }
    if let Some(witnesses) = &w.locally_compact_witnesses {
        let _ = writeln!(out, "locally compact witnesses:");
        for lw in witnesses {
            let _ = writeln!(out, "  {}: {}", lw.point, fmt_set(&lw.nbd));
        }
    }
    if let Some(p) = &w.locally_compact_failure {
        let _ = writeln!(out, "locally compact fails at: {p}");
    }
    out
}

fn render_operation(op: &OperationDoc) -> String {
    match op {
        OperationDoc::Identity => "identity".to_owned(),
        OperationDoc::Closure => "closure".to_owned(),
        OperationDoc::IntClosure => "int-closure".to_owned(),
        OperationDoc::Pivot { point } => format!("pivot({point})"),
        OperationDoc::Table { .. } => "explicit table".to_owned(),
    }
}

fn render_operation_table(op: &OperationDoc, indent: &str) -> String {
    let mut out = String::new();
    if let OperationDoc::Table { entries } = op {
        for entry in entries {
            let _ = writeln!(
                out,
                "{indent}gamma({}) = {}",
                fmt_set(&entry.open),
                fmt_set(&entry.image)
            );
        }
    }
    out
}

fn render_audit(doc: &AuditRunDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "audit {} at n={} seed={} pool={}",
        doc.theorem, doc.n, doc.seed, doc.pool
    );
    for v in &doc.verdicts {
        let _ = writeln!(
            out,
            "{:<5} closed={:<8} open_op={:<7} cover={} scanned={} hyp_held={} failures={}",
            v.theorem,
            v.variants.closed,
            v.variants.open_op,
            v.variants.cover,
            v.scanned,
            v.hyp_held,
            v.failure_total
        );
    }
    if doc.verdicts.iter().any(|v| v.failure_total > 0) {
        let _ = writeln!(out, "failing instances are listed in the JSON output");
    }
    out
}

fn render_counterexample(doc: &CounterexampleRunDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "query {} at n<={} seed={}",
        doc.query.join(","),
        doc.n,
        doc.seed
    );
    match &doc.outcome {
        OutcomeDoc::Witness { size, witness } => {
            let _ = writeln!(out, "witness found at size {size}:");
            let _ = writeln!(out, "  points: {}", fmt_set(&witness.space.points));
            let _ = writeln!(out, "  opens: {}", fmt_family(&witness.space.opens));
            let _ = writeln!(out, "  gamma: {}", render_operation(&witness.gamma));
            out.push_str(&render_operation_table(&witness.gamma, "    "));
        }
        OutcomeDoc::Exhausted { scanned, .. } => {
            let _ = writeln!(out, "exhausted: no witness among {scanned} scanned instances");
        }
    }
    out
}

fn render_worked(doc: &WorkedExamplesDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "space: {}", fmt_set(&doc.space.points));
    let _ = writeln!(out, "opens: {}", fmt_family(&doc.space.opens));
    let _ = writeln!(
        out,
        "gamma-open family: {}",
        fmt_family(&doc.gamma_open_family)
    );
    let _ = writeln!(out, "gamma-nbd systems:");
    for (point, sets) in &doc.gamma_nbd_systems {
        let _ = writeln!(out, "  U_{point} = {}", fmt_family(sets));
    }
    let _ = writeln!(out, "gamma-locally compact: {}", doc.gamma_locally_compact);
    for lw in &doc.locally_compact_witnesses {
        let _ = writeln!(out, "  {}: {}", lw.point, fmt_set(&lw.nbd));
    }
    let _ = writeln!(out, "normal: {}", doc.normal);
    let _ = writeln!(
        out,
        "gamma-normal: jankovic={} kasahara={}",
        doc.gamma_normal.jankovic, doc.gamma_normal.kasahara
    );
    let _ = writeln!(out, "claims:");
    for claim in &doc.claims {
        let _ = writeln!(
            out,
            "  [{}] {} -> {}",
            claim.source,
            claim.claim,
            if claim.agrees { "agrees" } else { "DISAGREES" }
        );
        if let Some(note) = &claim.note {
            let _ = writeln!(out, "      note: {note}");
        }
    }
    if let Some(conflict) = &doc.conflict {
        let _ = writeln!(out, "{conflict}");
    }
    out
}

fn render_enumerate(doc: &EnumerateDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "n={}: {} topologies, {} exhaustive operations",
        doc.n, doc.topologies, doc.operations_total
    );
    for (i, t) in doc.per_topology.iter().enumerate() {
        let _ = writeln!(
            out,
            "  topology {i}: {} opens, {} operations",
            t.opens, t.operations
        );
    }
    out
}
