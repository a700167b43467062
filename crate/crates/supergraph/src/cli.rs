//! Command-line front end. Exit status: 0 on success, 1 when a predicted
//! check fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use supergraph_core::analysis::{
    clique_number, dominant_vertices, find_odd_antihole, find_odd_hole, is_complete, maximal_cliques, Clique,
};
use supergraph_core::classes::ClassProfile;
use supergraph_core::harness::{eight_distinct, search_eight_distinct, GroupAnalysis, Theorem};
use supergraph_core::supergraph::{build_graph_with, BuildOptions, GraphKind, RelKind, GRAPH_CAP};
use supergraph_core::Group;

use crate::export::{to_dot, to_json};
use crate::ingest::{resolve_group, CayleyFile};
use crate::sweep::{build_all, catalog_up_to, summary_table, verify_groups, with_pool};

#[derive(Debug, Parser)]
#[command(
    name = "supergraph",
    version,
    about = "Power, enhanced power and commuting graphs of finite groups and their conjugacy and order supergraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the built-in catalog as JSON lines
    Catalog(CatalogArgs),
    /// Build one graph and write it as DOT or JSON
    Build(BuildArgs),
    /// Print graph parameters or the class profile of a group
    Analyze(AnalyzeArgs),
    /// Run the theorem checks over the catalog
    Verify(VerifyArgs),
    /// Catalog searches
    Search(SearchArgs),
    /// Write the Cayley table of a group as JSON
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Power,
    Enhanced,
    Commuting,
}

impl From<Kind> for GraphKind {
    fn from(k: Kind) -> GraphKind {
        match k {
            Kind::Power => GraphKind::Power,
            Kind::Enhanced => GraphKind::Enhanced,
            Kind::Commuting => GraphKind::Commuting,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Rel {
    Eq,
    Conj,
    Order,
}

impl From<Rel> for RelKind {
    fn from(r: Rel) -> RelKind {
        match r {
            Rel::Eq => RelKind::Equality,
            Rel::Conj => RelKind::Conjugacy,
            Rel::Order => RelKind::Order,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchKind {
    /// First catalog group on which all eight graphs differ
    EightDistinct,
    /// Dominant vertices of the order supercommuting graph
    OscomDominant,
    /// Which of the eight graphs coincide, per group
    PairEquality,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("expected a positive integer, got `{s}`")),
    }
}

#[derive(Debug, Args)]
struct CatalogArgs {
    /// Only names containing this string
    #[arg(long)]
    filter: Option<String>,
    #[arg(long, value_parser = positive)]
    max_order: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct GraphSelector {
    /// Catalog id (e.g. D4, S3xC2, C7:C3) or path to a Cayley-table JSON file
    #[arg(long)]
    group: String,
    /// Do not join elements of the same equivalence class by default
    #[arg(long)]
    no_class_cliques: bool,
    #[arg(long, value_parser = positive, default_value_t = GRAPH_CAP)]
    max_order: usize,
}

impl GraphSelector {
    fn options(&self) -> BuildOptions {
        BuildOptions { class_cliques: !self.no_class_cliques, max_order: self.max_order, ..BuildOptions::default() }
    }
}

#[derive(Debug, Args)]
struct BuildArgs {
    #[command(flatten)]
    selector: GraphSelector,
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, value_enum)]
    rel: Rel,
    #[arg(long, value_enum, default_value = "dot")]
    format: GraphFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    selector: GraphSelector,
    #[arg(long, value_enum, required_unless_present = "class_profile")]
    kind: Option<Kind>,
    #[arg(long, value_enum, required_unless_present = "class_profile")]
    rel: Option<Rel>,
    /// Print the group-class predicates instead of graph parameters
    #[arg(long)]
    class_profile: bool,
    /// Stop enumerating maximal cliques after this many
    #[arg(long, value_parser = positive, default_value_t = 10_000)]
    clique_cap: usize,
    /// Also search for odd holes and antiholes up to this length (graphs of at most 128 vertices)
    #[arg(long, value_parser = positive)]
    hole_length: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Restrict to these theorems (repeatable)
    #[arg(long)]
    theorem: Vec<Theorem>,
    /// Largest catalog order included
    #[arg(long, value_parser = positive, default_value_t = 200)]
    max_order: usize,
    /// Verify these groups instead of the catalog (repeatable)
    #[arg(long)]
    group: Vec<String>,
    /// Record per-theorem runtimes (reports are then no longer reproducible)
    #[arg(long)]
    timings: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(value_enum)]
    what: SearchKind,
    #[arg(long, value_parser = positive, default_value_t = 200)]
    max_order: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExportArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match with_pool(|| execute(cli)).and_then(|r| r) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("cannot create {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// `Ok(false)` when some predicted check failed.
fn execute(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Catalog(args) => catalog(args),
        Command::Build(args) => build(args),
        Command::Analyze(args) => analyze(args),
        Command::Verify(args) => verify(args),
        Command::Search(args) => search(args),
        Command::Export(args) => export(args),
    }
}

fn catalog(args: CatalogArgs) -> Result<bool> {
    let mut out = open_output(&None)?;
    for entry in supergraph_core::catalog::default_catalog() {
        if args.filter.as_deref().is_some_and(|f| !entry.name.contains(f))
            || args.max_order.is_some_and(|m| entry.order > m as u64)
        {
            continue;
        }
        match args.format {
            Format::Json => json_line(&mut out, &entry)?,
            Format::Text => writeln!(out, "{:<14}{:>5}", entry.name, entry.order)?,
        }
    }
    out.flush()?;
    Ok(true)
}

fn load(selector: &str) -> Result<Group> {
    resolve_group(selector).with_context(|| format!("loading group `{selector}`"))
}

fn build(args: BuildArgs) -> Result<bool> {
    let g = load(&args.selector.group)?;
    let sg = build_graph_with(&g, args.kind.into(), args.rel.into(), &args.selector.options())?;
    let text = match args.format {
        GraphFormat::Dot => to_dot(&sg),
        GraphFormat::Json => to_json(&sg),
    };
    let mut out = open_output(&args.output)?;
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(true)
}

#[derive(Debug, Serialize)]
struct Parameters {
    group: String,
    order: usize,
    graph: String,
    class_cliques: bool,
    vertices: usize,
    edges: usize,
    complete: bool,
    dominant: Vec<usize>,
    clique_number: usize,
    clique: Vec<usize>,
    maximal_cliques: usize,
    maximal_cliques_truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_hole: Option<Option<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_antihole: Option<Option<Vec<usize>>>,
}

fn analyze(args: AnalyzeArgs) -> Result<bool> {
    let g = load(&args.selector.group)?;
    let mut out = open_output(&args.output)?;
    if args.class_profile {
        serde_json::to_writer_pretty(&mut out, &ClassProfile::compute(&g)?)?;
        writeln!(out)?;
        out.flush()?;
        return Ok(true);
    }
    let (Some(kind), Some(rel)) = (args.kind, args.rel) else {
        bail!("--kind and --rel are required without --class-profile");
    };
    let sg = build_graph_with(&g, kind.into(), rel.into(), &args.selector.options())?;
    let graph = sg.graph();
    let Clique { size, vertices } = clique_number(graph)?;
    let maximal = maximal_cliques(graph, args.clique_cap);
    let odd_hole = match args.hole_length {
        Some(len) => Some(find_odd_hole(graph, len)?),
        None => None,
    };
    let odd_antihole = match args.hole_length {
        Some(len) => Some(find_odd_antihole(graph, len)?),
        None => None,
    };
    let params = Parameters {
        group: g.name().to_string(),
        order: g.order(),
        graph: sg.name(),
        class_cliques: sg.class_cliques(),
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        complete: is_complete(graph),
        dominant: dominant_vertices(graph),
        clique_number: size,
        clique: vertices,
        maximal_cliques: maximal.cliques.len(),
        maximal_cliques_truncated: maximal.truncated,
        odd_hole,
        odd_antihole,
    };
    serde_json::to_writer_pretty(&mut out, &params)?;
    writeln!(out)?;
    out.flush()?;
    Ok(true)
}

fn verify(args: VerifyArgs) -> Result<bool> {
    if args.max_order > GRAPH_CAP {
        bail!("--max-order {} exceeds the graph cap of {GRAPH_CAP}", args.max_order);
    }
    let groups = if args.group.is_empty() {
        build_all(&catalog_up_to(args.max_order))?
    } else {
        args.group.iter().map(|s| load(s)).collect::<Result<_>>()?
    };
    let reports = verify_groups(&groups, &args.theorem, args.timings)?;
    let mut out = open_output(&args.output)?;
    let table = summary_table(&reports);
    match args.format {
        Format::Json => {
            for r in &reports {
                json_line(&mut out, r)?;
            }
            eprint!("{table}");
        }
        Format::Text => {
            for r in &reports {
                let verdict = format!("{:?}", r.verdict).to_lowercase();
                writeln!(out, "{verdict:<11}{:<22}{:<14}{}", r.theorem.as_str(), r.group, r.case)?;
            }
            write!(out, "\n{table}")?;
        }
    }
    out.flush()?;
    Ok(!reports.iter().any(|r| r.failed()))
}

#[derive(Debug, Serialize)]
struct OscomDominant {
    group: String,
    order: usize,
    dominant: Vec<usize>,
    centre: Vec<usize>,
    of_exponent_order: Vec<usize>,
    /// Dominant vertices outside the centre and the elements of order exp(G).
    extra: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct PairEquality {
    group: String,
    order: usize,
    equal: Vec<String>,
}

#[derive(Debug, Serialize)]
struct EightDistinctResult {
    max_order: usize,
    found: Option<supergraph_core::harness::EightDistinct>,
}

fn search(args: SearchArgs) -> Result<bool> {
    let entries = catalog_up_to(args.max_order);
    let mut out = open_output(&args.output)?;
    match args.what {
        SearchKind::EightDistinct => {
            let found = search_eight_distinct(entries.iter().map(|e| e.build()))?;
            json_line(&mut out, &EightDistinctResult { max_order: args.max_order, found })?;
        }
        SearchKind::OscomDominant => {
            let groups = build_all(&entries)?;
            let rows: Vec<OscomDominant> = groups
                .par_iter()
                .map(|g| {
                    let sg = build_graph_with(g, GraphKind::Commuting, RelKind::Order, &BuildOptions::default())?;
                    let dominant = dominant_vertices(sg.graph());
                    let centre = g.center();
                    let exp = g.exponent();
                    let of_exponent_order: Vec<usize> = g.elements().filter(|&x| g.element_order(x) == exp).collect();
                    let extra = dominant
                        .iter()
                        .copied()
                        .filter(|x| !centre.contains(x) && !of_exponent_order.contains(x))
                        .collect();
                    Ok(OscomDominant {
                        group: g.name().to_string(),
                        order: g.order(),
                        dominant,
                        centre,
                        of_exponent_order,
                        extra,
                    })
                })
                .collect::<Result<_>>()?;
            for row in &rows {
                json_line(&mut out, row)?;
            }
        }
        SearchKind::PairEquality => {
            let groups = build_all(&entries)?;
            let rows: Vec<PairEquality> = groups
                .par_iter()
                .map(|g| {
                    let e = eight_distinct(&GroupAnalysis::new(g)?)?;
                    Ok(PairEquality {
                        group: e.group,
                        order: e.order,
                        equal: e
                            .pairs
                            .iter()
                            .filter(|p| p.difference.is_none())
                            .map(|p| format!("{}={}", p.a, p.b))
                            .collect(),
                    })
                })
                .collect::<Result<_>>()?;
            for row in &rows {
                json_line(&mut out, row)?;
            }
        }
    }
    out.flush()?;
    Ok(true)
}

fn export(args: ExportArgs) -> Result<bool> {
    let g = load(&args.group)?;
    let mut out = open_output(&args.output)?;
    serde_json::to_writer(&mut out, &CayleyFile::from_group(&g)?)?;
    writeln!(out)?;
    out.flush()?;
    Ok(true)
}
