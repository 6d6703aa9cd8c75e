//! Command-line surface for the ddcg toolkit.
//!
//! Four subcommands: `classify` runs the exhaustive per-order search,
//! `construct` builds one of the explicit families, `verify` checks a graph6
//! graph for divisible design structure, and `tables` reproduces the two
//! summary tables. Data goes to standard output (or the requested files);
//! diagnostics go to standard error. All outputs are byte-deterministic for
//! fixed inputs and flags, independent of `--jobs`.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 catalog error,
//! 3 verification-negative.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ddcg::catalog::GroupCatalog;
use ddcg::classifier::{
    classify_order, emit_tables, ClassifierError, NonexistenceCertificate, SearchOptions,
};
use ddcg::constructions::{
    hadamard_replace, kron_allones, kron_identity, paley_ddcg, paley_graph, strong_k2,
    DdcgConstruction, SrgConstruction, SrgParams, VkLambdaGraph,
};
use ddcg::ddg::{ddg_check, CanonicalPartition};
use ddcg::graph::is_regular_action;
use ddcg::graph6;
use ddcg::hadamard::{graphical_registry, RegistryEntry};
use ddcg::params::DdgParams;
use ddcg::perm::Perm;

const EXIT_USAGE: u8 = 1;
const EXIT_CATALOG: u8 = 2;
const EXIT_NEGATIVE: u8 = 3;

/// Largest vertex count the classifier supports (catalog coverage).
const MAX_ORDER: usize = 27;

#[derive(Parser)]
#[command(
    name = "ddcg",
    version,
    about = "Construct, verify and exhaustively classify divisible design Cayley graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustively classify all divisible design Cayley graphs on one order.
    Classify(ClassifyArgs),
    /// Build an explicit construction and print it as graph6 plus parameters.
    Construct(ConstructArgs),
    /// Check a graph6 graph for divisible design structure.
    Verify(VerifyArgs),
    /// Classify every order up to a bound and write the two summary tables.
    Tables(TablesArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Vertex count to classify (1 through 27).
    #[arg(long)]
    order: usize,
    /// Restrict the search to one parameter tuple, written v,k,l1,l2,m,n.
    #[arg(long)]
    params: Option<String>,
    /// Worker threads for the search (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Group catalog file (default: the built-in catalog).
    #[arg(long)]
    catalog: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    which: ConstructCmd,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Permutation-matrix Kronecker product P (x) A: parameters (vt, k, l, 0, t, v).
    KronIdentity {
        #[command(flatten)]
        base: BaseArgs,
        /// Number of base-graph blocks.
        #[arg(long)]
        t: usize,
        /// Symmetric block permutation as comma-separated images (default: identity).
        #[arg(long)]
        perm: Option<String>,
    },
    /// All-ones Kronecker blowup: parameters (vn, kn, kn, ln, v, n).
    KronAllones {
        #[command(flatten)]
        base: BaseArgs,
        /// Blowup factor.
        #[arg(long)]
        n: usize,
    },
    /// Strong product with K2 of a strongly regular base with mu = lambda + 1.
    StrongK2 {
        #[command(flatten)]
        base: SrgBaseArgs,
    },
    /// Strong product of the Paley graph of order q with K2 (q must be 1 mod 4).
    Paley {
        /// Prime power congruent to 1 mod 4.
        #[arg(long)]
        q: usize,
    },
    /// Entry replacement in a regular graphical Hadamard matrix.
    Hadamard {
        /// Hadamard matrix order (4 or 16 are in the registry).
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// Half the row sum; selects registry entries with this u.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        u: i64,
        /// Index among the registry entries with the chosen u.
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[command(flatten)]
        base: BaseArgs,
    },
}

/// A constant-λ base graph: named (`K<n>`, `empty2`) or arbitrary graph6.
#[derive(Args)]
struct BaseArgs {
    /// Named base graph: K<n> or empty2.
    #[arg(long)]
    base: Option<String>,
    /// Base graph as graph6; vertices must be labeled so that some catalog
    /// group's translations preserve adjacency.
    #[arg(long, value_name = "G6")]
    base_g6: Option<String>,
    /// Group catalog used to find a regular action for --base-g6.
    #[arg(long)]
    catalog: Option<PathBuf>,
}

/// A strongly regular base graph: named (`paley:<q>`) or arbitrary graph6.
#[derive(Args)]
struct SrgBaseArgs {
    /// Named strongly regular base: paley:<q>.
    #[arg(long)]
    base: Option<String>,
    /// Base graph as graph6; vertices must be labeled so that some catalog
    /// group's translations preserve adjacency.
    #[arg(long, value_name = "G6")]
    base_g6: Option<String>,
    /// Group catalog used to find a regular action for --base-g6.
    #[arg(long)]
    catalog: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// The graph to check, as graph6.
    #[arg(long)]
    graph6: String,
}

#[derive(Args)]
struct TablesArgs {
    /// Classify every order up to this bound (1 through 27).
    #[arg(long, default_value_t = MAX_ORDER)]
    max_order: usize,
    /// Directory receiving table1.txt and table2.txt.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// Worker threads for the search (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
    /// Group catalog file (default: the built-in catalog).
    #[arg(long)]
    catalog: Option<PathBuf>,
}

/// A diagnostic destined for standard error, with its process exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Input errors carry the error's name so scripts can match on it, then the
/// human-readable description.
fn named_error(err: impl std::fmt::Debug + std::fmt::Display) -> Failure {
    Failure { code: EXIT_USAGE, message: format!("{err:?}: {err}") }
}

fn classifier_failure(err: ClassifierError) -> Failure {
    let code = match err {
        ClassifierError::CatalogIncomplete(_) => EXIT_CATALOG,
        ClassifierError::UnsupportedOrder(_) => EXIT_USAGE,
    };
    Failure { code, message: format!("{err:?}: {err}") }
}

fn load_catalog(path: &Option<PathBuf>) -> Result<GroupCatalog, Failure> {
    match path {
        None => Ok(GroupCatalog::builtin()),
        Some(p) => GroupCatalog::load(p).map_err(|err| Failure {
            code: EXIT_CATALOG,
            message: format!("catalog {}: {err}", p.display()),
        }),
    }
}

fn check_jobs(jobs: Option<usize>) -> Result<(), Failure> {
    if jobs == Some(0) {
        return Err(usage("--jobs must be at least 1"));
    }
    Ok(())
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text).map_err(|err| Failure {
            code: EXIT_USAGE,
            message: format!("writing {}: {err}", path.display()),
        }),
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<u8, Failure> {
    if args.order == 0 || args.order > MAX_ORDER {
        return Err(usage(format!(
            "--order must be between 1 and {MAX_ORDER}, got {}",
            args.order
        )));
    }
    check_jobs(args.jobs)?;
    let filter = match &args.params {
        None => None,
        Some(text) => {
            let p = DdgParams::parse_csv(text).ok_or_else(|| {
                usage(format!("malformed --params '{text}' (expected v,k,l1,l2,m,n)"))
            })?;
            if !p.feasible() {
                return Err(usage(format!(
                    "--params {p} fails the divisible design counting identity"
                )));
            }
            if p.v != args.order {
                return Err(usage(format!(
                    "--params is for order {} but --order is {}",
                    p.v, args.order
                )));
            }
            Some(p)
        }
    };
    let catalog = load_catalog(&args.catalog)?;
    let options = SearchOptions { filter, jobs: args.jobs, ..SearchOptions::default() };
    let report = classify_order(&catalog, args.order, &options).map_err(classifier_failure)?;
    let mut text = report.render();
    if let Some(params) = filter {
        if report.records.is_empty() {
            let certificate = NonexistenceCertificate {
                params,
                nonexistent: true,
                cells: report.cells.clone(),
            };
            text.push_str(&certificate.render_log());
        }
    }
    write_output(&args.out, &text)?;
    Ok(0)
}

/// Builds K<n> or empty2 under their cyclic groups.
fn named_vklambda(name: &str) -> Result<VkLambdaGraph, Failure> {
    if name == "empty2" {
        return Ok(VkLambdaGraph::empty2());
    }
    if let Some(digits) = name.strip_prefix('K') {
        if let Ok(n) = digits.parse::<usize>() {
            return VkLambdaGraph::kn(n).map_err(named_error);
        }
    }
    Err(usage(format!("unknown base '{name}' (expected K<n> or empty2)")))
}

/// Wraps a graph6 base: degree and λ are read off the graph, then each
/// catalog group of matching order is tried for a regular translation action.
fn vklambda_from_g6(text: &str, catalog: &GroupCatalog) -> Result<VkLambdaGraph, Failure> {
    let graph = graph6::decode(text).map_err(named_error)?;
    let v = graph.v();
    if graph.regular_degree().is_none() {
        return Err(usage("base graph is not regular"));
    }
    let lambda = if v >= 2 { graph.common_neighbors(0, 1) } else { 0 };
    for group in catalog.of_order(v) {
        if let Ok(base) = VkLambdaGraph::verified(graph.clone(), lambda, (*group).clone()) {
            return Ok(base);
        }
    }
    Err(usage(
        "no catalog group of this order acts regularly on the base graph with the given labeling",
    ))
}

fn resolve_vklambda(args: &BaseArgs) -> Result<VkLambdaGraph, Failure> {
    match (&args.base, &args.base_g6) {
        (Some(_), Some(_)) => Err(usage("--base and --base-g6 are mutually exclusive")),
        (None, None) => Err(usage("one of --base or --base-g6 is required")),
        (Some(name), None) => named_vklambda(name),
        (None, Some(g6)) => {
            let catalog = load_catalog(&args.catalog)?;
            vklambda_from_g6(g6, &catalog)
        }
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// The additive group of the q-element field: cyclic for prime q, elementary
/// abelian otherwise.
fn field_group_name(q: usize) -> String {
    if is_prime(q) {
        format!("Z{q}")
    } else {
        format!("E{q}")
    }
}

/// Wraps a graph6 strongly regular base. λ and μ are sampled from one
/// adjacent and one non-adjacent pair; `strong_k2` re-verifies both over all
/// pairs, so a non-SRG input fails there rather than silently passing.
fn srg_from_g6(text: &str, catalog: &GroupCatalog) -> Result<(SrgConstruction, String), Failure> {
    let graph = graph6::decode(text).map_err(named_error)?;
    let v = graph.v();
    let Some(k) = graph.regular_degree() else {
        return Err(usage("base graph is not regular"));
    };
    let mut lambda = 0;
    let mut mu = 0;
    'adjacent: for x in 0..v {
        for y in 0..x {
            if graph.has_edge(x, y) {
                lambda = graph.common_neighbors(x, y);
                break 'adjacent;
            }
        }
    }
    'distant: for x in 0..v {
        for y in 0..x {
            if !graph.has_edge(x, y) {
                mu = graph.common_neighbors(x, y);
                break 'distant;
            }
        }
    }
    for group in catalog.of_order(v) {
        let action = group.translations();
        if matches!(is_regular_action(&graph, &action), Ok(true)) {
            let params = SrgParams { v, k, lambda, mu };
            let name = group.name().to_string();
            return Ok((SrgConstruction { graph, params, action }, name));
        }
    }
    Err(usage(
        "no catalog group of this order acts regularly on the base graph with the given labeling",
    ))
}

fn resolve_srg(args: &SrgBaseArgs) -> Result<(SrgConstruction, String), Failure> {
    match (&args.base, &args.base_g6) {
        (Some(_), Some(_)) => Err(usage("--base and --base-g6 are mutually exclusive")),
        (None, None) => Err(usage("one of --base or --base-g6 is required")),
        (Some(name), None) => {
            let Some(q_text) = name.strip_prefix("paley:") else {
                return Err(usage(format!(
                    "unknown strongly regular base '{name}' (expected paley:<q>)"
                )));
            };
            let q: usize = q_text
                .parse()
                .map_err(|_| usage(format!("bad Paley order '{q_text}'")))?;
            let srg = paley_graph(q).map_err(named_error)?;
            Ok((srg, field_group_name(q)))
        }
        (None, Some(g6)) => {
            let catalog = load_catalog(&args.catalog)?;
            srg_from_g6(g6, &catalog)
        }
    }
}

fn parse_perm(text: &str) -> Result<Perm, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("bad --perm entry '{t}'")))
        })
        .collect()
}

/// Prints the three output lines: graph6, parameters, acting group. Every
/// construction re-verified its output before returning it.
fn emit_construction(c: &DdcgConstruction, group_name: &str) -> Result<u8, Failure> {
    let g6 = graph6::encode(&c.graph).map_err(named_error)?;
    println!("{g6}");
    println!("params {}", c.params.report_fields());
    println!("group {group_name}");
    Ok(0)
}

fn cmd_construct(args: ConstructArgs) -> Result<u8, Failure> {
    match args.which {
        ConstructCmd::KronIdentity { base, t, perm } => {
            let base = resolve_vklambda(&base)?;
            let p = match &perm {
                None => None,
                Some(text) => Some(parse_perm(text)?),
            };
            let c = kron_identity(&base, t, p.as_ref()).map_err(named_error)?;
            let name = if t == 1 {
                base.group.name().to_string()
            } else {
                format!("Z{t}x{}", base.group.name())
            };
            emit_construction(&c, &name)
        }
        ConstructCmd::KronAllones { base, n } => {
            let base = resolve_vklambda(&base)?;
            let c = kron_allones(&base, n).map_err(named_error)?;
            let name = if n == 1 {
                base.group.name().to_string()
            } else {
                format!("{}xZ{n}", base.group.name())
            };
            emit_construction(&c, &name)
        }
        ConstructCmd::StrongK2 { base } => {
            let (srg, base_name) = resolve_srg(&base)?;
            let c = strong_k2(&srg).map_err(named_error)?;
            emit_construction(&c, &format!("Z2x{base_name}"))
        }
        ConstructCmd::Paley { q } => {
            let c = paley_ddcg(q).map_err(named_error)?;
            emit_construction(&c, &format!("Z2x{}", field_group_name(q)))
        }
        ConstructCmd::Hadamard { order, u, index, base } => {
            let entries = graphical_registry(order).map_err(named_error)?;
            let matching: Vec<&RegistryEntry> =
                entries.iter().filter(|e| e.matrix.u() == u).collect();
            let Some(entry) = matching.get(index) else {
                return Err(usage(format!(
                    "no registry matrix of order {order} with u = {u} at index {index} \
                     ({} available)",
                    matching.len()
                )));
            };
            let base = resolve_vklambda(&base)?;
            let c = hadamard_replace(&entry.matrix, &entry.action, &base).map_err(named_error)?;
            emit_construction(&c, &format!("{}x{}", entry.action_name, base.group.name()))
        }
    }
}

fn render_partition(partition: &CanonicalPartition) -> String {
    partition
        .iter()
        .map(|class| {
            class
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("|")
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let graph = graph6::decode(&args.graph6).map_err(named_error)?;
    let structures = ddg_check(&graph);
    let mut any_proper = false;
    for s in &structures {
        if s.proper {
            any_proper = true;
            println!("{}", s.params.report_fields());
            println!("classes {}", render_partition(&s.partition));
        }
    }
    if any_proper {
        Ok(0)
    } else {
        if structures.is_empty() {
            println!("none");
        } else {
            println!("improper");
        }
        Ok(EXIT_NEGATIVE)
    }
}

fn cmd_tables(args: TablesArgs) -> Result<u8, Failure> {
    if args.max_order == 0 || args.max_order > MAX_ORDER {
        return Err(usage(format!(
            "--max-order must be between 1 and {MAX_ORDER}, got {}",
            args.max_order
        )));
    }
    check_jobs(args.jobs)?;
    let catalog = load_catalog(&args.catalog)?;
    let options = SearchOptions { jobs: args.jobs, ..SearchOptions::default() };
    let (table1, table2) = emit_tables(&catalog, args.max_order, &options).map_err(classifier_failure)?;
    fs::create_dir_all(&args.out_dir).map_err(|err| Failure {
        code: EXIT_USAGE,
        message: format!("creating {}: {err}", args.out_dir.display()),
    })?;
    for (file, text) in [("table1.txt", &table1), ("table2.txt", &table2)] {
        let path = args.out_dir.join(file);
        fs::write(&path, text).map_err(|err| Failure {
            code: EXIT_USAGE,
            message: format!("writing {}: {err}", path.display()),
        })?;
        eprintln!("wrote {}", path.display());
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests print to standard output and exit 0;
            // genuine parse errors are usage errors.
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Tables(args) => cmd_tables(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
