use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use polycomp::catalog::{order_census, to_dot, CatalogEntry, ExportFormat};
use polycomp::classify::{
    census_mismatches, is_polyhedral, solve_question, solve_unpruned, PRUNED_LIMITS,
    UNPRUNED_LIMITS,
};
use polycomp::connectivity::is_3_connected;
use polycomp::duality::{dual, is_self_dual};
use polycomp::enumeration::{order_bounds, Census, Limits};
use polycomp::graph6;
use polycomp::isomorphism::is_self_complementary;
use polycomp::planarity::is_planar;
use polycomp::Graph;

/// Relative `--out` paths are resolved against this directory when set.
const OUT_DIR_VAR: &str = "POLYCOMP_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "polycomp",
    version,
    about = "Polyhedral graphs, their duals and complements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the polyhedra with q edges (and p vertices, if given).
    Enumerate {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value = "g6", value_parser = parse_format)]
        format: ExportFormat,
        /// File to write, or for DOT an existing directory to fill with one
        /// file per graph.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = Limits::default().max_order)]
        max_order: usize,
        #[arg(long, default_value_t = Limits::default().max_size)]
        max_size: usize,
    },
    /// Find the polyhedra whose complements are polyhedral.
    Classify {
        /// Also test every polyhedron at every feasible order and require
        /// the same answer.
        #[arg(long)]
        no_prune: bool,
        /// Write the report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Complement of each graph6 argument, or of each stdin line.
    Complement { graphs: Vec<String> },
    /// Dual of each polyhedron given in graph6.
    Dual { graphs: Vec<String> },
    /// Planarity, connectivity and symmetry properties of each graph.
    Check { graphs: Vec<String> },
}

fn parse_format(s: &str) -> Result<ExportFormat, String> {
    s.parse()
        .map_err(|e: polycomp::catalog::CatalogError| e.to_string())
}

enum Failure {
    Io(String),
    Input(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Input(_) => 2,
            Failure::Verification(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Input(m) | Failure::Verification(m) => m,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate {
            q,
            p,
            format,
            out,
            max_order,
            max_size,
        } => enumerate(
            q,
            p,
            format,
            out,
            Limits {
                max_order,
                max_size,
            },
        ),
        Command::Classify { no_prune, report } => classify(no_prune, report),
        Command::Complement { graphs } => {
            per_graph(&graphs, |g| Ok(graph6::encode(&g.complement())))
        }
        Command::Dual { graphs } => per_graph(&graphs, |g| {
            dual(g)
                .map(|d| graph6::encode(&d))
                .map_err(|e| Failure::Input(format!("{}: {e}", graph6::encode(g))))
        }),
        Command::Check { graphs } => per_graph(&graphs, |g| Ok(check(g))),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("polycomp: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn resolve(path: PathBuf) -> PathBuf {
    match std::env::var_os(OUT_DIR_VAR) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path,
    }
}

fn write_out(out: Option<PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(resolve(path), bytes)?,
        None => io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

fn enumerate(
    q: usize,
    p: Option<usize>,
    format: ExportFormat,
    out: Option<PathBuf>,
    limits: Limits,
) -> Result<(), Failure> {
    let (lo, hi) = order_bounds(q).map_err(|e| Failure::Input(e.to_string()))?;
    if let Some(p) = p {
        if !(lo..=hi).contains(&p) {
            return Err(Failure::Input(format!(
                "no polyhedron has p = {p} and q = {q}; p must lie in {lo}..={hi}"
            )));
        }
    }
    let top = p.unwrap_or(hi);
    if q > limits.max_size || top > limits.max_order {
        return Err(Failure::Input(format!(
            "(p, q) = ({top}, {q}) exceeds the limits p <= {}, q <= {}; raise --max-order or --max-size",
            limits.max_order, limits.max_size
        )));
    }
    let keep = |g: &Graph| p.map_or(true, |p| g.order() == p);

    if format == ExportFormat::Graph6 {
        let census = Census::generate(Limits {
            max_order: top,
            max_size: q,
        });
        let bytes: Vec<u8> = census
            .by_size(q)
            .filter(|(_, g)| keep(g))
            .flat_map(|(_, g)| (graph6::encode(g) + "\n").into_bytes())
            .collect();
        return write_out(out, &bytes);
    }

    // Labels depend on the whole size block, duals included.
    if hi > limits.max_order {
        return Err(Failure::Input(format!(
            "labelling q = {q} needs orders up to {hi}; raise --max-order"
        )));
    }
    let census = Census::generate(Limits {
        max_order: hi,
        max_size: q,
    });
    let block: Vec<Graph> = census.by_size(q).map(|(_, g)| *g).collect();
    let catalog = order_census(&block).map_err(|e| Failure::Verification(e.to_string()))?;
    let entries: Vec<CatalogEntry> = catalog
        .entries()
        .iter()
        .filter(|e| keep(&e.graph))
        .cloned()
        .collect();

    if format == ExportFormat::Dot {
        if let Some(dir) = out
            .as_ref()
            .map(|o| resolve(o.clone()))
            .filter(|d| d.is_dir())
        {
            for e in &entries {
                fs::write(
                    dir.join(format!("{}.dot", e.label)),
                    to_dot(&e.label, &e.graph),
                )?;
            }
            return Ok(());
        }
    }
    write_out(out, &polycomp::catalog::export(&entries, format))
}

fn classify(no_prune: bool, report_path: Option<PathBuf>) -> Result<(), Failure> {
    let census = Census::generate(PRUNED_LIMITS);
    let mismatches = census_mismatches(&census);
    if !mismatches.is_empty() {
        return Err(Failure::Verification(format!(
            "census disagrees with expected counts: {}",
            mismatches.join("; ")
        )));
    }
    let report = solve_question(&census).map_err(|e| Failure::Verification(e.to_string()))?;
    let mut stdout = io::stdout().lock();
    write!(stdout, "{report}")?;
    if let Some(path) = report_path {
        fs::write(resolve(path), report.to_json() + "\n")?;
    }
    if report.solutions.len() != 3 {
        return Err(Failure::Verification(format!(
            "expected 3 solutions, found {}",
            report.solutions.len()
        )));
    }
    if no_prune {
        let full = Census::generate(UNPRUNED_LIMITS);
        let sweep = solve_unpruned(&full).map_err(|e| Failure::Verification(e.to_string()))?;
        let orders: Vec<String> = sweep.orders.iter().map(ToString::to_string).collect();
        writeln!(
            stdout,
            "unpruned sweep: {} polyhedra at orders {}, {} solutions",
            sweep.checked,
            orders.join(", "),
            sweep.solutions.len()
        )?;
        if sweep.solutions != report.certificates() {
            return Err(Failure::Verification(
                "pruned and unpruned solution sets differ".into(),
            ));
        }
        writeln!(stdout, "identical solution certificates")?;
    }
    Ok(())
}

fn check(g: &Graph) -> String {
    let planar = is_planar(g);
    let connected = is_3_connected(g);
    let polyhedral = is_polyhedral(g);
    let self_dual = polyhedral && is_self_dual(g).unwrap_or(false);
    format!(
        "{} planar={planar} three_connected={connected} polyhedral={polyhedral} self_dual={self_dual} self_complementary={}",
        graph6::encode(g),
        is_self_complementary(g)
    )
}

/// Applies `f` to each graph from the arguments, or from stdin when there
/// are none or the only argument is `-`, printing one line per graph.
fn per_graph(
    args: &[String],
    f: impl Fn(&Graph) -> Result<String, Failure>,
) -> Result<(), Failure> {
    let lines: Vec<String> = if args.is_empty() || args == ["-"] {
        io::stdin().lock().lines().collect::<Result<_, _>>()?
    } else {
        args.to_vec()
    };
    let mut stdout = io::stdout().lock();
    for (i, line) in lines.iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g =
            graph6::decode(line).map_err(|e| Failure::Input(format!("input {}: {e}", i + 1)))?;
        writeln!(stdout, "{}", f(&g)?)?;
    }
    Ok(())
}
