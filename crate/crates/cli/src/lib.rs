//! Command-line front end. [`run`] takes the argument vector and output
//! streams so that tests can drive it without spawning a process.

pub mod expr;

use std::fs;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use qspectra::enumeration::{enumerate_graphs, graph6, Filter};
use qspectra::families::{build_gn, CliqueReplacement};
use qspectra::spectral::{m_interval, m_interval_paranoid, q_charpoly, q_spectrum_float, IntervalCount};
use qspectra::theorems::{search_problem, Problem, Registry, Status, TheoremReport};
use qspectra::Graph;
use serde_json::json;

pub use expr::{build_expr, parse_graph_expr, ExprError, GraphExpr};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qspectra", version, about = "Signless Laplacian eigenvalue distribution toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Q-spectrum and characteristic polynomial of a graph expression.
    Spectrum {
        expr: String,
        /// Exact data only.
        #[arg(long, conflicts_with = "float")]
        exact: bool,
        /// Float eigenvalues only.
        #[arg(long)]
        float: bool,
        #[arg(long)]
        json: bool,
    },
    /// Number of Q-eigenvalues in [A, B].
    Count {
        expr: String,
        /// Integer, rational p/q, or a degree symbol (d1..dn, dn, dmax, dmin, n, 2n-2).
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Cross-check the inertia count against Sturm and float counts.
        #[arg(long)]
        paranoid: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a registry entry (or `all`) over every graph up to the given order.
    Verify {
        id: String,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, env = "QSPECTRA_JOBS")]
        jobs: Option<usize>,
        /// Write the JSON report to FILE (`-` for standard output).
        #[arg(long)]
        json: Option<String>,
    },
    /// List the isomorphism classes of one order in graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// Graphs with exactly three eigenvalues in the degree interval.
    Search {
        problem: String,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        json: Option<String>,
    },
    /// Build a member of a structured family.
    Family(FamilyArgs),
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[command(subcommand)]
    which: FamilyCommand,
}

#[derive(Subcommand, Debug)]
enum FamilyCommand {
    Gn { n: usize },
    Gs {
        s: usize,
        /// Comma-separated block sizes.
        #[arg(long, value_delimiter = ',')]
        t: Vec<usize>,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<qspectra::Error> for Failure {
    fn from(e: qspectra::Error) -> Self {
        use qspectra::Error::*;
        let code = match e {
            Invariant(_) | NoConvergence { .. } => EXIT_INTERNAL,
            InvalidParameter(_) | NotAnEdge(..) | Construction(_) | Parse { .. } => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: format!("i/o error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, registry: &Registry, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, registry, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, registry: &Registry, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Spectrum { expr, exact, float, json } => spectrum(&expr, !float, !exact, json, out),
        Command::Count {
            expr,
            a,
            b,
            paranoid,
            json,
        } => count(&expr, &a, &b, paranoid, json, out),
        Command::Verify { id, max_n, jobs, json } => verify(registry, &id, max_n, jobs, json.as_deref(), out),
        Command::Enumerate { n, connected, out: file } => enumerate(n, connected, file.as_deref(), out),
        Command::Search { problem, max_n, json } => search(&problem, max_n, json.as_deref(), out),
        Command::Family(f) => family(f.which, out),
    }
}

/// Resolves a threshold: an integer, `p/q`, or a degree symbol evaluated
/// on `g` (`d1`..`dn` by position, `dn`/`dmin`, `dmax`, `n`, `2n-2`).
pub fn resolve_threshold(s: &str, g: &Graph) -> Result<BigRational, String> {
    let s = s.trim();
    let n = g.order();
    let ds = g.degree_sequence();
    let int = |v: usize| BigRational::from_integer(BigInt::from(v));
    match s {
        "dn" | "dmin" => return Ok(int(ds.min())),
        "dmax" => return Ok(int(ds.max())),
        "n" => return Ok(int(n)),
        "2n-2" => return Ok(int((2 * n).saturating_sub(2))),
        _ => {}
    }
    if let Some(k) = s.strip_prefix('d') {
        let k: usize = k.parse().map_err(|_| format!("unknown threshold symbol {s:?}"))?;
        return ds
            .d(k)
            .map(int)
            .map_err(|_| format!("{s} is outside d1..d{n} for this graph"));
    }
    BigRational::from_str(s).map_err(|_| format!("cannot read threshold {s:?}; use an integer, p/q or a degree symbol"))
}

fn spectrum(src: &str, exact: bool, float: bool, json: bool, out: &mut dyn Write) -> CmdResult {
    let g = build_expr(src)?;
    let p = q_charpoly(&g);
    let (roots, rest) = p.split_integer_roots();
    let eig = if float { Some(q_spectrum_float(&g)?) } else { None };
    if json {
        let mut doc = json!({
            "graph6": graph6::encode(&g),
            "n": g.order(),
            "degrees": g.degree_sequence().as_slice(),
        });
        if exact {
            doc["charpoly"] = json!(p.to_string());
            doc["integer_roots"] = roots
                .iter()
                .map(|(r, m)| json!({"root": r.to_string(), "multiplicity": m}))
                .collect();
            doc["remaining_factor"] = json!(rest.to_string());
        }
        if let Some(e) = &eig {
            doc["eigenvalues"] = json!(e);
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "graph6    {}", graph6::encode(&g))?;
    writeln!(out, "order     {}", g.order())?;
    let degs: Vec<String> = g.degree_sequence().as_slice().iter().map(ToString::to_string).collect();
    writeln!(out, "degrees   {}", degs.join(" "))?;
    if exact {
        writeln!(out, "charpoly  {p}")?;
        let r: Vec<String> = roots.iter().map(|(r, m)| format!("{r}^{m}")).collect();
        writeln!(out, "integer   {}", if r.is_empty() { "-".into() } else { r.join(" ") })?;
        writeln!(out, "rest      {rest}")?;
    }
    if let Some(e) = eig {
        let e: Vec<String> = e.iter().map(|x| format!("{x:.10}")).collect();
        writeln!(out, "q         {}", e.join(" "))?;
    }
    Ok(EXIT_OK)
}

fn count(src: &str, a: &str, b: &str, paranoid: bool, json: bool, out: &mut dyn Write) -> CmdResult {
    let g = build_expr(src)?;
    let a = resolve_threshold(a, &g).map_err(usage)?;
    let b = resolve_threshold(b, &g).map_err(usage)?;
    let c: IntervalCount = if paranoid {
        m_interval_paranoid(&g, &a, &b)?
    } else {
        m_interval(&g, &a, &b)?
    };
    if json {
        let doc = json!({
            "graph6": graph6::encode(&g),
            "a": a.to_string(),
            "b": b.to_string(),
            "count": c.count,
            "method": c.method,
            "snapped": c.float_cross_check,
        });
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "{}", c.count)?;
    }
    Ok(EXIT_OK)
}

fn write_json(target: &str, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    if target == "-" {
        writeln!(out, "{text}")?;
    } else {
        fs::write(target, format!("{text}\n"))?;
    }
    Ok(())
}

fn verify(
    registry: &Registry,
    id: &str,
    max_n: usize,
    jobs: Option<usize>,
    json: Option<&str>,
    out: &mut dyn Write,
) -> CmdResult {
    let ids: Vec<String> = if id == "all" {
        registry.ids().into_iter().map(String::from).collect()
    } else {
        vec![id.to_string()]
    };
    let reports: Vec<TheoremReport> = ids
        .iter()
        .map(|id| registry.verify(id, max_n, jobs))
        .collect::<Result<_, _>>()?;
    if let Some(target) = json {
        let text = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])
        } else {
            serde_json::to_string_pretty(&reports)
        }
        .expect("serializable");
        write_json(target, &text, out)?;
    }
    if json != Some("-") {
        for r in &reports {
            writeln!(
                out,
                "{:<18} {:<14} n={}..{} graphs={} counterexamples={} ms={}",
                r.theorem_id,
                r.status,
                r.n_min,
                r.n_max,
                r.graphs_checked,
                r.counterexamples.len(),
                r.runtime_ms
            )?;
            for c in r.counterexamples.iter().take(10) {
                writeln!(out, "  {c}")?;
            }
        }
    }
    Ok(if reports.iter().any(|r| r.status == Status::Counterexample) {
        EXIT_FALSE
    } else {
        EXIT_OK
    })
}

fn enumerate(n: usize, connected: bool, file: Option<&str>, out: &mut dyn Write) -> CmdResult {
    let filter = if connected { Filter::Connected } else { Filter::All };
    let graphs: Vec<Graph> = enumerate_graphs(n, filter)?.collect();
    let text = graph6::encode_lines(&graphs);
    match file {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn search(problem: &str, max_n: usize, json: Option<&str>, out: &mut dyn Write) -> CmdResult {
    let p: Problem = problem.parse()?;
    let hits = search_problem(p, max_n)?;
    if let Some(target) = json {
        write_json(target, &serde_json::to_string_pretty(&hits).expect("serializable"), out)?;
        if target == "-" {
            return Ok(EXIT_OK);
        }
    }
    for h in &hits {
        writeln!(out, "{}", h.graph6)?;
    }
    Ok(EXIT_OK)
}

fn print_graph(g: &Graph, out: &mut dyn Write) -> Result<(), Failure> {
    writeln!(out, "graph6    {}", graph6::encode(g))?;
    writeln!(out, "order     {}", g.order())?;
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    writeln!(out, "edges     {}", edges.join(" "))?;
    Ok(())
}

fn family(which: FamilyCommand, out: &mut dyn Write) -> CmdResult {
    match which {
        FamilyCommand::Gn { n } => print_graph(&build_gn(n)?, out)?,
        FamilyCommand::Gs { s, t } => {
            if t.len() != s {
                return Err(usage(format!("--t needs {s} block sizes, got {}", t.len())));
            }
            let spec = CliqueReplacement::gs(&t)?;
            print_graph(&spec.build()?, out)?;
            let q = spec.quotient_matrix()?;
            writeln!(out, "quotient")?;
            for row in q.b.rows() {
                let row: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
                writeln!(out, "  {}", row.join(""))?;
            }
            writeln!(out, "charpoly  {}", q.charpoly())?;
            writeln!(out, "full      {}", q.predicted_charpoly())?;
        }
    }
    Ok(EXIT_OK)
}
