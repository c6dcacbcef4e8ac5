use clap::{Parser, Subcommand};
use std::process::ExitCode;
use ttilt::catalog::{self, CatalogEntry, Params, Table};
use ttilt::hasse::HasseOptions;
use ttilt::reduce::{central_radical_reduce, compare_opposite};
use ttilt::report::{self, expected_text, verdict_text};
use ttilt::{dsl, Algebra, Bounds, Error, Scalar};

/// `println!` that exits quietly when stdout is closed (e.g. piped to `head`).
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

/// Support tau-tilting enumeration for bound quiver algebras.
#[derive(Parser)]
#[command(name = "ttilt", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the dimension, basis, relations and center.
    Basis(Input),
    /// Enumerate two-term silting complexes.
    Hasse {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_nodes: Option<usize>,
        /// Write a Graphviz file.
        #[arg(long)]
        dot: Option<String>,
        /// Write a JSON report.
        #[arg(long)]
        json: Option<String>,
        /// Include wall time in the JSON report.
        #[arg(long)]
        timing: bool,
    },
    /// Quotient by center ∩ radical until nothing is left.
    Reduce(Input),
    /// Build the opposite algebra and compare counts.
    Op {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_nodes: Option<usize>,
    },
    /// Check a catalog table against its expected values.
    Check {
        #[arg(long)]
        table: String,
        /// `default` or `alt`.
        #[arg(long, default_value = "default")]
        params: String,
        /// Brauer line algebra with this many vertices.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_nodes: Option<usize>,
        #[arg(long)]
        json: Option<String>,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List entries by table.
    List,
}

#[derive(clap::Args)]
struct Input {
    /// Relation file, or `@Name` for a catalog entry.
    input: String,
    /// Parameter override `name=value`; repeatable.
    #[arg(long = "param", short = 'p')]
    params: Vec<String>,
}

enum Fail {
    Mismatch,
    Input(String),
    Bound(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded(_) | Error::UndecidedEither(_) => Fail::Bound(e.to_string()),
            _ => Fail::Input(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<(), Fail>;

fn parse_params(raw: &[String]) -> std::result::Result<Params, Fail> {
    let mut p = Params::new();
    for kv in raw {
        let (k, v) = kv.split_once('=').ok_or_else(|| Fail::Input(format!("expected name=value, got `{kv}`")))?;
        let v: Scalar = v.trim().parse().map_err(|_| Fail::Input(format!("bad value in `{kv}`")))?;
        p.insert(k.trim().to_string(), v);
    }
    Ok(p)
}

fn load(input: &Input) -> std::result::Result<(String, Algebra, Option<CatalogEntry>), Fail> {
    let params = parse_params(&input.params)?;
    if let Some(name) = input.input.strip_prefix('@') {
        let (alg, e) = catalog::get(name, &params, Bounds::default())?;
        return Ok((name.to_string(), alg, Some(e)));
    }
    let text = std::fs::read_to_string(&input.input).map_err(|e| Fail::Input(format!("{}: {e}", input.input)))?;
    let spec = dsl::parse_with(&text, &params)?;
    let alg = spec.build(Bounds::default())?;
    Ok((spec.name.clone(), alg, None))
}

fn options(max_nodes: Option<usize>) -> HasseOptions {
    let mut o = HasseOptions::default();
    if let Some(n) = std::env::var("TTILT_MAX_NODES").ok().and_then(|v| v.parse().ok()) {
        o.max_nodes = n;
    }
    if let Some(n) = max_nodes {
        o.max_nodes = n;
    }
    o
}

fn write_file(path: &str, text: &str) -> CmdResult {
    std::fs::write(path, text).map_err(|e| Fail::Input(format!("{path}: {e}")))
}

fn cmd_basis(input: &Input) -> CmdResult {
    let (name, alg, _) = load(input)?;
    out!("{name}");
    out!("dim {}", alg.dim());
    out!("basis:");
    for i in 0..alg.dim() {
        out!("  {}", alg.format_basis(i));
    }
    out!("relations:");
    for r in alg.relation_strings() {
        out!("  {r}");
    }
    out!("center:");
    for z in alg.center_basis() {
        out!("  {}", alg.format_elem(&z));
    }
    Ok(())
}

fn cmd_hasse(input: &Input, max_nodes: Option<usize>, dot: Option<&str>, json: Option<&str>, timing: bool) -> CmdResult {
    let (name, alg, entry) = load(input)?;
    let (mut rep, graph) = report::run(&name, &alg, entry.as_ref(), &options(max_nodes))?;
    out!("{name}: dim {}", rep.dim);
    out!("verdict: {}", verdict_text(&rep.verdict));
    if rep.verdict.is_finite() {
        out!("bricks: {}", rep.verdict.count.unwrap_or(2) - 2);
    }
    for (i, g) in rep.gvectors.iter().enumerate() {
        out!("  {i}: {g:?}");
    }
    if let Some(e) = &rep.expected {
        out!("expected: {}", expected_text(e));
    }
    if let (Some(path), Some(g)) = (dot, &graph) {
        write_file(path, &report::to_dot(&name, g))?;
    }
    if !timing {
        rep.timing_ms = None;
    }
    if let Some(path) = json {
        write_file(path, &rep.to_json())?;
    }
    match rep.verdict.kind.as_str() {
        "undecided-bound" | "bound-exceeded" => return Err(Fail::Bound(verdict_text(&rep.verdict))),
        _ => {}
    }
    if rep.pass == Some(false) {
        return Err(Fail::Mismatch);
    }
    Ok(())
}

fn cmd_reduce(input: &Input) -> CmdResult {
    let (name, alg, _) = load(input)?;
    let t = central_radical_reduce(&alg)?;
    out!("{name}: dim {}", alg.dim());
    if t.steps.is_empty() {
        out!("center ∩ radical is zero; nothing to reduce");
    }
    for (i, s) in t.steps.iter().enumerate() {
        out!("step {}: kill {} -> dim {}", i + 1, s.killed_text.join(", "), s.dim);
    }
    out!("reduced relations:");
    for r in t.reduced.relation_strings() {
        out!("  {r}");
    }
    Ok(())
}

fn cmd_op(input: &Input, max_nodes: Option<usize>) -> CmdResult {
    let (name, alg, _) = load(input)?;
    let op = alg.opposite()?;
    out!("{name}^op: dim {}", op.dim());
    for r in op.relation_strings() {
        out!("  {r}");
    }
    let c = compare_opposite(&alg, &options(max_nodes))?;
    let l = report::VerdictJson::from_verdict(&c.left);
    let r = report::VerdictJson::from_verdict(&c.right);
    out!("algebra:  {}", verdict_text(&l));
    out!("opposite: {}", verdict_text(&r));
    if !c.pass {
        return Err(Fail::Mismatch);
    }
    Ok(())
}

fn cmd_check(table: &str, params: &str, n: Option<usize>, max_nodes: Option<usize>, json: Option<&str>) -> CmdResult {
    let t = Table::parse(table).ok_or_else(|| Fail::Input(format!("unknown table `{table}`")))?;
    let alt = match params {
        "default" => false,
        "alt" => true,
        p => return Err(Fail::Input(format!("--params must be default or alt, got `{p}`"))),
    };
    let lines = report::check_table(t, alt, n, &options(max_nodes))?;
    let mut passed = 0;
    for l in &lines {
        let ok = l.report.pass == Some(true);
        passed += usize::from(ok);
        let exp = l.report.expected.as_ref().map(expected_text).unwrap_or_default();
        let params = if l.params.is_empty() { String::new() } else { format!(" [{}]", l.params) };
        out!(
            "{} {}{params}: {} (expected {exp})",
            if ok { "PASS" } else { "FAIL" },
            l.name,
            verdict_text(&l.report.verdict)
        );
    }
    out!("{passed}/{} pass", lines.len());
    if let Some(path) = json {
        let mut lines = lines.clone();
        for l in &mut lines {
            l.report.timing_ms = None;
        }
        write_file(path, &serde_json::to_string_pretty(&lines).expect("serializable"))?;
    }
    if passed != lines.len() {
        return Err(Fail::Mismatch);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match &cli.cmd {
        Cmd::Basis(i) => cmd_basis(i),
        Cmd::Hasse { input, max_nodes, dot, json, timing } => {
            cmd_hasse(input, *max_nodes, dot.as_deref(), json.as_deref(), *timing)
        }
        Cmd::Reduce(i) => cmd_reduce(i),
        Cmd::Op { input, max_nodes } => cmd_op(input, *max_nodes),
        Cmd::Check { table, params, n, max_nodes, json } => {
            cmd_check(table, params, *n, *max_nodes, json.as_deref())
        }
        Cmd::Catalog { cmd: CatalogCmd::List } => {
            for (t, names) in catalog::list() {
                out!("{t}: {}", names.join(" "));
            }
            Ok(())
        }
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Mismatch) => ExitCode::from(1),
        Err(Fail::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Fail::Bound(m)) => {
            eprintln!("bound: {m}");
            ExitCode::from(3)
        }
    }
}
