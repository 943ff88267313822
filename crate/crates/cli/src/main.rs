use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use switchclass::canonical::Canonicalizer;
use switchclass::classify::{self, Catalog, Method};
use switchclass::invariants::{common_core, sub_family, PatternClass};
use switchclass::io::{self as gio, Report, ReportFormat};
use switchclass::names::parse_expr;
use switchclass::switching;
use switchclass::Graph;

mod verify;

/// Switch-isomorphism toolkit for small graphs.
///
/// GRAPH arguments accept a file path (graph6 line or `n m` edge list),
/// `-` for standard input, `g6:<graph6>` or `expr:<expression>` such as
/// `expr:co(L3^6)`.
#[derive(Parser, Debug)]
#[command(name = "switchclass", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,

    /// Worker threads for the parallel enumerations.
    #[arg(long, global = true, env = "SWITCHCLASS_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => ReportFormat::Table,
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Inductive,
    Transversal,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Inductive => Method::Inductive,
            MethodArg::Transversal => Method::Transversal,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Relation {
    /// G1 ⊖ G2 is a complete bipartite graph
    Switch,
    /// switching followed by relabeling
    SwitchIso,
    /// switching, possibly after complementing the second graph
    Extended,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the switch-isomorphism types on n vertices.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Inductive)]
        method: MethodArg,
        /// Directory holding cached catalogs.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Lift the transversal size limit.
        #[arg(long)]
        allow_large: bool,
    },
    /// Decide whether two graphs are equivalent.
    Equiv {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value_t = Relation::Switch)]
        relation: Relation,
    },
    /// List every member of the switching class of a graph.
    Class { graph: String },
    /// Locally complement at the given vertices, in order.
    Lc {
        graph: String,
        #[arg(long = "vertex", short = 'v', required = true)]
        vertices: Vec<usize>,
    },
    /// Print the number of types for n = 1..=max-n.
    Mu {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Inductive)]
        method: MethodArg,
    },
    /// Count induced subgraphs in the class of a pattern.
    CountSub {
        graph: String,
        /// Pattern expression, e.g. K3, N4, L4.
        #[arg(long)]
        pattern: String,
        /// Also list the vertex sets and their common core.
        #[arg(long)]
        family: bool,
    },
    /// Check the closed-form counts against brute force.
    VerifyFormulas {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Random union shapes to test.
        #[arg(long, default_value_t = 50)]
        shapes: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

fn read_graph(arg: &str) -> anyhow::Result<Graph> {
    if let Some(g6) = arg.strip_prefix("g6:") {
        return Ok(gio::parse_graph6(g6)?);
    }
    if let Some(expr) = arg.strip_prefix("expr:") {
        return Ok(parse_expr(expr)?);
    }
    let text = if arg == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        s
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    };
    gio::parse_graph_text(&text).with_context(|| format!("parsing {arg}"))
}

fn graph_json(g: &Graph) -> serde_json::Value {
    json!({
        "n": g.n(),
        "graph6": gio::write_graph6(g),
        "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
    })
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn load_or_build(
    n: usize,
    method: Method,
    cache: Option<&PathBuf>,
    allow_large: bool,
) -> anyhow::Result<Catalog> {
    if let Some(dir) = cache {
        if let Some(cat) = gio::load_catalog(dir, n)? {
            return Ok(cat);
        }
    }
    let cat = match (method, allow_large) {
        (Method::Transversal, true) => {
            classify::enumerate_types_transversal_with_limit(n, usize::MAX)?
        }
        _ => classify::catalog(n, method)?,
    };
    if let Some(dir) = cache {
        gio::save_catalog(dir, &cat)?;
    }
    Ok(cat)
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    let fmt = cli.format;
    match &cli.command {
        Command::Classify {
            n,
            method,
            cache_dir,
            allow_large,
        } => {
            let cat = load_or_build(*n, (*method).into(), cache_dir.as_ref(), *allow_large)?;
            Ok(Output::ok(Report::from_catalog(&cat).render(fmt.into())?))
        }
        Command::Equiv {
            first,
            second,
            relation,
        } => {
            let (g1, g2) = (read_graph(first)?, read_graph(second)?);
            let (holds, witness) = match relation {
                Relation::Switch => {
                    let w = switching::switch_equivalent(&g1, &g2)?;
                    (
                        w.is_some(),
                        w.map(|w| json!(w.side().iter().collect::<Vec<_>>())),
                    )
                }
                Relation::SwitchIso => {
                    let c = Canonicalizer::default();
                    (c.switch_iso_equivalent(&g1, &g2)?, None)
                }
                Relation::Extended => (switching::extended_equivalent(&g1, &g2)?, None),
            };
            let text = match fmt {
                Format::Json => {
                    json!({"equivalent": holds, "relation": format!("{relation:?}").to_lowercase(), "witness": witness})
                        .to_string()
                        + "\n"
                }
                _ => match (holds, witness) {
                    (true, Some(w)) => format!("equivalent (switch at {w})\n"),
                    (true, None) => "equivalent\n".to_string(),
                    (false, _) => "not equivalent\n".to_string(),
                },
            };
            Ok(Output {
                text,
                code: if holds { 0 } else { 1 },
            })
        }
        Command::Class { graph } => {
            let members = switching::switch_class(&read_graph(graph)?)?;
            let text = match fmt {
                Format::Json => {
                    serde_json::to_string_pretty(
                        &members.iter().map(graph_json).collect::<Vec<_>>(),
                    )? + "\n"
                }
                _ => members
                    .iter()
                    .map(|g| gio::write_graph6(g) + "\n")
                    .collect(),
            };
            Ok(Output::ok(text))
        }
        Command::Lc { graph, vertices } => {
            let mut g = read_graph(graph)?;
            for &a in vertices {
                g = switching::local_complement(&g, a)?;
            }
            Ok(Output::ok(match fmt {
                Format::Json => graph_json(&g).to_string() + "\n",
                _ => gio::write_graph6(&g) + "\n",
            }))
        }
        Command::Mu { max_n, method } => {
            let mut rows = Vec::new();
            for n in 1..=*max_n {
                rows.push((n, classify::mu(n, (*method).into())?));
            }
            let text = match fmt {
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(n, mu)| json!({"n": n, "mu": mu}))
                        .collect();
                    serde_json::to_string_pretty(&v)? + "\n"
                }
                Format::Csv => std::iter::once("n,mu\n".to_string())
                    .chain(rows.iter().map(|(n, mu)| format!("{n},{mu}\n")))
                    .collect(),
                Format::Table => rows.iter().map(|(n, mu)| format!("{n} {mu}\n")).collect(),
            };
            Ok(Output::ok(text))
        }
        Command::CountSub {
            graph,
            pattern,
            family,
        } => {
            let g = read_graph(graph)?;
            let p = PatternClass::named(pattern)?;
            let fam = sub_family(&g, &p)?;
            let core = if fam.is_empty() {
                None
            } else {
                Some(common_core(&fam)?)
            };
            let text = match fmt {
                Format::Json => json!({
                    "pattern": pattern,
                    "count": fam.len(),
                    "family": family.then(|| fam.iter().map(|z| z.iter().collect::<Vec<_>>()).collect::<Vec<_>>()),
                    "core": family.then(|| core.map(|c| c.iter().collect::<Vec<_>>())),
                })
                .to_string()
                    + "\n",
                _ => {
                    let mut s = format!("{}\n", fam.len());
                    if *family {
                        for z in &fam {
                            s += &format!("{z}\n");
                        }
                        if let Some(c) = core {
                            s += &format!("core {c}\n");
                        }
                    }
                    s
                }
            };
            Ok(Output::ok(text))
        }
        Command::VerifyFormulas {
            max_n,
            shapes,
            seed,
        } => {
            if *max_n > 12 {
                bail!("--max-n {max_n} is too large for brute force (at most 12)");
            }
            let lines = verify::run(*max_n, *shapes, *seed)?;
            let failed = lines.iter().filter(|l| !l.pass).count();
            let text = match fmt {
                Format::Json => serde_json::to_string_pretty(&lines)? + "\n",
                _ => lines.iter().map(|l| l.to_string() + "\n").collect(),
            };
            Ok(Output {
                text,
                code: if failed == 0 { 0 } else { 1 },
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(err) => {
            if cli.format == Format::Json {
                let chain: Vec<String> = err.chain().map(|e| e.to_string()).collect();
                eprintln!("{}", json!({"error": err.to_string(), "causes": chain}));
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(2)
        }
    }
}
