//! `opturan`: command-line front end for the enumeration library.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad usage or
//! input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use opturan::exactmath::{c_cycle_table, rational_json, rational_to_f64};
use opturan::extremal::{brute_force_ex, verify_suite, ExtremalOptions, Pattern, SuiteParams, SUITES};
use opturan::graph::io::{parse_edge_list, to_dot, to_edge_list};
use opturan::graph::{count_cycles, count_paths, fan, subgraph_count, triple_fan, Graph, Mop, PatternGraph};
use opturan::numeral::{build_numeral_graph, enumerate_permitted, gamma_count, sequence_to_path, PermittedSequence};
use opturan::tree::{count_subtrees_k, greedy_tree, parse_tree_text, to_tree_text, Tree};
use opturan::Error;

#[derive(Parser, Debug)]
#[command(name = "opturan", version, about = "Generalized Turán counts in outerplanar graphs")]
struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Lift the desk-scale size guards.
    #[arg(long, global = true)]
    unsafe_scale: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact constants c(k) for cycles of length 3..=K.
    CTable {
        #[arg(long, value_name = "K")]
        max_k: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Number of k-vertex subtrees of a tree.
    Subtrees {
        #[arg(long, value_name = "FILE")]
        tree: PathBuf,
        #[arg(short, value_name = "K")]
        k: usize,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Breadth-first tree with maximum degree D on N vertices.
    Greedy {
        #[arg(short, value_name = "D")]
        d: usize,
        #[arg(short, value_name = "N")]
        n: usize,
        #[arg(long, value_enum, default_value_t = TreeFormat::Tree)]
        format: TreeFormat,
    },
    /// Generate a fan, a triple fan or a numeral-system graph.
    #[command(group(ArgGroup::new("kind").required(true).args(["fan", "triple_fan", "numeral"])))]
    Gen {
        #[arg(long, value_name = "N")]
        fan: Option<usize>,
        #[arg(long, value_name = "N")]
        triple_fan: Option<usize>,
        #[arg(long, num_args = 2, value_names = ["N", "T"])]
        numeral: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
    /// Count copies of a pattern in a graph.
    Count {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        /// cycle:K (K vertices), path:K (K edges) or tree:FILE
        #[arg(long, value_name = "PATTERN")]
        pattern: String,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Count (or list) permitted sequences of length L with values <= T-2.
    Gamma {
        #[arg(short = 'L', value_name = "L")]
        len: usize,
        #[arg(short, value_name = "T")]
        t: usize,
        #[arg(long)]
        enumerate: bool,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Map permitted sequences to k-edge paths from A to B in G(N, t).
    #[command(group(ArgGroup::new("which").args(["all_seqs", "seq"])))]
    Inject {
        #[arg(long = "N", value_name = "N")]
        base: usize,
        #[arg(long = "t", value_name = "T")]
        t: usize,
        #[arg(long = "k", value_name = "K")]
        k: usize,
        #[arg(long = "A", value_name = "A")]
        a: usize,
        #[arg(long = "B", value_name = "B")]
        b: usize,
        /// Every permitted sequence of length k - 2t.
        #[arg(long)]
        all_seqs: bool,
        /// Comma-separated sequence (default: all zeros).
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        seq: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Maximum pattern count over all triangulations of the n-gon.
    Extremal {
        #[arg(short, value_name = "N")]
        n: usize,
        /// cycle:K (K vertices), path:K (K edges) or tree:FILE
        #[arg(long, value_name = "PATTERN")]
        pattern: String,
        /// One maximizer per isomorphism class.
        #[arg(long)]
        dedup: bool,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Run a named verification suite ("all" runs every suite).
    Verify {
        #[arg(long, value_name = "NAME")]
        suite: String,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        k_min: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TextJson {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TreeFormat {
    Tree,
    Edges,
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Edges,
    Dot,
    Json,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => Failure::Usage(format!("{e} (rerun with --unsafe-scale to override)")),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    if cli.unsafe_scale {
        eprintln!("warning: --unsafe-scale lifts the size guards; runs may take very long");
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::CTable { max_k, format } => c_table(*max_k, *format),
        Command::Subtrees { tree, k, format } => subtrees(tree, *k, *format),
        Command::Greedy { d, n, format } => greedy(*d, *n, *format),
        Command::Gen {
            fan,
            triple_fan,
            numeral,
            format,
        } => gen(*fan, *triple_fan, numeral.as_deref(), *format),
        Command::Count { graph, pattern, format } => count(graph, pattern, *format),
        Command::Gamma {
            len,
            t,
            enumerate,
            format,
        } => gamma(*len, *t, *enumerate, *format),
        Command::Inject {
            base,
            t,
            k,
            a,
            b,
            all_seqs,
            seq,
            format,
        } => inject(*base, *t, *k, *a, *b, *all_seqs, seq.as_deref(), *format),
        Command::Extremal {
            n,
            pattern,
            dedup,
            format,
        } => extremal(*n, pattern, *dedup, cli.unsafe_scale, *format),
        Command::Verify {
            suite,
            n_min,
            n_max,
            k_min,
            k_max,
            format,
        } => {
            let params = SuiteParams {
                n_min: *n_min,
                n_max: *n_max,
                k_min: *k_min,
                k_max: *k_max,
                unsafe_scale: cli.unsafe_scale,
            };
            verify(suite, &params, *format)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure::Usage(format!("{}: {e}", path.display()))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn c_table(max_k: usize, format: TableFormat) -> Outcome {
    let rows = c_cycle_table(max_k)?;
    Ok(match format {
        TableFormat::Json => pretty(&json!({
            "max_k": max_k,
            "rows": rows.iter().map(|c| json!({"k": c.k, "value": rational_json::to_value(&c.value)})).collect::<Vec<_>>(),
        })),
        TableFormat::Csv => {
            let mut out = String::from("k,num,den\n");
            for c in &rows {
                let _ = writeln!(out, "{},{},{}", c.k, c.value.numer(), c.value.denom());
            }
            out
        }
        TableFormat::Text => {
            let labels = ["k", "c(k)", "decimal"];
            let cols: Vec<[String; 3]> = rows
                .iter()
                .map(|c| [c.k.to_string(), c.value.to_string(), format!("{}", rational_to_f64(&c.value))])
                .collect();
            let head = labels.iter().map(|l| l.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (i, label) in labels.iter().enumerate() {
                let mut line = format!("{label:<head$} |");
                for col in &cols {
                    let w = col.iter().map(String::len).max().unwrap_or(0);
                    let _ = write!(line, " {:>w$} |", col[i]);
                }
                out += &line;
                out.push('\n');
            }
            out
        }
    })
}

fn subtrees(path: &Path, k: usize, format: TextJson) -> Outcome {
    let tree = parse_tree_text(&read(path)?).map_err(in_file(path))?;
    let count = count_subtrees_k(&tree, k);
    Ok(match format {
        TextJson::Text => format!("{count}\n"),
        TextJson::Json => pretty(&json!({"n": tree.n(), "k": k, "count": count.to_string()})),
    })
}

fn tree_json(t: &Tree) -> Value {
    json!({"n": t.n(), "edges": t.edges()})
}

fn greedy(d: usize, n: usize, format: TreeFormat) -> Outcome {
    let t = greedy_tree(d, n)?;
    Ok(match format {
        TreeFormat::Tree => to_tree_text(&t),
        TreeFormat::Edges => to_edge_list(&t.to_graph()),
        TreeFormat::Dot => to_dot(&t.to_graph(), &format!("greedy_{d}_{n}")),
        TreeFormat::Json => pretty(&tree_json(&t)),
    })
}

fn gen(fan_n: Option<usize>, triple: Option<usize>, numeral: Option<&[usize]>, format: GraphFormat) -> Outcome {
    let (mop, name): (Mop, String) = match (fan_n, triple, numeral) {
        (Some(n), _, _) => (fan(n)?, format!("fan_{n}")),
        (_, Some(n), _) => (triple_fan(n)?, format!("triple_fan_{n}")),
        (_, _, Some(&[base, t])) => (build_numeral_graph(base, t)?.mop().clone(), format!("numeral_{base}_{t}")),
        _ => return Err(Failure::Usage("choose one of --fan, --triple-fan, --numeral".into())),
    };
    Ok(match format {
        GraphFormat::Edges => to_edge_list(&mop.graph()),
        GraphFormat::Dot => to_dot(&mop.graph(), &name),
        GraphFormat::Json => pretty(&serde_json::to_value(&mop).expect("mops serialize")),
    })
}

fn parse_pattern(spec: &str) -> Result<Pattern, Failure> {
    let bad = || Failure::Usage(format!("--pattern: expected cycle:K, path:K or tree:FILE, got '{spec}'"));
    let (kind, arg) = spec.split_once(':').ok_or_else(bad)?;
    match kind {
        "cycle" | "path" => {
            let k: usize = arg.parse().map_err(|_| bad())?;
            match kind {
                "cycle" if k < 3 => Err(Failure::Usage(format!("--pattern: cycles need K >= 3, got {k}"))),
                "path" if k == 0 => Err(Failure::Usage("--pattern: paths need K >= 1 edges".into())),
                "cycle" => Ok(Pattern::Cycle(k)),
                _ => Ok(Pattern::Path(k)),
            }
        }
        "tree" => {
            let path = Path::new(arg);
            let tree = parse_tree_text(&read(path)?).map_err(in_file(path))?;
            Ok(Pattern::Graph(PatternGraph::new(tree.to_graph()).map_err(in_file(path))?))
        }
        _ => Err(bad()),
    }
}

fn count(path: &Path, pattern: &str, format: TextJson) -> Outcome {
    let g: Graph = parse_edge_list(&read(path)?).map_err(in_file(path))?;
    let pattern = parse_pattern(pattern)?;
    let c = match &pattern {
        Pattern::Cycle(k) => count_cycles(&g, *k),
        Pattern::Path(e) => count_paths(&g, *e),
        Pattern::Graph(h) => subgraph_count(&g, h),
    };
    Ok(match format {
        TextJson::Text => format!("{c}\n"),
        TextJson::Json => pretty(&json!({"pattern": pattern.to_string(), "count": c})),
    })
}

fn gamma(len: usize, t: usize, enumerate: bool, format: TextJson) -> Outcome {
    let count = gamma_count(len, t)?;
    let seqs: Option<Vec<Vec<usize>>> = if enumerate {
        Some(enumerate_permitted(len, t)?.map(|s| s.values().to_vec()).collect())
    } else {
        None
    };
    Ok(match format {
        TextJson::Text => match seqs {
            Some(list) => list.iter().map(|s| json!(s).to_string() + "\n").collect(),
            None => format!("{count}\n"),
        },
        TextJson::Json => {
            let mut v = json!({"L": len, "t": t, "count": count.to_string()});
            if let Some(list) = seqs {
                v["sequences"] = json!(list);
            }
            pretty(&v)
        }
    })
}

#[allow(clippy::too_many_arguments)]
fn inject(
    base: usize,
    t: usize,
    k: usize,
    a: usize,
    b: usize,
    all: bool,
    seq: Option<&[usize]>,
    format: TextJson,
) -> Outcome {
    if k < 2 * t {
        return Err(Failure::Usage(format!("--k must be at least 2t = {}", 2 * t)));
    }
    let seqs: Vec<PermittedSequence> = if all {
        enumerate_permitted(k - 2 * t, t)?.collect()
    } else {
        let values = seq.map_or_else(|| vec![0; k - 2 * t], <[usize]>::to_vec);
        vec![PermittedSequence::new(values, t).map_err(|e| Failure::Usage(format!("--seq: {e}")))?]
    };
    let mut rows = Vec::with_capacity(seqs.len());
    for s in &seqs {
        rows.push((s.values().to_vec(), sequence_to_path(a, b, s, base, t, k)?));
    }
    Ok(match format {
        TextJson::Text => rows
            .iter()
            .map(|(_, p)| p.iter().map(usize::to_string).collect::<Vec<_>>().join(" ") + "\n")
            .collect(),
        TextJson::Json => pretty(&json!({
            "N": base, "t": t, "k": k, "A": a, "B": b,
            "paths": rows.iter().map(|(s, p)| json!({"sequence": s, "path": p})).collect::<Vec<_>>(),
        })),
    })
}

fn extremal(n: usize, pattern: &str, dedup: bool, unsafe_scale: bool, format: TextJson) -> Outcome {
    let pattern = parse_pattern(pattern)?;
    let r = brute_force_ex(n, &pattern, ExtremalOptions { dedup, unsafe_scale })?;
    Ok(match format {
        TextJson::Json => pretty(&serde_json::to_value(&r).expect("results serialize")),
        TextJson::Text => {
            let mut out = format!(
                "n = {}  pattern = {}  maximum = {}  triangulations = {}\nmaximizers ({}{}):\n",
                r.n,
                r.pattern,
                r.maximum,
                r.triangulations,
                r.maximizers.len(),
                if r.deduplicated { ", up to isomorphism" } else { "" }
            );
            for m in &r.maximizers {
                let chords: Vec<String> = m.chords().iter().map(|(i, j)| format!("{i}-{j}")).collect();
                let _ = writeln!(out, "  {}", chords.join(" "));
            }
            out
        }
    })
}

fn verify(suite: &str, params: &SuiteParams, format: TextJson) -> Outcome {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Failure::Usage(format!(
            "--suite: unknown suite '{suite}' (expected one of: all, {})",
            SUITES.join(", ")
        )));
    };
    let mut reports = Vec::with_capacity(names.len());
    for name in names {
        reports.push(verify_suite(name, params)?);
    }
    let passed = reports.iter().all(|r| r.passed);
    let out = match format {
        TextJson::Text => reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n"),
        TextJson::Json if reports.len() == 1 => reports[0].to_json() + "\n",
        TextJson::Json => pretty(&serde_json::to_value(&reports).expect("reports serialize")),
    };
    if passed {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verification)
    }
}
