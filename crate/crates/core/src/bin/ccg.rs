use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use compressed_cliques::checks::{self, Instance, Summary, Verdict};
use compressed_cliques::corpus::Corpus;
use compressed_cliques::families::{FamilySpec, GRAMMAR};
use compressed_cliques::io::{self, Format};
use compressed_cliques::{compressed, cover, detect, forcing, Error, Graph};

#[derive(Parser)]
#[command(
    name = "ccg",
    version,
    about = "Clique covers, compressed cliques graphs and positive zero forcing"
)]
struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Refuse graphs with more vertices than this for exact computations.
    #[arg(long, global = true, default_value_t = 40)]
    max_n_guard: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member.
    Gen {
        spec: String,
        #[arg(long, default_value = "edgelist")]
        format: Format,
    },
    /// Clique cover number and a minimum clique cover.
    Cc {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Positive zero forcing number.
    Zplus {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
        /// Also compute the classic zero forcing number.
        #[arg(long)]
        standard: bool,
    },
    /// Compressed cliques graph.
    Compress {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "edgelist")]
        format: Format,
    },
    /// Claw, diamond, suspended cycle and J' embedding report.
    Detect {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Verify the registered theorems.
    Check {
        /// Every connected graph on at most this many vertices (at most 7).
        #[arg(long, conflicts_with = "corpus_file")]
        corpus: Option<usize>,
        /// graph6 file, one graph per line.
        #[arg(long)]
        corpus_file: Option<PathBuf>,
        /// Family instances to check; may repeat.
        #[arg(long)]
        family: Vec<String>,
        /// Restrict to these theorem ids; may repeat.
        #[arg(long)]
        theorem: Vec<String>,
        #[arg(long)]
        json: bool,
        /// Per-check time limit in seconds.
        #[arg(long, default_value_t = checks::DEFAULT_TIMEOUT.as_secs())]
        timeout: u64,
        /// List the registered theorems and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct GraphInput {
    /// A family spec, a graph6 string or a file path.
    graph: Option<String>,
    #[arg(long, conflicts_with_all = ["graph", "g6", "input"])]
    family: Option<String>,
    #[arg(long, conflicts_with_all = ["graph", "input"])]
    g6: Option<String>,
    /// Edgelist or graph6 file; `-` reads stdin.
    #[arg(long, conflicts_with = "graph")]
    input: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidFamily(ref msg) if msg.contains(GRAMMAR) => Failure::Usage(e.to_string()),
            Error::InvalidFamily(_) => Failure::Usage(format!("{e}\nfamily grammar: {GRAMMAR}")),
            Error::Parse { .. } | Error::Graph6LongForm | Error::CorpusTooLarge { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Runtime(e.to_string()))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
    }
}

impl GraphInput {
    fn load(&self, guard: usize) -> Result<Graph, Failure> {
        let g = if let Some(spec) = &self.family {
            spec.parse::<FamilySpec>()?.generate()?
        } else if let Some(s) = &self.g6 {
            io::parse_graph6(s)?
        } else if let Some(path) = &self.input {
            let text = read_text(path)?;
            io::parse_graph(&text, io::sniff(&text))?
        } else if let Some(arg) = &self.graph {
            let path = PathBuf::from(arg);
            if path.is_file() {
                let text = read_text(&path)?;
                io::parse_graph(&text, io::sniff(&text))?
            } else if let Ok(spec) = arg.parse::<FamilySpec>() {
                spec.generate()?
            } else {
                io::parse_graph6(arg).map_err(|_| {
                    Failure::Usage(format!("`{arg}` is not a family spec, graph6 string or file\nfamily grammar: {GRAMMAR}"))
                })?
            }
        } else {
            return Err(Failure::Usage(
                "no graph given: pass a spec, --family, --g6 or --input".into(),
            ));
        };
        if g.n() > guard {
            return Err(Failure::Usage(format!(
                "graph has {} vertices, above --max-n-guard {guard}",
                g.n()
            )));
        }
        Ok(g)
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let guard = cli.max_n_guard;
    match &cli.command {
        Command::Gen { spec, format } => {
            let g = spec.parse::<FamilySpec>()?.generate()?;
            Ok((io::emit_graph(&g, *format)?, true))
        }
        Command::Cc { input, json } => {
            let g = input.load(guard)?;
            let c = cover::minimum_cover(&g);
            if *json {
                let cliques: Vec<Vec<usize>> = c.cliques().iter().map(|k| k.to_vec()).collect();
                Ok((to_json(&json!({ "cc": c.len(), "cover": cliques })), true))
            } else {
                Ok((format!("{}\ncover: {c}\n", c.len()), true))
            }
        }
        Command::Zplus {
            input,
            json,
            standard,
        } => {
            let g = input.load(guard)?;
            let z = forcing::zplus(&g);
            let std_z = standard.then(|| forcing::standard_zero_forcing(&g));
            if *json {
                Ok((to_json(&json!({ "zplus": z, "z": std_z })), true))
            } else {
                let mut s = format!("{}\n", z.value);
                if let Some(v) = std_z {
                    s.push_str(&format!("Z = {v}\n"));
                }
                Ok((s, true))
            }
        }
        Command::Compress { input, format } => {
            let g = input.load(guard)?;
            let cg = compressed::compressed_cliques_graph(&g)?;
            let out = match format {
                Format::Json => {
                    let cliques: Vec<Vec<usize>> = cg
                        .source_cover()
                        .cliques()
                        .iter()
                        .map(|k| k.to_vec())
                        .collect();
                    let labels: Vec<String> = cg.labels().iter().map(|l| l.to_string()).collect();
                    to_json(&json!({
                        "graph": io::json_value(cg.graph()),
                        "labels": labels,
                        "phi": cg.phi(),
                        "cover": cliques,
                    }))
                }
                f => io::emit_graph(cg.graph(), *f)?,
            };
            Ok((out, true))
        }
        Command::Detect { input, json } => {
            let g = input.load(guard)?;
            let r = detect::check_compressed_candidate(&g);
            if *json {
                return Ok((to_json(&r), true));
            }
            let show = |found: &Option<detect::StructureReport>| match found {
                Some(s) => format!("{} at {}", s.kind, s.witness),
                None => "none".to_string(),
            };
            let mut s = String::new();
            s.push_str(&format!("claw: {}\n", show(&r.claw)));
            s.push_str(&format!("diamond: {}\n", show(&r.diamond)));
            s.push_str(&format!("suspended cycle: {}\n", show(&r.suspended_cycle)));
            s.push_str(&format!(
                "J'({},2) embedding: {}\n",
                r.clique_cover_number,
                r.jprime_labels
                    .as_ref()
                    .map_or("none".to_string(), |ls| ls.join(" "))
            ));
            s.push_str(&format!(
                "plausible compressed cliques graph: {}\n",
                r.plausible()
            ));
            Ok((s, true))
        }
        Command::Check {
            corpus,
            corpus_file,
            family,
            theorem,
            json,
            timeout,
            list,
        } => {
            if *list {
                let s: String = checks::theorems()
                    .iter()
                    .map(|t| format!("{}\t{}\n", t.id, t.statement))
                    .collect();
                return Ok((s, true));
            }
            for id in theorem {
                if checks::theorem(id).is_none() {
                    let known: Vec<&str> = checks::theorems().iter().map(|t| t.id).collect();
                    return Err(Failure::Usage(format!(
                        "unknown theorem `{id}`; known: {}",
                        known.join(", ")
                    )));
                }
            }
            let mut instances = Vec::new();
            if let Some(n) = corpus {
                instances.extend(Instance::corpus(&Corpus::generated(*n)?));
            }
            if let Some(path) = corpus_file {
                instances.extend(Instance::corpus(&Corpus::from_file(path)?));
            }
            for spec in family {
                instances.push(Instance::from_family(spec.parse()?)?);
            }
            if corpus.is_none() && corpus_file.is_none() && family.is_empty() {
                instances = checks::default_instances();
            }
            if let Some(big) = instances.iter().find(|i| i.graph.n() > guard) {
                return Err(Failure::Usage(format!(
                    "{} has {} vertices, above --max-n-guard {guard}",
                    big.name,
                    big.graph.n()
                )));
            }
            let only: Vec<&str> = theorem.iter().map(String::as_str).collect();
            let results = checks::run_checks(&instances, &only, Duration::from_secs(*timeout));
            let summary = Summary::of(&results);
            let out = if *json {
                to_json(&json!({ "results": results, "summary": summary }))
            } else {
                let mut s = String::new();
                for r in &results {
                    match &r.verdict {
                        Verdict::Pass => s.push_str(&format!(
                            "PASS {} {}: {}\n",
                            r.theorem, r.instance, r.observed
                        )),
                        Verdict::Fail => s.push_str(&format!(
                            "FAIL {} {}: expected {}, observed {}\n",
                            r.theorem, r.instance, r.expected, r.observed
                        )),
                        Verdict::Skipped(why) => {
                            s.push_str(&format!("SKIP {} {}: {why}\n", r.theorem, r.instance))
                        }
                    }
                }
                s.push_str(&format!(
                    "{} passed, {} failed, {} skipped\n",
                    summary.pass, summary.fail, summary.skipped
                ));
                s
            };
            Ok((out, summary.all_pass()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
        {
            eprintln!("ccg: cannot configure {jobs} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((text, ok)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("ccg: cannot write output: {e}");
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("ccg: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("ccg: {msg}");
            ExitCode::from(1)
        }
    }
}
