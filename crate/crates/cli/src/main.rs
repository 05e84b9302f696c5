//! Batch interface: parse a graph, run the classifiers, the brute-force
//! oracle, the census enumerators, or the disjoint-path machinery, and emit
//! a human- or machine-readable report.

use arcgraph::classify::{classify, is_n_ac, is_n_cc, NValue, Verdict};
use arcgraph::menger::max_disjoint_paths;
use arcgraph::oracle::{oracle_n_ac, oracle_n_cc, Budget, OracleError, OracleVerdict};
use arcgraph::{atlas, MultiGraph, PointConfig, VertexId};
use arcgraph_cli::format::{parse_graph, serialize_graph, NamedGraph};
use arcgraph_cli::report::{certificate_string, Doc};
use std::collections::BTreeSet;
use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

const USAGE: &str = "\
usage: arcgraph <command> [input] [flags]

commands:
  classify   decide n-arc connectivity for every n up to 7 and omega
  check      decide a single query (--n <int|omega>, --cc for circles)
  oracle     brute-force a single query by exhaustive search (--n <int>)
  enumerate  stream graph censuses (--cubic | --multigraphs | --random)
  menger     maximum independent path system between two vertex sets

input: a file path, '-' for standard input, or --name <atlas graph>

flags:
  --name <id>        use a built-in graph (see --name help)
  --n <int|omega>    point count for check/oracle; verification limit for classify
  --cc               ask about circles instead of arcs
  --verify           classify only: cross-check deciders against the oracle
  --budget <int>     oracle node budget (default 200000000)
  --format <text|machine>
  --seed <int>       seed for enumerate --random
  --vertices <int>   enumerate: vertex count
  --max-edges <int>  enumerate --multigraphs: edge bound
  --count <int>      enumerate --random: how many graphs
  --edges <int>      enumerate --random: edges per graph (default 2*vertices)
  --filter 6ac       enumerate: keep only 6-arc-connected graphs
  --out <dir>        enumerate: also write each graph as an edge-list file
  --a <ids> --b <ids>  menger endpoint sets, comma-separated vertex names

exit codes: 0 decision made, 1 usage error, 2 invalid graph, 3 budget exceeded";

enum CliError {
    Usage(String),
    InvalidGraph(String),
    Budget(String),
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            ExitCode::from(1)
        }
        Err(CliError::InvalidGraph(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

struct Flags {
    input: Option<String>,
    name: Option<String>,
    n: Option<String>,
    cc: bool,
    verify: bool,
    budget: u64,
    machine: bool,
    seed: u64,
    vertices: Option<usize>,
    max_edges: Option<usize>,
    count: usize,
    edges: Option<usize>,
    filter_6ac: bool,
    out: Option<String>,
    cubic: bool,
    multigraphs: bool,
    random: bool,
    a: Option<String>,
    b: Option<String>,
}

fn parse_flags(args: &[String]) -> Result<Flags, CliError> {
    let mut flags = Flags {
        input: None,
        name: None,
        n: None,
        cc: false,
        verify: false,
        budget: 200_000_000,
        machine: false,
        seed: 0,
        vertices: None,
        max_edges: None,
        count: 10,
        edges: None,
        filter_6ac: false,
        out: None,
        cubic: false,
        multigraphs: false,
        random: false,
        a: None,
        b: None,
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut value = |name: &str| {
            it.next()
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("flag {name} needs a value")))
        };
        match arg.as_str() {
            "--name" => flags.name = Some(value("--name")?),
            "--n" => flags.n = Some(value("--n")?),
            "--cc" => flags.cc = true,
            "--verify" => flags.verify = true,
            "--budget" => {
                flags.budget = value("--budget")?
                    .parse()
                    .map_err(|_| CliError::Usage("--budget expects an integer".into()))?
            }
            "--format" => {
                flags.machine = match value("--format")?.as_str() {
                    "machine" => true,
                    "text" => false,
                    other => {
                        return Err(CliError::Usage(format!("unknown format '{other}'")));
                    }
                }
            }
            "--seed" => {
                flags.seed = value("--seed")?
                    .parse()
                    .map_err(|_| CliError::Usage("--seed expects an integer".into()))?
            }
            "--vertices" => {
                flags.vertices = Some(
                    value("--vertices")?
                        .parse()
                        .map_err(|_| CliError::Usage("--vertices expects an integer".into()))?,
                )
            }
            "--max-edges" => {
                flags.max_edges = Some(
                    value("--max-edges")?
                        .parse()
                        .map_err(|_| CliError::Usage("--max-edges expects an integer".into()))?,
                )
            }
            "--count" => {
                flags.count = value("--count")?
                    .parse()
                    .map_err(|_| CliError::Usage("--count expects an integer".into()))?
            }
            "--edges" => {
                flags.edges = Some(
                    value("--edges")?
                        .parse()
                        .map_err(|_| CliError::Usage("--edges expects an integer".into()))?,
                )
            }
            "--filter" => {
                match value("--filter")?.as_str() {
                    "6ac" => flags.filter_6ac = true,
                    other => {
                        return Err(CliError::Usage(format!("unknown filter '{other}'")));
                    }
                }
            }
            "--out" => flags.out = Some(value("--out")?),
            "--cubic" => flags.cubic = true,
            "--multigraphs" => flags.multigraphs = true,
            "--random" => flags.random = true,
            "--a" => flags.a = Some(value("--a")?),
            "--b" => flags.b = Some(value("--b")?),
            other if other.starts_with("--") => {
                return Err(CliError::Usage(format!("unknown flag '{other}'")));
            }
            _ => {
                if flags.input.is_some() {
                    return Err(CliError::Usage(format!("unexpected argument '{arg}'")));
                }
                flags.input = Some(arg.clone());
            }
        }
    }
    Ok(flags)
}

fn load_graph(flags: &Flags) -> Result<NamedGraph, CliError> {
    if let Some(name) = &flags.name {
        if name == "help" {
            println!("available names: {}", atlas::NAMED.join(" "));
            std::process::exit(0);
        }
        let g = atlas::named(name)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        return Ok(NamedGraph::from_graph(g));
    }
    let source = flags
        .input
        .as_deref()
        .ok_or_else(|| CliError::Usage("no input graph given".into()))?;
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::InvalidGraph(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| CliError::InvalidGraph(format!("reading {source}: {e}")))?
    };
    parse_graph(&text).map(Ok).unwrap_or_else(|e| Err(CliError::InvalidGraph(e.to_string())))
}

fn run(args: &[String]) -> Result<(), CliError> {
    let Some(command) = args.first() else {
        return Err(CliError::Usage("missing command".into()));
    };
    if command == "--help" || command == "help" {
        println!("{USAGE}");
        return Ok(());
    }
    let flags = parse_flags(&args[1..])?;
    match command.as_str() {
        "classify" => cmd_classify(&flags),
        "check" => cmd_check(&flags),
        "oracle" => cmd_oracle(&flags),
        "enumerate" => cmd_enumerate(&flags),
        "menger" => cmd_menger(&flags),
        other => Err(CliError::Usage(format!("unknown command '{other}'"))),
    }
}

fn describe_input(flags: &Flags) -> String {
    flags
        .name
        .clone()
        .or_else(|| flags.input.clone())
        .unwrap_or_else(|| "<none>".to_string())
}

fn parse_n(text: &str) -> Result<NValue, CliError> {
    NValue::parse(text)
        .ok_or_else(|| CliError::Usage(format!("--n expects a positive integer or 'omega', found '{text}'")))
}

fn verdict_lines(g: &NamedGraph, label: &str, v: &Verdict, doc: &mut Doc, text: &mut String) {
    let answer = if v.answer { "yes" } else { "no" };
    text.push_str(&format!("  {label}-ac: {answer} ({})", v.clause.describe()));
    let cert = certificate_string(g, &v.certificate);
    if cert != "none" {
        text.push_str(&format!("; certificate: {cert}"));
    }
    text.push('\n');
    doc.push(&format!("ac.{label}.answer", label = label), answer);
    doc.push(&format!("ac.{label}.clause", label = label), v.clause.name());
    doc.push(&format!("ac.{label}.certificate", label = label), cert);
}

fn config_string(g: &NamedGraph, cfg: &PointConfig) -> String {
    let parts: Vec<String> = cfg
        .counts()
        .map(|(e, c)| {
            let (u, v) = g.graph.endpoints(e).unwrap();
            format!("{}-{}:{}", g.name_of(u), g.name_of(v), c)
        })
        .collect();
    parts.join(" ")
}

fn map_classify_err(e: arcgraph::classify::ClassifyError) -> CliError {
    CliError::InvalidGraph(e.to_string())
}

fn map_oracle_err(e: OracleError) -> CliError {
    CliError::Budget(e.to_string())
}

fn cmd_classify(flags: &Flags) -> Result<(), CliError> {
    let g = load_graph(flags)?;
    let started = Instant::now();
    let classification = classify(&g.graph).map_err(map_classify_err)?;
    let mut doc = Doc::new("classify");
    doc.push("input", describe_input(flags));
    doc.push("graph.vertices", g.graph.vertex_count());
    doc.push("graph.edges", g.graph.edge_count());
    let mut text = format!(
        "input: {} ({} vertices, {} edges)\n",
        describe_input(flags),
        g.graph.vertex_count(),
        g.graph.edge_count()
    );
    for (i, v) in classification.finite.iter().enumerate() {
        verdict_lines(&g, &format!("{}", i + 1), v, &mut doc, &mut text);
    }
    verdict_lines(&g, "omega", &classification.omega, &mut doc, &mut text);
    text.push_str(&format!("max n-ac: {}\n", classification.max_ac));
    text.push_str(&format!("circle class: {}\n", classification.cc_class));
    doc.push("max-ac", classification.max_ac);
    doc.push("cc-class", classification.cc_class);

    if flags.verify {
        let limit = match flags.n.as_deref().map(parse_n).transpose()? {
            Some(NValue::Finite(k)) => k.min(7),
            Some(NValue::Omega) | None => 5,
        };
        let mut budget = Budget::new(flags.budget);
        let mut agree = true;
        for n in 2..=limit {
            let o = oracle_n_ac(&g.graph, n as usize, &mut budget).map_err(map_oracle_err)?;
            let d = classification.finite[(n - 1) as usize].answer;
            let ok = o.holds() == d;
            agree &= ok;
            doc.push(&format!("verify.ac.{n}"), if ok { "agree" } else { "disagree" });
        }
        for n in 2..=limit.min(4) {
            let o = oracle_n_cc(&g.graph, n as usize, &mut budget).map_err(map_oracle_err)?;
            let d = is_n_cc(&g.graph, n).map_err(map_classify_err)?.answer;
            let ok = o.holds() == d;
            agree &= ok;
            doc.push(&format!("verify.cc.{n}"), if ok { "agree" } else { "disagree" });
        }
        doc.push("verify.limit", limit);
        doc.push("verify.agreement", if agree { "yes" } else { "no" });
        text.push_str(&format!(
            "verify (n <= {limit}): {}\n",
            if agree { "agreement" } else { "DISAGREEMENT" }
        ));
    }
    let elapsed = started.elapsed().as_millis();
    doc.push("elapsed-ms", elapsed);
    text.push_str(&format!("elapsed: {elapsed} ms\n"));
    print!("{}", if flags.machine { doc.emit() } else { text });
    Ok(())
}

fn cmd_check(flags: &Flags) -> Result<(), CliError> {
    let g = load_graph(flags)?;
    let n_text = flags
        .n
        .as_deref()
        .ok_or_else(|| CliError::Usage("check needs --n".into()))?;
    let n = parse_n(n_text)?;
    let started = Instant::now();
    let verdict = if flags.cc {
        let NValue::Finite(k) = n else {
            return Err(CliError::Usage("circle queries need a finite --n".into()));
        };
        is_n_cc(&g.graph, k).map_err(map_classify_err)?
    } else {
        is_n_ac(&g.graph, n).map_err(map_classify_err)?
    };
    let mut doc = Doc::new("check");
    doc.push("input", describe_input(flags));
    doc.push("question", format!("{}-{}", n, if flags.cc { "cc" } else { "ac" }));
    let mut text = String::new();
    let label = n.to_string();
    verdict_lines(&g, &label, &verdict, &mut doc, &mut text);
    let elapsed = started.elapsed().as_millis();
    doc.push("elapsed-ms", elapsed);
    if flags.machine {
        print!("{}", doc.emit());
    } else if flags.cc {
        print!("{}-cc{}", n, text.trim_start_matches(&format!("  {label}-ac")));
    } else {
        print!("{}", text.trim_start_matches("  "));
    }
    Ok(())
}

fn cmd_oracle(flags: &Flags) -> Result<(), CliError> {
    let g = load_graph(flags)?;
    if g.graph.edge_count() == 0 {
        return Err(CliError::InvalidGraph("graph has no edges".into()));
    }
    let n_text = flags
        .n
        .as_deref()
        .ok_or_else(|| CliError::Usage("oracle needs --n".into()))?;
    let n = match parse_n(n_text)? {
        NValue::Finite(k) => k as usize,
        NValue::Omega => {
            return Err(CliError::Usage("the oracle needs a finite --n".into()));
        }
    };
    let mut budget = Budget::new(flags.budget);
    let started = Instant::now();
    let verdict = if flags.cc {
        oracle_n_cc(&g.graph, n, &mut budget).map_err(map_oracle_err)?
    } else {
        oracle_n_ac(&g.graph, n, &mut budget).map_err(map_oracle_err)?
    };
    let kind = if flags.cc { "cc" } else { "ac" };
    let mut doc = Doc::new("oracle");
    doc.push("input", describe_input(flags));
    doc.push("question", format!("{n}-{kind}"));
    let text = match &verdict {
        OracleVerdict::Holds => {
            doc.push("answer", "yes");
            format!("{n}-{kind}: yes (every configuration covered)\n")
        }
        OracleVerdict::Fails(cfg) => {
            doc.push("answer", "no");
            doc.push("failing-config", config_string(&g, cfg));
            format!("{n}-{kind}: no; failing configuration: {}\n", config_string(&g, cfg))
        }
    };
    doc.push("search-nodes", budget.used());
    doc.push("elapsed-ms", started.elapsed().as_millis());
    print!("{}", if flags.machine { doc.emit() } else { text });
    Ok(())
}

fn graph_row(i: usize, g: &MultiGraph, six: Option<bool>) -> String {
    let named = NamedGraph::from_graph(g.clone());
    let edges: Vec<String> = g
        .edges()
        .map(|(_, u, v)| format!("{}-{}", named.name_of(u), named.name_of(v)))
        .collect();
    let six_text = match six {
        Some(true) => " 6ac=yes",
        Some(false) => " 6ac=no",
        None => "",
    };
    format!(
        "graph {i} vertices={} edges={}{} [{}]",
        g.vertex_count(),
        g.edge_count(),
        six_text,
        edges.join(";")
    )
}

fn cmd_enumerate(flags: &Flags) -> Result<(), CliError> {
    let selected = [flags.cubic, flags.multigraphs, flags.random]
        .iter()
        .filter(|&&b| b)
        .count();
    if selected != 1 {
        return Err(CliError::Usage(
            "enumerate needs exactly one of --cubic, --multigraphs, --random".into(),
        ));
    }
    let graphs: Vec<MultiGraph> = if flags.cubic {
        let n = flags
            .vertices
            .ok_or_else(|| CliError::Usage("--cubic needs --vertices".into()))?;
        atlas::enumerate_cubic(n).map_err(|e| match e {
            atlas::AtlasError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        })?
    } else if flags.multigraphs {
        let m = flags
            .max_edges
            .ok_or_else(|| CliError::Usage("--multigraphs needs --max-edges".into()))?;
        atlas::enumerate_connected_multigraphs(m).map_err(|e| CliError::Budget(e.to_string()))?
    } else {
        let n = flags
            .vertices
            .ok_or_else(|| CliError::Usage("--random needs --vertices".into()))?;
        let m = flags.edges.unwrap_or(2 * n);
        (0..flags.count)
            .map(|i| {
                atlas::random_graph(
                    flags.seed.wrapping_add(i as u64),
                    &atlas::RandomGraphParams {
                        vertices: n,
                        model: atlas::RandomModel::EdgeCount(m),
                    },
                )
                .expect("edge-count model is always feasible")
            })
            .collect()
    };

    if let Some(dir) = &flags.out {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::InvalidGraph(format!("creating {dir}: {e}")))?;
    }
    let mut doc = Doc::new("enumerate");
    let mut rows = Vec::new();
    let mut kept = 0usize;
    for (i, g) in graphs.iter().enumerate() {
        let six = if g.edge_count() == 0 || !g.is_connected() {
            Some(false)
        } else {
            Some(is_n_ac(g, NValue::Finite(6)).map_err(map_classify_err)?.answer)
        };
        if flags.filter_6ac && six != Some(true) {
            continue;
        }
        kept += 1;
        let row = graph_row(i, g, six);
        doc.push(&format!("row.{i}"), &row);
        rows.push(row);
        if let Some(dir) = &flags.out {
            let path = std::path::Path::new(dir).join(format!("graph_{i:04}.graph"));
            let text = serialize_graph(&NamedGraph::from_graph(g.clone()));
            std::fs::write(&path, text)
                .map_err(|e| CliError::InvalidGraph(format!("writing {}: {e}", path.display())))?;
        }
    }
    doc.push("total", kept);
    if flags.machine {
        print!("{}", doc.emit());
    } else {
        for row in rows {
            println!("{row}");
        }
        println!("total {kept}");
    }
    Ok(())
}

fn vertex_set(g: &NamedGraph, list: &str) -> Result<BTreeSet<VertexId>, CliError> {
    let mut out = BTreeSet::new();
    for token in list.split(',').filter(|t| !t.is_empty()) {
        let v = g
            .vertex_by_name(token)
            .ok_or_else(|| CliError::InvalidGraph(format!("unknown vertex '{token}'")))?;
        out.insert(v);
    }
    if out.is_empty() {
        return Err(CliError::Usage("endpoint sets must be nonempty".into()));
    }
    Ok(out)
}

fn cmd_menger(flags: &Flags) -> Result<(), CliError> {
    let g = load_graph(flags)?;
    let a = vertex_set(&g, flags.a.as_deref().ok_or_else(|| CliError::Usage("menger needs --a".into()))?)?;
    let b = vertex_set(&g, flags.b.as_deref().ok_or_else(|| CliError::Usage("menger needs --b".into()))?)?;
    let (sys, sep) = max_disjoint_paths(&g.graph, &a, &b);
    let mut doc = Doc::new("menger");
    doc.push("input", describe_input(flags));
    doc.push("paths", sys.len());
    doc.push("separator.size", sep.size());
    let mut text = format!("independent paths: {}\n", sys.len());
    for (i, p) in sys.paths.iter().enumerate() {
        let names: Vec<String> = p.vertices.iter().map(|&v| g.name_of(v)).collect();
        doc.push(&format!("path.{i}"), names.join(" "));
        text.push_str(&format!("  path {i}: {}\n", names.join(" ")));
    }
    let sep_vertices: Vec<String> = sep.vertices.iter().map(|&v| g.name_of(v)).collect();
    let sep_edges: Vec<String> = sep
        .edges
        .iter()
        .map(|&e| {
            let (u, v) = g.graph.endpoints(e).unwrap();
            format!("{}-{}", g.name_of(u), g.name_of(v))
        })
        .collect();
    doc.push("separator.vertices", sep_vertices.join(" "));
    doc.push("separator.edges", sep_edges.join(" "));
    text.push_str(&format!(
        "separator (size {}): vertices {{{}}} edges {{{}}}\n",
        sep.size(),
        sep_vertices.join(" "),
        sep_edges.join(" ")
    ));
    print!("{}", if flags.machine { doc.emit() } else { text });
    Ok(())
}
