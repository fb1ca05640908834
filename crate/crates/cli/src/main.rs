use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use maxnik::certify::{certify_ik, certify_maxnik, certify_nik, check_necessary, Certificate, Verdict};
use maxnik::construct::{npp5_family, prime_family, size_construct};
use maxnik::family::{closure, Move};
use maxnik::library::named_graph;
use maxnik::minor::has_minor;
use maxnik::planarity::{is_k_apex, is_maximal_2apex, is_maximal_planar, is_planar};
use maxnik::primality::{decompose, is_prime};
use maxnik::survey::{enumerate_maximal_2apex, enumerate_triangulations, sweep_maxnik, table_deg, table_ve};
use maxnik::{graph6, Graph};

const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "maxnik", version, about = "Maximal knotless graph toolkit")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Planarity, apex and necessary-condition report. Reads stdin when no graph is given.
    Classify { graph: Option<String> },
    /// IK / nIK / maxnik certificate. Reads stdin when no graph is given.
    Certify { graph: Option<String> },
    /// Searches for `pattern` as a minor of `host`.
    Minor {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        host: String,
    },
    /// Builds a named graph, a graph of given size, or a family member.
    Construct {
        #[arg(long, group = "what")]
        named: Option<String>,
        #[arg(long, group = "what")]
        size: Option<usize>,
        #[arg(long, group = "what", value_enum, requires = "k")]
        family: Option<Family>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, group = "what")]
        prime_order: Option<usize>,
    },
    /// Delta-wye closure of K7 or K3,3,1,1.
    Closure {
        #[arg(long, value_enum)]
        seed: Seed,
        #[arg(long, value_delimiter = ',', required = true)]
        moves: Vec<MoveArg>,
    },
    /// Clique-sum decomposition. Reads stdin when no graph is given.
    Prime { graph: Option<String> },
    /// Lists every graph of one order and kind.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Write `<kind>-<order>.g6` (plus a certificate sidecar for maxnik) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Tables {
        #[arg(long, value_enum)]
        which: Table,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Npp5,
}

#[derive(Clone, Copy, ValueEnum)]
enum Seed {
    K7,
    K3311,
}

#[derive(Clone, Copy, ValueEnum)]
enum MoveArg {
    Dy,
    Yd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Triangulation,
    Maxnik,
    #[value(name = "maximal-2apex")]
    Maximal2Apex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Ve,
    Deg,
}

/// One result: what to print and whether it was definite.
struct Output {
    json: Value,
    text: String,
    graphs: Vec<Graph>,
    definite: bool,
}

impl Output {
    fn definite(json: Value, text: String, graphs: Vec<Graph>) -> Self {
        Output {
            json,
            text,
            graphs,
            definite: true,
        }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string(&self.json).expect("serialisable"),
            Format::Text => self.text.clone(),
            Format::Graph6 => self.graphs.iter().map(graph6::encode).collect::<Vec<_>>().join("\n"),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serialisable")
}

fn parse_graph(text: &str) -> Result<Graph, String> {
    graph6::decode(text.trim()).map_err(|e| e.to_string())
}

fn classify(g: &Graph) -> Output {
    let two = is_k_apex(g, 2);
    let necessary = check_necessary(g);
    let json = json!({
        "graph": graph6::encode(g),
        "order": g.order(),
        "size": g.size(),
        "planar": is_planar(g),
        "maximal_planar": is_maximal_planar(g),
        "apex": is_k_apex(g, 1),
        "two_apex": two,
        "maximal_2apex": is_maximal_2apex(g),
        "necessary": necessary,
    });
    let text = format!(
        "{} n={} m={} planar={} 2-apex={} necessary={}",
        graph6::encode(g),
        g.order(),
        g.size(),
        is_planar(g),
        two.apex,
        if necessary.passes() { "pass".to_string() } else { necessary.failures.join("; ") },
    );
    Output::definite(json, text, vec![g.clone()])
}

fn certify(g: &Graph) -> Output {
    let maxnik = certify_maxnik(g);
    // a maxnik certificate already settles knottedness; otherwise report both sides
    let (ik, nik): (Option<Certificate>, Option<Certificate>) = match maxnik.verdict {
        Verdict::Maxnik => (None, None),
        _ => (Some(certify_ik(g)), Some(certify_nik(g))),
    };
    let definite = maxnik.verdict.is_definite();
    let text = format!("{} {} {}", graph6::encode(g), maxnik.verdict, maxnik.rule());
    let mut json = to_json(&maxnik);
    if let (Some(ik), Some(nik)) = (&ik, &nik) {
        let knotted = if ik.verdict == Verdict::Ik { ik } else { nik };
        json.as_object_mut()
            .expect("certificate is an object")
            .insert("knotting".into(), to_json(knotted));
    }
    Output {
        json,
        text,
        graphs: vec![g.clone()],
        definite,
    }
}

fn prime(g: &Graph) -> Output {
    let verdict = is_prime(g);
    let d = decompose(g);
    let leaves: Vec<Graph> = d.leaves().into_iter().cloned().collect();
    let text = format!(
        "{} {} leaves={}",
        graph6::encode(g),
        if verdict.prime { "prime" } else { "composite" },
        leaves.iter().map(graph6::encode).collect::<Vec<_>>().join(",")
    );
    let json = json!({
        "graph": graph6::encode(g),
        "prime": verdict.prime,
        "cutset": verdict.cutset,
        "decomposition": d,
    });
    Output::definite(json, text, leaves)
}

/// Runs `f` on the positional graph, or on every stdin line in parallel.
fn per_graph(graph: Option<String>, format: Format, f: fn(&Graph) -> Output) -> Result<u8, String> {
    let inputs: Vec<String> = match graph {
        Some(g) => vec![g],
        None => io::stdin()
            .lock()
            .lines()
            .collect::<io::Result<Vec<_>>>()
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|l| !l.trim().is_empty())
            .collect(),
    };
    let results: Vec<Result<Output, String>> = inputs.par_iter().map(|s| parse_graph(s).map(|g| f(&g))).collect();
    let mut stdout = io::stdout().lock();
    let mut code = 0;
    for r in results {
        match r {
            Ok(out) => {
                write_line(&mut stdout, &out.render(format))?;
                if !out.definite && code == 0 {
                    code = EXIT_UNKNOWN;
                }
            }
            Err(e) => {
                // keep one output line per input line
                if format == Format::Json {
                    write_line(&mut stdout, &json!({ "error": e }).to_string())?;
                }
                eprintln!("error: {e}");
                code = 1;
            }
        }
    }
    Ok(code)
}

/// Writes one line; a closed pipe downstream is not an error.
fn write_line(w: &mut impl Write, line: &str) -> Result<(), String> {
    match writeln!(w, "{line}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.to_string()),
        _ => Ok(()),
    }
}

fn emit(out: Output, format: Format) -> Result<u8, String> {
    write_line(&mut io::stdout().lock(), &out.render(format))?;
    Ok(if out.definite { 0 } else { EXIT_UNKNOWN })
}

fn cert_output(cert: Certificate, extra: Value) -> Output {
    let text = format!(
        "{} {} n={} m={}",
        graph6::encode(&cert.graph),
        cert.verdict,
        cert.graph.order(),
        cert.graph.size()
    );
    let mut json = extra;
    json.as_object_mut()
        .expect("object")
        .insert("certificate".into(), to_json(&cert));
    let definite = cert.verdict.is_definite();
    Output {
        json,
        text,
        graphs: vec![cert.graph],
        definite,
    }
}

fn list_output(kind: &str, order: usize, graphs: Vec<Graph>) -> Output {
    let codes: Vec<String> = graphs.iter().map(graph6::encode).collect();
    let text = std::iter::once(format!("{} {kind} graph(s) of order {order}", graphs.len()))
        .chain(codes.iter().cloned())
        .collect::<Vec<_>>()
        .join("\n");
    Output::definite(
        json!({ "kind": kind, "order": order, "count": graphs.len(), "graphs": codes }),
        text,
        graphs,
    )
}

fn run(cli: Cli) -> Result<u8, String> {
    let format = cli.format;
    match cli.command {
        Command::Classify { graph } => per_graph(graph, format, classify),
        Command::Certify { graph } => per_graph(graph, format, certify),
        Command::Prime { graph } => per_graph(graph, format, prime),
        Command::Minor { pattern, host } => {
            let (p, h) = (parse_graph(&pattern)?, parse_graph(&host)?);
            let witness = has_minor(&h, &p);
            let text = match &witness {
                Some(w) => format!("minor found: {:?}", w.branch_sets),
                None => "no minor".to_string(),
            };
            let json = json!({ "pattern": pattern, "host": host, "minor": witness.is_some(), "witness": witness });
            emit(Output::definite(json, text, vec![]), format)
        }
        Command::Construct { named, size, family, k, prime_order } => {
            let out = if let Some(name) = named {
                let ng = named_graph(&name).map_err(|e| e.to_string())?;
                let text = format!("{} {} n={} m={}", name, graph6::encode(&ng.graph), ng.graph.order(), ng.graph.size());
                Output::definite(to_json(&ng), text, vec![ng.graph])
            } else if let Some(n) = size {
                let (plan, cert) = size_construct(n).map_err(|e| e.to_string())?;
                cert_output(cert, json!({ "plan": plan }))
            } else if let Some(Family::Npp5) = family {
                let k = k.ok_or("--family needs --k")?;
                cert_output(npp5_family(k).map_err(|e| e.to_string())?, json!({ "family": "npp5", "k": k }))
            } else if let Some(n) = prime_order {
                let g = prime_family(n).map_err(|e| e.to_string())?;
                let text = format!("{} n={} m={}", graph6::encode(&g), g.order(), g.size());
                Output::definite(json!({ "order": n, "graph": graph6::encode(&g) }), text, vec![g])
            } else {
                return Err("construct needs one of --named, --size, --family, --prime-order".into());
            };
            emit(out, format)
        }
        Command::Closure { seed, moves } => {
            let seed_graph = match seed {
                Seed::K7 => Graph::complete(7).expect("K7"),
                Seed::K3311 => Graph::complete_multipartite(&[3, 3, 1, 1]).expect("K3,3,1,1"),
            };
            let mut ms: Vec<Move> = moves
                .iter()
                .map(|m| match m {
                    MoveArg::Dy => Move::DeltaY,
                    MoveArg::Yd => Move::YDelta,
                })
                .collect();
            ms.dedup();
            let family = closure(&[seed_graph], &ms);
            let graphs: Vec<Graph> = family.graphs().cloned().collect();
            let mut out = list_output("closure", graphs.first().map_or(0, Graph::order), graphs);
            out.json = json!({
                "count": family.len(),
                "members": family.members,
            });
            out.text = format!("{} members\n{}", family.len(), out.graphs.iter().map(graph6::encode).collect::<Vec<_>>().join("\n"));
            emit(out, format)
        }
        Command::Enumerate { order, kind, out } => {
            if order > maxnik::survey::MAX_SWEEP_ORDER {
                return Err(format!("enumeration is limited to order {}", maxnik::survey::MAX_SWEEP_ORDER));
            }
            let (name, graphs, certs) = match kind {
                Kind::Triangulation => {
                    if order < 3 {
                        return Err("triangulations need order at least 3".into());
                    }
                    ("triangulation", enumerate_triangulations(order), None)
                }
                Kind::Maximal2Apex => ("maximal-2apex", enumerate_maximal_2apex(order), None),
                Kind::Maxnik => {
                    let sweep = sweep_maxnik(order);
                    if !sweep.unknown.is_empty() {
                        return Err(format!("{} classes left undecided", sweep.unknown.len()));
                    }
                    let graphs = sweep.maxnik.iter().map(|c| c.graph.clone()).collect();
                    ("maxnik", graphs, Some(sweep.maxnik))
                }
            };
            if let Some(dir) = out {
                write_set(&dir, name, order, &graphs, certs.as_deref())?;
            }
            emit(list_output(name, order, graphs), format)
        }
        Command::Tables { which } => {
            let out = match which {
                Table::Ve => {
                    let rows = table_ve();
                    let mut text = format!("{:>5}  {:>8}  {:>9}  {}", "order", "min m/n", "reference", "match");
                    for r in &rows {
                        text += &format!("\n{:>5}  {:>8}  {:>9}  {}", r.order, r.computed, r.reference, r.matches);
                    }
                    Output::definite(to_json(&rows), text, vec![])
                }
                Table::Deg => {
                    let t = table_deg();
                    let set = |s: &std::collections::BTreeSet<usize>| {
                        s.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
                    };
                    let mut text = format!("{:>5}  {:>10}  {:>10}  {:>5}  {:>5}", "order", "min deg", "max deg", "min", "max");
                    for r in &t.rows {
                        text += &format!(
                            "\n{:>5}  {:>10}  {:>10}  {:>5}  {:>5}",
                            r.order,
                            set(&r.min_degrees),
                            set(&r.max_degrees),
                            r.min_matches,
                            r.max_matches
                        );
                    }
                    for d in &t.discrepancies {
                        text += &format!("\ndiscrepancy: {d}");
                    }
                    Output::definite(to_json(&t), text, vec![])
                }
            };
            emit(out, format)
        }
    }
}

fn write_set(dir: &PathBuf, kind: &str, order: usize, graphs: &[Graph], certs: Option<&[Certificate]>) -> Result<(), String> {
    std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    let stem = format!("{kind}-{order}");
    let g6: String = graphs.iter().map(|g| graph6::encode(g) + "\n").collect();
    std::fs::write(dir.join(format!("{stem}.g6")), g6).map_err(|e| e.to_string())?;
    if let Some(certs) = certs {
        let lines: String = certs
            .iter()
            .map(|c| serde_json::to_string(c).expect("serialisable") + "\n")
            .collect();
        std::fs::write(dir.join(format!("{stem}.certs.jsonl")), lines).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = std::env::var("MAXNIK_WORKERS").ok().and_then(|v| v.parse().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
