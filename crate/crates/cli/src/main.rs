//! Command-line surface: family generation, exact gap checks with
//! certificates, rooted distance-two certification, decompositions,
//! line-graph tooling, the census, and interval probes.
//!
//! Exit codes: 0 = success/verified, 1 = a checked property fails,
//! 2 = usage or input errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gapset::enumerate::{census, gap_probe, EnumConfig, EnumFilter, ProbeFamily};
use gapset::families::FamilySpec;
use gapset::multigraph::{rooted_distance_two_subgraph, RootedMultigraph};
use gapset::spectral::{associated_matrix, eigenvalues, gap_avoids_unit_interval, psd_exact};
use gapset::structure::{
    generalized_line_graph_witness, incidence_graph, intersection_graph, is_line_graph,
    root_graph, valid_decompositions,
};
use gapset::{graph6, Graph};

#[derive(Parser)]
#[command(name = "gapset", version, about = "Exact spectral-gap tooling for subcubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate catalog families and figures.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Print adjacency eigenvalues of a graph.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = SpectrumFormat::Table)]
        format: SpectrumFormat,
    },
    /// Decide exactly whether the spectrum avoids the open unit interval.
    Gapcheck {
        #[command(flatten)]
        input: GraphInput,
        /// Write the certificate JSON to this path.
        #[arg(long)]
        cert_out: Option<PathBuf>,
        /// Emit a JSON summary instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Associated matrix and PSD verdict of a rooted distance-two subgraph.
    Certify {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated vertex subset.
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Valid triangle-edge decompositions of a rooted graph.
    Decompose {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated root vertices.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        roots: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Line-graph recognition, Whitney roots, and petal witnesses.
    Linegraph {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        mode: LinegraphMode,
        /// Roots for --generalized.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        roots: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Bipartite double cover.
    Double {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Quotient by the first free part-swapping involution.
    Quotient {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Enumerate connected subcubic graphs and verify the catalog.
    Census {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Worker threads; falls back to WORKERS, then to the CPU count.
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write survivors as graph6, one per line.
        #[arg(long)]
        survivors_out: Option<PathBuf>,
    },
    /// Report family eigenvalues inside an open interval.
    Probe {
        #[arg(long, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, allow_hyphen_values = true)]
        hi: f64,
        #[arg(long, value_delimiter = ',', default_value = "gm,ks,hj,hj_prime")]
        families: Vec<String>,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum FamiliesAction {
    /// Build one family member.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        /// Tag for sporadic_g6 (a-d) or classic_cubic names.
        #[arg(long)]
        tag: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Emit every non-cubic catalog member up to an order bound.
    Catalog {
        #[arg(long, default_value_t = 40)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct LinegraphMode {
    /// Beineke recognition.
    #[arg(long)]
    check: bool,
    /// Whitney root graph.
    #[arg(long)]
    root_graph: bool,
    /// Petal witness for a rooted graph.
    #[arg(long)]
    generalized: bool,
}

#[derive(Args)]
struct GraphInput {
    /// Input file; stdin when omitted. Accepts graph6 or {"n", "edges"} JSON.
    #[arg(long, value_name = "FILE")]
    r#in: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumFormat {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    All,
    NonCubic,
    MinDeg2,
}

impl From<FilterArg> for EnumFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => EnumFilter::All,
            FilterArg::NonCubic => EnumFilter::NonCubic,
            FilterArg::MinDeg2 => EnumFilter::MinDegTwo,
        }
    }
}

/// Errors mapped to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn read_graph(input: &GraphInput) -> Result<Graph, UsageError> {
    let text = match &input.r#in {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| UsageError("empty input".into()))?
        .trim();
    if line.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(line)?;
        let n = v["n"].as_u64().ok_or_else(|| UsageError("missing n".into()))? as usize;
        let mut g = Graph::new(n);
        for e in v["edges"].as_array().ok_or_else(|| UsageError("missing edges".into()))? {
            let u = e[0].as_u64().ok_or_else(|| UsageError("bad edge".into()))? as usize;
            let w = e[1].as_u64().ok_or_else(|| UsageError("bad edge".into()))? as usize;
            g.add_edge(u, w)?;
        }
        Ok(g)
    } else {
        Ok(graph6::decode(line)?)
    }
}

fn graph_json(g: &Graph) -> serde_json::Value {
    serde_json::json!({ "n": g.n(), "edges": g.edges() })
}

fn emit_graph(g: &Graph, format: GraphFormat, name: &str) -> Result<(), UsageError> {
    match format {
        GraphFormat::Graph6 => println!("{}", graph6::encode(g)?),
        GraphFormat::Dot => print!("{}", gapset::dot::to_dot(g, name)),
        GraphFormat::Json => println!("{}", graph_json(g)),
    }
    Ok(())
}

fn build_family(family: &str, n: Option<usize>, tag: Option<&str>) -> Result<(Graph, String), UsageError> {
    let need_n = || n.ok_or_else(|| UsageError(format!("--n required for family {family}")));
    let spec = match family {
        "twisted_ladder" => FamilySpec::TwistedLadder(need_n()?),
        "ks" => FamilySpec::Ks(need_n()?),
        "gm" => FamilySpec::Gm(need_n()?),
        "hj" => FamilySpec::Hj(need_n()?),
        "hj_prime" => FamilySpec::HjPrime(need_n()?),
        "hj_plus" => FamilySpec::HjPlus(need_n()?),
        "k2" => FamilySpec::K2,
        "k3" => FamilySpec::K3,
        "sporadic_g6" => {
            let tag = tag.ok_or_else(|| UsageError("--tag (a-d) required".into()))?;
            let mut chars = tag.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(UsageError(format!("bad tag {tag}")));
            };
            FamilySpec::SporadicG6(c)
        }
        "classic_cubic" => {
            let tag = tag.ok_or_else(|| UsageError("--tag required".into()))?;
            FamilySpec::ClassicCubic(tag.to_string())
        }
        other => return Err(UsageError(format!("unknown family {other}"))),
    };
    let name = spec.name();
    Ok((spec.build()?, name))
}

const CERT_INLINE_LIMIT: usize = 4096;

fn run() -> Result<u8, UsageError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Families { action } => match action {
            FamiliesAction::Gen { family, n, tag, format } => {
                let (g, name) = build_family(&family, n, tag.as_deref())?;
                emit_graph(&g, format, &name)?;
                Ok(0)
            }
            FamiliesAction::Catalog { max_n, format } => {
                for (g, name) in gapset::families::catalog(max_n)? {
                    match format {
                        GraphFormat::Graph6 => println!("{}", graph6::encode(&g)?),
                        GraphFormat::Dot => print!("{}", gapset::dot::to_dot(&g, &name)),
                        GraphFormat::Json => println!(
                            "{}",
                            serde_json::json!({ "name": name, "graph": graph_json(&g) })
                        ),
                    }
                }
                Ok(0)
            }
        },
        Command::Spectrum { input, format } => {
            let g = read_graph(&input)?;
            let s = eigenvalues(&g)?;
            match format {
                SpectrumFormat::Table => {
                    for v in s.values() {
                        println!("{v:.9}");
                    }
                }
                SpectrumFormat::Csv => print!("{}", s.to_csv()),
                SpectrumFormat::Json => println!("{}", serde_json::json!({ "eigenvalues": s.values() })),
            }
            Ok(0)
        }
        Command::Gapcheck { input, cert_out, json } => {
            let g = read_graph(&input)?;
            let (ok, cert) = gap_avoids_unit_interval(&g);
            let cert_json = serde_json::to_string_pretty(&cert.to_json()).unwrap();
            let hash = gapset::content_hash(cert_json.as_bytes());
            let mut path_used: Option<String> = None;
            if let Some(path) = &cert_out {
                std::fs::write(path, &cert_json)?;
                path_used = Some(path.display().to_string());
            }
            let inline = cert_out.is_none() && cert_json.len() <= CERT_INLINE_LIMIT;
            if json {
                let mut obj = serde_json::json!({
                    "avoids_unit_interval": ok,
                    "certificate_ref": hash,
                });
                if inline {
                    obj["certificate"] = cert.to_json();
                }
                if let Some(p) = &path_used {
                    obj["certificate_path"] = serde_json::Value::String(p.clone());
                }
                println!("{obj}");
            } else {
                println!("avoids (-1,1): {ok}");
                println!("certificate: {hash}");
                if let Some(p) = &path_used {
                    println!("certificate written to {p}");
                } else if inline {
                    println!("{cert_json}");
                } else {
                    println!("certificate exceeds {CERT_INLINE_LIMIT} bytes; pass --cert-out to save it");
                }
            }
            Ok(u8::from(!ok))
        }
        Command::Certify { input, subset, json } => {
            let g = read_graph(&input)?;
            let rooted = rooted_distance_two_subgraph(&g, &subset)?;
            let matrix = associated_matrix(&rooted);
            let cert = psd_exact(&matrix);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "subset": subset,
                        "roots": rooted.roots(),
                        "matrix": matrix.rows_as_strings(),
                        "psd": cert.is_psd(),
                        "certificate": cert.to_json(),
                    })
                );
            } else {
                println!("rooted distance-two subgraph on {subset:?}");
                println!("roots (degree-2 in host): {:?}", rooted.roots());
                for row in matrix.display_rows() {
                    println!("  [{}]", row.join(" "));
                }
                println!("psd: {}", cert.is_psd());
            }
            Ok(u8::from(!cert.is_psd()))
        }
        Command::Decompose { input, roots, json } => {
            let g = read_graph(&input)?;
            let host = RootedMultigraph::from_simple(&g, &roots)?;
            let found = valid_decompositions(&host)?;
            if json {
                let items: Vec<serde_json::Value> = found
                    .iter()
                    .map(|d| {
                        let (ig, ig_roots) = intersection_graph(d).unwrap();
                        let inc = incidence_graph(d).unwrap();
                        serde_json::json!({
                            "parts": d.parts(),
                            "intersection_graph": graph6::encode(&ig).unwrap(),
                            "intersection_roots": ig_roots,
                            "incidence_graph": graph6::encode(&inc).unwrap(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({ "count": found.len(), "decompositions": items })
                );
            } else {
                println!("{} valid decomposition(s)", found.len());
                for (i, d) in found.iter().enumerate() {
                    let (ig, ig_roots) = intersection_graph(d).unwrap();
                    let inc = incidence_graph(d).unwrap();
                    println!(
                        "#{i}: parts {:?} | intersection {} roots {:?} | incidence {}",
                        d.parts(),
                        graph6::encode(&ig)?,
                        ig_roots,
                        graph6::encode(&inc)?
                    );
                }
            }
            Ok(0)
        }
        Command::Linegraph { input, mode, roots, json } => {
            let g = read_graph(&input)?;
            if mode.check {
                match is_line_graph(&g) {
                    None => {
                        if json {
                            println!("{}", serde_json::json!({ "line_graph": true }));
                        } else {
                            println!("line graph: true");
                        }
                        Ok(0)
                    }
                    Some(w) => {
                        if json {
                            println!(
                                "{}",
                                serde_json::json!({ "line_graph": false, "witness": w })
                            );
                        } else {
                            println!("line graph: false ({:?} at {:?})", w.pattern, w.embedding);
                        }
                        Ok(1)
                    }
                }
            } else if mode.root_graph {
                match root_graph(&g) {
                    Some((f, edge_map)) => {
                        if json {
                            println!(
                                "{}",
                                serde_json::json!({
                                    "root_graph": graph6::encode(&f).unwrap(),
                                    "edge_map": edge_map,
                                })
                            );
                        } else {
                            println!("root graph: {}", graph6::encode(&f)?);
                            println!("edge map: {edge_map:?}");
                        }
                        Ok(0)
                    }
                    None => {
                        println!("not a line graph");
                        Ok(1)
                    }
                }
            } else if mode.generalized {
                let gr = RootedMultigraph::from_simple(&g, &roots)?;
                match generalized_line_graph_witness(&gr)? {
                    Some(w) => {
                        println!("{}", w.to_json());
                        Ok(0)
                    }
                    None => {
                        println!("no petal witness: the associated matrix is not PSD");
                        Ok(1)
                    }
                }
            } else {
                Err(UsageError("choose one of --check, --root-graph, --generalized".into()))
            }
        }
        Command::Double { input, format } => {
            let g = read_graph(&input)?;
            emit_graph(&g.bipartite_double(), format, "double")?;
            Ok(0)
        }
        Command::Quotient { input, format } => {
            let g = read_graph(&input)?;
            let invs = gapset::involution::free_involutions(&g)?;
            match invs.first() {
                Some(inv) => {
                    let q = gapset::involution::quotient(&g, inv)?;
                    emit_graph(&q, format, "quotient")?;
                    Ok(0)
                }
                None => {
                    eprintln!("no free part-swapping involution");
                    Ok(1)
                }
            }
        }
        Command::Census { max_n, workers, filter, out, survivors_out } => {
            let workers = workers
                .or_else(|| std::env::var("WORKERS").ok().and_then(|w| w.parse().ok()))
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let mut cfg = EnumConfig::new(max_n).with_workers(workers);
            cfg.filter = filter.into();
            let report = census(&cfg)?;
            for row in &report.rows {
                println!(
                    "n={:2}  generated={:7}  survivors={:3}  unmatched={}  missing={}",
                    row.n,
                    row.generated,
                    row.survivors.len(),
                    row.mismatches.unmatched_survivors.len(),
                    row.mismatches.missing_catalog.len()
                );
            }
            let survivor_lines = || -> Vec<String> {
                report
                    .rows
                    .iter()
                    .flat_map(|r| r.survivors.iter().map(|s| s.graph6.clone()))
                    .collect()
            };
            if let Some(path) = &out {
                std::fs::write(path, serde_json::to_string_pretty(&report.to_json()).unwrap())?;
                let survivors_path = survivors_out
                    .clone()
                    .unwrap_or_else(|| path.with_extension("g6"));
                std::fs::write(&survivors_path, survivor_lines().join("\n") + "\n")?;
                println!("report written to {}", path.display());
                println!("survivors written to {}", survivors_path.display());
            } else if let Some(path) = &survivors_out {
                std::fs::write(path, survivor_lines().join("\n") + "\n")?;
            }
            Ok(u8::from(report.has_mismatches()))
        }
        Command::Probe { lo, hi, families, n_min, n_max, tol, json } => {
            let fams: Result<Vec<ProbeFamily>, _> =
                families.iter().map(|s| ProbeFamily::parse(s)).collect();
            let rows = gap_probe(&fams?, n_min, n_max, lo, hi, tol)?;
            if json {
                println!("{}", serde_json::json!({ "lo": lo, "hi": hi, "rows": rows }));
            } else {
                for row in &rows {
                    println!(
                        "{:9} n={:3} order={:3} inside({lo}, {hi}): {:?}",
                        row.family, row.n, row.order, row.inside
                    );
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
