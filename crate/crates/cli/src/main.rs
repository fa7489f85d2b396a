//! `starspec`: command-line front end for the star-spectra library.

mod format;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use star_spectra::canon::canonical_labeling;
use star_spectra::enumerate::{enumerate_graphs, GraphClass};
use star_spectra::extremal::{
    self, make_complete_bipartite, make_f, make_join_regular, make_s, make_s_plus, ThresholdKind,
};
use star_spectra::forest::{contains_star_forest, StarForest};
use star_spectra::graph6::{graph6_decode, graph6_encode, read_graph6};
use star_spectra::search::{self, write_records};
use star_spectra::spectra::{
    adjacency_spectrum, check_perron_floor, least_eigenvalue, signless_laplacian_radius,
    signless_laplacian_spectrum, spectral_radius,
};
use star_spectra::{Error, Graph};

use format::{sig, Output};

#[derive(Parser)]
#[command(name = "starspec", version, about = "Spectral extremal problems for star-forest-free graphs")]
struct Cli {
    /// Print machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the result objects to this file as JSON lines.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and print it as graph6.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Spectral radius of the adjacency matrix.
    Rho { graph: String },
    /// Least adjacency eigenvalue.
    Leig { graph: String },
    /// Largest signless-Laplacian eigenvalue.
    Q { graph: String },
    /// Full spectrum, largest first.
    Spectrum {
        graph: String,
        /// Use the signless Laplacian D + A instead of A.
        #[arg(long)]
        signless: bool,
    },
    /// Whether the graph avoids the star forest.
    Free { graph: String, forest: StarForest },
    /// Evaluate a closed-form bound.
    Bound {
        #[command(subcommand)]
        bound: BoundCmd,
    },
    /// Exact order threshold for a star forest.
    Threshold {
        #[arg(value_parser = parse_kind)]
        kind: ThresholdKind,
        forest: StarForest,
    },
    /// Exhaustive spectral-radius search over F-free graphs of one class.
    Search {
        n: usize,
        forest: StarForest,
        #[arg(default_value = "all", value_parser = parse_class)]
        class: GraphClass,
    },
    /// Run a property suite; exits with status 3 on violations.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Signless-Laplacian margins against the conjectured bound.
    Conjecture {
        n: usize,
        forest: StarForest,
        #[arg(default_value = "all", value_parser = parse_class)]
        class: GraphClass,
    },
    /// Perron vector with the 1/rho entry-floor diagnostic.
    Perron { graph: String },
    /// List one graph per isomorphism class, as graph6.
    Enumerate {
        n: usize,
        #[arg(default_value = "all", value_parser = parse_class)]
        class: GraphClass,
    },
    /// Canonical form as graph6.
    Canon { graph: String },
    /// Structural summary: order, size, degrees, connectivity, bipartition.
    Info { graph: String },
    /// Combine graphs: join, union, complement, disjoint copies.
    Combine {
        #[command(subcommand)]
        op: CombineOp,
    },
}

#[derive(Subcommand)]
enum Family {
    /// F_(n,k) = K_(k-1) join (pK_2 + K_s).
    F { n: usize, k: usize },
    /// S_(n,h) = K_h join the empty graph on n - h vertices.
    S { n: usize, h: usize },
    /// S+_(n,h) = K_h join (K_2 + empty graph on n - h - 2 vertices).
    Splus { n: usize, h: usize },
    /// Complete bipartite K_(a,b).
    Kb { a: usize, b: usize },
    /// K_(k-1) join a (d-1)-regular graph on n - k + 1 vertices.
    Joinreg { n: usize, k: usize, d: usize },
}

#[derive(Subcommand)]
enum BoundCmd {
    /// Spectral radius bound at (n, k, d_k).
    #[command(name = "t17", alias = "spectral-radius")]
    SpectralRadius { n: usize, k: usize, d: usize },
    /// Bipartite spectral radius bound sqrt((k-1)(n-k+1)).
    #[command(name = "t18", alias = "bipartite")]
    Bipartite { n: usize, k: usize },
    /// Least eigenvalue bound -sqrt((k-1)(n-k+1)).
    #[command(name = "c19", alias = "least")]
    Least { n: usize, k: usize },
    /// Conjectured signless-Laplacian bound at (n, k, d_k).
    #[command(name = "conj32", alias = "signless")]
    Signless { n: usize, k: usize, d: usize },
    /// Edge bound valid for every order n >= order(F).
    #[command(name = "l21", alias = "coarse-edges")]
    CoarseEdges { forest: StarForest, n: usize },
    /// Edge bound for large order (every d_i >= 2).
    #[command(name = "t12", alias = "large-n-edges")]
    LargeEdges { forest: StarForest, n: usize },
}

#[derive(Subcommand)]
enum Suite {
    /// Coarse edge bound on every F-free graph of order n.
    Edge {
        n: usize,
        forest: StarForest,
        #[arg(default_value = "all", value_parser = parse_class)]
        class: GraphClass,
    },
    /// Regular joins attain the spectral radius bound; one edge deletion is strict.
    #[command(alias = "join-regular")]
    Lemma23 {
        #[arg(default_value_t = 5)]
        k_max: usize,
        #[arg(default_value_t = 4)]
        d_max: usize,
        #[arg(default_value_t = 40)]
        n_max: usize,
    },
    /// Signless-Laplacian radius against the conjectured bound.
    Conjecture {
        n: usize,
        forest: StarForest,
        #[arg(default_value = "all", value_parser = parse_class)]
        class: GraphClass,
    },
    /// Bipartite scan: Wilf's n/2 and, where proved, the bipartite bound.
    Bipartite {
        n: usize,
        forest: StarForest,
        #[arg(default_value = "bipartite", value_parser = parse_class)]
        class: GraphClass,
    },
}

#[derive(Subcommand)]
enum CombineOp {
    Join { g: String, h: String },
    Union { g: String, h: String },
    Complement { g: String },
    Copies { k: usize, g: String },
}

fn parse_kind(s: &str) -> Result<ThresholdKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_class(s: &str) -> Result<GraphClass, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure that maps to a specific exit status.
enum Failure {
    Domain(Error),
    Violations,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Graphs named by an argument: a graph6 file if the path exists, else inline graph6.
fn load_graphs(arg: &str) -> Result<Vec<Graph>, Error> {
    let path = Path::new(arg);
    if path.is_file() {
        let file = std::fs::File::open(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let graphs = read_graph6(std::io::BufReader::new(file))?;
        if graphs.is_empty() {
            return Err(Error::Parse {
                offset: 0,
                msg: format!("{arg}: no graphs in file"),
            });
        }
        Ok(graphs)
    } else {
        Ok(vec![graph6_decode(arg)?])
    }
}

fn load_one(arg: &str) -> Result<Graph, Error> {
    let mut graphs = load_graphs(arg)?;
    if graphs.len() != 1 {
        return Err(Error::ParamOutOfRange(format!(
            "{arg}: expected one graph, found {}",
            graphs.len()
        )));
    }
    Ok(graphs.remove(0))
}

fn graph_json(g: &Graph) -> Value {
    json!({ "graph6": graph6_encode(g), "order": g.order(), "edges": g.edge_count() })
}

fn run(cli: &Cli, out: &mut Output) -> Result<(), Failure> {
    match &cli.command {
        Command::Construct { family } => {
            let (name, g) = match *family {
                Family::F { n, k } => ("f", make_f(n, k)?),
                Family::S { n, h } => ("s", make_s(n, h)?),
                Family::Splus { n, h } => ("splus", make_s_plus(n, h)?),
                Family::Kb { a, b } => ("kb", make_complete_bipartite(a, b)?),
                Family::Joinreg { n, k, d } => ("joinreg", make_join_regular(n, k, d)?),
            };
            let mut v = graph_json(&g);
            v["family"] = json!(name);
            out.emit(v, graph6_encode(&g));
        }
        Command::Rho { graph } => scalar(out, graph, "rho", spectral_radius)?,
        Command::Leig { graph } => scalar(out, graph, "least_eigenvalue", least_eigenvalue)?,
        Command::Q { graph } => scalar(out, graph, "q", signless_laplacian_radius)?,
        Command::Spectrum { graph, signless } => {
            for g in load_graphs(graph)? {
                let s = if *signless {
                    signless_laplacian_spectrum(&g)?
                } else {
                    adjacency_spectrum(&g)?
                };
                let text = s.eigenvalues.iter().map(|&x| sig(x)).collect::<Vec<_>>().join(" ");
                let mut v = serde_json::to_value(&s).expect("serializable");
                v["graph6"] = json!(graph6_encode(&g));
                out.emit(v, text);
            }
        }
        Command::Free { graph, forest } => {
            for g in load_graphs(graph)? {
                let free = !contains_star_forest(&g, forest);
                out.emit(
                    json!({ "graph6": graph6_encode(&g), "forest": forest, "f_free": free }),
                    free.to_string(),
                );
            }
        }
        Command::Bound { bound } => {
            let report = match bound {
                BoundCmd::SpectralRadius { n, k, d } => extremal::report_spectral_radius(*n, *k, *d)?,
                BoundCmd::Bipartite { n, k } => extremal::report_bipartite_spectral_radius(*n, *k)?,
                BoundCmd::Least { n, k } => extremal::report_least_eigenvalue(*n, *k)?,
                BoundCmd::Signless { n, k, d } => extremal::report_signless_radius(*n, *k, *d)?,
                BoundCmd::CoarseEdges { forest, n } => extremal::report_coarse_edges(forest, *n)?,
                BoundCmd::LargeEdges { forest, n } => extremal::report_large_n_edges(forest, *n)?,
            };
            let text = format::bound_table(&report);
            out.emit(serde_json::to_value(&report).expect("serializable"), text);
        }
        Command::Threshold { kind, forest } => {
            let report = extremal::report_threshold(*kind, forest)?;
            let text = format::bound_table(&report);
            out.emit(serde_json::to_value(&report).expect("serializable"), text);
        }
        Command::Search { n, forest, class } => {
            let r = search::extremal_search(*n, forest, *class)?;
            let text = format::search_table(&r);
            out.emit(serde_json::to_value(&r).expect("serializable"), text);
        }
        Command::Verify { suite } => {
            let (value, text, ok) = match suite {
                Suite::Edge { n, forest, class } => {
                    let s = search::verify_edge_bound(*n, forest, *class)?;
                    let text = format::edge_table(&s);
                    let ok = s.violations.is_empty();
                    (serde_json::to_value(&s).expect("serializable"), text, ok)
                }
                Suite::Lemma23 { k_max, d_max, n_max } => {
                    let s = search::verify_join_regular(*k_max, *d_max, *n_max)?;
                    let text = format::suite_table(&s);
                    (serde_json::to_value(&s).expect("serializable"), text, s.passed())
                }
                Suite::Conjecture { n, forest, class } => {
                    let t = search::test_conjecture_q(*n, forest, *class)?;
                    let text = format::margin_table(&t);
                    let ok = t.exceeding.is_empty();
                    (serde_json::to_value(&t).expect("serializable"), text, ok)
                }
                Suite::Bipartite { n, forest, class } => {
                    let s = search::verify_bipartite(*n, forest, *class)?;
                    let text = format::suite_table(&s);
                    (serde_json::to_value(&s).expect("serializable"), text, s.passed())
                }
            };
            out.emit(value, text);
            if !ok {
                return Err(Failure::Violations);
            }
        }
        Command::Conjecture { n, forest, class } => {
            let t = search::test_conjecture_q(*n, forest, *class)?;
            let text = format::margin_table(&t);
            out.emit(serde_json::to_value(&t).expect("serializable"), text);
        }
        Command::Perron { graph } => {
            for g in load_graphs(graph)? {
                let p = check_perron_floor(&g)?;
                let text = format::perron_table(&p);
                let mut v = serde_json::to_value(&p).expect("serializable");
                v["graph6"] = json!(graph6_encode(&g));
                out.emit(v, text);
            }
        }
        Command::Enumerate { n, class } => {
            for g in enumerate_graphs(*n, *class)? {
                out.emit(graph_json(&g), graph6_encode(&g));
            }
        }
        Command::Canon { graph } => {
            for g in load_graphs(graph)? {
                let c = canonical_labeling(&g);
                let form = c.form(&g);
                out.emit(
                    json!({ "graph6": graph6_encode(&g), "canonical": graph6_encode(&form), "labeling": c.labeling }),
                    graph6_encode(&form),
                );
            }
        }
        Command::Info { graph } => {
            for g in load_graphs(graph)? {
                let sides = g.is_bipartite().map(|b| b.sizes());
                let v = json!({
                    "graph6": graph6_encode(&g),
                    "order": g.order(),
                    "edges": g.edge_count(),
                    "degrees": g.degrees(),
                    "max_degree": g.max_degree(),
                    "connected": g.is_connected(),
                    "bipartition_sizes": sides,
                    "triangle_free": g.is_triangle_free(),
                });
                let text = format::info_table(&g, sides);
                out.emit(v, text);
            }
        }
        Command::Combine { op } => {
            let g = match op {
                CombineOp::Join { g, h } => load_one(g)?.join(&load_one(h)?)?,
                CombineOp::Union { g, h } => load_one(g)?.union(&load_one(h)?)?,
                CombineOp::Complement { g } => load_one(g)?.complement(),
                CombineOp::Copies { k, g } => Graph::disjoint_copies(*k, &load_one(g)?)?,
            };
            out.emit(graph_json(&g), graph6_encode(&g));
        }
    }
    Ok(())
}

fn scalar(out: &mut Output, arg: &str, key: &str, f: fn(&Graph) -> star_spectra::Result<f64>) -> Result<(), Failure> {
    for g in load_graphs(arg)? {
        let x = f(&g)?;
        out.emit(json!({ "graph6": graph6_encode(&g), key: x }), sig(x));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Output::new(cli.json);
    let result = run(&cli, &mut out);
    if let Some(path) = &cli.out {
        if let Err(e) = write_records(out.values(), path) {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Violations) => {
            eprintln!("property violations found");
            ExitCode::from(3)
        }
    }
}
