use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use levelable::experiments::{wcw_dim_zero_fraction, DEFAULT_SEED};
use levelable::mis::set_default_max_sets;
use levelable::{
    attach_graphs, classify, classify_family, decide_levelable, duplicate_vertex,
    enumerate_max_independent_sets, expand_vertex, generate_family, monomial_basis, parse_graph,
    realize_weight_profile, socle_vector, validate_weights, wcw_basis, Error, ExponentVector,
    FamilySpec, Graph, WeightFunction, WeightProfile,
};

const MAX_SETS_VAR: &str = "LEVELABLE_MAX_SETS";

#[derive(Parser)]
#[command(
    name = "levelable",
    version,
    about = "Decide and certify levelable graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide levelability and print a certificate.
    Decide { file: String },
    /// List the maximal independent sets.
    Mis { file: String },
    /// Dimension and basis of the well-covered weighting space.
    Wcw { file: String },
    /// Classify a graph file or a family description.
    Classify {
        #[arg(required_unless_present = "family", conflicts_with = "family")]
        file: Option<String>,
        /// Family description, e.g. "bigstar 1,2,2,3" or "cubic-circulant 6 2".
        #[arg(long)]
        family: Option<String>,
    },
    /// Build a graph together with valid weights.
    Construct {
        #[command(subcommand)]
        op: ConstructOp,
    },
    /// Socle vector and levelness of the artinian monomial quotient.
    Socle {
        file: String,
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u32>,
    },
    /// Print a family member as an edge list.
    Gen {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        spec: Vec<String>,
    },
    /// Fraction of random graphs with no nonzero well-covered weighting.
    Stats {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// 0 enumerates every labelled graph (n <= 5).
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum ConstructOp {
    /// Add a copy of a vertex with the same open neighbourhood.
    Duplicate {
        file: String,
        #[arg(long)]
        vertex: usize,
        /// Weights of the input graph; decided when omitted.
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<u64>>,
    },
    /// Add a copy of a vertex with the same closed neighbourhood.
    Expand {
        file: String,
        #[arg(long)]
        vertex: usize,
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<u64>>,
    },
    /// Attach one graph at every vertex of the base graph.
    Attach {
        file: String,
        #[arg(required = true)]
        graphs: Vec<String>,
        /// Weights for each attached graph in order, e.g. "1,1" (repeatable).
        #[arg(long = "weights")]
        weights: Vec<String>,
    },
    /// Realize a weight profile on a graph built over a path.
    Profile {
        /// Pendant counts c_1,..,c_n.
        #[arg(
            long,
            value_delimiter = ',',
            conflicts_with = "cliques",
            required_unless_present = "cliques"
        )]
        pendants: Option<Vec<usize>>,
        /// Pairs c:r meaning weight c on r vertices.
        #[arg(long, value_delimiter = ',')]
        cliques: Option<Vec<String>>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

enum Failure {
    Domain(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

fn read_graph(path: &str) -> Result<Graph, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?
    };
    Ok(parse_graph(&text)?)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize")
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    json!({ "n": g.n(), "edges": edges })
}

fn construction_json(g: &Graph, w: &WeightFunction) -> String {
    to_json(&json!({ "graph": graph_json(g), "weights": w }))
}

/// Weights supplied on the command line, or found by the decision procedure.
fn weights_for(g: &Graph, given: Option<Vec<u64>>, what: &str) -> Result<WeightFunction, Failure> {
    match given {
        Some(w) => Ok(validate_weights(g, &w)?),
        None => decide_levelable(g)?.weights().cloned().ok_or_else(|| {
            Failure::Domain(Error::InvalidConstruction(format!(
                "{what} is not levelable"
            )))
        }),
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("invalid {what} entry {t:?}")))
        })
        .collect()
}

fn construct(op: ConstructOp) -> Outcome {
    match op {
        ConstructOp::Duplicate {
            file,
            vertex,
            weights,
        } => {
            let g = read_graph(&file)?;
            let w = weights_for(&g, weights, "input graph")?;
            let (h, hw) = duplicate_vertex(&g, vertex, &w)?;
            Ok(construction_json(&h, &hw))
        }
        ConstructOp::Expand {
            file,
            vertex,
            weights,
        } => {
            let g = read_graph(&file)?;
            let w = weights_for(&g, weights, "input graph")?;
            let (h, hw) = expand_vertex(&g, vertex, &w)?;
            Ok(construction_json(&h, &hw))
        }
        ConstructOp::Attach {
            file,
            graphs,
            weights,
        } => {
            let g = read_graph(&file)?;
            if !weights.is_empty() && weights.len() != graphs.len() {
                return Err(Failure::Usage(format!(
                    "{} attached graphs but {} --weights lists",
                    graphs.len(),
                    weights.len()
                )));
            }
            let mut hs = Vec::with_capacity(graphs.len());
            for (i, path) in graphs.iter().enumerate() {
                let h = read_graph(path)?;
                let given = match weights.get(i) {
                    Some(text) => Some(parse_list(text, "weight")?),
                    None => None,
                };
                let w = weights_for(&h, given, &format!("attached graph {path}"))?;
                hs.push((h, w));
            }
            let (h, hw) = attach_graphs(&g, &hs)?;
            Ok(construction_json(&h, &hw))
        }
        ConstructOp::Profile { pendants, cliques } => {
            let profile = match (pendants, cliques) {
                (Some(counts), _) => WeightProfile::Pendants { counts },
                (None, Some(pairs)) => {
                    let pairs = pairs
                        .iter()
                        .map(|p| {
                            let bad = || {
                                Failure::Usage(format!("invalid clique pair {p:?}, expected c:r"))
                            };
                            let (c, r) = p.split_once(':').ok_or_else(bad)?;
                            Ok((
                                c.trim().parse().map_err(|_| bad())?,
                                r.trim().parse().map_err(|_| bad())?,
                            ))
                        })
                        .collect::<Result<Vec<(u64, usize)>, Failure>>()?;
                    WeightProfile::Cliques { pairs }
                }
                (None, None) => return Err(Failure::Usage("give --pendants or --cliques".into())),
            };
            let (h, hw) = realize_weight_profile(&profile)?;
            Ok(construction_json(&h, &hw))
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Decide { file } => Ok(to_json(&decide_levelable(&read_graph(&file)?)?)),
        Command::Mis { file } => {
            let g = read_graph(&file)?;
            let mis = enumerate_max_independent_sets(&g)?;
            Ok(to_json(&json!({
                "n": g.n(),
                "count": mis.len(),
                "independence_number": mis.independence_number(),
                "well_covered": mis.is_well_covered(),
                "sets": mis.sets(),
            })))
        }
        Command::Wcw { file } => {
            let basis = wcw_basis(&read_graph(&file)?)?;
            Ok(to_json(&json!({
                "n": basis.n(),
                "dim": basis.dim,
                "rank": basis.rank,
                "basis": basis.basis,
            })))
        }
        Command::Classify { file, family } => match (file, family) {
            (_, Some(spec)) => {
                let spec: FamilySpec = spec.parse()?;
                Ok(to_json(&classify_family(&spec)?))
            }
            (Some(file), None) => Ok(to_json(&classify(&read_graph(&file)?)?)),
            (None, None) => Err(Failure::Usage("give FILE or --family".into())),
        },
        Command::Construct { op } => construct(op),
        Command::Socle { file, exponents } => {
            let g = read_graph(&file)?;
            let a = ExponentVector::new(exponents)?;
            let socle = socle_vector(&g, &a)?;
            let basis = monomial_basis(&g, &a)?;
            Ok(to_json(&json!({
                "socle": socle.s,
                "e": socle.e,
                "level": socle.is_level(),
                "graded_dims": basis.graded_dims,
            })))
        }
        Command::Gen { spec } => {
            let spec = FamilySpec::from_tokens(&spec)?;
            Ok(generate_family(&spec)?
                .to_edge_list()
                .trim_end()
                .to_string())
        }
        Command::Stats {
            n,
            p,
            trials,
            seed,
            format,
        } => {
            let report = wcw_dim_zero_fraction(n, p, trials, seed)?;
            Ok(match format {
                Format::Csv => report.to_csv().trim_end().to_string(),
                Format::Json => to_json(&report),
            })
        }
    }
}

fn configure_cap() -> Result<(), Failure> {
    match std::env::var(MAX_SETS_VAR) {
        Ok(text) => {
            let cap = text
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&cap| cap > 0)
                .ok_or_else(|| {
                    Failure::Usage(format!(
                        "{MAX_SETS_VAR} must be a positive integer, got {text:?}"
                    ))
                })?;
            set_default_max_sets(cap);
            Ok(())
        }
        Err(_) => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_cap().and_then(|_| run(cli.command)) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            // A closed pipe downstream is not an error worth reporting.
            let _ = writeln!(stdout, "{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Io(message)) => {
            eprintln!("{}", json!({ "error": "io", "message": message }));
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
