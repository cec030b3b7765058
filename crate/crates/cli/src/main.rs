use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zz_core::aut::{aut_structure, AutOptions};
use zz_core::fibgraph::{build_graph, cycle_rank, FibrationGraph};
use zz_core::moduli::pairs_isomorphic;
use zz_core::pair::{dual_graph, emit_equations, section_augmented_graph, surface_report};
use zz_core::rational::{fmt_rational, parse_rational};
use zz_core::words::{apply_reversion, certify_free_family, reduce_word_with, word_length, BirWord, Strategy};
use zz_core::zigzag::{reversion_trace, ZigzagType};
use zz_core::{Error, PairClass, Rational};

#[derive(Parser)]
#[command(name = "zz", version, about = "Polynomial pairs, reversions and fibration graphs")]
struct Cli {
    /// Worker threads for parallel steps (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Case I/II/III of a pair, with its surface report in JSON.
    Classify {
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dual graph of the boundary and degenerate fiber.
    GraphDual {
        #[arg(long)]
        pair: String,
        /// Section-augmented graph for the reversion at this center.
        #[arg(long)]
        center: Option<String>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Explore reversions from a seed pair, or re-export a saved graph.
    GraphFibrations {
        #[arg(long, required_unless_present = "graph")]
        pair: Option<String>,
        #[arg(long, default_value = "0")]
        centers: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, conflicts_with = "pair")]
        graph: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Isomorphism witness between two pairs.
    Iso {
        /// Given twice.
        #[arg(long, required = true)]
        pair: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Target class of a reversion.
    Revert {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        center: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Reduce a word.
    Reduce {
        #[arg(long)]
        word: String,
        /// leftmost, rightmost or seed:N
        #[arg(long, default_value = "leftmost")]
        strategy: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Automorphism group structure report.
    Aut {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 2)]
        syllables: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Free-family certificate for the ζ words.
    CertifyFree {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 3)]
        syllables: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The three equations of the surface in A^4.
    Equations {
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Intermediate zigzag types of a reversion.
    TraceType {
        /// Comma-separated self-intersections, e.g. 0,-1,-2,-3
        #[arg(long = "type", allow_hyphen_values = true)]
        zigzag: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownFormat(_) => Failure::Usage(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

type Out = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Inline JSON, `-` for stdin, or a file path.
fn load(arg: &str) -> Result<String, Failure> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(e.to_string()))?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")))
}

fn parse_pair(arg: &str) -> Result<PairClass, Failure> {
    let s = load(arg)?;
    let v: serde_json::Value = serde_json::from_str(&s).map_err(|e| usage(format!("malformed pair JSON: {e}")))?;
    // Shape errors are usage errors; degree errors are domain errors.
    match serde_json::from_value::<PairClass>(v) {
        Ok(c) => Ok(c),
        Err(e) if e.to_string().contains("degree too small") => {
            Err(Failure::Domain(Error::Precondition(e.to_string())))
        }
        Err(e) => Err(usage(format!("malformed pair JSON: {e}"))),
    }
}

fn parse_rat(s: &str) -> Result<Rational, Failure> {
    parse_rational(s.trim()).map_err(|e| usage(e.to_string()))
}

fn parse_list(s: &str) -> Result<Vec<Rational>, Failure> {
    s.split(',').filter(|x| !x.trim().is_empty()).map(parse_rat).collect()
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn only(format: Format, allowed: &[Format], cmd: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(usage(format!("{cmd} does not support this --format")))
    }
}

fn run(cmd: Cmd) -> Out {
    use Format::*;
    match cmd {
        Cmd::Classify { pair, format } => {
            only(format, &[Json, Text], "classify")?;
            let c = parse_pair(&pair)?;
            Ok(match format {
                Text => format!("{}\n", c.case()),
                _ => json(&serde_json::json!({
                    "pair": c,
                    "case": c.case(),
                    "surface": surface_report(&c.p, &c.q)?,
                })),
            })
        }
        Cmd::GraphDual { pair, center, format } => {
            let c = parse_pair(&pair)?;
            let g = match center {
                Some(l) => section_augmented_graph(&c.p, &c.q, &parse_rat(&l)?)?,
                None => dual_graph(&c.p, &c.q)?,
            };
            Ok(match format {
                Dot => g.to_dot(),
                Json => json(&g),
                Text => {
                    let mut s = String::new();
                    for n in &g.nodes {
                        let nb: Vec<String> = g.neighbors(n.id).iter().map(|&i| g.nodes[i].name.clone()).collect();
                        s.push_str(&format!("{} -- {}\n", n.label(), nb.join(" ")));
                    }
                    s
                }
            })
        }
        Cmd::GraphFibrations { pair, centers, depth, graph, format } => {
            let g = match (pair, graph) {
                (_, Some(gr)) => FibrationGraph::from_json(&load(&gr)?)?,
                (Some(p), None) => {
                    let centers = parse_list(&centers)?;
                    if centers.is_empty() {
                        return Err(usage("--centers must not be empty"));
                    }
                    build_graph(&parse_pair(&p)?, &centers, depth)
                }
                (None, None) => return Err(usage("--pair or --graph is required")),
            };
            Ok(match format {
                Dot => g.to_dot(),
                Json => {
                    let mut s = g.to_json();
                    s.push('\n');
                    s
                }
                Text => format!(
                    "vertices: {}\nedges: {}\nfrontier: {}\ncycle rank: {}\n",
                    g.vertices.len(),
                    g.undirected_edges().len(),
                    g.frontier.len(),
                    cycle_rank(&g)
                ),
            })
        }
        Cmd::Iso { pair, format } => {
            only(format, &[Json, Text], "iso")?;
            if pair.len() != 2 {
                return Err(usage("iso takes --pair exactly twice"));
            }
            let (c1, c2) = (parse_pair(&pair[0])?, parse_pair(&pair[1])?);
            let w = pairs_isomorphic(&c1, &c2);
            Ok(match format {
                Text => match &w {
                    Some(w) => format!("isomorphic\n{}", json(w)),
                    None => "not isomorphic\n".into(),
                },
                _ => json(&serde_json::json!({ "isomorphic": w.is_some(), "witness": w })),
            })
        }
        Cmd::Revert { pair, center, format } => {
            only(format, &[Json, Text], "revert")?;
            let c = parse_pair(&pair)?;
            let t = apply_reversion(&c, &parse_rat(&center)?);
            Ok(match format {
                Text => format!("{t}\n"),
                _ => format!("{}\n", t.to_json()),
            })
        }
        Cmd::Reduce { word, strategy, format } => {
            only(format, &[Json, Text], "reduce")?;
            let strategy = match strategy.as_str() {
                "leftmost" => Strategy::Leftmost,
                "rightmost" => Strategy::Rightmost,
                s => match s.strip_prefix("seed:").and_then(|n| n.parse().ok()) {
                    Some(n) => Strategy::Seeded(n),
                    None => return Err(usage(format!("unknown strategy {s:?}"))),
                },
            };
            let w = BirWord::from_json(&load(&word)?)?;
            let r = reduce_word_with(&w, strategy)?;
            Ok(match format {
                Text => format!("length {} -> {}\n", word_length(&w), word_length(&r)),
                _ => format!("{}\n", r.to_json()),
            })
        }
        Cmd::Aut { pair, family, syllables, format } => {
            only(format, &[Json, Text], "aut")?;
            let c = parse_pair(&pair)?;
            let mut opts = AutOptions { max_syllables: syllables, ..AutOptions::default() };
            if let Some(f) = family {
                opts.family = parse_list(&f)?;
            }
            let r = aut_structure(&c, &opts)?;
            Ok(match format {
                Text => r.to_text(),
                _ => format!("{}\n", r.to_json()),
            })
        }
        Cmd::CertifyFree { pair, family, syllables, format } => {
            only(format, &[Json, Text], "certify-free")?;
            let c = parse_pair(&pair)?;
            let cert = certify_free_family(&c, &parse_list(&family)?, syllables)?;
            Ok(match format {
                Text => {
                    let fam: Vec<String> = cert.family.iter().map(fmt_rational).collect();
                    format!(
                        "certified {{{}}}: {} checks, {} words, min length {}\n",
                        fam.join(","),
                        cert.checks.len(),
                        cert.words_checked,
                        cert.min_length
                    )
                }
                _ => json(&cert),
            })
        }
        Cmd::Equations { pair, format } => {
            only(format, &[Json, Text], "equations")?;
            let c = parse_pair(&pair)?;
            let e = emit_equations(&c.p, &c.q);
            Ok(match format {
                Text => e.to_text(),
                _ => json(&e),
            })
        }
        Cmd::TraceType { zigzag, format } => {
            only(format, &[Json, Text], "trace-type")?;
            let seq = zigzag
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| usage(format!("bad zigzag type: {e}")))?;
            let t = reversion_trace(&ZigzagType::new(seq))?;
            Ok(match format {
                Text => {
                    let mut s = String::new();
                    for step in &t.steps {
                        s.push_str(&format!("{} {:?}\n", step.label, step.resulting.seq));
                    }
                    s.push_str(&format!("final {:?}\n", t.final_type.seq));
                    s
                }
                _ => json(&t),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("zz: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.cmd) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("zz: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("zz: {e}");
            ExitCode::from(1)
        }
    }
}
