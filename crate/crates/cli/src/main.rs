use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dompack::format::{
    parse_graph, parse_instance, parse_labelled, parse_order, serialize_graph, serialize_instance,
    serialize_labelled, serialize_order,
};
use dompack::generate::{random_graph, random_interval_graph, random_tree};
use dompack::ordering::{find_strong_elimination, verify, Search};
use dompack::selftest;
use dompack::solve::{solve, BruteForce, SolveOptions};
use dompack::transform::{dualize, eliminate_fixed_labels, flatten_capacities, free_reduction, uniformize_packing};
use dompack::{InstanceU64, OrderKind, ValueMap};

#[derive(Parser)]
#[command(name = "dompack", version, about = "Generalized domination and packing functions on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance exactly (greedy on a strong elimination order, else brute force)
    Solve {
        #[arg(long)]
        instance: PathBuf,
        /// Strong elimination order to use instead of searching for one
        #[arg(long)]
        order: Option<PathBuf>,
        /// Always use the exhaustive oracle
        #[arg(long)]
        oracle: bool,
        /// Largest search space the oracle may enumerate
        #[arg(long, default_value_t = 10_000_000)]
        budget: u128,
    },
    /// Swap domination and packing: k'(v) = u(N[v]) - k(v)
    Dualize {
        #[arg(long)]
        instance: PathBuf,
        /// Normalize before dualizing
        #[arg(long)]
        normalize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply a value-preserving reduction; the value map is written as a header comment
    Transform {
        kind: TransformKind,
        /// Instance file (labelled instance file for `w0`)
        #[arg(long)]
        instance: PathBuf,
        /// Cap level for `free`
        #[arg(long)]
        ell: Option<u64>,
        /// Cap bound for `flatten` (defaults to the largest cap)
        #[arg(long)]
        max_cap: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a vertex order against a graph
    VerifyOrder {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        order: PathBuf,
        #[arg(long, default_value = "strong")]
        kind: OrderKind,
    },
    /// Search for a strong elimination order
    FindOrder {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a seeded random graph
    Gen {
        family: Family,
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Edge probability for `gnp`
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the acceptance checks
    Selftest {
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
        /// Run only these criteria
        #[arg(long, value_delimiter = ',')]
        criterion: Vec<u8>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    /// Fold fixed labels into quotas
    W0,
    /// Replace zero caps by quota-0 pendants
    Free,
    /// Make quotas uniform with pendants
    Uniformize,
    /// Replace capped vertices by cliques
    Flatten,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Tree,
    Interval,
    Gnp,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Domain(#[from] dompack::Error),
    #[error("{0}")]
    Rejected(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Domain(e) => e.kind(),
            CliError::Rejected(_) => "rejected",
        }
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 2,
            CliError::Domain(e) if e.is_input_error() => 2,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

/// `c produced-by dompack <args>`, identical for identical invocations.
fn provenance() -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    format!("c produced-by dompack {}\n", args.join(" "))
}

fn emit(body: &str, output: Option<&Path>) -> Result<()> {
    let text = format!("{}{body}", provenance());
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn valuemap_header(map: &ValueMap) -> String {
    format!("c valuemap {map}\n")
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve { instance, order, oracle, budget } => {
            let inst: InstanceU64 = parse_instance(&read(&instance)?)?;
            let order = match order {
                Some(path) => Some(parse_order(&read(&path)?, OrderKind::StrongElimination)?),
                None => None,
            };
            let options = SolveOptions { force_oracle: oracle, oracle: BruteForce::with_budget(budget) };
            let sol = solve(&inst, order.as_ref(), options)?;
            let mut out = format!("optimum {}\nmethod {}\n", sol.value, sol.method);
            for (v, x) in sol.assignment.values().iter().enumerate() {
                let _ = writeln!(out, "f {} {x}", v + 1);
            }
            emit(&out, None)
        }
        Command::Dualize { instance, normalize, output } => {
            let mut inst: InstanceU64 = parse_instance(&read(&instance)?)?;
            if normalize {
                inst = inst.normalize()?;
            }
            let red = dualize(&inst)?;
            let body = valuemap_header(&red.value_map) + &serialize_instance(&red.output);
            emit(&body, output.as_deref())
        }
        Command::Transform { kind, instance, ell, max_cap, output } => {
            let text = read(&instance)?;
            let body = match kind {
                TransformKind::W0 => {
                    let red = eliminate_fixed_labels(&parse_labelled(&text)?)?;
                    valuemap_header(&red.value_map) + &serialize_labelled(&red.output)
                }
                _ => {
                    let inst: InstanceU64 = parse_instance(&text)?;
                    let red = match kind {
                        TransformKind::Free => {
                            let ell = ell.ok_or_else(|| {
                                dompack::Error::InvalidInput("`free` needs --ell".into())
                            })?;
                            free_reduction(&inst, ell)?
                        }
                        TransformKind::Uniformize => uniformize_packing(&inst)?,
                        _ => {
                            let bound = max_cap.unwrap_or_else(|| inst.u().iter().copied().max().unwrap_or(0));
                            flatten_capacities(&inst, bound)?
                        }
                    };
                    valuemap_header(&red.value_map) + &serialize_instance(&red.output)
                }
            };
            emit(&body, output.as_deref())
        }
        Command::VerifyOrder { graph, order, kind } => {
            let g = parse_graph(&read(&graph)?)?;
            let o = parse_order(&read(&order)?, kind)?;
            match verify(&g, &o)? {
                None => {
                    println!("accept");
                    Ok(())
                }
                Some(violation) => {
                    println!("reject {violation}");
                    Err(CliError::Rejected(format!("order rejected: {violation}")))
                }
            }
        }
        Command::FindOrder { graph, output } => {
            let g = parse_graph(&read(&graph)?)?;
            match find_strong_elimination(&g) {
                Search::Found(o) => emit(&serialize_order(&o), output.as_deref()),
                Search::NotFound { exhaustive: true } => Err(dompack::Error::NoOrder.into()),
                Search::NotFound { exhaustive: false } => Err(CliError::Rejected(
                    "search budget exhausted before an order was found".into(),
                )),
            }
        }
        Command::Gen { family, n, seed, p, output } => {
            let g = match family {
                Family::Tree => random_tree(n, seed)?,
                Family::Interval => random_interval_graph(n, seed)?,
                Family::Gnp => random_graph(n, p, seed)?,
            };
            emit(&serialize_graph(&g), output.as_deref())
        }
        Command::Selftest { seed, criterion } => {
            let wanted = if criterion.is_empty() { selftest::CRITERIA.to_vec() } else { criterion };
            let mut failed = 0;
            for c in wanted {
                let check = selftest::run(c, seed)?;
                println!("{check}");
                failed += usize::from(!check.passed);
            }
            if failed > 0 {
                return Err(CliError::Rejected(format!("{failed} criteria failed")));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dompack: {e}");
            eprintln!("error: {}", e.kind());
            ExitCode::from(e.code())
        }
    }
}
