//! Command-line front end.
//!
//! Exit codes: 0 for an affirmative answer, 1 for a negative mathematical
//! answer (not a CSD, not circulant, ...), 2 for usage or input errors.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::circulant::{build_circulant, ReducedLabelSet};
use crate::csd::{check_mcsd, recover_ordering};
use crate::equivalence::{transform_labels, Multiplier};
use crate::error::Error;
use crate::factorization::decompose;
use crate::graph::{Graph, PortLabeling};
use crate::hamiltonian::hamiltonian_cycle;
use crate::io::{read_graph, read_labeled, write_graph, write_labeled};
use crate::recognition::{isomorphism, oracle_mcsd, recognize_report, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "mcsd",
    version,
    about = "Circulant graphs and their minimal chordal senses of direction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a circulant graph with its minimal chordal labeling.
    Gen {
        /// Reduced label set, e.g. "10: 1,2,5".
        #[arg(long)]
        labels: ReducedLabelSet,
        /// Relabel vertices with a random permutation drawn from this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Write the plain edge list instead of the labeled graph.
        #[arg(long)]
        edges_only: bool,
    },
    /// Check a labeled graph for a chordal (default) or minimal chordal sense of direction.
    Verify {
        #[arg(long, conflicts_with = "mcsd")]
        csd: bool,
        #[arg(long)]
        mcsd: bool,
        /// Labeled-graph file; standard input when omitted or "-".
        file: Option<PathBuf>,
    },
    /// Split a minimally labeled graph into its 2-factors and matching.
    Decompose { file: Option<PathBuf> },
    /// Construct a Hamiltonian cycle of a connected minimally labeled graph.
    Hamilton { file: Option<PathBuf> },
    /// Multiply a reduced label set by a unit of Z_n.
    Transform {
        #[arg(long)]
        labels: ReducedLabelSet,
        #[arg(long)]
        alpha: usize,
    },
    /// Decide whether an edge-list graph is circulant.
    Recognize {
        /// Worker threads for candidate evaluation.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        file: Option<PathBuf>,
    },
    /// Test two edge-list graphs for isomorphism.
    Iso { file1: PathBuf, file2: PathBuf },
    /// Brute-force circulant check for graphs with at most 9 vertices.
    Oracle { file: Option<PathBuf> },
}

enum Outcome {
    Yes(String),
    No(String),
}

struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

#[derive(Serialize)]
struct CirculantReport {
    circulant: bool,
    n: usize,
    k: Option<usize>,
    labels: Option<Vec<usize>>,
    ordering: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    candidates_tested: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    isomorphism_tests: Option<usize>,
}

impl CirculantReport {
    fn new(g: &Graph, witness: Option<&Witness>) -> Self {
        CirculantReport {
            circulant: witness.is_some(),
            n: g.n(),
            k: g.regular_degree(),
            labels: witness.map(|w| w.labels.gammas().to_vec()),
            ordering: witness.map(|w| w.ordering.ranks().to_vec()),
            candidates_tested: None,
            isomorphism_tests: None,
        }
    }

    fn render(&self) -> String {
        let mut s = serde_json::to_string(self).expect("serializable");
        s.push('\n');
        s
    }
}

fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map_err(|e| Failure(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn input_error(path: Option<&Path>, e: Error) -> Failure {
    let name = path.map_or("<stdin>".to_string(), |p| p.display().to_string());
    Failure(format!("{name}: {e}"))
}

fn load_graph(path: Option<&Path>, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    let text = read_input(path, stdin)?;
    read_graph(&text).map_err(|e| input_error(path, e))
}

fn load_labeled(
    path: Option<&Path>,
    stdin: &mut dyn Read,
) -> Result<(Graph, PortLabeling), Failure> {
    let text = read_input(path, stdin)?;
    read_labeled(&text).map_err(|e| input_error(path, e))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn permute_labeled(
    g: &Graph,
    lab: &PortLabeling,
    seed: u64,
) -> Result<(Graph, PortLabeling), Error> {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let pg = g.permuted(&perm)?;
    let plab = PortLabeling::new(g.n(), lab.ports().map(|(u, v, l)| (perm[u], perm[v], l)))?;
    Ok((pg, plab))
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Outcome, Failure> {
    match command {
        Command::Gen {
            labels,
            seed,
            edges_only,
        } => {
            let (mut g, mut lab) = build_circulant(&labels);
            if let Some(seed) = seed {
                (g, lab) = permute_labeled(&g, &lab, seed)?;
            }
            let text = if edges_only {
                write_graph(&g)
            } else {
                write_labeled(&g, &lab)?
            };
            Ok(Outcome::Yes(text))
        }
        Command::Verify { mcsd, file, .. } => {
            let (g, lab) = load_labeled(file.as_deref(), stdin)?;
            if mcsd {
                match check_mcsd(&g, &lab) {
                    Ok(k) => {
                        let labels =
                            ReducedLabelSet::from_full_labels(g.n(), lab.distinct_labels())
                                .map(|ls| ls.to_string())
                                .unwrap_or_default();
                        Ok(Outcome::Yes(format!(
                            "mcsd: yes\ndegree: {k}\nlabels: {labels}\n"
                        )))
                    }
                    Err(Error::NotAnMcsd(reason)) => {
                        Ok(Outcome::No(format!("mcsd: no\nreason: {reason}\n")))
                    }
                    Err(e) => Err(e.into()),
                }
            } else {
                match recover_ordering(&g, &lab) {
                    Ok(ord) => Ok(Outcome::Yes(format!(
                        "csd: yes\nordering: {}\n",
                        join(ord.ranks())
                    ))),
                    Err(Error::NotACsd(reason)) => {
                        Ok(Outcome::No(format!("csd: no\nreason: {reason}\n")))
                    }
                    Err(e) => Err(e.into()),
                }
            }
        }
        Command::Decompose { file } => {
            let (g, lab) = load_labeled(file.as_deref(), stdin)?;
            match decompose(&g, &lab) {
                Ok(d) => Ok(Outcome::Yes(d.to_string())),
                Err(e @ Error::NotAnMcsd(_)) => Ok(Outcome::No(format!("{e}\n"))),
                Err(e) => Err(e.into()),
            }
        }
        Command::Hamilton { file } => {
            let (g, lab) = load_labeled(file.as_deref(), stdin)?;
            match hamiltonian_cycle(&g, &lab) {
                Ok(c) => Ok(Outcome::Yes(c.to_string())),
                Err(e @ (Error::NotAnMcsd(_) | Error::NotConnected)) => {
                    Ok(Outcome::No(format!("{e}\n")))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Transform { labels, alpha } => {
            let m = Multiplier::new(labels.n(), alpha)?;
            Ok(Outcome::Yes(format!("{}\n", transform_labels(&labels, m)?)))
        }
        Command::Recognize { jobs, file } => {
            let g = load_graph(file.as_deref(), stdin)?;
            let r = recognize_report(&g, jobs as usize);
            let mut report = CirculantReport::new(&g, r.witness.as_ref());
            report.candidates_tested = Some(r.candidates_tested);
            report.isomorphism_tests = Some(r.isomorphism_tests);
            let text = report.render();
            Ok(if r.witness.is_some() {
                Outcome::Yes(text)
            } else {
                Outcome::No(text)
            })
        }
        Command::Iso { file1, file2 } => {
            let g = load_graph(Some(&file1), stdin)?;
            let h = load_graph(Some(&file2), stdin)?;
            Ok(match isomorphism(&g, &h) {
                Some(m) => Outcome::Yes(format!("isomorphic: yes\nmapping: {}\n", join(m.map()))),
                None => Outcome::No("isomorphic: no\n".into()),
            })
        }
        Command::Oracle { file } => {
            let g = load_graph(file.as_deref(), stdin)?;
            let w = oracle_mcsd(&g)?;
            let text = CirculantReport::new(&g, w.as_ref()).render();
            Ok(if w.is_some() {
                Outcome::Yes(text)
            } else {
                Outcome::No(text)
            })
        }
    }
}

/// Runs the command line `args` (program name first) against `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(Outcome::Yes(stdout)) => CommandResult {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        },
        Ok(Outcome::No(stdout)) => CommandResult {
            exit_code: 1,
            stdout,
            stderr: String::new(),
        },
        Err(Failure(msg)) => CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}
