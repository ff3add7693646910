//! The `gislat` command line: graph files in, reports out.
//!
//! Exit codes: 0 success, 1 a verification reported FAIL, 2 bad input,
//! 3 a size cap was hit.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::census::{self, DEFAULT_CENSUS_BOUND};
use crate::error::Error;
use crate::generators::minimal_generating_set;
use crate::graph::Digraph;
use crate::io::{lattice_to_dot, lattice_to_json, parse_graph};
use crate::lattice::{ConLattice, Properties, DEFAULT_LATTICE_CAP};
use crate::oracle::{verify_isomorphism, OracleCaps, DEFAULT_SEMIGROUP_CAP};
use crate::predicates;
use crate::triple::{self, WangTriple};

#[derive(Debug, Parser)]
#[command(name = "gislat", version, about = "Congruence lattices of graph inverse semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graph-level predicates: forked vertices, lower-semimodularity,
    /// comparability of co-initial ranges, atomisticity, atoms.
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// Enumerate the congruence lattice of an acyclic graph.
    Lattice {
        #[command(flatten)]
        input: Input,
        /// Write the Hasse diagram as DOT (`-` for stdout).
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Also run the lattice property checks.
        #[arg(long)]
        properties: bool,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        cap: usize,
    },
    /// The minimal generating set of a simple graph's lattice.
    Generators {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        cap: usize,
    },
    /// Check the triple calculus against brute-force congruences of G(E).
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Largest semigroup to build.
        #[arg(long, default_value_t = DEFAULT_SEMIGROUP_CAP)]
        oracle_cap: usize,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        cap: usize,
        /// Seed for sampled associativity checks on large tables.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Classify connected simple graphs up to isomorphism by
    /// lower-semimodularity.
    Census {
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = DEFAULT_CENSUS_BOUND)]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file (`-` for stdin).
    pub path: PathBuf,
    #[arg(long)]
    pub json: bool,
}

enum Failure {
    Input(String),
    Cap(String),
    // stdout closed early, e.g. piped into `head`
    BrokenPipe,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::BrokenPipe
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    match run(cli.command, &mut stdout) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::BrokenPipe) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

/// Runs one subcommand; `Ok(false)` means a check reported FAIL.
fn run(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { input } => check(&read_graph(&input)?, input.json, out),
        Command::Lattice {
            input,
            dot,
            properties,
            cap,
        } => lattice(&read_graph(&input)?, input.json, dot, properties, cap, out),
        Command::Generators { input, cap } => generators(&read_graph(&input)?, input.json, cap, out),
        Command::Oracle {
            input,
            oracle_cap,
            cap,
            seed,
        } => {
            let caps = OracleCaps {
                semigroup: oracle_cap,
                lattice: cap,
                seed,
                ..OracleCaps::default()
            };
            oracle(&read_graph(&input)?, input.json, caps, out)
        }
        Command::Census {
            max_vertices,
            bound,
            json,
        } => census(max_vertices, bound, json, out),
    }
}

fn read_graph(input: &Input) -> std::result::Result<Digraph, Failure> {
    let text = if input.path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&input.path).map_err(|e| Failure::Input(format!("{}: {e}", input.path.display())))?
    };
    Ok(parse_graph(&text)?)
}

fn names(g: &Digraph, s: crate::VertexSet) -> Vec<&str> {
    s.iter().map(|v| g.name(v)).collect()
}

fn triple_json(g: &Digraph, t: &WangTriple) -> Value {
    json!({ "H": names(g, t.h()), "W": names(g, t.w()), "display": t.display(g).to_string() })
}

fn check(g: &Digraph, as_json: bool, out: &mut dyn Write) -> Outcome {
    let forked = g.forked_vertices();
    let lower = predicates::is_lower_semimodular(g);
    let cond_iv = predicates::condition_iv(g);
    let atomistic = predicates::is_atomistic(g);
    let atoms = triple::atoms(g);
    if as_json {
        let doc = json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "acyclic": g.is_acyclic(),
            "simple": g.is_simple(),
            "forked": names(g, forked),
            "lower_semimodular": lower,
            "condition_iv": match &cond_iv {
                Ok(b) => json!(b),
                Err(e) => json!({ "error": e.to_string() }),
            },
            "atomistic_predicate": atomistic,
            "atoms": atoms.iter().map(|t| triple_json(g, t)).collect::<Vec<_>>(),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())?;
    } else {
        writeln!(out, "vertices: {}, edges: {}", g.vertex_count(), g.edge_count())?;
        writeln!(out, "forked vertices: {}", g.fmt_set(forked))?;
        writeln!(out, "lower-semimodular: {lower}")?;
        match &cond_iv {
            Ok(b) => writeln!(out, "co-initial ranges comparable: {b}")?,
            Err(e) => writeln!(out, "co-initial ranges comparable: n/a ({e})")?,
        }
        writeln!(out, "atomistic: {atomistic}")?;
        writeln!(out, "atoms ({}):", atoms.len())?;
        for t in &atoms {
            writeln!(out, "  {}", t.display(g))?;
        }
    }
    Ok(true)
}

fn enumerate(g: &Digraph, cap: usize) -> std::result::Result<ConLattice, Failure> {
    ConLattice::enumerate(g, cap).map_err(|e| match e {
        Error::Cyclic => Failure::Input(
            "graph contains a cycle, so the lattice is infinite; `gislat check` still evaluates the graph-level predicates"
                .into(),
        ),
        e => e.into(),
    })
}

fn lattice(
    g: &Digraph,
    as_json: bool,
    dot: Option<PathBuf>,
    with_properties: bool,
    cap: usize,
    out: &mut dyn Write,
) -> Outcome {
    let l = enumerate(g, cap)?;
    let props = with_properties.then(|| Properties::of(l.lattice()));
    if let Some(path) = dot {
        let text = lattice_to_dot(&l);
        if path.as_os_str() == "-" {
            out.write_all(text.as_bytes())?;
        } else {
            fs::write(&path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        }
    }
    if as_json {
        writeln!(out, "{}", lattice_to_json(&l, props))?;
        return Ok(true);
    }
    let fl = l.lattice();
    writeln!(out, "elements: {}", l.len())?;
    for (i, t) in l.elements().iter().enumerate() {
        writeln!(out, "  {i:>4}  {}", t.display(g))?;
    }
    let covers: Vec<String> = fl.cover_pairs().iter().map(|(a, b)| format!("{a}<{b}")).collect();
    writeln!(out, "covers ({}): {}", covers.len(), covers.join(" "))?;
    writeln!(out, "bottom: {}, top: {}", fl.bottom(), fl.top())?;
    if let Some(p) = props {
        writeln!(out, "upper-semimodular: {}", p.upper_semimodular)?;
        writeln!(out, "lower-semimodular: {}", p.lower_semimodular)?;
        writeln!(out, "modular: {}", p.modular)?;
        writeln!(out, "distributive: {}", p.distributive)?;
        writeln!(out, "atomistic: {}", p.atomistic)?;
    }
    Ok(true)
}

fn generators(g: &Digraph, as_json: bool, cap: usize, out: &mut dyn Write) -> Outcome {
    let gens = minimal_generating_set(g).map_err(|e| match e {
        Error::NotSimple => Failure::Input(
            "graph is not simple (it has a cycle or parallel edges); the generator characterisation only holds for simple graphs"
                .into(),
        ),
        e => e.into(),
    })?;
    let l = enumerate(g, cap)?;
    let closure = l.generated_sublattice(&gens)?;
    let pass = closure.len() == l.len();
    if as_json {
        let doc = json!({
            "count": gens.len(),
            "generators": gens.iter().map(|t| triple_json(g, t)).collect::<Vec<_>>(),
            "closure_size": closure.len(),
            "lattice_size": l.len(),
            "pass": pass,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())?;
    } else {
        writeln!(out, "generators ({}):", gens.len())?;
        for t in &gens {
            writeln!(out, "  {}", t.display(g))?;
        }
        writeln!(out, "join closure: {} of {} elements", closure.len(), l.len())?;
        writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
    }
    Ok(pass)
}

fn oracle(g: &Digraph, as_json: bool, caps: OracleCaps, out: &mut dyn Write) -> Outcome {
    if !g.is_acyclic() {
        return Err(Failure::Input("graph contains a cycle, so G(E) is infinite".into()));
    }
    let report = verify_isomorphism(g, caps)?;
    if as_json {
        let doc = json!({
            "semigroup_size": report.semigroup_size,
            "congruences": report.congruence_count,
            "triples": report.lattice_size,
            "pass": report.passed(),
            "mismatches": report.mismatches.iter().map(|m| format!("{m:?}")).collect::<Vec<_>>(),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())?;
    } else {
        writeln!(out, "{}", report.display(g))?;
    }
    Ok(report.passed())
}

fn census(max_vertices: usize, bound: usize, as_json: bool, out: &mut dyn Write) -> Outcome {
    if max_vertices > bound {
        return Err(Failure::Cap(format!("--max-vertices {max_vertices} exceeds census bound {bound}")));
    }
    let mut rows = Vec::new();
    let mut agree = true;
    for g in census::connected_simple_graphs(max_vertices) {
        let predicate = predicates::is_lower_semimodular(&g);
        let lattice = ConLattice::enumerate(&g, DEFAULT_LATTICE_CAP)?.lattice().is_lower_semimodular();
        agree &= predicate == lattice;
        rows.push((g, predicate, lattice));
    }
    if as_json {
        let graphs: Vec<Value> = rows
            .iter()
            .map(|(g, p, l)| {
                json!({
                    "vertices": g.vertex_count(),
                    "edges": g.edges(),
                    "lower_semimodular": p,
                    "lattice_lower_semimodular": l,
                })
            })
            .collect();
        let doc = json!({ "max_vertices": max_vertices, "graphs": graphs, "agree": agree });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())?;
    } else {
        for n in 1..=max_vertices {
            let of_size: Vec<_> = rows.iter().filter(|(g, ..)| g.vertex_count() == n).collect();
            let positive = of_size.iter().filter(|(_, p, _)| *p).count();
            writeln!(out, "{n} vertices: {} graphs, {positive} lower-semimodular", of_size.len())?;
            for (g, p, l) in of_size {
                let edges: Vec<String> = g.edges().iter().map(|(s, r)| format!("{s}->{r}")).collect();
                let mark = if p == l { "" } else { "  MISMATCH" };
                writeln!(out, "  [{}] {}{mark}", if *p { "LSM" } else { "   " }, edges.join(" "))?;
            }
        }
        writeln!(out, "{}", if agree { "PASS" } else { "FAIL" })?;
    }
    Ok(agree)
}
