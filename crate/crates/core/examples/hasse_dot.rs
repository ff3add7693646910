//! Writes the Hasse diagram of a graph's congruence lattice as DOT.
//!
//!     cargo run --example hasse_dot -- crates/core/examples/graphs/path.graph | dot -Tsvg > path.svg

use gislat::io::{lattice_to_dot, parse_graph};
use gislat::lattice::{ConLattice, DEFAULT_LATTICE_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => include_str!("graphs/fork.graph").to_owned(),
    };
    let g = parse_graph(&text)?;
    print!("{}", lattice_to_dot(&ConLattice::enumerate(&g, DEFAULT_LATTICE_CAP)?));
    Ok(())
}
