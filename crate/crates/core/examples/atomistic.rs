//! The per-vertex atomistic criterion on a graph with loops, and the
//! power-set shape of lattices of out-forests.
//!
//!     cargo run --example atomistic

use gislat::census::out_forests;
use gislat::io::parse_graph;
use gislat::lattice::{ConLattice, DEFAULT_LATTICE_CAP};
use gislat::predicates::{atomistic_clause, is_atomistic};

fn main() -> gislat::Result<()> {
    let g = parse_graph(include_str!("graphs/atomistic.graph"))?;
    for v in g.vertices() {
        println!("  {:<4} out-degree {}  {:?}", g.name(v), g.out_degree(v), atomistic_clause(&g, v));
    }
    println!("atomistic: {}", is_atomistic(&g));

    // for finite acyclic graphs: out-degree <= 1 everywhere, power set,
    // atomistic, all at once
    for f in out_forests(4) {
        let l = ConLattice::enumerate(&f, DEFAULT_LATTICE_CAP)?;
        assert_eq!(l.len(), 1 << f.vertex_count());
        assert!(l.lattice().is_atomistic() && is_atomistic(&f));
    }
    println!("every out-forest on <= 4 vertices has a power-set lattice");
    Ok(())
}
