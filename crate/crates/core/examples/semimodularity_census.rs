//! Classifies every connected simple graph on up to four vertices: the
//! forked-vertex test against the lattice-level checks.
//!
//!     cargo run --release --example semimodularity_census

use gislat::census::connected_simple_graphs;
use gislat::lattice::{ConLattice, DEFAULT_LATTICE_CAP};
use gislat::predicates;

fn main() -> gislat::Result<()> {
    let mut positive = 0;
    for g in connected_simple_graphs(4) {
        let l = ConLattice::enumerate(&g, DEFAULT_LATTICE_CAP)?;
        let fl = l.lattice();
        let by_graph = predicates::is_lower_semimodular(&g);
        let by_lattice = fl.is_lower_semimodular();
        assert_eq!(by_graph, by_lattice);
        // the finite acyclic equivalences
        assert_eq!(by_lattice, fl.is_modular());
        assert_eq!(by_lattice, fl.is_distributive());
        assert_eq!(by_lattice, predicates::condition_iv(&g)?);

        if g.vertex_count() == 4 && by_graph {
            positive += 1;
            let edges: Vec<String> = g.edges().iter().map(|(s, r)| format!("{s}->{r}")).collect();
            println!("{:>3} congruences  {}", l.len(), edges.join(" "));
        }
    }
    println!("{positive} lower-semimodular graphs on four vertices");
    Ok(())
}
