//! Builds G(E) from paths, lists all of its congruences by brute force and
//! checks them against the Wang triples, first for a few named graphs and
//! then for every acyclic multigraph on at most three vertices and four
//! edges.
//!
//!     cargo run --release --example oracle_check

use gislat::census::acyclic_multigraphs;
use gislat::io::parse_graph;
use gislat::oracle::{verify_isomorphism, OracleCaps};

fn main() -> gislat::Result<()> {
    let named = [
        ("fork", include_str!("graphs/fork.graph")),
        ("path", include_str!("graphs/path.graph")),
        ("parallel", include_str!("graphs/parallel.graph")),
    ];
    for (name, text) in named {
        let g = parse_graph(text)?;
        let r = verify_isomorphism(&g, OracleCaps::default())?;
        println!("{name}: |G(E)| = {}, {} congruences, {}", r.semigroup_size, r.congruence_count,
            if r.passed() { "PASS" } else { "FAIL" });
    }

    let sweep = acyclic_multigraphs(3, 4);
    let mut largest = 0;
    for g in &sweep {
        let r = verify_isomorphism(g, OracleCaps::default())?;
        if !r.passed() {
            println!("{}", r.display(g));
            std::process::exit(1);
        }
        largest = largest.max(r.semigroup_size);
    }
    println!("sweep: {} multigraphs, largest semigroup {largest}, all PASS", sweep.len());
    Ok(())
}
