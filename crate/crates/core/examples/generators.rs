//! Minimal generating sets, and why parallel edges break them.
//!
//!     cargo run --example generators

use gislat::generators::{generator_candidates, minimal_generating_set};
use gislat::io::parse_graph;
use gislat::lattice::{ConLattice, DEFAULT_LATTICE_CAP};
use gislat::WangTriple;

fn main() -> gislat::Result<()> {
    let g = parse_graph(include_str!("graphs/fork.graph"))?;
    let l = ConLattice::enumerate(&g, DEFAULT_LATTICE_CAP)?;
    let gens = minimal_generating_set(&g)?;
    println!("fork: {} generators", gens.len());
    for t in &gens {
        println!("  {}", t.display(&g));
    }
    println!("join closure: {} of {}", l.generated_sublattice(&gens)?.len(), l.len());
    for i in 0..gens.len() {
        let mut fewer = gens.clone();
        let dropped = fewer.remove(i);
        println!("  without {:<18} {} elements", dropped.display(&g).to_string(), l.generated_sublattice(&fewer)?.len());
    }

    // two parallel edges on each side of m: no vertex ever keeps exactly
    // one out-edge, so only the sinks qualify
    let p = parse_graph(include_str!("graphs/parallel.graph"))?;
    let lp = ConLattice::enumerate(&p, DEFAULT_LATTICE_CAP)?;
    let cands = generator_candidates(&p, DEFAULT_LATTICE_CAP)?;
    let closure = lp.generated_sublattice(&cands)?;
    println!("parallel: {} candidates, closure {} of {}", cands.len(), closure.len(), lp.len());
    println!("  top reached: {}", closure.contains(&WangTriple::top(&p)));
    println!("  minimal_generating_set: {}", minimal_generating_set(&p).unwrap_err());
    Ok(())
}
