//! Enumerates the congruence lattice of a -> b, b -> c, b -> d and runs
//! every lattice property check on it.
//!
//!     cargo run --example lattice_of_fork

use gislat::io::parse_graph;
use gislat::lattice::{ConLattice, Properties, DEFAULT_LATTICE_CAP};

fn main() -> gislat::Result<()> {
    let g = parse_graph(include_str!("graphs/fork.graph"))?;
    let l = ConLattice::enumerate(&g, DEFAULT_LATTICE_CAP)?;
    let fl = l.lattice();

    println!("{} congruences", l.len());
    for (i, t) in l.elements().iter().enumerate() {
        let above: Vec<String> = fl
            .cover_pairs()
            .iter()
            .filter(|&&(lo, _)| lo == i)
            .map(|&(_, hi)| hi.to_string())
            .collect();
        println!("  {i:>2}  {:<22} covered by {}", t.display(&g).to_string(), above.join(", "));
    }

    let p = Properties::of(fl);
    println!("upper-semimodular  {}", p.upper_semimodular);
    println!("lower-semimodular  {}", p.lower_semimodular);
    println!("modular            {}", p.modular);
    println!("distributive       {}", p.distributive);
    println!("atomistic          {}", p.atomistic);

    // a witness for the failure of lower-semimodularity
    let n = l.len();
    'search: for a in 0..n {
        for b in a + 1..n {
            let (j, m) = (fl.join(a, b), fl.meet(a, b));
            if fl.is_cover(a, j) && fl.is_cover(b, j) && !(fl.is_cover(m, a) && fl.is_cover(m, b)) {
                println!(
                    "{} and {} are covered by their join {} but do not cover their meet {}",
                    l.elements()[a].display(&g),
                    l.elements()[b].display(&g),
                    l.elements()[j].display(&g),
                    l.elements()[m].display(&g),
                );
                break 'search;
            }
        }
    }
    println!("forked vertices: {}", g.fmt_set(g.forked_vertices()));
    Ok(())
}
