//! Wang triples on a single loop, where the cycle function carries all the
//! information: joins take gcds, meets take lcms and covers divide by a
//! prime.
//!
//!     cargo run --example cycle_calculus

use gislat::triple::{self, cover_case};
use gislat::{CycleFunction, Digraph, ExtPos, VertexSet, WangTriple};

fn on_loop(g: &Digraph, value: ExtPos) -> gislat::Result<WangTriple> {
    let f = CycleFunction::from_edges(g, &[(vec![0], value)])?;
    WangTriple::validate(g, VertexSet::EMPTY, VertexSet::singleton(0), f)
}

fn main() -> gislat::Result<()> {
    let g = Digraph::build(&["v"], &[("v", "v")])?;
    let c = g.cycles()[0].clone();
    let (a, b) = (on_loop(&g, ExtPos::new(12)?)?, on_loop(&g, ExtPos::new(18)?)?);
    println!("a = {}", a.display(&g));
    println!("b = {}", b.display(&g));
    println!("a ∨ b: f = {}", triple::join(&g, &a, &b)?.value(&c));
    println!("a ∧ b: f = {}", triple::meet(&g, &a, &b)?.value(&c));

    for (lo, hi) in [(12, 6), (12, 4), (12, 3), (18, 1)] {
        let (t1, t2) = (on_loop(&g, ExtPos::new(lo)?)?, on_loop(&g, ExtPos::new(hi)?)?);
        println!("f = {lo} below f = {hi}: cover = {:?}", cover_case(&g, &t1, &t2)?);
    }
    // the bottom, then W = {v} with f running from ∞ down the divisors to
    // 1, then the top
    let inf = on_loop(&g, ExtPos::Infinity)?;
    let one = on_loop(&g, ExtPos::ONE)?;
    let chain = [WangTriple::bottom(&g), inf, a.clone(), one, WangTriple::top(&g)];
    for pair in chain.windows(2) {
        println!("{} ≤ {}: {}", pair[0].display(&g), pair[1].display(&g), triple::leq(&g, &pair[0], &pair[1])?);
    }
    println!("atoms: {:?}", triple::atoms(&g).iter().map(|t| t.display(&g).to_string()).collect::<Vec<_>>());
    Ok(())
}
