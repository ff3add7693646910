//! Generating sets of `L(G(E))`.
//!
//! For a finite simple graph, a family generates the lattice (under join)
//! exactly when it contains every congruence of the two types below; so
//! these congruences form the unique minimal generating set:
//!
//! - `({v}, ∅, ∅)` for each sink `v`;
//! - `(H, {v}, ∅)` for each non-sink `v` and each containment-minimal
//!   hereditary `H` leaving `v` exactly one out-edge.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::triple::WangTriple;
use crate::vertex_set::VertexSet;

/// The minimal generating set of a simple graph's congruence lattice.
///
/// A qualifying `H` must swallow the down-set of every out-neighbour of
/// `v` but one, so the closures of "all other ranges" are the only minimal
/// candidates.
pub fn minimal_generating_set(g: &Digraph) -> Result<Vec<WangTriple>> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let mut out = sinks(g)?;
    for v in g.vertices().iter().filter(|&v| !g.is_sink(v)) {
        let mut candidates: Vec<VertexSet> = Vec::new();
        for &e in g.out_edges(v) {
            let others: VertexSet = g
                .out_edges(v)
                .iter()
                .filter(|&&f| f != e)
                .map(|&f| g.range(f))
                .collect();
            let h = g.hereditary_closure(others);
            if !h.contains(g.range(e)) && !candidates.contains(&h) {
                candidates.push(h);
            }
        }
        for h in minimal(&candidates) {
            out.push(WangTriple::trivial(g, h, VertexSet::singleton(v))?);
        }
    }
    Ok(out)
}

/// Every congruence of the two generator types, found by scanning all
/// hereditary sets. Works for graphs with parallel edges, where the
/// family need not generate the lattice.
pub fn generator_candidates(g: &Digraph, cap: usize) -> Result<Vec<WangTriple>> {
    let hereditary = g.hereditary_sets(cap)?;
    let mut out = sinks(g)?;
    for v in g.vertices().iter().filter(|&v| !g.is_sink(v)) {
        let qualifying: Vec<VertexSet> = hereditary
            .iter()
            .copied()
            .filter(|h| !h.contains(v) && g.surviving_edges(v, *h).count() == 1)
            .collect();
        for h in minimal(&qualifying) {
            out.push(WangTriple::trivial(g, h, VertexSet::singleton(v))?);
        }
    }
    Ok(out)
}

fn sinks(g: &Digraph) -> Result<Vec<WangTriple>> {
    g.vertices()
        .iter()
        .filter(|&v| g.is_sink(v))
        .map(|v| WangTriple::trivial(g, VertexSet::singleton(v), VertexSet::EMPTY))
        .collect()
}

// containment-minimal members, in input order
fn minimal(sets: &[VertexSet]) -> Vec<VertexSet> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && t.is_subset(s)))
        .collect()
}
