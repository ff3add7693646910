//! Graph-level criteria that decide lattice properties of `L(G(E))`
//! without enumerating it.

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// `L(G(E))` is lower-semimodular exactly when `E` has no forked vertex.
/// Valid for cyclic graphs too.
pub fn is_lower_semimodular(g: &Digraph) -> bool {
    g.forked_vertices().is_empty()
}

/// Ranges of co-initial edges are pairwise comparable. Only meaningful for
/// simple graphs, where it is equivalent to lower-semimodularity,
/// modularity and distributivity.
pub fn condition_iv(g: &Digraph) -> Result<bool> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    Ok(g.vertices().iter().all(|v| {
        let out = g.out_edges(v);
        out.iter().enumerate().all(|(i, &e)| {
            out[i + 1..].iter().all(|&f| {
                let (re, rf) = (g.range(e), g.range(f));
                g.geq(re, rf) || g.geq(rf, re)
            })
        })
    }))
}

/// Which clause of the per-vertex atomistic criterion `v` satisfies, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomisticClause {
    /// `v` is a sink.
    Sink,
    /// One out-edge, not on a cycle, and strictly above a vertex whose
    /// out-degree is not 1.
    Tail,
    /// At least two out-edges, each leading back to `v`.
    Returning,
}

pub fn atomistic_clause(g: &Digraph, v: usize) -> Option<AtomisticClause> {
    match g.out_degree(v) {
        0 => Some(AtomisticClause::Sink),
        1 => {
            let strictly_below = g.down_set(v).iter().any(|u| u != v && !g.geq(u, v) && g.out_degree(u) != 1);
            (!g.on_cycle(v) && strictly_below).then_some(AtomisticClause::Tail)
        }
        _ => g
            .out_edges(v)
            .iter()
            .all(|&e| g.geq(g.range(e), v))
            .then_some(AtomisticClause::Returning),
    }
}

/// `L(G(E))` is atomistic. For a finite graph the finiteness side
/// conditions hold automatically, so this is the per-vertex check.
pub fn is_atomistic(g: &Digraph) -> bool {
    g.vertices().iter().all(|v| atomistic_clause(g, v).is_some())
}
