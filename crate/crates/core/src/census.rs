//! Small graphs up to isomorphism.
//!
//! Every acyclic graph has a topological order, so listing edge
//! multiplicities on pairs `i < j` reaches every isomorphism class; the
//! classes are then told apart by a brute-force canonical form. Cost grows
//! like `n! · 2^(n(n-1)/2)`, so keep `n` small.

use std::collections::HashSet;

use crate::graph::Digraph;

/// Default largest vertex count accepted by the census command.
pub const DEFAULT_CENSUS_BOUND: usize = 5;

/// A relabelling-invariant form: vertex count plus the lexicographically
/// least row-major multiplicity matrix over all vertex permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub vertices: usize,
    pub matrix: Vec<u8>,
}

pub fn canonical_form(g: &Digraph) -> CanonicalForm {
    let n = g.vertex_count();
    let mut m = vec![0u8; n * n];
    for &(s, r) in g.edges() {
        m[s * n + r] = m[s * n + r].saturating_add(1);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u8>> = None;
    loop {
        let mut image = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                image[perm[i] * n + perm[j]] = m[i * n + j];
            }
        }
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    CanonicalForm {
        vertices: n,
        matrix: best.unwrap_or_default(),
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Acyclic multigraphs with `1..=max_vertices` vertices and at most
/// `max_edges` edges, one per isomorphism class.
pub fn acyclic_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<Digraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs = forward_pairs(n);
        let mut mult = vec![0usize; pairs.len()];
        let mut seen = HashSet::new();
        loop {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mult)
                .flat_map(|(&p, &k)| std::iter::repeat_n(p, k))
                .collect();
            push_new(&mut out, &mut seen, n, &edges);
            // next multiplicity vector with total ≤ max_edges
            let mut k = 0;
            loop {
                if k == mult.len() {
                    break;
                }
                mult[k] += 1;
                if mult.iter().sum::<usize>() <= max_edges {
                    break;
                }
                mult[k] = 0;
                k += 1;
            }
            if k == mult.len() {
                break;
            }
        }
    }
    out
}

/// Simple (acyclic, no parallel edges) graphs with `1..=max_vertices`
/// vertices, one per isomorphism class.
pub fn simple_graphs(max_vertices: usize) -> Vec<Digraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs = forward_pairs(n);
        let mut seen = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| pairs[b])
                .collect();
            push_new(&mut out, &mut seen, n, &edges);
        }
    }
    out
}

pub fn connected_simple_graphs(max_vertices: usize) -> Vec<Digraph> {
    simple_graphs(max_vertices)
        .into_iter()
        .filter(Digraph::is_weakly_connected)
        .collect()
}

/// Acyclic graphs in which every vertex has out-degree at most 1.
pub fn out_forests(max_vertices: usize) -> Vec<Digraph> {
    simple_graphs(max_vertices)
        .into_iter()
        .filter(|g| g.vertices().iter().all(|v| g.out_degree(v) <= 1))
        .collect()
}

fn forward_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn push_new(out: &mut Vec<Digraph>, seen: &mut HashSet<CanonicalForm>, n: usize, edges: &[(usize, usize)]) {
    let g = Digraph::from_edges(n, edges).expect("census graphs are small");
    if seen.insert(canonical_form(&g)) {
        out.push(g);
    }
}
