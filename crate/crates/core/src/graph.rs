//! Finite directed multigraphs and the vertex-set machinery the congruence
//! calculus is phrased in: the reachability preorder, hereditary sets,
//! strongly connected components, cycles and forked vertices.

use std::collections::{HashMap, HashSet};
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Default bound on the number of hereditary sets enumerated at once.
pub const DEFAULT_HEREDITARY_CAP: usize = 1 << 20;

/// A finite directed multigraph. Vertices and edges carry dense ids in
/// insertion order; parallel edges and loops are allowed.
///
/// The graph is immutable once built. Reachability is precomputed, and the
/// cycle list is computed on first use.
#[derive(Debug, Clone)]
pub struct Digraph {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    below: Vec<VertexSet>,
    fingerprint: u64,
    cycles: OnceLock<Vec<Cycle>>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for Digraph {}

impl Digraph {
    /// Builds a graph from vertex names and `(source, range)` name pairs.
    pub fn build<S: AsRef<str>>(names: &[S], edges: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut ids = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if ids.insert(name.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let lookup = |s: &S| {
            ids.get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownVertex(s.as_ref().to_owned()))
        };
        let edges = edges
            .iter()
            .map(|(s, r)| Ok((lookup(s)?, lookup(r)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::with_names(names, edges)
    }

    /// Builds a graph on `n` vertices named `0..n` from index pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_names((0..n).map(|i| i.to_string()).collect(), edges.to_vec())
    }

    pub(crate) fn with_names(names: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = names.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: n,
                max: MAX_VERTICES,
            });
        }
        if let Some(&(s, r)) = edges.iter().find(|&&(s, r)| s >= n || r >= n) {
            return Err(Error::VertexOutOfRange(s.max(r)));
        }
        let mut out = vec![Vec::new(); n];
        for (e, &(s, _)) in edges.iter().enumerate() {
            out[s].push(e);
        }

        let mut below: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for &(s, r) in &edges {
                let merged = below[s] | below[r];
                if merged != below[s] {
                    below[s] = merged;
                    changed = true;
                }
            }
        }

        let mut hasher = DefaultHasher::new();
        n.hash(&mut hasher);
        edges.hash(&mut hasher);
        Ok(Digraph {
            names,
            edges,
            out,
            below,
            fingerprint: hasher.finish(),
            cycles: OnceLock::new(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `(source, range)` for every edge, indexed by edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn source(&self, e: usize) -> usize {
        self.edges[e].0
    }

    pub fn range(&self, e: usize) -> usize {
        self.edges[e].1
    }

    /// Edge ids leaving `v`, in id order.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out[v].is_empty()
    }

    /// `{x : v >= x}`, the principal down-set of `v`.
    pub fn down_set(&self, v: usize) -> VertexSet {
        self.below[v]
    }

    /// Structural hash of the vertex count and edge list. Triples remember
    /// it so that operations can reject mixing graphs.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// The reachability preorder: `u >= v` iff `u == v` or a path leads
    /// from `u` to `v`.
    pub fn geq(&self, u: usize, v: usize) -> bool {
        self.below[u].contains(v)
    }

    pub fn is_hereditary(&self, h: VertexSet) -> bool {
        h.iter().all(|u| self.below[u].is_subset(h))
    }

    /// Least hereditary superset of `s`.
    pub fn hereditary_closure(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, u| acc | self.below[u])
    }

    /// All hereditary sets, sorted by size and then bit pattern.
    pub fn hereditary_sets(&self, cap: usize) -> Result<Vec<VertexSet>> {
        self.hereditary_sets_between(VertexSet::EMPTY, self.vertices(), cap)
    }

    /// Hereditary sets `h'` with `lo ⊆ h' ⊆ hi`, for hereditary `lo` and
    /// `hi`. Sorted by size and then bit pattern.
    ///
    /// Every hereditary set is a union of principal down-sets, so the
    /// search grows each set found by one more down-set at a time.
    pub fn hereditary_sets_between(
        &self,
        lo: VertexSet,
        hi: VertexSet,
        cap: usize,
    ) -> Result<Vec<VertexSet>> {
        if !self.is_hereditary(lo) || !self.is_hereditary(hi) {
            return Err(Error::NotHereditary);
        }
        if !lo.is_subset(hi) {
            return Ok(Vec::new());
        }
        let mut seen = HashSet::from([lo]);
        let mut stack = vec![lo];
        while let Some(s) = stack.pop() {
            for v in hi - s {
                let next = s | self.below[v];
                if seen.insert(next) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded {
                            what: "hereditary set count",
                            cap,
                        });
                    }
                    stack.push(next);
                }
            }
        }
        let mut all: Vec<_> = seen.into_iter().collect();
        all.sort_by_key(|s| (s.len(), s.bits()));
        Ok(all)
    }

    /// Nonempty, and every two members share a lower bound inside `h`.
    pub fn is_downward_directed(&self, h: VertexSet) -> bool {
        !h.is_empty()
            && h.iter().all(|u| {
                h.iter()
                    .all(|v| !(self.below[u] & self.below[v] & h).is_empty())
            })
    }

    /// Partition of the vertices into strongly connected components,
    /// ordered by least member.
    pub fn strongly_connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for u in 0..self.vertex_count() {
            if seen.contains(u) {
                continue;
            }
            let comp: VertexSet = self.below[u]
                .iter()
                .filter(|&v| self.below[v].contains(u))
                .collect();
            seen = seen | comp;
            comps.push(comp);
        }
        comps
    }

    /// `E \ H`: drop the vertices of `h` and every edge touching them.
    /// Remaining vertices and edges are renumbered densely, names kept.
    pub fn minus(&self, h: VertexSet) -> Result<Digraph> {
        if !self.is_hereditary(h) {
            return Err(Error::NotHereditary);
        }
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        let mut names = Vec::new();
        for (v, id) in new_id.iter_mut().enumerate() {
            if !h.contains(v) {
                *id = names.len();
                names.push(self.names[v].clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(s, r)| !h.contains(s) && !h.contains(r))
            .map(|&(s, r)| (new_id[s], new_id[r]))
            .collect();
        Digraph::with_names(names, edges)
    }

    /// `|s⁻¹(v)|` computed in `E \ H`.
    pub fn out_degree_minus(&self, v: usize, h: VertexSet) -> Result<usize> {
        if h.contains(v) {
            return Err(Error::VertexInRemovedSet(v));
        }
        Ok(self.surviving_edges(v, h).count())
    }

    /// Edges from `v` whose range lies outside `h`.
    pub fn surviving_edges(&self, v: usize, h: VertexSet) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().copied().filter(move |&e| !h.contains(self.range(e)))
    }

    /// Every cycle of the graph in canonical rotation, sorted.
    pub fn cycles(&self) -> &[Cycle] {
        self.cycles.get_or_init(|| enumerate_cycles(self))
    }

    /// `C(H)`: cycles all of whose edge sources lie in `h`.
    pub fn cycles_in(&self, h: VertexSet) -> Vec<Cycle> {
        self.cycles()
            .iter()
            .filter(|c| c.vertices.is_subset(h))
            .cloned()
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.edges.iter().all(|&(s, r)| !self.below[r].contains(s))
    }

    /// Whether `v` lies on some cycle.
    pub fn on_cycle(&self, v: usize) -> bool {
        self.out[v]
            .iter()
            .any(|&e| self.below[self.range(e)].contains(v))
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.edges.len());
        !self.edges.iter().all(|e| seen.insert(*e))
    }

    /// Acyclic without parallel edges.
    pub fn is_simple(&self) -> bool {
        self.is_acyclic() && !self.has_parallel_edges()
    }

    /// Connected when edge directions are ignored. The empty graph is not.
    pub fn is_weakly_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut reached = VertexSet::singleton(0);
        loop {
            let before = reached;
            for &(s, r) in &self.edges {
                if reached.contains(s) || reached.contains(r) {
                    reached = reached.with(s).with(r);
                }
            }
            if reached == before {
                return reached.len() == n;
            }
        }
    }

    /// Vertices `v` with two distinct out-edges `e`, `f` such that no other
    /// edge out of `v` has a range reaching `r(e)`, and likewise for `f`.
    pub fn forked_vertices(&self) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&v| {
                let out = &self.out[v];
                let isolated = out
                    .iter()
                    .filter(|&&e| {
                        out.iter()
                            .all(|&g| g == e || !self.geq(self.range(g), self.range(e)))
                    })
                    .count();
                isolated >= 2
            })
            .collect()
    }

    /// Renders a vertex set as `{a,b}` using vertex names.
    pub fn fmt_set(&self, s: VertexSet) -> String {
        let names: Vec<&str> = s.iter().map(|v| self.name(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// A cycle: a closed path whose edge sources are pairwise distinct, stored
/// in its lexicographically least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    edges: Vec<usize>,
    vertices: VertexSet,
}

impl Cycle {
    /// Checks that `edges` form a cycle of `g` and puts it in canonical
    /// rotation.
    pub fn new(g: &Digraph, edges: &[usize]) -> Result<Cycle> {
        if edges.is_empty() {
            return Err(Error::InvalidCycle("empty edge sequence".into()));
        }
        if let Some(&e) = edges.iter().find(|&&e| e >= g.edge_count()) {
            return Err(Error::InvalidCycle(format!("no edge with id {e}")));
        }
        let mut vertices = VertexSet::EMPTY;
        for (i, &e) in edges.iter().enumerate() {
            let next = edges[(i + 1) % edges.len()];
            if g.range(e) != g.source(next) {
                return Err(Error::InvalidCycle(format!(
                    "edge {e} does not end where edge {next} starts"
                )));
            }
            if vertices.contains(g.source(e)) {
                return Err(Error::InvalidCycle("repeated source vertex".into()));
            }
            vertices.insert(g.source(e));
        }
        Ok(Cycle::canonical(edges.to_vec(), vertices))
    }

    // Sources are distinct, so edge ids are too and the least rotation
    // starts at the least edge id.
    fn canonical(mut edges: Vec<usize>, vertices: VertexSet) -> Cycle {
        let start = (0..edges.len()).min_by_key(|&i| edges[i]).unwrap_or(0);
        edges.rotate_left(start);
        Cycle { edges, vertices }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// The edge sources of the cycle.
    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Source of the first edge in canonical rotation.
    pub fn base(&self, g: &Digraph) -> usize {
        g.source(self.edges[0])
    }
}

// Backtracking search rooted at each cycle's least vertex: from root `s`
// only vertices above `s` may be visited, so every cycle is found once.
fn enumerate_cycles(g: &Digraph) -> Vec<Cycle> {
    fn extend(
        g: &Digraph,
        root: usize,
        at: usize,
        path: &mut Vec<usize>,
        visited: &mut VertexSet,
        found: &mut Vec<Cycle>,
    ) {
        for &e in g.out_edges(at) {
            let r = g.range(e);
            if r == root {
                path.push(e);
                found.push(Cycle::canonical(path.clone(), *visited));
                path.pop();
            } else if r > root && !visited.contains(r) {
                path.push(e);
                visited.insert(r);
                extend(g, root, r, path, visited, found);
                visited.remove(r);
                path.pop();
            }
        }
    }

    let mut found = Vec::new();
    for root in 0..g.vertex_count() {
        let mut visited = VertexSet::singleton(root);
        extend(g, root, root, &mut Vec::new(), &mut visited, &mut found);
    }
    found.sort();
    found
}
