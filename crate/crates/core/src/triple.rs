//! Wang triples `(H, W, f)` and the pointwise lattice calculus on them.
//!
//! A triple names a congruence of the graph inverse semigroup: `H` is a
//! hereditary set collapsed to zero, `W` a set of vertices outside `H` that
//! keep exactly one out-edge in `E \ H`, and `f` assigns to each cycle the
//! least power that collapses onto its base vertex (`∞` if none does).
//!
//! Everything here works for arbitrary finite graphs, with or without
//! cycles; nothing enumerates the (possibly infinite) lattice.

use std::collections::BTreeMap;
use std::fmt;

use crate::element::{GisElement, Path};
use crate::error::{Error, Result};
use crate::extpos::ExtPos;
use crate::graph::{Cycle, Digraph, DEFAULT_HEREDITARY_CAP};
use crate::vertex_set::VertexSet;

/// Explicit values of a cycle function, keyed by canonical cycle.
///
/// Values not listed default to the forced ones: `1` on `C(H)` and `∞`
/// elsewhere. A validated triple keeps only finite values on `C(W)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CycleFunction {
    values: BTreeMap<Cycle, ExtPos>,
}

impl CycleFunction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, cycle: Cycle, value: ExtPos) {
        self.values.insert(cycle, value);
    }

    pub fn with(mut self, cycle: Cycle, value: ExtPos) -> Self {
        self.set(cycle, value);
        self
    }

    /// Builds a function from edge sequences, canonicalising each cycle.
    pub fn from_edges(g: &Digraph, entries: &[(Vec<usize>, ExtPos)]) -> Result<Self> {
        let mut f = Self::new();
        for (edges, value) in entries {
            f.set(Cycle::new(g, edges)?, *value);
        }
        Ok(f)
    }

    pub fn get(&self, c: &Cycle) -> Option<ExtPos> {
        self.values.get(c).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Cycle, ExtPos)> {
        self.values.iter().map(|(c, v)| (c, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A validated Wang triple on a particular graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WangTriple {
    h: VertexSet,
    w: VertexSet,
    f: CycleFunction,
    graph: u64,
}

impl WangTriple {
    /// Checks the triple conditions and normalises `f`.
    pub fn validate(g: &Digraph, h: VertexSet, w: VertexSet, f: CycleFunction) -> Result<Self> {
        let all = g.vertices();
        if let Some(v) = ((h | w) - all).first() {
            return Err(Error::VertexOutOfRange(v));
        }
        if !g.is_hereditary(h) {
            return Err(Error::NotHereditary);
        }
        for v in w {
            if h.contains(v) || g.out_degree_minus(v, h)? != 1 {
                return Err(Error::IneligibleW(v));
            }
        }
        for (c, value) in f.entries() {
            if g.cycles().binary_search(c).is_err() {
                return Err(Error::InvalidCycleFunction(format!(
                    "{:?} is not a cycle of this graph",
                    c.edges()
                )));
            }
            let vs = c.vertices();
            if vs.is_subset(h) && value != ExtPos::ONE {
                return Err(Error::InvalidCycleFunction(format!(
                    "cycle {:?} lies in H and must map to 1",
                    c.edges()
                )));
            }
            if !vs.is_subset(h | w) && !value.is_infinite() {
                return Err(Error::InvalidCycleFunction(format!(
                    "cycle {:?} leaves H ∪ W and must map to ∞",
                    c.edges()
                )));
            }
        }
        Ok(Self::normalized(g, h, w, |c| f.get(c).unwrap_or(ExtPos::Infinity)))
    }

    /// `(H, W, 1_H)`: the cycle function that is `1` on `C(H)` and `∞`
    /// elsewhere.
    pub fn trivial(g: &Digraph, h: VertexSet, w: VertexSet) -> Result<Self> {
        Self::validate(g, h, w, CycleFunction::new())
    }

    /// `(∅, ∅, 1_∅)`, the diagonal congruence.
    pub fn bottom(g: &Digraph) -> Self {
        Self::normalized(g, VertexSet::EMPTY, VertexSet::EMPTY, |_| ExtPos::Infinity)
    }

    /// `(E⁰, ∅, 1)`, the universal congruence.
    pub fn top(g: &Digraph) -> Self {
        Self::normalized(g, g.vertices(), VertexSet::EMPTY, |_| ExtPos::ONE)
    }

    // Keeps the finite values on C(W); everything else is forced.
    fn normalized(
        g: &Digraph,
        h: VertexSet,
        w: VertexSet,
        value_on_w: impl Fn(&Cycle) -> ExtPos,
    ) -> Self {
        let mut f = CycleFunction::new();
        for c in g.cycles().iter().filter(|c| c.vertices().is_subset(w)) {
            let v = value_on_w(c);
            if !v.is_infinite() {
                f.set(c.clone(), v);
            }
        }
        WangTriple {
            h,
            w,
            f,
            graph: g.fingerprint(),
        }
    }

    pub fn h(&self) -> VertexSet {
        self.h
    }

    pub fn w(&self) -> VertexSet {
        self.w
    }

    /// The stored (finite, on `C(W)`) cycle function values.
    pub fn f(&self) -> &CycleFunction {
        &self.f
    }

    /// The full cycle function evaluated at `c`.
    pub fn value(&self, c: &Cycle) -> ExtPos {
        let vs = c.vertices();
        if vs.is_subset(self.h) {
            ExtPos::ONE
        } else if vs.is_subset(self.w) {
            self.f.get(c).unwrap_or(ExtPos::Infinity)
        } else {
            ExtPos::Infinity
        }
    }

    pub fn belongs_to(&self, g: &Digraph) -> bool {
        self.graph == g.fingerprint()
    }

    pub fn display<'a>(&'a self, g: &'a Digraph) -> impl fmt::Display + 'a {
        DisplayTriple(self, g)
    }
}

struct DisplayTriple<'a>(&'a WangTriple, &'a Digraph);

impl fmt::Display for DisplayTriple<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (t, g) = (self.0, self.1);
        write!(out, "({}, {}, ", g.fmt_set(t.h), g.fmt_set(t.w))?;
        if g.is_acyclic() {
            out.write_str("∅)")
        } else if t.f.is_empty() {
            out.write_str("1_H)")
        } else {
            let parts: Vec<String> = t
                .f
                .entries()
                .map(|(c, v)| format!("{:?}↦{v}", c.edges()))
                .collect();
            write!(out, "{{{}}})", parts.join(", "))
        }
    }
}

fn check_graph(g: &Digraph, ts: &[&WangTriple]) -> Result<()> {
    if ts.iter().all(|t| t.belongs_to(g)) {
        Ok(())
    } else {
        Err(Error::GraphMismatch)
    }
}

/// Generators of the congruence named by `t`: `(v, 0)` for `v ∈ H`,
/// `(w, ee⁻¹)` for `w ∈ W` and each edge `e` out of `w` with range outside
/// `H`, and `(c^f(c), s(c))` for each cycle `c ∈ C(W)` with `f(c)` finite.
pub fn generating_pairs(g: &Digraph, t: &WangTriple) -> Result<Vec<(GisElement, GisElement)>> {
    check_graph(g, &[t])?;
    let mut pairs = Vec::new();
    for v in t.h {
        pairs.push((GisElement::vertex(v), GisElement::Zero));
    }
    for w in t.w {
        for e in g.surviving_edges(w, t.h) {
            pairs.push((GisElement::vertex(w), GisElement::edge_idempotent(g, e)));
        }
    }
    for (c, value) in t.f.entries() {
        let ExtPos::Finite(k) = value else { continue };
        let base = c.base(g);
        let power = Path {
            start: base,
            edges: c.edges().repeat(k as usize),
        };
        pairs.push((
            GisElement::PathPair(power, Path::vertex(base)),
            GisElement::vertex(base),
        ));
    }
    Ok(pairs)
}

/// `t1 ≤ t2`: `H₁ ⊆ H₂`, `W₁ \ H₂ ⊆ W₂`, and `f₂(c) | f₁(c)` for every
/// cycle `c`.
pub fn leq(g: &Digraph, t1: &WangTriple, t2: &WangTriple) -> Result<bool> {
    check_graph(g, &[t1, t2])?;
    Ok(leq_unchecked(g, t1, t2))
}

fn leq_unchecked(g: &Digraph, t1: &WangTriple, t2: &WangTriple) -> bool {
    t1.h.is_subset(t2.h)
        && (t1.w - t2.h).is_subset(t2.w)
        && g.cycles().iter().all(|c| t2.value(c).divides(t1.value(c)))
}

/// `V₀`: vertices of `(W₁ ∪ W₂) \ (H₁ ∪ H₂)` with no out-edge in
/// `E \ (H₁ ∪ H₂)`.
pub fn v0(g: &Digraph, t1: &WangTriple, t2: &WangTriple) -> VertexSet {
    let hu = t1.h | t2.h;
    ((t1.w | t2.w) - hu)
        .iter()
        .filter(|&v| g.surviving_edges(v, hu).next().is_none())
        .collect()
}

/// `J`: vertices of `(W₁ ∪ W₂) \ (H₁ ∪ H₂)` that reach `V₀` along a path
/// whose later edges all start in `W₁ ∪ W₂`. Includes `V₀` itself.
pub fn join_set(g: &Digraph, t1: &WangTriple, t2: &WangTriple) -> VertexSet {
    let wu = t1.w | t2.w;
    let candidates = wu - (t1.h | t2.h);
    let mut reach = v0(g, t1, t2);
    loop {
        let grown: VertexSet = wu
            .iter()
            .filter(|&v| g.out_edges(v).iter().any(|&e| reach.contains(g.range(e))))
            .collect::<VertexSet>()
            | reach;
        if grown == reach {
            break;
        }
        reach = grown;
    }
    reach & candidates
}

/// Least upper bound:
/// `(H₁ ∪ H₂ ∪ J, (W₁ ∪ W₂) \ (H₁ ∪ H₂ ∪ J), gcd(f₁, f₂))`.
pub fn join(g: &Digraph, t1: &WangTriple, t2: &WangTriple) -> Result<WangTriple> {
    check_graph(g, &[t1, t2])?;
    let h = t1.h | t2.h | join_set(g, t1, t2);
    let w = (t1.w | t2.w) - h;
    Ok(WangTriple::normalized(g, h, w, |c| {
        t1.value(c).gcd(t2.value(c))
    }))
}

/// Greatest lower bound:
/// `(H₁ ∩ H₂, (W₁ ∩ H₂) ∪ (W₂ ∩ H₁) ∪ ((W₁ ∩ W₂) \ V₀), lcm(f₁, f₂))`.
pub fn meet(g: &Digraph, t1: &WangTriple, t2: &WangTriple) -> Result<WangTriple> {
    check_graph(g, &[t1, t2])?;
    let excluded = v0(g, t1, t2);
    Ok(meet_with(g, t1, t2, excluded))
}

/// The meet on a graph without forked vertices, where `V₀ ∩ W₁ ∩ W₂` is
/// always empty and `V₀` need not be computed.
pub fn meet_no_fork(g: &Digraph, t1: &WangTriple, t2: &WangTriple) -> Result<WangTriple> {
    check_graph(g, &[t1, t2])?;
    if !g.forked_vertices().is_empty() {
        return Err(Error::Forked);
    }
    Ok(meet_with(g, t1, t2, VertexSet::EMPTY))
}

fn meet_with(g: &Digraph, t1: &WangTriple, t2: &WangTriple, excluded: VertexSet) -> WangTriple {
    let h = t1.h & t2.h;
    let w = (t1.w & t2.h) | (t2.w & t1.h) | ((t1.w & t2.w) - excluded);
    WangTriple::normalized(g, h, w, |c| t1.value(c).lcm(t2.value(c)))
}

/// Which clause of the cover characterisation applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverCase {
    /// Same `H` and `W`; `f` drops by a prime factor on exactly one cycle.
    CycleValue,
    /// Same `H` and `f`; `W` gains exactly one vertex.
    AddedVertex,
    /// `H` grows with no hereditary set strictly in between surviving.
    HereditaryStep,
}

/// Decides whether `t2` covers `t1`, given `t1 < t2`, and reports which
/// case of the characterisation holds.
pub fn cover_case(g: &Digraph, t1: &WangTriple, t2: &WangTriple) -> Result<Option<CoverCase>> {
    check_graph(g, &[t1, t2])?;
    if t1 == t2 || !leq_unchecked(g, t1, t2) {
        return Err(Error::NotComparable);
    }
    let cycles = g.cycles();
    let (h1, w1, h2, w2) = (t1.h, t1.w, t2.h, t2.w);

    if h1 == h2 {
        if w1 == w2 {
            let mut differing = cycles
                .iter()
                .filter(|c| c.vertices().is_subset(w1) && t1.value(c) != t2.value(c));
            let hit = match (differing.next(), differing.next()) {
                (Some(c), None) => t1.value(c).quotient_is_prime(t2.value(c)),
                _ => false,
            };
            return Ok(hit.then_some(CoverCase::CycleValue));
        }
        let same_f = cycles.iter().all(|c| t1.value(c) == t2.value(c));
        let hit = (w2 - w1).len() == 1 && same_f;
        return Ok(hit.then_some(CoverCase::AddedVertex));
    }

    // h1 ⊊ h2 from here on.
    if w1 - h2 != w2 {
        return Ok(None);
    }
    let expected: VertexSet = (h2 - h1)
        .iter()
        .filter(|&v| g.surviving_edges(v, h1).count() == 1)
        .collect();
    if w1 & h2 != expected {
        return Ok(None);
    }
    let same_on_w1 = cycles
        .iter()
        .filter(|c| c.vertices().is_subset(w1))
        .all(|c| t1.value(c) == t2.value(c));
    if !same_on_w1 {
        return Ok(None);
    }
    for mid in g.hereditary_sets_between(h1, h2, DEFAULT_HEREDITARY_CAP)? {
        if mid == h1 || mid == h2 {
            continue;
        }
        let blocked = (w1 - mid)
            .iter()
            .any(|v| g.surviving_edges(v, mid).next().is_none());
        if !blocked {
            return Ok(None);
        }
    }
    Ok(Some(CoverCase::HereditaryStep))
}

/// `t1 ≺ t2`. Requires `t1 < t2`.
pub fn covers(g: &Digraph, t1: &WangTriple, t2: &WangTriple) -> Result<bool> {
    Ok(cover_case(g, t1, t2)?.is_some())
}

/// For a cover of case (iii), whether `H₂ \ H₁` is downward directed.
/// This always holds; the function exists so that it can be checked.
pub fn downward_directed_check(g: &Digraph, t1: &WangTriple, t2: &WangTriple) -> Result<bool> {
    match cover_case(g, t1, t2)? {
        Some(CoverCase::HereditaryStep) => Ok(g.is_downward_directed(t2.h - t1.h)),
        _ => Err(Error::NotCaseIII),
    }
}

/// The atoms of the congruence lattice: `(∅, {v}, 1_∅)` for each vertex
/// of out-degree one, then `(H, ∅, 1_H)` for each hereditary strongly
/// connected component whose non-sink vertices all have out-degree at
/// least two.
pub fn atoms(g: &Digraph) -> Vec<WangTriple> {
    let mut out: Vec<WangTriple> = (0..g.vertex_count())
        .filter(|&v| g.out_degree(v) == 1)
        .map(|v| WangTriple::normalized(g, VertexSet::EMPTY, VertexSet::singleton(v), |_| ExtPos::Infinity))
        .collect();
    for comp in g.strongly_connected_components() {
        let branching = comp
            .iter()
            .all(|v| g.is_sink(v) || g.out_degree(v) >= 2);
        if g.is_hereditary(comp) && branching {
            out.push(WangTriple::normalized(g, comp, VertexSet::EMPTY, |_| ExtPos::ONE));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtPos::{Finite, Infinity};

    fn fork() -> Digraph {
        Digraph::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("b", "d")]).unwrap()
    }

    fn loop_graph() -> Digraph {
        Digraph::from_edges(1, &[(0, 0)]).unwrap()
    }

    fn looped(g: &Digraph, value: ExtPos) -> WangTriple {
        let c = g.cycles()[0].clone();
        WangTriple::validate(g, VertexSet::EMPTY, VertexSet::full(1), CycleFunction::new().with(c, value))
            .unwrap()
    }

    fn tr(g: &Digraph, h: &[&str], w: &[&str]) -> WangTriple {
        let s = |xs: &[&str]| xs.iter().map(|n| g.vertex_id(n).unwrap()).collect();
        WangTriple::trivial(g, s(h), s(w)).unwrap()
    }

    #[test]
    fn validate_examples() {
        let g = fork();
        let b = VertexSet::singleton(1);
        assert!(WangTriple::trivial(&g, VertexSet::singleton(2), b).is_ok());
        assert_eq!(
            WangTriple::trivial(&g, VertexSet::EMPTY, b),
            Err(Error::IneligibleW(1))
        );
        assert_eq!(
            WangTriple::trivial(&g, b, VertexSet::EMPTY),
            Err(Error::NotHereditary)
        );
        let l = loop_graph();
        assert_eq!(looped(&l, Finite(6)).f().entries().count(), 1);
    }

    #[test]
    fn validate_rejects_bad_cycle_values() {
        let l = loop_graph();
        let c = l.cycles()[0].clone();
        let f = CycleFunction::new().with(c.clone(), Finite(3));
        assert!(matches!(
            WangTriple::validate(&l, VertexSet::full(1), VertexSet::EMPTY, f.clone()),
            Err(Error::InvalidCycleFunction(_))
        ));
        assert!(matches!(
            WangTriple::validate(&l, VertexSet::EMPTY, VertexSet::EMPTY, f),
            Err(Error::InvalidCycleFunction(_))
        ));
        // forced values are accepted and dropped
        let t = WangTriple::validate(
            &l,
            VertexSet::full(1),
            VertexSet::EMPTY,
            CycleFunction::new().with(c, Finite(1)),
        )
        .unwrap();
        assert_eq!(t, WangTriple::top(&l));
    }

    #[test]
    fn generating_pairs_examples() {
        let g = fork();
        let t = tr(&g, &["c"], &["b"]);
        let pairs = generating_pairs(&g, &t).unwrap();
        assert_eq!(
            pairs,
            vec![
                (GisElement::vertex(2), GisElement::Zero),
                (GisElement::vertex(1), GisElement::edge_idempotent(&g, 2)),
            ]
        );
        assert!(generating_pairs(&g, &WangTriple::bottom(&g)).unwrap().is_empty());

        let l = loop_graph();
        let pairs = generating_pairs(&l, &looped(&l, Finite(2))).unwrap();
        let e2 = GisElement::PathPair(
            Path {
                start: 0,
                edges: vec![0, 0],
            },
            Path::vertex(0),
        );
        assert_eq!(
            pairs,
            vec![
                (GisElement::vertex(0), GisElement::edge_idempotent(&l, 0)),
                (e2, GisElement::vertex(0)),
            ]
        );
    }

    #[test]
    fn order_examples() {
        let g = fork();
        let bottom = WangTriple::bottom(&g);
        let (x, y) = (tr(&g, &["c"], &["b"]), tr(&g, &["d"], &["b"]));
        assert!(leq(&g, &bottom, &x).unwrap());
        assert!(!leq(&g, &x, &y).unwrap() && !leq(&g, &y, &x).unwrap());

        let l = loop_graph();
        assert!(leq(&l, &looped(&l, Finite(6)), &looped(&l, Finite(3))).unwrap());
        assert!(!leq(&l, &looped(&l, Finite(3)), &looped(&l, Finite(6))).unwrap());
        assert_eq!(leq(&l, &bottom, &bottom), Err(Error::GraphMismatch));
    }

    #[test]
    fn join_meet_examples() {
        let g = fork();
        let (x, y) = (tr(&g, &["c"], &["b"]), tr(&g, &["d"], &["b"]));
        assert_eq!(join(&g, &x, &y).unwrap(), tr(&g, &["b", "c", "d"], &[]));
        assert_eq!(meet(&g, &x, &y).unwrap(), WangTriple::bottom(&g));
        assert_eq!(join(&g, &x, &x).unwrap(), x);
        assert_eq!(meet(&g, &x, &x).unwrap(), x);

        let l = loop_graph();
        let (four, six) = (looped(&l, Finite(4)), looped(&l, Finite(6)));
        assert_eq!(join(&l, &four, &six).unwrap(), looped(&l, Finite(2)));
        assert_eq!(meet(&l, &four, &six).unwrap(), looped(&l, Finite(12)));
    }

    #[test]
    fn meet_no_fork_examples() {
        let p = Digraph::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let t1 = tr(&p, &[], &["a"]);
        let t2 = tr(&p, &[], &["a", "b"]);
        assert_eq!(meet_no_fork(&p, &t1, &t2).unwrap(), t1);
        // b has no surviving edge over H = {c}, so b ∈ V₀ but b ∉ W₁ ∩ W₂
        let t3 = tr(&p, &["c"], &["a"]);
        assert_eq!(meet_no_fork(&p, &t3, &t2).unwrap(), t1);
        assert_eq!(meet(&p, &t3, &t2).unwrap(), t1);
        assert!(WangTriple::trivial(&p, VertexSet::singleton(2), VertexSet::singleton(1)).is_err());

        let g = fork();
        let x = tr(&g, &["c"], &["b"]);
        assert_eq!(meet_no_fork(&g, &x, &x), Err(Error::Forked));
    }

    #[test]
    fn cover_examples() {
        let l = loop_graph();
        let (three, six, twelve) = (
            looped(&l, Finite(3)),
            looped(&l, Finite(6)),
            looped(&l, Finite(12)),
        );
        assert_eq!(cover_case(&l, &six, &three), Ok(Some(CoverCase::CycleValue)));
        assert_eq!(covers(&l, &twelve, &three), Ok(false));
        assert_eq!(covers(&l, &three, &six), Err(Error::NotComparable));
        assert_eq!(covers(&l, &looped(&l, Infinity), &three), Ok(false));

        let g = fork();
        let bottom = WangTriple::bottom(&g);
        let a = tr(&g, &[], &["a"]);
        assert_eq!(cover_case(&g, &bottom, &a), Ok(Some(CoverCase::AddedVertex)));
        assert_eq!(covers(&g, &bottom, &bottom), Err(Error::NotComparable));
    }

    #[test]
    fn downward_directed_on_path() {
        let p = Digraph::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let lo = tr(&p, &["c"], &[]);
        let hi = tr(&p, &["b", "c"], &[]);
        assert_eq!(cover_case(&p, &lo, &hi), Ok(Some(CoverCase::HereditaryStep)));
        assert_eq!(downward_directed_check(&p, &lo, &hi), Ok(true));
        let a = tr(&p, &[], &["a"]);
        let ab = tr(&p, &[], &["a", "b"]);
        assert_eq!(downward_directed_check(&p, &a, &ab), Err(Error::NotCaseIII));
    }

    #[test]
    fn atoms_examples() {
        let g = fork();
        assert_eq!(
            atoms(&g),
            vec![tr(&g, &[], &["a"]), tr(&g, &["c"], &[]), tr(&g, &["d"], &[])]
        );
        let l = loop_graph();
        assert_eq!(atoms(&l), vec![looped(&l, Infinity)]);
        let v = Digraph::from_edges(1, &[]).unwrap();
        assert_eq!(atoms(&v), vec![WangTriple::top(&v)]);
    }
}
