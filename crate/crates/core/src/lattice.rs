//! Explicit finite lattices and the congruence lattice of an acyclic graph.
//!
//! [`FiniteLattice`] is a plain order with precomputed join and meet
//! tables; the property checks (semimodularity, modularity,
//! distributivity, atomisticity) live there so that they can also be run on
//! small hand-built lattices. [`ConLattice`] enumerates the Wang triples of
//! a finite acyclic graph and wraps them in a [`FiniteLattice`].

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::triple::{self, WangTriple};
use crate::vertex_set::VertexSet;

/// Default bound on the number of lattice elements. Acyclic graphs on at
/// most 12 vertices always fit, since `|L| <= 2^|E⁰|` there.
pub const DEFAULT_LATTICE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }
}

/// A finite lattice on elements `0..len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    n: usize,
    order: BitMatrix,
    cover: BitMatrix,
    covers: Vec<(usize, usize)>,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds a lattice from an order relation, computing joins and meets
    /// by searching bounds. Fails if `leq` is not a lattice order.
    pub fn from_order(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotALattice("no elements".into()));
        }
        let mut order = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    order.set(i, j);
                }
            }
        }
        for i in 0..n {
            if !order.get(i, i) {
                return Err(Error::NotALattice(format!("{i} ≰ {i}")));
            }
            for j in 0..n {
                if i != j && order.get(i, j) && order.get(j, i) {
                    return Err(Error::NotALattice(format!("{i} and {j} are equivalent")));
                }
                for k in 0..n {
                    if order.get(i, j) && order.get(j, k) && !order.get(i, k) {
                        return Err(Error::NotALattice(format!("not transitive at {i}, {j}, {k}")));
                    }
                }
            }
        }
        let bound = |i: usize, j: usize, upper: bool| -> Result<u32> {
            let is_bound = |k: usize| {
                if upper {
                    order.get(i, k) && order.get(j, k)
                } else {
                    order.get(k, i) && order.get(k, j)
                }
            };
            let bounds: Vec<usize> = (0..n).filter(|&k| is_bound(k)).collect();
            bounds
                .iter()
                .copied()
                .find(|&k| {
                    bounds.iter().all(|&m| {
                        if upper {
                            order.get(k, m)
                        } else {
                            order.get(m, k)
                        }
                    })
                })
                .map(|k| k as u32)
                .ok_or_else(|| {
                    Error::NotALattice(format!(
                        "{i} and {j} have no {}",
                        if upper { "join" } else { "meet" }
                    ))
                })
        };
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                join[i * n + j] = bound(i, j, true)?;
                meet[i * n + j] = bound(i, j, false)?;
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let strict = i != j && order.get(i, j);
                if strict && !(0..n).any(|k| k != i && k != j && order.get(i, k) && order.get(k, j)) {
                    covers.push((i, j));
                }
            }
        }
        Ok(Self::assemble(n, order, join, meet, covers))
    }

    /// Builds a lattice from its Hasse diagram (`(lower, upper)` pairs).
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut reach = BitMatrix::new(n);
        for i in 0..n {
            reach.set(i, i);
        }
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(Error::NotALattice(format!("cover ({lo}, {hi}) out of range")));
            }
            reach.set(lo, hi);
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if reach.get(i, k) {
                    for j in 0..n {
                        if reach.get(k, j) {
                            reach.set(i, j);
                        }
                    }
                }
            }
        }
        Self::from_order(n, |i, j| reach.get(i, j))
    }

    fn assemble(
        n: usize,
        order: BitMatrix,
        join: Vec<u32>,
        meet: Vec<u32>,
        covers: Vec<(usize, usize)>,
    ) -> Self {
        let mut cover = BitMatrix::new(n);
        for &(i, j) in &covers {
            cover.set(i, j);
        }
        let bottom = (0..n).find(|&i| (0..n).all(|j| order.get(i, j))).unwrap_or(0);
        let top = (0..n).find(|&i| (0..n).all(|j| order.get(j, i))).unwrap_or(0);
        FiniteLattice {
            n,
            order,
            cover,
            covers,
            join,
            meet,
            bottom,
            top,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.get(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b] as usize
    }

    /// `a ≺ b`.
    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.cover.get(a, b)
    }

    /// The Hasse diagram as `(lower, upper)` pairs.
    pub fn cover_pairs(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.is_cover(self.bottom, a)).collect()
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn ranks(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        // any linear extension: fewer elements below comes first
        order.sort_by_key(|&i| (0..self.n).filter(|&j| self.leq(j, i)).count());
        let mut rank = vec![0usize; self.n];
        for &i in &order {
            for &(lo, hi) in &self.covers {
                if lo == i {
                    rank[hi] = rank[hi].max(rank[i] + 1);
                }
            }
        }
        rank
    }

    /// `a ∧ b ≺ a, b` implies `a, b ≺ a ∨ b`.
    pub fn is_upper_semimodular(&self) -> bool {
        self.pairs().all(|(a, b)| {
            let m = self.meet(a, b);
            let j = self.join(a, b);
            !(self.is_cover(m, a) && self.is_cover(m, b)) || (self.is_cover(a, j) && self.is_cover(b, j))
        })
    }

    /// `a, b ≺ a ∨ b` implies `a ∧ b ≺ a, b`.
    pub fn is_lower_semimodular(&self) -> bool {
        self.pairs().all(|(a, b)| {
            let m = self.meet(a, b);
            let j = self.join(a, b);
            !(self.is_cover(a, j) && self.is_cover(b, j)) || (self.is_cover(m, a) && self.is_cover(m, b))
        })
    }

    /// The modular law: `a ≤ c` implies `(a ∨ b) ∧ c = a ∨ (b ∧ c)`.
    pub fn is_modular(&self) -> bool {
        self.pairs().all(|(a, c)| {
            !self.leq(a, c)
                || (0..self.n).all(|b| self.meet(self.join(a, b), c) == self.join(a, self.meet(b, c)))
        })
    }

    /// The distributive law `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`. In a lattice
    /// it implies its dual.
    pub fn is_distributive(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c)))
            })
        })
    }

    /// Some `{a ∧ b, a, c, b, a ∨ b}` with `a < c`, `a ∧ b = c ∧ b` and
    /// `a ∨ b = c ∨ b` forms a pentagon sublattice. Returned as `(a, c, b)`.
    pub fn find_pentagon(&self) -> Option<(usize, usize, usize)> {
        for (a, c) in self.pairs() {
            if a == c || !self.leq(a, c) {
                continue;
            }
            for b in 0..self.n {
                if self.meet(a, b) == self.meet(c, b) && self.join(a, b) == self.join(c, b) {
                    return Some((a, c, b));
                }
            }
        }
        None
    }

    /// Three distinct elements with a common pairwise meet and a common
    /// pairwise join, forming a diamond sublattice.
    pub fn find_diamond(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                let (m, j) = (self.meet(a, b), self.join(a, b));
                if m == a || m == b {
                    continue;
                }
                for c in b + 1..n {
                    if self.meet(a, c) == m
                        && self.meet(b, c) == m
                        && self.join(a, c) == j
                        && self.join(b, c) == j
                    {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.n).all(|x| {
            atoms
                .iter()
                .filter(|&&a| self.leq(a, x))
                .fold(self.bottom, |acc, &a| self.join(acc, a))
                == x
        })
    }

    /// Closure of `seeds ∪ {bottom}` under binary join, sorted.
    pub fn join_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        let mut members = vec![self.bottom];
        inside[self.bottom] = true;
        for &s in seeds {
            if !inside[s] {
                inside[s] = true;
                members.push(s);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &s in seeds {
                let j = self.join(x, s);
                if !inside[j] {
                    inside[j] = true;
                    members.push(j);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    // unordered pairs, including a == b
    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| (0..self.n).map(move |b| (a, b)))
    }
}

/// Summary of the lattice-level property checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Properties {
    pub element_count: usize,
    pub upper_semimodular: bool,
    pub lower_semimodular: bool,
    pub modular: bool,
    pub distributive: bool,
    pub atomistic: bool,
}

impl Properties {
    pub fn of(l: &FiniteLattice) -> Self {
        Properties {
            element_count: l.len(),
            upper_semimodular: l.is_upper_semimodular(),
            lower_semimodular: l.is_lower_semimodular(),
            modular: l.is_modular(),
            distributive: l.is_distributive(),
            atomistic: l.is_atomistic(),
        }
    }
}

/// The congruence lattice of a finite acyclic graph, with one Wang triple
/// per element.
#[derive(Debug, Clone)]
pub struct ConLattice {
    graph: Digraph,
    elements: Vec<WangTriple>,
    index: HashMap<(VertexSet, VertexSet), usize>,
    lattice: FiniteLattice,
}

impl ConLattice {
    /// Enumerates every triple `(H, W, ∅)`: each hereditary `H` with each
    /// subset `W` of the vertices keeping exactly one out-edge in `E \ H`.
    ///
    /// Joins and meets come from the triple formulas; covers from
    /// `|(H₂ ∪ W₂) \ (H₁ ∪ W₁)| = 1`.
    pub fn enumerate(g: &Digraph, cap: usize) -> Result<Self> {
        if !g.is_acyclic() {
            return Err(Error::Cyclic);
        }
        let mut elements = Vec::new();
        for h in g.hereditary_sets(cap)? {
            let eligible: VertexSet = (g.vertices() - h)
                .iter()
                .filter(|&v| g.surviving_edges(v, h).count() == 1)
                .collect();
            if elements.len() + (1usize << eligible.len()) > cap {
                return Err(Error::CapExceeded {
                    what: "lattice element count",
                    cap,
                });
            }
            for w in eligible.subsets() {
                elements.push(WangTriple::trivial(g, h, w)?);
            }
        }
        elements.sort_by_key(|t| {
            let u = t.h() | t.w();
            (u.len(), u.bits(), t.h().bits())
        });
        Self::from_elements(g, elements)
    }

    /// Wraps an explicit list of triples of an acyclic graph, which must be
    /// closed under join and meet.
    pub fn from_elements(g: &Digraph, elements: Vec<WangTriple>) -> Result<Self> {
        if !g.is_acyclic() {
            return Err(Error::Cyclic);
        }
        let n = elements.len();
        if n == 0 {
            return Err(Error::NotALattice("no elements".into()));
        }
        let index: HashMap<_, _> = elements
            .iter()
            .enumerate()
            .map(|(i, t)| ((t.h(), t.w()), i))
            .collect();
        if index.len() != n {
            return Err(Error::NotALattice("duplicate elements".into()));
        }
        let lookup = |t: &WangTriple| -> Result<u32> {
            index
                .get(&(t.h(), t.w()))
                .map(|&i| i as u32)
                .ok_or_else(|| Error::NotALattice("not closed under join and meet".into()))
        };
        let mut order = BitMatrix::new(n);
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        let mut covers = Vec::new();
        for (i, a) in elements.iter().enumerate() {
            let ua = a.h() | a.w();
            for (j, b) in elements.iter().enumerate() {
                if triple::leq(g, a, b)? {
                    order.set(i, j);
                    if (b.h() | b.w()).len() == ua.len() + 1 {
                        covers.push((i, j));
                    }
                }
                if j >= i {
                    let (jn, mt) = (lookup(&triple::join(g, a, b)?)?, lookup(&triple::meet(g, a, b)?)?);
                    join[i * n + j] = jn;
                    join[j * n + i] = jn;
                    meet[i * n + j] = mt;
                    meet[j * n + i] = mt;
                }
            }
        }
        Ok(ConLattice {
            graph: g.clone(),
            elements,
            index,
            lattice: FiniteLattice::assemble(n, order, join, meet, covers),
        })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn elements(&self) -> &[WangTriple] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn index_of(&self, t: &WangTriple) -> Option<usize> {
        if !t.belongs_to(&self.graph) {
            return None;
        }
        self.index.get(&(t.h(), t.w())).copied()
    }

    /// Closure of `generators ∪ {bottom}` under join, as triples in element
    /// order.
    pub fn generated_sublattice(&self, generators: &[WangTriple]) -> Result<Vec<WangTriple>> {
        let seeds = generators
            .iter()
            .map(|t| self.index_of(t).ok_or(Error::ForeignElement))
            .collect::<Result<Vec<_>>>()?;
        Ok(self
            .lattice
            .join_closure(&seeds)
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect())
    }
}
