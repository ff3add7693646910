//! Brute-force ground truth for finite graph inverse semigroups.
//!
//! [`MulTable`] builds `G(E)` for a finite acyclic graph straight from the
//! normal form, [`enumerate_congruences`] lists every congruence by closing
//! the principal ones under join, and [`verify_isomorphism`] checks the
//! triple calculus against that list.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::element::{GisElement, Path};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::lattice::ConLattice;
use crate::triple::{self, WangTriple};

/// Default bound on `|G(E)|`.
pub const DEFAULT_SEMIGROUP_CAP: usize = 300;
/// Default bound on the number of congruences.
pub const DEFAULT_CONGRUENCE_CAP: usize = 20_000;
/// Up to this size associativity is checked on every triple.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 60;

/// The multiplication table of `G(E)`; index 0 is zero.
#[derive(Debug, Clone)]
pub struct MulTable {
    elements: Vec<GisElement>,
    index: HashMap<GisElement, u32>,
    table: Vec<u32>,
}

impl MulTable {
    pub fn build(g: &Digraph, cap: usize) -> Result<Self> {
        if !g.is_acyclic() {
            return Err(Error::Cyclic);
        }
        let too_big = || Error::CapExceeded {
            what: "semigroup size",
            cap,
        };
        // paths grouped by end vertex
        let mut by_end: Vec<Vec<Path>> = vec![Vec::new(); g.vertex_count()];
        let mut stack: Vec<Path> = g.vertices().iter().map(Path::vertex).collect();
        let mut count = 0usize;
        while let Some(p) = stack.pop() {
            count += 1;
            if count >= cap {
                return Err(too_big());
            }
            let end = p.end(g);
            for &e in g.out_edges(end) {
                let mut q = p.clone();
                q.edges.push(e);
                stack.push(q);
            }
            by_end[end].push(p);
        }
        let size = 1 + by_end.iter().map(|ps| ps.len() * ps.len()).sum::<usize>();
        if size > cap {
            return Err(too_big());
        }
        let mut elements = vec![GisElement::Zero];
        for ps in &mut by_end {
            ps.sort();
            for p in ps.iter() {
                for q in ps.iter() {
                    elements.push(GisElement::PathPair(p.clone(), q.clone()));
                }
            }
        }
        let index: HashMap<GisElement, u32> =
            elements.iter().enumerate().map(|(i, x)| (x.clone(), i as u32)).collect();
        let n = elements.len();
        let table: Vec<u32> = (0..n * n)
            .into_par_iter()
            .map(|k| index[&elements[k / n].multiply(&elements[k % n])])
            .collect();
        Ok(MulTable {
            elements,
            index,
            table,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GisElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GisElement {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &GisElement) -> Option<usize> {
        self.index.get(x).map(|&i| i as usize)
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.len() + b] as usize
    }

    /// A triple `(a, b, c)` with `(ab)c ≠ a(bc)`: every triple when the
    /// table is small, otherwise `samples` random ones drawn from `seed`.
    pub fn associativity_witness(&self, samples: usize, seed: u64) -> Option<(usize, usize, usize)> {
        let n = self.len();
        let bad = |&(a, b, c): &(usize, usize, usize)| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c));
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            (0..n)
                .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
                .find(bad)
        } else {
            let mut rng = StdRng::seed_from_u64(seed);
            (0..samples)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                .find(bad)
        }
    }

    /// An element without a unique inverse, or whose inverse is not the
    /// swapped pair.
    pub fn inverse_witness(&self) -> Option<usize> {
        (0..self.len()).find(|&x| {
            let mut inverses = (0..self.len())
                .filter(|&y| self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y);
            let expected = self.index_of(&self.elements[x].inverse());
            inverses.next() != expected || inverses.next().is_some()
        })
    }

    /// Zero absorbs on both sides.
    pub fn zero_is_absorbing(&self) -> bool {
        (0..self.len()).all(|x| self.mul(0, x) == 0 && self.mul(x, 0) == 0)
    }
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] as usize != x {
            let parent = self.0[x] as usize;
            self.0[x] = self.0[parent];
            x = parent;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.0[hi] = lo as u32;
        true
    }

    fn labels(mut self) -> Congruence {
        let n = self.0.len();
        let roots: Vec<usize> = (0..n).map(|i| self.find(i)).collect();
        Congruence::from_keys(&roots)
    }
}

/// A partition of the semigroup's elements, labelled canonically: blocks
/// are numbered in order of their least member, so equal partitions have
/// equal labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    labels: Vec<u32>,
}

impl Congruence {
    fn from_keys<K: Eq + std::hash::Hash + Copy>(keys: &[K]) -> Self {
        let mut seen = HashMap::new();
        let labels = keys
            .iter()
            .map(|k| {
                let next = seen.len() as u32;
                *seen.entry(*k).or_insert(next)
            })
            .collect();
        Congruence { labels }
    }

    pub fn identity(n: usize) -> Self {
        Congruence {
            labels: (0..n as u32).collect(),
        }
    }

    pub fn universal(n: usize) -> Self {
        Congruence { labels: vec![0; n] }
    }

    /// The least congruence relating each given pair.
    pub fn generated_by(t: &MulTable, pairs: &[(usize, usize)]) -> Self {
        let n = t.len();
        let mut uf = UnionFind::new(n);
        let mut pending: Vec<(usize, usize)> = pairs.to_vec();
        while let Some((x, y)) = pending.pop() {
            if !uf.union(x, y) {
                continue;
            }
            for z in 0..n {
                pending.push((t.mul(z, x), t.mul(z, y)));
                pending.push((t.mul(x, z), t.mul(y, z)));
            }
        }
        uf.labels()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(i);
        }
        blocks
    }

    /// `self ⊆ other` as relations.
    pub fn is_contained_in(&self, other: &Congruence) -> bool {
        let mut image = vec![u32::MAX; self.block_count()];
        self.labels.iter().zip(&other.labels).all(|(&a, &b)| {
            let slot = &mut image[a as usize];
            if *slot == u32::MAX {
                *slot = b;
            }
            *slot == b
        })
    }

    /// Transitive closure of the union; for congruences this is already a
    /// congruence.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.len());
        for rel in [self, other] {
            let mut first = vec![usize::MAX; rel.block_count()];
            for (i, &l) in rel.labels.iter().enumerate() {
                let f = &mut first[l as usize];
                if *f == usize::MAX {
                    *f = i;
                } else {
                    uf.union(*f, i);
                }
            }
        }
        uf.labels()
    }

    /// Intersection.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        let keys: Vec<(u32, u32)> = self.labels.iter().copied().zip(other.labels.iter().copied()).collect();
        Congruence::from_keys(&keys)
    }

    /// Compatible with left and right multiplication.
    pub fn is_compatible(&self, t: &MulTable) -> bool {
        let n = t.len();
        (0..n).all(|x| {
            (x + 1..n).filter(|&y| self.related(x, y)).all(|y| {
                (0..n).all(|z| self.related(t.mul(z, x), t.mul(z, y)) && self.related(t.mul(x, z), t.mul(y, z)))
            })
        })
    }
}

/// The distinct principal congruences `(x, y)^♯`, including the identity.
pub fn principal_congruences(t: &MulTable) -> Vec<Congruence> {
    let n = t.len();
    let found: HashSet<Congruence> = (0..n)
        .into_par_iter()
        .flat_map_iter(|x| (x + 1..n).map(move |y| Congruence::generated_by(t, &[(x, y)])))
        .collect();
    let mut out: Vec<Congruence> = found.into_iter().collect();
    out.push(Congruence::identity(n));
    out.sort();
    out.dedup();
    out
}

/// Every congruence, each once, sorted by block count descending (identity
/// first).
pub fn enumerate_congruences(t: &MulTable, cap: usize) -> Result<Vec<Congruence>> {
    let principals = principal_congruences(t);
    let mut seen: HashSet<Congruence> = HashSet::new();
    let mut all = vec![Congruence::identity(t.len())];
    seen.insert(all[0].clone());
    let mut i = 0;
    while i < all.len() {
        for p in &principals {
            let j = all[i].join(p);
            if seen.insert(j.clone()) {
                if all.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "congruence count",
                        cap,
                    });
                }
                all.push(j);
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| b.block_count().cmp(&a.block_count()).then_with(|| a.cmp(b)));
    Ok(all)
}

/// The congruence generated by a triple's generating pairs.
pub fn realize_triple(g: &Digraph, t: &WangTriple, table: &MulTable) -> Result<Congruence> {
    let pairs = triple::generating_pairs(g, t)?
        .iter()
        .map(|(x, y)| match (table.index_of(x), table.index_of(y)) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::ForeignElement),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Congruence::generated_by(table, &pairs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    pub semigroup: usize,
    pub congruences: usize,
    pub lattice: usize,
    /// Random associativity samples for tables too large to check fully.
    pub samples: usize,
    pub seed: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            semigroup: DEFAULT_SEMIGROUP_CAP,
            congruences: DEFAULT_CONGRUENCE_CAP,
            lattice: crate::lattice::DEFAULT_LATTICE_CAP,
            samples: 100_000,
            seed: 0,
        }
    }
}

/// A disagreement between the triple calculus and the semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    /// `(ab)c ≠ a(bc)` in the table.
    NotAssociative(usize, usize, usize),
    /// An element whose inverse is missing, not unique, or not `qp⁻¹`.
    BadInverse(usize),
    /// A realized relation that is not a congruence.
    NotCongruence(WangTriple),
    /// Two triples realize the same congruence.
    NotInjective(WangTriple, WangTriple),
    /// A congruence that no triple realizes (index into the enumeration).
    Unrealized(usize),
    /// `leq` disagrees with containment.
    Order {
        lower: WangTriple,
        upper: WangTriple,
        triple_leq: bool,
        contained: bool,
    },
    Join(WangTriple, WangTriple),
    Meet(WangTriple, WangTriple),
}

#[derive(Debug, Clone)]
pub struct IsoReport {
    pub semigroup_size: usize,
    pub congruence_count: usize,
    pub lattice_size: usize,
    pub mismatches: Vec<Mismatch>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn display<'a>(&'a self, g: &'a Digraph) -> impl fmt::Display + 'a {
        DisplayReport(self, g)
    }
}

struct DisplayReport<'a>(&'a IsoReport, &'a Digraph);

impl fmt::Display for DisplayReport<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r, g) = (self.0, self.1);
        writeln!(f, "|G(E)| = {}", r.semigroup_size)?;
        writeln!(f, "congruences = {}", r.congruence_count)?;
        writeln!(f, "triples = {}", r.lattice_size)?;
        for m in &r.mismatches {
            match m {
                Mismatch::NotAssociative(a, b, c) => writeln!(f, "  not associative at ({a}, {b}, {c})")?,
                Mismatch::BadInverse(x) => writeln!(f, "  bad inverse for element {x}")?,
                Mismatch::NotCongruence(t) => writeln!(f, "  {} does not realize a congruence", t.display(g))?,
                Mismatch::NotInjective(a, b) => {
                    writeln!(f, "  {} and {} realize the same congruence", a.display(g), b.display(g))?
                }
                Mismatch::Unrealized(i) => writeln!(f, "  congruence #{i} is realized by no triple")?,
                Mismatch::Order {
                    lower,
                    upper,
                    triple_leq,
                    contained,
                } => writeln!(
                    f,
                    "  {} ≤ {} is {triple_leq} for triples but containment is {contained}",
                    lower.display(g),
                    upper.display(g)
                )?,
                Mismatch::Join(a, b) => writeln!(f, "  join of {} and {} differs", a.display(g), b.display(g))?,
                Mismatch::Meet(a, b) => writeln!(f, "  meet of {} and {} differs", a.display(g), b.display(g))?,
            }
        }
        write!(f, "{}", if r.passed() { "PASS" } else { "FAIL" })
    }
}

/// Checks that realizing triples as congruences is an order isomorphism
/// onto the full congruence lattice that carries triple joins and meets to
/// congruence joins and intersections. Only the first witness of each kind
/// of failure is kept.
pub fn verify_isomorphism(g: &Digraph, caps: OracleCaps) -> Result<IsoReport> {
    let table = MulTable::build(g, caps.semigroup)?;
    let congruences = enumerate_congruences(&table, caps.congruences)?;
    let lattice = ConLattice::enumerate(g, caps.lattice)?;
    let ts = lattice.elements();
    let mut mismatches = Vec::new();

    if let Some((a, b, c)) = table.associativity_witness(caps.samples, caps.seed) {
        mismatches.push(Mismatch::NotAssociative(a, b, c));
    }
    if let Some(x) = table.inverse_witness() {
        mismatches.push(Mismatch::BadInverse(x));
    }

    let realized = ts
        .par_iter()
        .map(|t| realize_triple(g, t, &table))
        .collect::<Result<Vec<_>>>()?;
    if let Some(i) = (0..ts.len()).find(|&i| !realized[i].is_compatible(&table)) {
        mismatches.push(Mismatch::NotCongruence(ts[i].clone()));
    }

    // (a) injective
    let mut owner: HashMap<&Congruence, usize> = HashMap::new();
    for (i, c) in realized.iter().enumerate() {
        if let Some(&j) = owner.get(c) {
            mismatches.push(Mismatch::NotInjective(ts[j].clone(), ts[i].clone()));
            break;
        }
        owner.insert(c, i);
    }
    // (b) onto
    if let Some(i) = congruences.iter().position(|c| !owner.contains_key(c)) {
        mismatches.push(Mismatch::Unrealized(i));
    }
    // (c) order
    let fl = lattice.lattice();
    let n = ts.len();
    let pairs = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));
    if let Some((i, j)) = pairs().find(|&(i, j)| fl.leq(i, j) != realized[i].is_contained_in(&realized[j])) {
        mismatches.push(Mismatch::Order {
            lower: ts[i].clone(),
            upper: ts[j].clone(),
            triple_leq: fl.leq(i, j),
            contained: realized[i].is_contained_in(&realized[j]),
        });
    }
    // (d) joins and meets
    if let Some((i, j)) = pairs().find(|&(i, j)| realized[fl.join(i, j)] != realized[i].join(&realized[j])) {
        mismatches.push(Mismatch::Join(ts[i].clone(), ts[j].clone()));
    }
    if let Some((i, j)) = pairs().find(|&(i, j)| realized[fl.meet(i, j)] != realized[i].meet(&realized[j])) {
        mismatches.push(Mismatch::Meet(ts[i].clone(), ts[j].clone()));
    }

    Ok(IsoReport {
        semigroup_size: table.len(),
        congruence_count: congruences.len(),
        lattice_size: n,
        mismatches,
    })
}
