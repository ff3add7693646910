use std::fmt;

use crate::graph::Digraph;

/// A path in a graph. A path of length 0 is a vertex and carries that
/// vertex as its start.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn vertex(v: usize) -> Path {
        Path {
            start: v,
            edges: Vec::new(),
        }
    }

    pub fn edge(g: &Digraph, e: usize) -> Path {
        Path {
            start: g.source(e),
            edges: vec![e],
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn end(&self, g: &Digraph) -> usize {
        self.edges.last().map_or(self.start, |&e| g.range(e))
    }

    /// Whether consecutive edges meet and the first edge leaves `start`.
    pub fn is_valid(&self, g: &Digraph) -> bool {
        let mut at = self.start;
        for &e in &self.edges {
            if e >= g.edge_count() || g.source(e) != at {
                return false;
            }
            at = g.range(e);
        }
        at < g.vertex_count()
    }

    /// If `self` is a prefix of `other`, the remainder of `other`.
    pub fn strip_prefix(&self, other: &Path) -> Option<Path> {
        if self.start != other.start || !other.edges.starts_with(&self.edges) {
            return None;
        }
        Some(Path {
            start: self.start,
            edges: other.edges[self.edges.len()..].to_vec(),
        })
    }

    /// `self · tail`; `tail` must start where `self` ends.
    pub fn concat(&self, tail: &Path) -> Path {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&tail.edges);
        Path {
            start: self.start,
            edges,
        }
    }

    pub fn display<'a>(&'a self, g: &'a Digraph) -> impl fmt::Display + 'a {
        DisplayPath(self, g)
    }
}

struct DisplayPath<'a>(&'a Path, &'a Digraph);

impl fmt::Display for DisplayPath<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, g) = (self.0, self.1);
        if p.edges.is_empty() {
            return f.write_str(g.name(p.start));
        }
        let parts: Vec<String> = p
            .edges
            .iter()
            .map(|&e| format!("e{e}[{}→{}]", g.name(g.source(e)), g.name(g.range(e))))
            .collect();
        f.write_str(&parts.join("·"))
    }
}

/// An element of the graph inverse semigroup: zero, or `p q⁻¹` for paths
/// `p`, `q` with a common end vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GisElement {
    Zero,
    PathPair(Path, Path),
}

impl GisElement {
    pub fn vertex(v: usize) -> GisElement {
        GisElement::PathPair(Path::vertex(v), Path::vertex(v))
    }

    /// `e e⁻¹`.
    pub fn edge_idempotent(g: &Digraph, e: usize) -> GisElement {
        GisElement::PathPair(Path::edge(g, e), Path::edge(g, e))
    }

    /// `(p q⁻¹)⁻¹ = q p⁻¹`.
    pub fn inverse(&self) -> GisElement {
        match self {
            GisElement::Zero => GisElement::Zero,
            GisElement::PathPair(p, q) => GisElement::PathPair(q.clone(), p.clone()),
        }
    }

    /// Whether both paths are valid and end at the same vertex.
    pub fn is_valid(&self, g: &Digraph) -> bool {
        match self {
            GisElement::Zero => true,
            GisElement::PathPair(p, q) => p.is_valid(g) && q.is_valid(g) && p.end(g) == q.end(g),
        }
    }

    /// Product from the normal form: `(p q⁻¹)(r s⁻¹)` is `(p t) s⁻¹` when
    /// `r = q t`, `p (s t)⁻¹` when `q = r t`, and zero otherwise.
    pub fn multiply(&self, other: &GisElement) -> GisElement {
        let (GisElement::PathPair(p, q), GisElement::PathPair(r, s)) = (self, other) else {
            return GisElement::Zero;
        };
        if let Some(t) = q.strip_prefix(r) {
            GisElement::PathPair(p.concat(&t), s.clone())
        } else if let Some(t) = r.strip_prefix(q) {
            GisElement::PathPair(p.clone(), s.concat(&t))
        } else {
            GisElement::Zero
        }
    }

    pub fn display<'a>(&'a self, g: &'a Digraph) -> impl fmt::Display + 'a {
        DisplayElement(self, g)
    }
}

struct DisplayElement<'a>(&'a GisElement, &'a Digraph);

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            GisElement::Zero => f.write_str("0"),
            GisElement::PathPair(p, q) if p == q && p.is_empty() => {
                write!(f, "{}", p.display(self.1))
            }
            GisElement::PathPair(p, q) if q.is_empty() => write!(f, "{}", p.display(self.1)),
            GisElement::PathPair(p, q) if p.is_empty() => {
                write!(f, "({})⁻¹", q.display(self.1))
            }
            GisElement::PathPair(p, q) => {
                write!(f, "{}({})⁻¹", p.display(self.1), q.display(self.1))
            }
        }
    }
}
