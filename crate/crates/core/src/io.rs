//! Text formats: the line-oriented graph file, lattice JSON and Hasse
//! diagram DOT.
//!
//! A graph file declares vertices before use; repeated `edge` lines give
//! parallel edges:
//!
//! ```text
//! # the fork
//! vertex a
//! vertex b
//! vertex c
//! edge a b
//! edge a c
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::lattice::{ConLattice, Properties};
use crate::triple::WangTriple;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Current version of the lattice JSON schema.
pub const JSON_FORMAT: u32 = 1;

pub fn parse_graph(text: &str) -> Result<Digraph> {
    let mut names: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let err = |column: usize, message: String| Error::Parse {
            line: line_no + 1,
            column,
            message,
        };
        let tokens: Vec<(usize, &str)> = tokens(line).collect();
        let Some(&(col, keyword)) = tokens.first() else { continue };
        let lookup = |&(c, name): &(usize, &str)| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| err(c, format!("unknown vertex `{name}`")))
        };
        match keyword {
            "vertex" => {
                let [_, v] = tokens[..] else {
                    return Err(err(col, "expected `vertex NAME`".into()));
                };
                if names.iter().any(|n| n == v.1) {
                    return Err(err(v.0, format!("duplicate vertex `{}`", v.1)));
                }
                if names.len() == MAX_VERTICES {
                    return Err(err(v.0, format!("more than {MAX_VERTICES} vertices")));
                }
                names.push(v.1.to_owned());
            }
            "edge" => {
                let [_, s, r] = tokens[..] else {
                    return Err(err(col, "expected `edge SRC DST`".into()));
                };
                edges.push((lookup(&s)?, lookup(&r)?));
            }
            other => return Err(err(col, format!("unknown keyword `{other}`"))),
        }
    }
    if names.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "graph has no vertices".into(),
        });
    }
    Digraph::with_names(names, edges)
}

// whitespace-separated tokens with 1-based character columns
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let len = rest[start..].find(char::is_whitespace).unwrap_or(rest.len() - start);
        let token = &rest[start..start + len];
        let column = line[..offset + start].chars().count() + 1;
        offset += start + len;
        rest = &rest[start + len..];
        Some((column, token))
    })
}

/// Inverse of [`parse_graph`] for graphs whose names are free of
/// whitespace and `#`.
pub fn print_graph(g: &Digraph) -> String {
    let mut out = String::new();
    for name in g.names() {
        writeln!(out, "vertex {name}").unwrap();
    }
    for &(s, r) in g.edges() {
        writeln!(out, "edge {} {}", g.name(s), g.name(r)).unwrap();
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ElementJson {
    #[serde(rename = "H")]
    h: Vec<String>,
    #[serde(rename = "W")]
    w: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct LatticeJson {
    format: u32,
    graph: GraphJson,
    elements: Vec<ElementJson>,
    covers: Vec<(usize, usize)>,
    bottom: usize,
    top: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    properties: Option<Properties>,
}

pub fn lattice_to_json(l: &ConLattice, properties: Option<Properties>) -> String {
    let g = l.graph();
    let names = |s: VertexSet| s.iter().map(|v| g.name(v).to_owned()).collect();
    let doc = LatticeJson {
        format: JSON_FORMAT,
        graph: GraphJson {
            vertices: g.names().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|&(s, r)| (g.name(s).to_owned(), g.name(r).to_owned()))
                .collect(),
        },
        elements: l
            .elements()
            .iter()
            .map(|t| ElementJson {
                h: names(t.h()),
                w: names(t.w()),
            })
            .collect(),
        covers: l.lattice().cover_pairs().to_vec(),
        bottom: l.lattice().bottom(),
        top: l.lattice().top(),
        properties,
    };
    serde_json::to_string_pretty(&doc).expect("lattice JSON serializes")
}

/// Rebuilds a lattice from [`lattice_to_json`] output, keeping element
/// order, and checks the stored covers, bottom and top against the
/// recomputed ones.
pub fn lattice_from_json(text: &str) -> Result<ConLattice> {
    let doc: LatticeJson = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if doc.format != JSON_FORMAT {
        return Err(Error::Format(format!("unsupported format version {}", doc.format)));
    }
    let g = Digraph::build(&doc.graph.vertices, &doc.graph.edges)?;
    let set = |names: &[String]| -> Result<VertexSet> {
        names
            .iter()
            .map(|n| g.vertex_id(n).ok_or_else(|| Error::UnknownVertex(n.clone())))
            .collect()
    };
    let elements = doc
        .elements
        .iter()
        .map(|e| WangTriple::trivial(&g, set(&e.h)?, set(&e.w)?))
        .collect::<Result<Vec<_>>>()?;
    let l = ConLattice::from_elements(&g, elements)?;
    let fl = l.lattice();
    let mut stored = doc.covers.clone();
    stored.sort_unstable();
    let mut computed = fl.cover_pairs().to_vec();
    computed.sort_unstable();
    if stored != computed || doc.bottom != fl.bottom() || doc.top != fl.top() {
        return Err(Error::Format("stored covers, bottom or top disagree with the elements".into()));
    }
    Ok(l)
}

/// The Hasse diagram, bottom at the bottom, one rank per longest chain
/// length from the bottom.
pub fn lattice_to_dot(l: &ConLattice) -> String {
    let g = l.graph();
    let fl = l.lattice();
    let ranks = fl.ranks();
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, t) in l.elements().iter().enumerate() {
        let label = format!("({}, {})", g.fmt_set(t.h()), g.fmt_set(t.w()));
        writeln!(out, "  n{i} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap();
    }
    for r in 0..=ranks.iter().copied().max().unwrap_or(0) {
        let same: Vec<String> = (0..l.len()).filter(|&i| ranks[i] == r).map(|i| format!("n{i};")).collect();
        writeln!(out, "  {{ rank=same; {} }}", same.join(" ")).unwrap();
    }
    for &(lo, hi) in fl.cover_pairs() {
        writeln!(out, "  n{lo} -> n{hi} [dir=none];").unwrap();
    }
    out.push_str("}\n");
    out
}
