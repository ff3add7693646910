pub mod census;
pub mod cli;
pub mod element;
pub mod error;
pub mod extpos;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod predicates;
pub mod triple;
pub mod vertex_set;

pub use element::{GisElement, Path};
pub use error::{Error, Result};
pub use extpos::ExtPos;
pub use graph::{Cycle, Digraph};
pub use triple::{CoverCase, CycleFunction, WangTriple};
pub use vertex_set::VertexSet;
