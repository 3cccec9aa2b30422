//! Graph algebra for de Bruijn, spider-web and lamplighter graphs.
//!
//! The crate builds the graph families, their tensor and line-graph
//! products, derangements and component counts, lamplighter group
//! arithmetic with its Schreier and Cayley graphs, exact and numeric
//! spectra, isomorphism and covering checks, and Benjamini-Schramm ball
//! statistics.

pub mod ball;
pub mod derangement;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod lamplighter;
pub mod limits;
pub mod morphisms;
pub mod products;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, GraphBuilder, GraphKind, Vertex};
pub use morphisms::{GraphMorphism, IsoKind, IsoWitness};
