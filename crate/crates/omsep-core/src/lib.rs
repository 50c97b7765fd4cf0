//! Exact combinatorial engine for oriented-matroid separation theory.
//!
//! The crate builds oriented matroids from vectors, digraphs, or
//! alternating families, decides M-separation and purity, enumerates
//! maximal separated collections as colocalizations (combinatorial fine
//! zonotopal tilings), analyzes mutation and flip graphs, and covers the
//! graphical specialization: cycle-reversal classes, outerplanarity,
//! triangulation trees, and coherence via exact rational feasibility.
//!
//! All matroid decisions are exact: supports are bitsets, arithmetic is
//! arbitrary-precision rational, and no floating point is consulted
//! anywhere outside SVG rendering in the CLI.

pub mod chirotope;
pub mod construct;
pub mod error;
pub mod graphsep;
pub mod ground;
pub mod io;
pub mod matroid;
pub mod ratmat;
pub mod separation;
pub mod sign;
pub mod signed_set;
pub mod tilings;

pub use chirotope::Chirotope;
pub use construct::{DirectedGraph, VectorConfiguration};
pub use error::{OmError, Result};
pub use ground::GroundSet;
pub use matroid::{OrientedMatroid, ValidationReport};
pub use separation::{Collection, SignMap};
pub use sign::Sign;
pub use signed_set::SignedSet;
