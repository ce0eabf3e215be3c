//! Regular `k`-chromatic graphs whose defining number is `k - 1`.
//!
//! The crate builds the layered chromatic-join graphs and the families
//! derived from them by adding vertices and deleting nonessential edges, and
//! certifies every claimed property with an exact coloring engine:
//! regularity, chromatic number, and uniqueness of the extension of the
//! claimed defining set.
//!
//! ```
//! use defset::construct::build_theorem1;
//! use defset::engine::is_defining_set;
//!
//! let h = build_theorem1(5, 0).unwrap();
//! assert_eq!((h.graph.n(), h.claimed_r), (14, 8));
//! assert!(is_defining_set(&h.graph, &h.defining_set, 5).unwrap());
//! ```

pub mod cli;
pub mod coloring;
pub mod construct;
pub mod engine;
pub mod factor;
pub mod graph;
pub mod io;
pub mod repro;
pub mod trace;

pub use coloring::{Color, ColorAssignment};
pub use graph::{Edge, Family, Graph, Naming, Vertex, VertexLabel};
