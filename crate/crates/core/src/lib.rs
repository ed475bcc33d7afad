//! Sensitivity oracles for all-pairs minimum cuts in undirected unweighted
//! multigraphs.
//!
//! After preprocessing a graph, the oracles answer "what is the
//! (s,t)-mincut after failing or inserting edge (x,y)" queries, report a
//! resulting cut, and report all affected vertex pairs. Three data
//! structures are provided: a quadratic-space oracle with constant-time
//! value queries, a linear-space compact oracle, and distributed
//! per-vertex labels. Everything is verified against a brute-force
//! reference oracle.

pub mod carcass;
pub mod error;
pub mod flow;
pub mod gen;
pub mod gomory_hu;
pub mod hierarchy;
pub mod lca;
pub mod quadratic;
pub mod graph;
pub mod reference;
pub mod strip;

pub use error::{Error, Result};
pub use graph::{Cut, Edge, EdgeId, Multigraph};
pub use strip::{Dir, NodeId, Strip, StripEdge};
