//! Exact analysis of on-line list colouring games.
//!
//! Painter repeatedly paints a set of uncoloured vertices with a fresh
//! colour; Corrector keeps an independent subset and spends one eraser on
//! every other painted vertex. Corrector wins once every vertex is coloured.
//! This crate decides such games exactly (classical, strong and lazy
//! variants), provides strategies for both players, referees games between
//! strategies, and simulates the streaming recolouring model.

pub mod claims;
pub mod engine;
pub mod error;
pub mod graph;
pub mod solver;
pub mod strategy;
pub mod streaming;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{EraserMap, Graph, ListAssignment};
pub use vertex_set::VertexSet;
