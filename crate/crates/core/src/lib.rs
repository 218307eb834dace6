//! Double stars in edge-colored complete bipartite graphs.
//!
//! The double star `S(n,m)` is a star with `n` leaves and a star with `m`
//! leaves joined by an edge between their centers. This crate provides the
//! machinery to work with them inside complete bipartite hosts:
//!
//! * value types for bipartite graphs and total edge colorings, with a
//!   line-oriented text codec ([`bsr`]);
//! * detectors for (monochromatic) double stars with explicit witnesses,
//!   plus a brute-force embedding oracle ([`detect`]);
//! * the classic constructions: Latin-square proper colorings, the
//!   matching-based critical colorings, blow-ups, and extremal
//!   `S(n,m)`-free graphs ([`construct`]);
//! * Turán-type edge bounds for `S(n,m)`-free spanning subgraphs of
//!   `K_{p,p}`, with degree-partition certificates and the rewiring
//!   exchange ([`turan`]);
//! * an exhaustive backtracking searcher for the arrows relation
//!   `K_{N,N} -> (S(n_1,m_1), ..., S(n_k,m_k))` and the derived bipartite
//!   Ramsey values and bound formulas ([`search`], [`bounds`]).

pub mod bounds;
pub mod bsr;
pub mod construct;
pub mod detect;
mod error;
pub mod graph;
pub mod search;
pub mod turan;

pub use bounds::BoundsReport;
pub use error::Error;
pub use graph::{BipartiteGraph, DoubleStarSpec, EdgeColoring, Witness};
pub use search::{ArrowsResult, Budget, RamseyResult, SearchOptions, SearchStats, Verdict};
pub use turan::{DegreePartition, FreenessReport};
