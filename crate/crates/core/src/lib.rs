#![forbid(unsafe_code)]
// Parity tests read better as `% 2`, and the exact elimination loops index
// several rows at once.
#![allow(clippy::manual_is_multiple_of, clippy::needless_range_loop)]

//! Exact desk-scale toolkit for stable set polytopes of line graphs.
//!
//! Everything revolves around a root multigraph `H` and its line graph
//! `L(H)`. The crate decides whether one round of the Lovász–Schrijver PSD
//! lifting of the edge relaxation already produces `STAB(L(H))`; the decision
//! is purely combinatorial (it inspects the 2-connected hypomatchable induced
//! subgraphs of `H`) and comes with a minimal witness subgraph when the answer
//! is negative. An exact rational facet oracle ([`polytope`]) is provided so
//! that every verdict can be cross-checked against the actual facet list of
//! the stable set polytope.
//!
//! All computations are exact: graphs are small (node counts in the teens)
//! and the polyhedral side uses arbitrary-precision integers throughout.

pub mod classify;
pub mod corpus;
pub mod eardecomp;
pub mod error;
pub mod families;
pub mod linegraph;
pub mod matching;
pub mod multigraph;
pub mod polytope;

pub use error::{Error, Result};
pub use multigraph::{EdgeId, Multigraph, NodeId, NodeSubset};
