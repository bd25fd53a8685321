//! Exact maximum weight stable sets in claw-free graphs with independence
//! number at most three.
//!
//! [`cardinality::stable_set_min_alpha4`] finds a stable set of size
//! `min(α(G), 4)` with `O(m)` adjacency queries; [`weighted::mwss_alpha3`]
//! then either returns a stable 4-set or a maximum weight stable set with
//! `O(m log n)` work. Every adjacency query made by the solvers goes through
//! a [`SolveCtx`] and is counted.

pub mod cardinality;
pub mod claw;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod weighted;

pub use cardinality::{stable_set_min_alpha4, AlphaStatus, StableSetReport};
pub use claw::{classify, find_claw, Classification, Claw};
pub use error::{Error, Result};
pub use graph::{Graph, NodeId, NodeSet, NodeWeights, QueryCounter, SolveCtx};
pub use weighted::{mwss_alpha3, SolveOutcome};
